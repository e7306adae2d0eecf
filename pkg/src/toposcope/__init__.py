"""Finite topologies, their lattice, and ultimately periodic subsets of the integers.

Point sets on ``{0, ..., n-1}`` are integer bitmasks; a topology is the
sorted tuple of its open masks.  The symbolic side (:mod:`toposcope.symnat`)
handles the infinite examples through residue-class arithmetic.
"""

from .errors import ToposcopeError, TooLarge
from .finspace import (
    FiniteTopology,
    PropertyKind,
    check_property,
    closure,
    discrete,
    generate_from_subbase,
    indiscrete,
    irr_closed,
    is_irreducible,
    make_topology,
    sierpinski,
    soberify,
    specialization,
)
from .lattice import (
    SoberWidth,
    enumerate_topologies,
    join,
    meet,
    minimal_in_class,
    sober_join_width,
    strongly_irreducible,
)
from .order import Poset, Preorder, alexandroff_topology, scott_topology, upper_topology
from .constructions import (
    NoncomparablePair,
    alexandroff_meet_decomposition,
    meet_sober_decomposition,
    minimal_sober_certificate,
    t1_join_decomposition,
    tau_A,
    tau_f,
    tau_M,
    tau_star,
)
from .symnat import UPSet, BasicOpen, Congruence, crt_solve
from .suites import VerificationReport, run_suite

__version__ = "0.1.0"
