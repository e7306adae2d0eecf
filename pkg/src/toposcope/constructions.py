"""Named topology constructions on finite carriers.

Each builder checks its preconditions and returns a :class:`FiniteTopology`;
the properties the constructions are meant to have are asserted by the test
suite, not re-derived here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Optional, Union

from ._caps import require_n, soft_max_n
from .errors import (
    BadPartition,
    BadSubspace,
    ComparablePair,
    EqualPoints,
    NotSober,
    NotT0,
    NotT1,
    PreconditionViolated,
)
from .finspace import (
    FiniteTopology,
    PointsLike,
    PropertyKind,
    as_mask,
    check_property,
    discrete,
    format_set,
    full_mask,
    generate_from_closed_subbase,
    make_topology,
    points_of,
    popcount,
    specialization,
)
from .lattice import enumerate_topologies, meet
from .order import Poset, alexandroff_topology, as_poset, order_predicate, OrderPredicate, scott_topology


def _point(T_n: int, x: int, name: str) -> int:
    if not 0 <= x < T_n:
        raise PreconditionViolated(f"{name}={x} is not a point of the carrier")
    return x


def tau_A(T: FiniteTopology, A: PointsLike, xA: int, yA: int) -> FiniteTopology:
    """Sober coarsening of a T1 topology in which ``A`` stays closed.

    Opens are the sets containing both ``xA`` and ``yA``, together with
    ``X - A`` intersected with such a set.  (The cofiniteness clauses of the
    infinite construction are vacuous on a finite carrier.)
    """
    n = T.n
    A = as_mask(n, A)
    X = full_mask(n)
    if not check_property(T, PropertyKind.T1):
        raise PreconditionViolated("T is not T1")
    if not T.is_closed(A):
        raise PreconditionViolated(f"A={format_set(A)} is not closed in T")
    if A in (0, X):
        raise PreconditionViolated("A must be a nonempty proper subset")
    _point(n, xA, "xA")
    _point(n, yA, "yA")
    if not A >> xA & 1:
        raise PreconditionViolated(f"xA={xA} is not in A")
    if A >> yA & 1:
        raise PreconditionViolated(f"yA={yA} is in A")
    pair = 1 << xA | 1 << yA
    with_pair = [U for U in range(X + 1) if U & pair == pair]
    opens = set(with_pair) | {(X & ~A) & V for V in with_pair} | {0}
    return make_topology(n, opens)


def tau_A_closed_family(n: int, A: int, xA: int, yA: int) -> tuple[int, ...]:
    """Closed sets predicted for :func:`tau_A`: subsets ``F`` avoiding ``xA, yA``,
    the sets ``A | F`` for such ``F``, and the full set."""
    X = full_mask(n)
    avoid = X & ~(1 << xA | 1 << yA)
    fs = [F for F in range(X + 1) if F & ~avoid == 0]
    return tuple(sorted(set(fs) | {A | F for F in fs} | {X}))


def t1_join_decomposition(T: FiniteTopology) -> tuple[FiniteTopology, ...]:
    """One :func:`tau_A` per nonempty proper closed set; their join is ``T``.

    ``xA`` is the least point of ``A`` and ``yA`` the least point outside it.
    A one-point (or empty) carrier has no such ``A`` and returns ``(T,)``.
    """
    if not check_property(T, PropertyKind.T1):
        raise NotT1("the decomposition needs a T1 topology")
    X = T.full
    members = []
    for A in T.closeds:
        if A in (0, X):
            continue
        xA = points_of(A)[0]
        yA = points_of(X & ~A)[0]
        members.append(tau_A(T, A, xA, yA))
    return tuple(members) if members else (T,)


@dataclass(frozen=True)
class ChoiceFunction:
    """One representative ``pick[i]`` from each class ``classes[i]``."""

    classes: tuple[int, ...]
    pick: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.classes) != len(self.pick):
            raise BadPartition("need exactly one pick per class")
        seen = 0
        for c, p in zip(self.classes, self.pick):
            if not c or seen & c:
                raise BadPartition("classes must be nonempty and pairwise disjoint")
            seen |= c
            if not c >> p & 1:
                raise BadPartition(f"pick {p} is not in class {format_set(c)}")

    def representative(self, x: int) -> int:
        for c, p in zip(self.classes, self.pick):
            if c >> x & 1:
                return p
        raise BadPartition(f"point {x} is in no class")


def equivalence_classes(T: FiniteTopology) -> tuple[int, ...]:
    """Classes of points with equal closures, ordered by least member."""
    return specialization(T).classes()


def choice_functions(T: FiniteTopology) -> Iterator[ChoiceFunction]:
    classes = equivalence_classes(T)
    for pick in product(*(points_of(c) for c in classes)):
        yield ChoiceFunction(classes, pick)


def choice_with(T: FiniteTopology, picks: dict[int, int]) -> ChoiceFunction:
    """Choice function picking ``picks[x]`` in the class of ``x``, least member elsewhere."""
    classes = equivalence_classes(T)
    pick = []
    for c in classes:
        chosen = [p for x, p in picks.items() if c >> x & 1]
        pick.append(chosen[0] if chosen else points_of(c)[0])
    return ChoiceFunction(classes, tuple(pick))


def tau_f(T: FiniteTopology, f: ChoiceFunction) -> FiniteTopology:
    """Refine ``T`` by closing every set ``F`` with ``pick in F`` inside one class."""
    if f.classes != equivalence_classes(T):
        raise BadPartition("choice function does not follow the closure-equivalence classes of T")
    extra = []
    for c, p in zip(f.classes, f.pick):
        rest = c & ~(1 << p)
        sub = rest
        while True:
            extra.append(sub | 1 << p)
            if sub == 0:
                break
            sub = (sub - 1) & rest
    return generate_from_closed_subbase(T.n, list(T.closeds) + extra)


def tau_M(n: int, M: PointsLike, mu: FiniteTopology) -> FiniteTopology:
    """Direct sum of the discrete space on ``X - M`` and ``mu`` placed on ``M``.

    Point ``i`` of ``mu`` is the ``i``-th smallest member of ``M``.
    """
    M = as_mask(n, M)
    members = points_of(M)
    if mu.n != len(members):
        raise BadSubspace(f"mu lives on {mu.n} points but M has {len(members)}")
    X = full_mask(n)
    outside = X & ~M

    def place(B: int) -> int:
        return sum(1 << members[i] for i in points_of(B))

    closed_in_M = [place(B) for B in mu.closeds]
    closeds = set()
    sub = outside
    while True:
        closeds.update(sub | B for B in closed_in_M)
        if sub == 0:
            break
        sub = (sub - 1) & outside
    return make_topology(n, [X & ~C for C in closeds])


def sierpinski_pair_sum(n: int, a: int, b: int) -> FiniteTopology:
    """``tau_M`` with ``M = {a, b}`` carrying the Sierpinski space in which ``b`` lies
    in the closure of ``a`` (so ``{a}`` is the open point)."""
    if a == b:
        raise EqualPoints("a and b must differ")
    M = 1 << a | 1 << b
    local_a = 0 if a < b else 1
    mu = FiniteTopology(2, tuple(sorted({0, 1 << local_a, 3}, key=lambda m: (popcount(m), m))))
    return tau_M(n, M, mu)


@dataclass(frozen=True)
class MeetDecomposition:
    """Sober refinements whose meet is the input, with the stage used per non-closed set."""

    family: tuple[FiniteTopology, ...]
    stages: dict = field(default_factory=dict)
    used_fallback: bool = False


def meet_sober_decomposition(T: FiniteTopology) -> MeetDecomposition:
    """Sober topologies containing ``T`` whose meet is exactly ``T``.

    For each non-closed ``A`` pick ``a in A`` and ``y in cl{a} - A`` (on a finite
    carrier such a pair always exists).  If ``y`` has the same closure as ``a``,
    refine with :func:`tau_f` choosing ``y`` in that class; otherwise put the
    Sierpinski space on ``{a, y}`` via :func:`tau_M`.  Either way ``A`` is not
    closed in the refinement.  The result is checked against the meet of all
    sober topologies containing ``T``; that family is returned if the
    constructive one ever fails.
    """
    require_n(T.n, soft_max_n(), "meet_sober_decomposition")
    if check_property(T, PropertyKind.SOBER):
        return MeetDecomposition((T,), {})
    pc = T.point_closures
    family: dict[FiniteTopology, None] = {}
    stages = {}
    for A in range(T.full + 1):
        if T.is_closed(A):
            continue
        choices = [(a, y) for a in points_of(A) for y in points_of(pc[a] & ~A)]
        same = [(a, y) for a, y in choices if pc[y] == pc[a]]
        if same:
            a, y = same[0]
            mu = tau_f(T, choice_with(T, {a: y}))
            stages[A] = ("tau_f", a, y)
        else:
            a, y = choices[0]
            mu = sierpinski_pair_sum(T.n, a, y)
            stages[A] = ("tau_M", a, y)
        family[mu] = None
    fam = tuple(family)
    ok = all(T <= mu and check_property(mu, PropertyKind.SOBER) for mu in fam) and meet(fam) == T
    fallback = tuple(mu for mu in enumerate_topologies(T.n, PropertyKind.SOBER) if T <= mu)
    if meet(fallback) != T:
        raise AssertionError("sober refinements do not meet to T")
    if not ok:
        return MeetDecomposition(fallback, stages, used_fallback=True)
    return MeetDecomposition(fam, stages)


def order_ab(n: int, a: int, b: int) -> Poset:
    """Diagonal order plus the single pair ``a <= b``."""
    if a == b:
        raise EqualPoints("order_ab needs distinct points")
    return Poset.from_pairs(n, [(a, b)])


def alexandroff_meet_decomposition(P: Poset) -> tuple[FiniteTopology, ...]:
    """Upper-set topologies of ``order_ab(a, b)`` over the strict pairs ``a < b`` of ``P``."""
    P = as_poset(P)
    pairs = P.strict_pairs()
    if not pairs:
        return (discrete(P.n),)
    return tuple(alexandroff_topology(order_ab(P.n, a, b)) for a, b in sorted(pairs))


@dataclass(frozen=True)
class NoncomparablePair:
    x: int
    y: int

    def __post_init__(self) -> None:
        if self.x == self.y:
            raise EqualPoints("a noncomparable pair needs two distinct points")


def tau_star(T: FiniteTopology, p: NoncomparablePair) -> FiniteTopology:
    """Opens of ``T`` that contain ``x``, plus those missing both ``x`` and ``y``."""
    if not check_property(T, PropertyKind.T0):
        raise NotT0("tau_star needs a T0 topology")
    x, y = _point(T.n, p.x, "x"), _point(T.n, p.y, "y")
    pc = T.point_closures
    if pc[y] >> x & 1 or pc[x] >> y & 1:
        raise ComparablePair(f"{x} and {y} are comparable in the specialization order")
    bx, by = 1 << x, 1 << y
    opens = [U for U in T.opens if U & bx or not U & (bx | by)]
    return make_topology(T.n, opens)


def noncomparable_pairs(T: FiniteTopology) -> list[NoncomparablePair]:
    pc = T.point_closures
    return [
        NoncomparablePair(x, y)
        for x in range(T.n)
        for y in range(T.n)
        if x != y and not pc[y] >> x & 1 and not pc[x] >> y & 1
    ]


@dataclass(frozen=True)
class MinimalityVerdict:
    verdict: str  # "MINIMAL" or "NOT_MINIMAL"
    witness: Optional[Union[NoncomparablePair, FiniteTopology]] = None

    @property
    def minimal(self) -> bool:
        return self.verdict == "MINIMAL"


def minimal_sober_certificate(T: FiniteTopology) -> MinimalityVerdict:
    """MINIMAL iff the specialization order is a chain whose Scott topology is ``T``.

    Otherwise the witness is the lexicographically least noncomparable pair,
    or, for a chain whose Scott topology differs, a strictly coarser sober
    topology.
    """
    if not check_property(T, PropertyKind.SOBER):
        raise NotSober("minimality is decided for sober topologies")
    P = as_poset(specialization(T))
    if not order_predicate(P, OrderPredicate.CHAIN):
        x, y = next((x, y) for x in range(T.n) for y in range(x + 1, T.n) if not P.le(x, y) and not P.le(y, x))
        return MinimalityVerdict("NOT_MINIMAL", NoncomparablePair(x, y))
    if scott_topology(P) == T:
        return MinimalityVerdict("MINIMAL")
    require_n(T.n, soft_max_n(), "minimal_sober_certificate")
    coarser = next(s for s in enumerate_topologies(T.n, PropertyKind.SOBER) if s < T)
    return MinimalityVerdict("NOT_MINIMAL", coarser)
