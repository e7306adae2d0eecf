"""The lattice of all topologies on a finite set, ordered by inclusion."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional, Sequence

from ._caps import ENUMERATION_MAX_N, require_n, soft_max_n
from .errors import EmptyFamily, MixedGroundSize
from .finspace import (
    FiniteTopology,
    PropertyKind,
    canonical_family,
    check_property,
    full_mask,
    generate_from_subbase,
    indiscrete,
)
from .order import alexandroff_topology, enumerate_preorders

TopologyFamily = tuple  # tuple[FiniteTopology, ...], duplicate-free


def as_family(fam: Iterable[FiniteTopology]) -> tuple[FiniteTopology, ...]:
    """Deduplicate preserving first occurrence and check the ground sizes agree."""
    out = tuple(dict.fromkeys(fam))
    if not out:
        raise EmptyFamily("operation needs at least one topology")
    n = out[0].n
    if any(t.n != n for t in out):
        raise MixedGroundSize(f"ground sizes differ: {sorted({t.n for t in out})}")
    return out


def meet(fam: Iterable[FiniteTopology]) -> FiniteTopology:
    fam = as_family(fam)
    common = set(fam[0].opens)
    for t in fam[1:]:
        common &= t.open_set
    return FiniteTopology(fam[0].n, canonical_family(common))


def join(fam: Iterable[FiniteTopology]) -> FiniteTopology:
    fam = as_family(fam)
    sets = set()
    for t in fam:
        sets |= t.open_set
    return generate_from_subbase(fam[0].n, sets)


@lru_cache(maxsize=None)
def _all_topologies(n: int) -> tuple[FiniteTopology, ...]:
    return tuple(alexandroff_topology(P) for P in enumerate_preorders(n))


def enumerate_topologies(n: int, prop: Optional[PropertyKind] = None) -> list[FiniteTopology]:
    """Every topology on ``n`` points once, optionally only those with ``prop``.

    Finite topologies correspond one-to-one with preorders, so the stream is the
    Alexandroff topologies of the preorders in encoding order; the count is the
    length of the returned list.
    """
    require_n(n, ENUMERATION_MAX_N, "enumerate_topologies")
    tops = _all_topologies(n)
    if prop is None:
        return list(tops)
    return [t for t in tops if check_property(t, prop)]


def enumerate_topologies_by_families(n: int) -> set[FiniteTopology]:
    """Topologies reached from the indiscrete one by adding one open set at a time.

    Works on open families directly, never on preorders.  Adding ``S`` to a
    topology ``t`` generates ``{U | (S & V) : U, V in t}``, and every topology
    is a chain of such one-set extensions from the bottom.
    """
    require_n(n, ENUMERATION_MAX_N, "enumerate_topologies_by_families")
    X = full_mask(n)
    start = frozenset({0, X})
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for fam in frontier:
            for S in range(1, X):
                if S in fam:
                    continue
                ext = frozenset(U | (S & V) for U in fam for V in fam)
                if ext not in seen:
                    seen.add(ext)
                    nxt.append(ext)
        frontier = nxt
    return {FiniteTopology(n, canonical_family(f)) for f in seen}


def minimal_in_class(n: int, p: PropertyKind) -> tuple[FiniteTopology, ...]:
    """Topologies with ``p`` such that no strictly coarser topology has ``p``."""
    require_n(n, soft_max_n(), "minimal_in_class")
    members = enumerate_topologies(n, p)
    return tuple(t for t in members if not any(s < t for s in members))


def strict_downset(T: FiniteTopology) -> list[FiniteTopology]:
    return [s for s in enumerate_topologies(T.n) if s < T]


def strongly_irreducible(T: FiniteTopology, n: Optional[int] = None) -> bool:
    """True iff every nonempty family joining to ``T`` contains ``T``.

    Pair reduction: if ``T`` is the join of strictly coarser ``c1, ..., ck``
    (k >= 2), let ``d_j = c1 v ... v cj``; at the first ``j`` with ``d_j = T``
    both ``d_{j-1}`` and ``c_j`` are strictly coarser and join to ``T``.  So it
    suffices to look at pairs from the strict downset.
    """
    n = T.n if n is None else n
    if n != T.n:
        raise MixedGroundSize(f"topology has n={T.n}, caller passed n={n}")
    require_n(n, soft_max_n(), "strongly_irreducible")
    below = strict_downset(T)
    for a, b in combinations(below, 2):
        if join([a, b]) == T:
            return False
    return True


def strongly_irreducible_by_subsets(T: FiniteTopology, max_family: int = 16) -> bool:
    """Audit path: exhaust every nonempty subfamily of the strict downset.

    Only feasible for small downsets; raises TooLarge beyond ``max_family``.
    """
    from .errors import TooLarge

    below = strict_downset(T)
    if len(below) > max_family:
        raise TooLarge(f"strict downset has {len(below)} members, limit {max_family}")
    for mask in range(1, 1 << len(below)):
        fam = [below[i] for i in range(len(below)) if mask >> i & 1]
        if join(fam) == T:
            return False
    return True


@dataclass(frozen=True)
class SoberWidth:
    """Least number of sober topologies joining to a topology; ``None`` if none do."""

    value: Optional[int]

    def __repr__(self) -> str:
        return "SoberWidth(NONE)" if self.value is None else f"SoberWidth({self.value})"


NONE_WIDTH = SoberWidth(None)


def sober_join_width(T: FiniteTopology) -> SoberWidth:
    require_n(T.n, soft_max_n(), "sober_join_width")
    if check_property(T, PropertyKind.SOBER):
        return SoberWidth(1)
    if not check_property(T, PropertyKind.T0):
        # joins of T0 topologies are T0
        return NONE_WIDTH
    sober_below = [s for s in enumerate_topologies(T.n, PropertyKind.SOBER) if s < T]
    if not sober_below or join(sober_below) != T:
        return NONE_WIDTH
    for k in range(2, len(sober_below) + 1):
        for combo in combinations(sober_below, k):
            if join(combo) == T:
                return SoberWidth(k)
    return NONE_WIDTH  # unreachable: the full family joins to T


def is_directed_family(fam: Sequence[FiniteTopology]) -> bool:
    """Every two members have an upper bound inside ``fam``."""
    return bool(fam) and all(any(a <= c and b <= c for c in fam) for a, b in combinations(fam, 2))


def bottom(n: int) -> FiniteTopology:
    return indiscrete(n)
