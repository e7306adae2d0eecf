"""Topologies on a small labeled ground set {0, ..., n-1}.

Point sets are plain ``int`` bitmasks (bit ``x`` set means point ``x`` is a
member).  Functions that take a point set also accept any iterable of points,
so ``closure(T, {0, 2})`` and ``closure(T, 0b101)`` are the same call.
Families of point sets are kept sorted by ``(popcount, value)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple, Union

from ._caps import HARD_MAX_N
from .errors import BadPoint, NotATopology, NotT0

PointSet = int
PointsLike = Union[int, Iterable[int]]


def full_mask(n: int) -> int:
    return (1 << n) - 1


def mask_of(points: Iterable[int]) -> int:
    m = 0
    for p in points:
        if p < 0:
            raise BadPoint(f"negative point {p}")
        m |= 1 << p
    return m


def points_of(mask: int) -> tuple[int, ...]:
    out = []
    x = 0
    while mask:
        if mask & 1:
            out.append(x)
        mask >>= 1
        x += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def family_key(mask: int) -> tuple[int, int]:
    return popcount(mask), mask


def canonical_family(masks: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(set(masks), key=family_key))


def as_mask(n: int, A: PointsLike) -> int:
    """Normalize a point set given as a bitmask or an iterable of points."""
    m = A if isinstance(A, int) else mask_of(A)
    if m < 0 or m >> n:
        raise BadPoint(f"point set {format_set(m) if m >= 0 else m} is not inside {{0..{n - 1}}}")
    return m


def format_set(mask: int) -> str:
    return "{" + ",".join(str(p) for p in points_of(mask)) + "}"


def _check_n(n: int) -> None:
    if not 0 <= n <= HARD_MAX_N:
        raise BadPoint(f"ground size must lie in 0..{HARD_MAX_N}, got {n}")


@dataclass(frozen=True)
class FiniteTopology:
    """A topology on ``{0, ..., n-1}`` stored as its canonical family of opens.

    Build instances with :func:`make_topology` or :func:`generate_from_subbase`;
    the constructor itself trusts its arguments.
    """

    n: int
    opens: tuple[int, ...]

    @property
    def full(self) -> int:
        return full_mask(self.n)

    @cached_property
    def open_set(self) -> frozenset[int]:
        return frozenset(self.opens)

    @cached_property
    def closeds(self) -> tuple[int, ...]:
        """The co-topology: complements of the opens, canonically ordered."""
        X = self.full
        return canonical_family(X & ~u for u in self.opens)

    @cached_property
    def closed_set(self) -> frozenset[int]:
        return frozenset(self.closeds)

    @cached_property
    def point_closures(self) -> tuple[int, ...]:
        return tuple(self.closure_mask(1 << x) for x in range(self.n))

    def is_open(self, A: PointsLike) -> bool:
        return as_mask(self.n, A) in self.open_set

    def is_closed(self, A: PointsLike) -> bool:
        return as_mask(self.n, A) in self.closed_set

    def closure_mask(self, A: int) -> int:
        outside = 0
        for u in self.opens:
            if not u & A:
                outside |= u
        return self.full & ~outside

    def __le__(self, other: "FiniteTopology") -> bool:
        """Coarser-or-equal: every open of ``self`` is open in ``other``."""
        return self.n == other.n and self.open_set <= other.open_set

    def __lt__(self, other: "FiniteTopology") -> bool:
        return self <= other and self.opens != other.opens

    def __ge__(self, other: "FiniteTopology") -> bool:
        return other <= self

    def __gt__(self, other: "FiniteTopology") -> bool:
        return other < self

    def __repr__(self) -> str:
        fam = ", ".join(format_set(u) for u in self.opens)
        return f"FiniteTopology(n={self.n}, opens=[{fam}])"


def make_topology(n: int, opens: Iterable[PointsLike]) -> FiniteTopology:
    """Validate ``opens`` as a topology on ``n`` points and return it canonically.

    Raises BadPoint for out-of-range elements and NotATopology when the empty
    set or the full set is missing, or when a pairwise union or intersection
    of opens is not itself listed.
    """
    _check_n(n)
    fam = canonical_family(as_mask(n, u) for u in opens)
    present = set(fam)
    X = full_mask(n)
    if 0 not in present:
        raise NotATopology("the empty set is not open")
    if X not in present:
        raise NotATopology("the full set is not open")
    for u, v in combinations(fam, 2):
        if u | v not in present:
            raise NotATopology(f"union {format_set(u | v)} of {format_set(u)} and {format_set(v)} is missing")
        if u & v not in present:
            raise NotATopology(
                f"intersection {format_set(u & v)} of {format_set(u)} and {format_set(v)} is missing"
            )
    return FiniteTopology(n, fam)


def generate_from_subbase(n: int, sets: Iterable[PointsLike]) -> FiniteTopology:
    """Smallest topology on ``n`` points in which every member of ``sets`` is open."""
    _check_n(n)
    X = full_mask(n)
    basis = {X}
    for s in sets:
        s = as_mask(n, s)
        basis |= {b & s for b in basis}
    opens = {0}
    for b in basis:
        opens |= {o | b for o in opens}
    return FiniteTopology(n, canonical_family(opens))


def generate_from_closed_subbase(n: int, sets: Iterable[PointsLike]) -> FiniteTopology:
    """Smallest topology on ``n`` points in which every member of ``sets`` is closed."""
    X = full_mask(n)
    return generate_from_subbase(n, (X & ~as_mask(n, s) for s in sets))


def discrete(n: int) -> FiniteTopology:
    _check_n(n)
    return FiniteTopology(n, canonical_family(range(1 << n)))


def indiscrete(n: int) -> FiniteTopology:
    _check_n(n)
    return FiniteTopology(n, canonical_family({0, full_mask(n)}))


def sierpinski(open_point: int = 1) -> FiniteTopology:
    """Two-point Sierpinski space whose only nontrivial open is ``{open_point}``."""
    if open_point not in (0, 1):
        raise BadPoint(f"Sierpinski open point must be 0 or 1, got {open_point}")
    return FiniteTopology(2, canonical_family({0, 1 << open_point, 3}))


def closure(T: FiniteTopology, A: PointsLike) -> PointSet:
    return T.closure_mask(as_mask(T.n, A))


def tilde(T: FiniteTopology, A: PointsLike) -> PointSet:
    """Union of the point closures of the members of ``A``."""
    A = as_mask(T.n, A)
    out = 0
    for x in points_of(A):
        out |= T.point_closures[x]
    return out


def specialization(T: FiniteTopology):
    """Specialization preorder: ``x <= y`` iff ``x`` lies in the closure of ``{y}``."""
    from .order import Preorder

    return Preorder(T.n, T.point_closures)


def is_irreducible(T: FiniteTopology, A: PointsLike) -> bool:
    """Nonempty, and covered by a union of two closed sets only if covered by one."""
    A = as_mask(T.n, A)
    if not A:
        return False
    cl = T.closeds
    for i, F in enumerate(cl):
        if A & ~F == 0:
            continue
        for G in cl[i:]:
            if A & ~(F | G) == 0 and A & ~G:
                return False
    return True


def irr_closed(T: FiniteTopology) -> tuple[PointSet, ...]:
    """All closed irreducible sets of ``T`` in canonical order."""
    return tuple(C for C in T.closeds if is_irreducible(T, C))


def is_irreducible_by_opens(T: FiniteTopology, A: PointsLike) -> bool:
    """Irreducibility via opens: meeting ``U`` and ``V`` forces meeting ``U & V``."""
    A = as_mask(T.n, A)
    if not A:
        return False
    for U in T.opens:
        if not A & U:
            continue
        for V in T.opens:
            if A & V and not A & U & V:
                return False
    return True


class PropertyKind(enum.Enum):
    T0 = "t0"
    T1 = "t1"
    T2 = "t2"
    TD = "td"
    SOBER = "sober"
    D_SPACE = "d-space"
    WELL_FILTERED = "well-filtered"


def _is_t0(T: FiniteTopology) -> bool:
    return len(set(T.point_closures)) == T.n


def _is_t1(T: FiniteTopology) -> bool:
    return all(c == 1 << x for x, c in enumerate(T.point_closures))


def _is_t2(T: FiniteTopology) -> bool:
    for x, y in combinations(range(T.n), 2):
        bx, by = 1 << x, 1 << y
        if not any(u & bx and v & by and not u & v for u in T.opens for v in T.opens):
            return False
    return True


def is_td(T: FiniteTopology) -> bool:
    """T_D via the closed-difference definition: ``cl{x} - {x}`` is closed for every ``x``."""
    return all(T.is_closed(c & ~(1 << x)) for x, c in enumerate(T.point_closures))


def is_td_by_closure_criterion(T: FiniteTopology) -> bool:
    """T_D via ``cl(A) == cl({x})`` implies ``x in A``, over every subset ``A``."""
    for A in range(1 << T.n):
        cA = T.closure_mask(A)
        for x, c in enumerate(T.point_closures):
            if cA == c and not A >> x & 1:
                return False
    return True


def is_sober(T: FiniteTopology) -> bool:
    """Every closed irreducible set is the closure of exactly one point."""
    pc = T.point_closures
    for C in irr_closed(T):
        if sum(1 for c in pc if c == C) != 1:
            return False
    return True


def is_d_space(T: FiniteTopology) -> bool:
    """T0, the specialization order is a dcpo, and every open set is Scott open."""
    from .order import OrderPredicate, Poset, is_scott_open, order_predicate

    if not _is_t0(T):
        return False
    P = Poset(T.n, T.point_closures)
    if not order_predicate(P, OrderPredicate.DCPO):
        return False
    return all(is_scott_open(P, U) for U in T.opens)


def saturated_compact_sets(T: FiniteTopology) -> tuple[PointSet, ...]:
    """Sets equal to the intersection of the opens containing them.

    Every subset of a finite space is compact, so only saturation filters.
    """
    out = []
    for A in range(1 << T.n):
        sat = T.full
        for U in T.opens:
            if A & ~U == 0:
                sat &= U
        if sat == A:
            out.append(A)
    return canonical_family(out)


def _upward_closed_families(elements: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    # Families closed under supersets within ``elements``; decided largest-first so
    # every superset of a candidate has already been decided.
    order = sorted(elements, key=family_key, reverse=True)

    def rec(i: int, chosen: list[int], excluded: list[int]) -> Iterator[tuple[int, ...]]:
        if i == len(order):
            yield tuple(chosen)
            return
        e = order[i]
        excluded.append(e)
        yield from rec(i + 1, chosen, excluded)
        excluded.pop()
        if not any(e & ~x == 0 for x in excluded):
            chosen.append(e)
            yield from rec(i + 1, chosen, excluded)
            chosen.pop()

    yield from rec(0, [], [])


def is_well_filtered(T: FiniteTopology) -> bool:
    """T0, and for every filter of saturated compact sets and every open ``U``,
    ``U`` containing the intersection of the filter contains some member.

    Filters are taken up-closed inside the saturated compact sets; a filtered
    family and its up-closure have the same intersection and the same members
    below any ``U``, so this loses nothing.
    """
    if not _is_t0(T):
        return False
    K = saturated_compact_sets(T)
    for fam in _upward_closed_families(K):
        if not fam:
            continue
        members = set(fam)
        if any(not any(F3 & ~(F1 & F2) == 0 for F3 in members) for F1, F2 in combinations(fam, 2)):
            continue
        meet = T.full
        for F in fam:
            meet &= F
        for U in T.opens:
            if meet & ~U == 0 and not any(F & ~U == 0 for F in fam):
                return False
    return True


_CHECKERS = {
    PropertyKind.T0: _is_t0,
    PropertyKind.T1: _is_t1,
    PropertyKind.T2: _is_t2,
    PropertyKind.TD: is_td,
    PropertyKind.SOBER: is_sober,
    PropertyKind.D_SPACE: is_d_space,
    PropertyKind.WELL_FILTERED: is_well_filtered,
}


def check_property(T: FiniteTopology, p: PropertyKind) -> bool:
    return _CHECKERS[PropertyKind(p)](T)


class Soberification(NamedTuple):
    space: FiniteTopology
    carrier: tuple[PointSet, ...]
    point_map: tuple[int, ...]


def soberify(T: FiniteTopology) -> Soberification:
    """Lower Vietoris space on the closed irreducible sets of a T0 space.

    Point ``i`` of the result is ``carrier[i]``; the open of the result coming
    from an open ``U`` of ``T`` is the set of carrier indices whose set meets
    ``U``.  ``point_map[x]`` is the index of ``cl({x})``.
    """
    if not _is_t0(T):
        raise NotT0("soberification is defined here for T0 spaces only")
    carrier = irr_closed(T)
    index = {C: i for i, C in enumerate(carrier)}
    opens = []
    for U in T.opens:
        opens.append(sum(1 << i for i, C in enumerate(carrier) if C & U))
    space = make_topology(len(carrier), opens)
    return Soberification(space, carrier, tuple(index[c] for c in T.point_closures))
