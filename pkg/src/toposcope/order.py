"""Preorders and posets on ``{0, ..., n-1}`` and the topologies they induce.

A preorder is stored column-wise: ``below[y]`` is the bitmask of all ``x``
with ``x <= y``.  For the specialization order of a topology this column is
exactly the closure of ``{y}``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from typing import Iterable, Iterator, Optional

from ._caps import HARD_MAX_N
from .errors import BadPoint, MissingWitness, ToposcopeError
from .finspace import (
    FiniteTopology,
    PointsLike,
    as_mask,
    canonical_family,
    full_mask,
    generate_from_subbase,
    make_topology,
    points_of,
)


class NotAPreorder(ToposcopeError):
    pass


@dataclass(frozen=True, eq=False)
class Preorder:
    """Reflexive, transitive relation; ``below[y]`` holds every ``x <= y``."""

    n: int
    below: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= HARD_MAX_N:
            raise BadPoint(f"ground size must lie in 0..{HARD_MAX_N}, got {self.n}")
        if len(self.below) != self.n:
            raise NotAPreorder(f"expected {self.n} columns, got {len(self.below)}")
        object.__setattr__(self, "below", tuple(self.below))
        X = full_mask(self.n)
        for y, col in enumerate(self.below):
            if col & ~X:
                raise BadPoint(f"column {y} mentions points outside the carrier")
            if not col >> y & 1:
                raise NotAPreorder(f"not reflexive at {y}")
        if not _transitive(self.below):
            raise NotAPreorder("not transitive")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Preorder":
        """Reflexive-transitive closure of the given ``(x, y)`` meaning ``x <= y``."""
        below = [1 << y for y in range(n)]
        for x, y in pairs:
            if not (0 <= x < n and 0 <= y < n):
                raise BadPoint(f"pair {(x, y)} outside 0..{n - 1}")
            below[y] |= 1 << x
        changed = True
        while changed:
            changed = False
            for y in range(n):
                col = below[y]
                for x in points_of(col):
                    if below[x] & ~col:
                        col |= below[x]
                if col != below[y]:
                    below[y] = col
                    changed = True
        return cls(n, tuple(below))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Preorder):
            return NotImplemented
        return self.n == other.n and self.below == other.below

    def __hash__(self) -> int:
        return hash((self.n, self.below))

    def le(self, x: int, y: int) -> bool:
        return bool(self.below[y] >> x & 1)

    @cached_property
    def above(self) -> tuple[int, ...]:
        """``above[x]`` is the bitmask of every ``y`` with ``x <= y``."""
        return tuple(sum(1 << y for y in range(self.n) if self.below[y] >> x & 1) for x in range(self.n))

    def equivalent(self, x: int, y: int) -> bool:
        return self.le(x, y) and self.le(y, x)

    def classes(self) -> tuple[int, ...]:
        """Equivalence classes of the symmetric part, as masks ordered by least member."""
        seen = 0
        out = []
        for x in range(self.n):
            if seen >> x & 1:
                continue
            cls_mask = self.below[x] & self.above[x]
            seen |= cls_mask
            out.append(cls_mask)
        return tuple(out)

    def is_antisymmetric(self) -> bool:
        return all(self.below[x] & self.above[x] == 1 << x for x in range(self.n))

    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((x, y) for y in range(self.n) for x in points_of(self.below[y]))

    def strict_pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((x, y) for x, y in self.pairs() if x != y)

    def __repr__(self) -> str:
        rel = ", ".join(f"{x}<={y}" for x, y in self.strict_pairs())
        return f"{type(self).__name__}(n={self.n}, [{rel}])"


@dataclass(frozen=True, eq=False, repr=False)
class Poset(Preorder):
    """A preorder that is also antisymmetric."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if not self.is_antisymmetric():
            raise NotAPreorder("relation is not antisymmetric")


def _transitive(below: tuple[int, ...]) -> bool:
    for col in below:
        for x in points_of(col):
            if below[x] & ~col:
                return False
    return True


def as_poset(P: Preorder) -> Poset:
    return P if isinstance(P, Poset) else Poset(P.n, P.below)


def chain(n: int) -> Poset:
    """The chain ``0 < 1 < ... < n-1``."""
    return Poset(n, tuple(full_mask(y + 1) for y in range(n)))


def total_order(perm: Iterable[int]) -> Poset:
    """Chain listing its points from bottom to top as ``perm``."""
    perm = tuple(perm)
    below = [0] * len(perm)
    acc = 0
    for p in perm:
        acc |= 1 << p
        below[p] = acc
    return Poset(len(perm), tuple(below))


def antichain(n: int) -> Poset:
    return Poset(n, tuple(1 << y for y in range(n)))


def enumerate_preorders(n: int) -> Iterator[Preorder]:
    """Every preorder on ``n`` points, in the order of the column encoding.

    Each column ``below[y]`` ranges over the masks containing ``y``; all
    reflexive relations are generated and filtered for transitivity.
    """
    col_choices = []
    for y in range(n):
        rest = full_mask(n) & ~(1 << y)
        col_choices.append(tuple(sorted(m | 1 << y for m in range(1 << n) if m & ~rest == 0)))
    for below in product(*col_choices):
        if _transitive(below):
            yield Preorder(n, below)


def is_upper(P: Preorder, U: PointsLike) -> bool:
    U = as_mask(P.n, U)
    return all(P.above[x] & ~U == 0 for x in points_of(U))


def is_lower(P: Preorder, A: PointsLike) -> bool:
    A = as_mask(P.n, A)
    return all(P.below[x] & ~A == 0 for x in points_of(A))


def is_directed(P: Preorder, D: PointsLike) -> bool:
    """Nonempty, and any two members have a common upper bound inside ``D``."""
    D = as_mask(P.n, D)
    if not D:
        return False
    pts = points_of(D)
    return all(P.above[x] & P.above[y] & D for x, y in combinations(pts, 2))


def directed_subsets(P: Preorder) -> Iterator[int]:
    for D in range(1, 1 << P.n):
        if is_directed(P, D):
            yield D


def upper_bounds(P: Preorder, D: PointsLike) -> int:
    ub = full_mask(P.n)
    for x in points_of(as_mask(P.n, D)):
        ub &= P.above[x]
    return ub


def sup(P: Poset, D: PointsLike) -> Optional[int]:
    """Least upper bound of ``D`` or ``None`` when it does not exist."""
    ub = upper_bounds(P, D)
    for s in points_of(ub):
        if ub & ~P.above[s] == 0:
            return s
    return None


def is_scott_open(P: Poset, U: PointsLike) -> bool:
    """Upper set that meets every directed set whose supremum it contains."""
    U = as_mask(P.n, U)
    if not is_upper(P, U):
        return False
    for D in directed_subsets(P):
        s = sup(P, D)
        if s is not None and U >> s & 1 and not D & U:
            return False
    return True


def alexandroff_topology(P: Preorder) -> FiniteTopology:
    """All upper sets of ``P`` as opens."""
    return FiniteTopology(P.n, canonical_family(U for U in range(1 << P.n) if is_upper(P, U)))


def scott_topology(P: Poset) -> FiniteTopology:
    P = as_poset(P)
    return make_topology(P.n, [U for U in range(1 << P.n) if is_scott_open(P, U)])


def upper_topology(P: Poset) -> FiniteTopology:
    """Topology generated by the complements of the principal down-sets."""
    P = as_poset(P)
    X = full_mask(P.n)
    return generate_from_subbase(P.n, [X & ~P.below[x] for x in range(P.n)])


def way_below(P: Poset, x: int, y: int) -> bool:
    """Every directed set whose supremum lies above ``y`` has a member above ``x``."""
    for D in directed_subsets(P):
        s = sup(P, D)
        if s is not None and P.le(y, s) and not P.above[x] & D:
            return False
    return True


class OrderPredicate(enum.Enum):
    CHAIN = "chain"
    DCPO = "dcpo"
    SUP_COMPLETE = "sup-complete"
    DOMAIN = "domain"
    DIRECTED_SUBSET = "directed-subset"


def order_predicate(P: Poset, q: OrderPredicate, witness: Optional[PointsLike] = None) -> bool:
    q = OrderPredicate(q)
    if q is OrderPredicate.CHAIN:
        return all(P.le(x, y) or P.le(y, x) for x, y in combinations(range(P.n), 2))
    if q is OrderPredicate.DCPO:
        return all(sup(P, D) is not None for D in directed_subsets(P))
    if q is OrderPredicate.SUP_COMPLETE:
        return all(sup(P, B) is not None for B in range(1, 1 << P.n))
    if q is OrderPredicate.DOMAIN:
        if not order_predicate(P, OrderPredicate.DCPO):
            return False
        for y in range(P.n):
            wb = sum(1 << x for x in range(P.n) if way_below(P, x, y))
            if not is_directed(P, wb) or sup(P, wb) != y:
                return False
        return True
    if witness is None:
        raise MissingWitness("DIRECTED_SUBSET needs a witness subset")
    return is_directed(P, witness)
