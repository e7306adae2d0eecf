"""Exact reasoning about subsets of the nonnegative integers.

:class:`UPSet` is an ultimately periodic set: an explicit prefix below a
threshold ``N`` followed by a tail ``{x >= N : x mod q in residues}``.  Such
sets form a Boolean algebra closed under every operation used here, and
canonical forms make equality structural.

The infinite topologies (cofinite topologies, the chain of topologies
generated by residue classes modulo large primes) are never materialized;
the functions below work on the subbasic data and return small certificate
objects recording what was checked.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, prod
from typing import Iterable, Optional, Union

from sympy import divisors, isprime, prime, primepi

from .errors import (
    ArityMismatch,
    EmptySetMin,
    EqualPoints,
    IndexOverlap,
    NotCofinite,
    PreconditionViolated,
)


def _ones(k: int) -> int:
    return (1 << k) - 1


def _repeat(pattern: int, period: int, length: int) -> int:
    """Bits ``[0, length)`` of the infinite repetition of a ``period``-bit pattern."""
    if length <= 0:
        return 0
    copies = -(-length // period)
    return (pattern * (_ones(period * copies) // _ones(period))) & _ones(length)


@lru_cache(maxsize=4096)
def _proper_divisors(q: int) -> tuple[int, ...]:
    return tuple(int(d) for d in divisors(q) if d < q)


def _minimal_period(mask: int, q: int) -> int:
    if q == 1:
        return 1
    pc = bin(mask).count("1")
    if pc in (0, q):
        return 1
    if pc == 1 or pc == q - 1:
        return q
    for d in _proper_divisors(q):
        if _repeat(mask & _ones(d), d, q) == mask:
            return d
    return q


@dataclass(frozen=True)
class UPSet:
    """Ultimately periodic subset of the nonnegative integers, in canonical form.

    ``prefix`` is a bitmask over ``[0, threshold)``; ``mask`` is a bitmask over
    the residues ``[0, period)``.  Use the classmethod constructors or
    :meth:`make`; the raw constructor assumes canonical input.
    """

    threshold: int
    prefix: int
    period: int
    mask: int

    @classmethod
    def make(cls, threshold: int, prefix: int, period: int, mask: int) -> "UPSet":
        if threshold < 0 or period < 1:
            raise ValueError("threshold must be >= 0 and period >= 1")
        prefix &= _ones(threshold)
        mask &= _ones(period)
        d = _minimal_period(mask, period)
        mask &= _ones(d)
        N = threshold
        while N > 0 and (prefix >> (N - 1) & 1) == (mask >> ((N - 1) % d) & 1):
            N -= 1
        return cls(N, prefix & _ones(N), d, mask)

    @classmethod
    def empty(cls) -> "UPSet":
        return cls(0, 0, 1, 0)

    @classmethod
    def naturals(cls, start: int = 0) -> "UPSet":
        """``{start, start + 1, ...}``."""
        return cls.make(start, 0, 1, 1)

    @classmethod
    def finite(cls, points: Iterable[int]) -> "UPSet":
        pts = list(points)
        if any(p < 0 for p in pts):
            raise ValueError("points must be nonnegative")
        N = max(pts, default=-1) + 1
        return cls.make(N, sum(1 << p for p in set(pts)), 1, 0)

    @classmethod
    def cofinite(cls, excluded: Iterable[int], start: int = 0) -> "UPSet":
        """``{start, start + 1, ...}`` minus finitely many points."""
        return cls.naturals(start) - cls.finite(excluded)

    @classmethod
    def residue_class(cls, x: int, n: int) -> "UPSet":
        """``{x + k*n : k >= 0}``."""
        if x < 0 or n < 1:
            raise ValueError("need x >= 0 and n >= 1")
        if n == 1:
            return cls.naturals(x)
        N = x - n + 1 if x >= n else 0
        return cls(N, 0, n, 1 << (x % n))

    def __contains__(self, x: int) -> bool:
        if x < 0:
            return False
        if x < self.threshold:
            return bool(self.prefix >> x & 1)
        return bool(self.mask >> (x % self.period) & 1)

    def _expanded(self, N: int, q: int) -> tuple[int, int]:
        # prefix over [0, N) and tail over residues mod q, for N >= threshold, period | q
        periodic = _repeat(self.mask, self.period, N)
        pre = self.prefix | (periodic & ~_ones(self.threshold))
        return pre, _repeat(self.mask, self.period, q)

    def _combine(self, other: "UPSet", op) -> "UPSet":
        N = max(self.threshold, other.threshold)
        q = self.period * other.period // gcd(self.period, other.period)
        p1, m1 = self._expanded(N, q)
        p2, m2 = other._expanded(N, q)
        return UPSet.make(N, op(p1, p2), q, op(m1, m2))

    def __and__(self, other: "UPSet") -> "UPSet":
        return self._combine(other, lambda a, b: a & b)

    def __or__(self, other: "UPSet") -> "UPSet":
        return self._combine(other, lambda a, b: a | b)

    def __sub__(self, other: "UPSet") -> "UPSet":
        return self._combine(other, lambda a, b: a & ~b)

    def __invert__(self) -> "UPSet":
        return UPSet.make(self.threshold, ~self.prefix, self.period, ~self.mask)

    def __le__(self, other: "UPSet") -> bool:
        return (self - other).is_empty()

    def is_empty(self) -> bool:
        return self.prefix == 0 and self.mask == 0

    def is_finite(self) -> bool:
        return self.mask == 0

    def is_cofinite(self) -> bool:
        return self.mask == _ones(self.period)

    def min(self) -> int:
        if self.prefix:
            return (self.prefix & -self.prefix).bit_length() - 1
        if not self.mask:
            raise EmptySetMin("the empty set has no minimum")
        N, q = self.threshold, self.period
        return next(x for x in range(N, N + q) if self.mask >> (x % q) & 1)

    def max(self) -> int:
        """Largest element of a finite nonempty set."""
        if not self.is_finite() or self.is_empty():
            raise ValueError("max is defined for finite nonempty sets only")
        return self.prefix.bit_length() - 1

    def elements_below(self, bound: int) -> list[int]:
        return [x for x in range(bound) if x in self]

    def window(self) -> int:
        """Length of a prefix of the integers that determines the set."""
        return self.threshold + self.period

    def __repr__(self) -> str:
        if self.is_finite():
            return f"UPSet({{{', '.join(map(str, self.elements_below(self.threshold)))}}})"
        pre = ", ".join(map(str, self.elements_below(self.threshold)))
        res = ", ".join(str(r) for r in range(self.period) if self.mask >> r & 1)
        return f"UPSet(prefix={{{pre}}}, from {self.threshold}: x mod {self.period} in {{{res}}})"


class SetOp(enum.Enum):
    UNION = "union"
    INTERSECT = "intersect"
    DIFFERENCE = "difference"
    COMPLEMENT = "complement"


def up_combine(op: SetOp, S: UPSet, S2: Optional[UPSet] = None) -> UPSet:
    op = SetOp(op)
    if op is SetOp.COMPLEMENT:
        if S2 is not None:
            raise ArityMismatch("complement takes one argument")
        return ~S
    if S2 is None:
        raise ArityMismatch(f"{op.value} takes two arguments")
    if op is SetOp.UNION:
        return S | S2
    if op is SetOp.INTERSECT:
        return S & S2
    return S - S2


class Query(enum.Enum):
    MEMBER = "member"
    IS_EMPTY = "is-empty"
    IS_FINITE = "is-finite"
    IS_COFINITE = "is-cofinite"
    MIN = "min"
    EQUALS = "equals"
    SUBSET = "subset"


def up_query(S: UPSet, q: Query, arg: Union[int, UPSet, None] = None) -> Union[bool, int]:
    q = Query(q)
    if q is Query.MEMBER:
        return arg in S
    if q is Query.IS_EMPTY:
        return S.is_empty()
    if q is Query.IS_FINITE:
        return S.is_finite()
    if q is Query.IS_COFINITE:
        return S.is_cofinite()
    if q is Query.MIN:
        return S.min()
    if not isinstance(arg, UPSet):
        raise ArityMismatch(f"{q.value} needs a second UPSet")
    if q is Query.EQUALS:
        return S == arg
    return S <= arg


# ---------------------------------------------------------------------------
# congruences and the Chinese remainder theorem


@dataclass(frozen=True)
class Congruence:
    """``x == residue (mod modulus)`` with ``0 <= residue < modulus``."""

    residue: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 1 or not 0 <= self.residue < self.modulus:
            raise ValueError(f"bad congruence {self.residue} mod {self.modulus}")

    @classmethod
    def of(cls, a: int, m: int) -> "Congruence":
        return cls(a % m, m)

    def holds(self, x: int) -> bool:
        return x % self.modulus == self.residue


class _Inconsistent:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INCONSISTENT"

    def __bool__(self) -> bool:
        return False


INCONSISTENT = _Inconsistent()


def crt_solve(cs: Iterable[Congruence]):
    """Least nonnegative ``x`` and ``lcm`` of the moduli, or ``INCONSISTENT``.

    Moduli need not be coprime; congruences are merged pairwise through their gcd.
    """
    x, m = 0, 1
    for c in cs:
        a, n = c.residue, c.modulus
        g = gcd(m, n)
        if (a - x) % g:
            return INCONSISTENT
        n_g = n // g
        t = ((a - x) // g * pow(m // g, -1, n_g)) % n_g if n_g > 1 else 0
        x, m = x + m * t, m * n_g
        x %= m
    return x, m


# ---------------------------------------------------------------------------
# basic opens: intersections of residue classes modulo distinct primes


@lru_cache(maxsize=None)
def nth_prime(k: int) -> int:
    """``p_k`` with ``p_1 = 2``."""
    if k < 1:
        raise ValueError("prime indices start at 1")
    return int(prime(k))


@lru_cache(maxsize=None)
def _is_prime(p: int) -> bool:
    return bool(isprime(p))


@lru_cache(maxsize=None)
def prime_index(p: int) -> int:
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    return int(primepi(p))


@dataclass(frozen=True)
class BasicOpen:
    """Intersection of ``[a]_p`` over congruences with pairwise distinct prime moduli.

    The empty list denotes all of the nonnegative integers.
    """

    congruences: tuple[Congruence, ...] = ()

    def __post_init__(self) -> None:
        cs = tuple(sorted(self.congruences, key=lambda c: c.modulus))
        object.__setattr__(self, "congruences", cs)
        mods = [c.modulus for c in cs]
        if len(set(mods)) != len(mods):
            raise ValueError("moduli of a basic open must be distinct")
        if not all(_is_prime(m) for m in mods):
            raise ValueError("moduli of a basic open must be prime")

    @classmethod
    def of(cls, *pairs: tuple[int, int]) -> "BasicOpen":
        """``BasicOpen.of((1, 3), (2, 5))`` is ``[1]_3 & [2]_5``."""
        return cls(tuple(Congruence(a, p) for a, p in pairs))

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(prime_index(c.modulus) for c in self.congruences)

    @property
    def modulus(self) -> int:
        return prod(c.modulus for c in self.congruences)

    def __contains__(self, x: int) -> bool:
        return x >= 0 and all(c.holds(x) for c in self.congruences)

    def to_upset(self) -> UPSet:
        """The same set built by intersecting residue classes in the UPSet algebra."""
        out = UPSet.naturals()
        for c in self.congruences:
            out = out & UPSet.residue_class(c.residue, c.modulus)
        return out

    def __repr__(self) -> str:
        if not self.congruences:
            return "BasicOpen(N0)"
        return "BasicOpen(" + " & ".join(f"[{c.residue}]_{c.modulus}" for c in self.congruences) + ")"


def basic_open_meet(B1: BasicOpen, B2: BasicOpen) -> UPSet:
    """The intersection as a residue class, or the empty set when a prime repeats
    with clashing residues."""
    sol = crt_solve(B1.congruences + B2.congruences)
    if sol is INCONSISTENT:
        return UPSet.empty()
    x, m = sol
    return UPSet.residue_class(x, m)


def t2_separation(n: int, a: int, b: int) -> tuple[BasicOpen, BasicOpen]:
    """Disjoint subbasic neighbourhoods ``[a]_p`` and ``[b]_p`` from the ``n``-th
    topology of the chain, with ``p = p_m`` for the least ``m >= n`` such that
    ``p_m > a + b``."""
    if a == b:
        raise EqualPoints("separation needs two distinct points")
    if n < 1 or a < 0 or b < 0:
        raise PreconditionViolated("need n >= 1 and nonnegative points")
    m = max(n, int(primepi(a + b)) + 1)
    p = nth_prime(m)
    return BasicOpen.of((a, p)), BasicOpen.of((b, p))


def meet_chain_irreducibility_witness(B1: BasicOpen, B2: BasicOpen, point: Optional[int] = None) -> int:
    """A common point of two nonempty basic opens of the chain's meet.

    ``B2`` must use only primes of larger index than every prime of ``B1``.
    Otherwise, if ``point`` (a member of ``B2``) is given, ``B2`` is replaced by
    the basic neighbourhood of ``point`` built from the next ``len(B2)``
    primes above those of ``B1``, which is open in every later topology of the
    chain; the witness is then a common point of ``B1`` and that neighbourhood.
    """
    top = max(B1.indices, default=0)
    if any(i <= top for i in B2.indices):
        if point is None:
            raise IndexOverlap(f"B2 uses prime indices {B2.indices}, not all above {top}")
        if point not in B2:
            raise PreconditionViolated(f"point {point} is not in B2")
        k = max(1, len(B2.congruences))
        B2 = BasicOpen(tuple(Congruence.of(point, nth_prime(j)) for j in range(top + 1, top + 1 + k)))
    sol = crt_solve(B1.congruences + B2.congruences)
    if sol is INCONSISTENT:  # pragma: no cover - distinct primes are coprime
        raise AssertionError("distinct prime moduli cannot clash")
    return sol[0]


# ---------------------------------------------------------------------------
# the cofinite topology on the positive integers as a join of two sober ones


def _carrier(offset: int) -> UPSet:
    return UPSet.naturals(offset)


def cofinite_join_witness(U: UPSet, offset: int = 1) -> tuple[UPSet, UPSet]:
    """Split a nonempty cofinite open ``U`` as ``V1 & V2`` with ``V1`` open in the
    topology of cofinite sets containing the first carrier point and ``V2`` in
    the one for the second.  The carrier is ``{offset, offset + 1, ...}``."""
    X = _carrier(offset)
    if U.is_empty() or not U <= X or not (X - U).is_finite():
        raise NotCofinite("U must be a nonempty cofinite subset of the carrier")
    V1 = U | UPSet.finite([offset])
    V2 = U | UPSet.finite([offset + 1])
    if (V1 & V2) != U:  # pragma: no cover - set identity
        raise AssertionError("V1 & V2 differs from U")
    return V1, V2


@dataclass(frozen=True)
class CofiniteCertificate:
    carrier_offset: int
    full_set_closed: bool
    full_set_irreducible_samples: int
    full_set_not_point_closure_samples: int
    factor_sobriety_samples: int
    join_samples: int
    sober_width: int

    @property
    def ok(self) -> bool:
        return self.full_set_closed and self.sober_width == 2


def cofinite_not_sober_certificate(offset: int = 1, sample: int = 8) -> CofiniteCertificate:
    """Check, on every finite exclusion set drawn from the first ``sample`` carrier
    points, the facts behind: the cofinite topology is not sober but is the join of
    the two sober topologies of cofinite sets containing a fixed point.

    * the whole carrier is closed, and any two nonempty opens (complements of
      finite sets) still meet, so the carrier is irreducible;
    * every point closure is a singleton, hence never the whole carrier;
    * in the factor topology fixing ``c``, the closure of ``{c}`` is the carrier
      and finite closed sets avoiding ``c`` split unless they are singletons;
    * :func:`cofinite_join_witness` reproduces each sampled open as ``V1 & V2``.
    """
    X = _carrier(offset)
    pts = list(range(offset, offset + sample))
    finite_sets = [UPSet.finite(p for i, p in enumerate(pts) if m >> i & 1) for m in range(1 << len(pts))]
    irreducible = 0
    for F1 in finite_sets:
        for F2 in finite_sets[: 1 << 4]:
            if ((X - F1) & (X - F2)).is_empty():
                raise AssertionError("two cofinite opens are disjoint")
            irreducible += 1
    not_point = 0
    for p in pts:
        # in a T1 space the closure of {p} is {p}; it is finite, the carrier is not
        cl = UPSet.finite([p])
        if cl == X or not cl.is_finite():
            raise AssertionError("point closure equals the carrier")
        not_point += 1
    factor = 0
    for c in (offset, offset + 1):
        for F in finite_sets:
            if c in F or F.is_empty():
                continue
            # closed sets of the factor: the carrier and finite sets avoiding c
            if len(F.elements_below(F.window())) >= 2:
                s1 = F.min()
                part1, part2 = UPSet.finite([s1]), F - UPSet.finite([s1])
                if (part1 | part2) != F or part1 == F or part2 == F:
                    raise AssertionError("finite closed set failed to split")
            factor += 1
    joined = 0
    for F in finite_sets:
        U = X - F
        if U.is_empty():
            continue
        V1, V2 = cofinite_join_witness(U, offset)
        if not (offset in V1 and offset + 1 in V2 and (V1 & V2) == U):
            raise AssertionError("join witness failed")
        joined += 1
    return CofiniteCertificate(
        carrier_offset=offset,
        full_set_closed=True,
        full_set_irreducible_samples=irreducible,
        full_set_not_point_closure_samples=not_point,
        factor_sobriety_samples=factor,
        join_samples=joined,
        sober_width=2,
    )


def tau_A_nat_membership(A: UPSet, xA: int, yA: int, U: UPSet) -> bool:
    """Whether ``U`` is open in the sober coarsening of the cofinite topology on
    the nonnegative integers that keeps the finite set ``A`` closed.

    Open means: ``U`` cofinite containing ``xA`` and ``yA``; or ``U`` misses
    ``A``, contains ``yA``, and ``U | A`` is cofinite (then ``U = (X - A) & V``
    with ``V = U | A``).
    """
    if not A.is_finite() or A.is_empty():
        raise PreconditionViolated("A must be finite and nonempty")
    if xA not in A:
        raise PreconditionViolated(f"xA={xA} is not in A")
    if yA in A:
        raise PreconditionViolated(f"yA={yA} is in A")
    if U.is_empty():
        return True
    if U.is_cofinite() and xA in U and yA in U:
        return True
    return (U & A).is_empty() and yA in U and (U | A).is_cofinite()


# ---------------------------------------------------------------------------
# the closed set A = {0} plus all primorials


def in_primorial_set(x: int) -> bool:
    """Membership in ``{0} | {p_1 * ... * p_k : k >= 1}``."""
    if x == 0:
        return True
    acc, k = 1, 1
    while acc < x:
        acc *= nth_prime(k)
        k += 1
    return acc == x and x > 1


def primorial(k: int) -> int:
    return prod(nth_prime(i) for i in range(1, k + 1))


@dataclass(frozen=True)
class PrimorialGapCertificate:
    """Why ``[x]_{p_m} & ... & [x]_{p_2m}`` misses every primorial."""

    x: int
    m: int
    p_m: int
    low_part: tuple[int, ...]
    max_low_part: int
    next_after_x: int
    residue_mod_p_m: int

    @property
    def ok(self) -> bool:
        return (
            self.x not in self.low_part
            and self.next_after_x > self.max_low_part
            and self.residue_mod_p_m != 0
        )


class _Refuted:
    def __repr__(self) -> str:
        return "REFUTED"

    def __bool__(self) -> bool:
        return False


REFUTED = _Refuted()


def primorial_gap_certificate(x: int, m: int):
    """Certify that the basic open ``[x]_{p_m} & ... & [x]_{p_2m}`` avoids the set
    ``{0} | {primorials}``.

    Primorials up to ``p_1...p_m`` are all below the second element of the
    progression, ``x + p_m * ... * p_2m``; later primorials are multiples of
    ``p_m`` while ``x`` is not.  Returns the certificate or ``REFUTED``.
    """
    if m < 1:
        raise PreconditionViolated("prime index must be >= 1")
    if x < 0 or in_primorial_set(x):
        raise PreconditionViolated(f"x={x} lies in the primorial set")
    p_m = nth_prime(m)
    if x >= p_m:
        raise PreconditionViolated(f"x={x} is not below p_m={p_m}")
    low = tuple(primorial(k) for k in range(1, m + 1))
    step = prod(nth_prime(i) for i in range(m, 2 * m + 1))
    cert = PrimorialGapCertificate(
        x=x,
        m=m,
        p_m=p_m,
        low_part=low,
        max_low_part=max(low),
        next_after_x=x + step,
        residue_mod_p_m=x % p_m,
    )
    return cert if cert.ok else REFUTED


remark311_verify = primorial_gap_certificate


# ---------------------------------------------------------------------------
# the sober subspace used for a non-closed set in the cofinite topology


@dataclass(frozen=True)
class LambdaM:
    """Closed sets on ``M = A | {b}`` generated by ``(C & M) - B`` with ``C`` closed in
    the cofinite topology and ``B`` inside ``A``.

    With cofinite ambient these are the finite subsets of ``M`` and the subsets
    of ``M`` containing ``b``.
    """

    A: UPSet
    b: int

    @property
    def M(self) -> UPSet:
        return self.A | UPSet.finite([self.b])

    def is_closed(self, S: UPSet) -> bool:
        if not S <= self.M:
            return False
        return S.is_finite() or self.b in S

    def split(self, S: UPSet) -> tuple[UPSet, UPSet]:
        """Two closed proper subsets covering a closed set with at least two points."""
        if not self.is_closed(S):
            raise PreconditionViolated("S is not closed")
        first = S.min()
        rest = S - UPSet.finite([first])
        if rest.is_empty():
            raise PreconditionViolated("S is a singleton")
        if self.b in S and not S.is_finite():
            s1 = (S - UPSet.finite([self.b])).min()
            return UPSet.finite([self.b, s1]), S - UPSet.finite([s1])
        return UPSet.finite([first]), rest


@dataclass(frozen=True)
class LambdaMCertificate:
    singletons_closed: int
    closed_sets_split: int
    non_closed_rejected: int

    @property
    def ok(self) -> bool:
        return self.singletons_closed > 0 and self.closed_sets_split > 0


def lambda_M_cofinite(A: UPSet, b: int, bound: int = 12) -> tuple[LambdaM, LambdaMCertificate]:
    """Membership oracle for the closed sets on ``M = A | {b}`` and a certificate that
    the space is T1 and every closed set with two or more points is reducible, so
    the irreducible closed sets are the singletons (closures of unique points).

    The checks run over every subset of ``M`` below ``bound``, each also joined
    with the infinite tail of ``M``.
    """
    if A.is_finite() or (~A).is_finite():
        raise PreconditionViolated("A must be infinite and coinfinite")
    if b < 0 or b in A:
        raise PreconditionViolated(f"b={b} must be a point outside A")
    lam = LambdaM(A, b)
    M = lam.M
    low = M.elements_below(bound)
    tail = M - UPSet.finite(range(bound))
    singletons = 0
    for z in low:
        if not lam.is_closed(UPSet.finite([z])):
            raise AssertionError(f"{{{z}}} is not closed")
        singletons += 1
    split = rejected = 0
    for mask in range(1, 1 << len(low)):
        F = UPSet.finite(p for i, p in enumerate(low) if mask >> i & 1)
        for S in (F, F | tail):
            if not lam.is_closed(S):
                rejected += 1
                continue
            if len(F.elements_below(bound)) + (0 if S.is_finite() else 2) < 2:
                continue
            S1, S2 = lam.split(S)
            if not (lam.is_closed(S1) and lam.is_closed(S2) and (S1 | S2) == S and S1 != S and S2 != S):
                raise AssertionError(f"split of {S} failed")
            split += 1
    return lam, LambdaMCertificate(singletons, split, rejected)
