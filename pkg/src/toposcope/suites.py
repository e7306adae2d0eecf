"""Named verification suites and the report they produce.

Each suite is an exhaustive (or, where stated, seeded-sample) sweep that
counts instances per claim and keeps the first counterexample.  Suites are
deterministic for fixed parameters; the optional wall time is the only
field that varies between runs and is omitted unless requested.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from math import factorial, lcm, prod
from typing import Any, Callable, Optional

from ._caps import ENUMERATION_MAX_N, require_n, soft_max_n
from .constructions import (
    alexandroff_meet_decomposition,
    meet_sober_decomposition,
    minimal_sober_certificate,
    noncomparable_pairs,
    t1_join_decomposition,
    tau_A,
    tau_A_closed_family,
    tau_star,
)
from .errors import BadParam, TooLarge, UnknownSuite
from .finspace import (
    FiniteTopology,
    PropertyKind,
    check_property,
    discrete,
    full_mask,
    irr_closed,
    is_td,
    is_td_by_closure_criterion,
    points_of,
    soberify,
    specialization,
)
from .lattice import enumerate_topologies, enumerate_topologies_by_families, join, meet, minimal_in_class
from .order import (
    alexandroff_topology,
    as_poset,
    enumerate_preorders,
    scott_topology,
    total_order,
    upper_topology,
)
from . import symnat as sn

PASS, FAIL, SKIP = "PASS", "FAIL", "SKIP"

# Number of topologies on n labelled points, n = 0..5.
KNOWN_COUNTS = (1, 1, 4, 29, 355, 6942)


def encode(obj: Any) -> Any:
    """JSON-friendly canonical form; topologies become their sorted open masks."""
    if isinstance(obj, FiniteTopology):
        return {"n": obj.n, "opens": list(obj.opens)}
    if isinstance(obj, sn.UPSet):
        return repr(obj)
    if isinstance(obj, (list, tuple)):
        return [encode(o) for o in obj]
    if isinstance(obj, dict):
        return {str(k): encode(v) for k, v in obj.items()}
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    return repr(obj)


@dataclass
class Evidence:
    claim: str
    instances: int = 0
    counterexample: Any = None
    failed: bool = False

    def as_dict(self) -> dict:
        return {"claim": self.claim, "instances": self.instances, "counterexample": encode(self.counterexample)}


@dataclass
class VerificationReport:
    suite: str
    params: dict
    verdict: str
    evidence: list = field(default_factory=list)
    elapsed_ms: Optional[float] = None

    @property
    def exit_code(self) -> int:
        return {PASS: 0, FAIL: 1, SKIP: 3}[self.verdict]

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "params": dict(sorted(self.params.items())),
            "verdict": self.verdict,
            "evidence": [e.as_dict() for e in self.evidence],
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, ensure_ascii=False) + "\n"


class Ledger:
    """Per-claim instance counters in first-use order."""

    def __init__(self) -> None:
        self._items: dict[str, Evidence] = {}

    def check(self, claim: str, ok: bool, witness: Any = None) -> bool:
        ev = self._items.setdefault(claim, Evidence(claim))
        ev.instances += 1
        if not ok and not ev.failed:
            ev.failed = True
            ev.counterexample = witness if witness is not None else "unspecified"
        return ok

    def note(self, claim: str, count: int) -> None:
        """Record a claim established by construction for ``count`` instances."""
        ev = self._items.setdefault(claim, Evidence(claim))
        ev.instances += count

    @property
    def evidence(self) -> list[Evidence]:
        return list(self._items.values())

    @property
    def verdict(self) -> str:
        return FAIL if any(e.failed for e in self._items.values()) else PASS


# ---------------------------------------------------------------------------
# finite suites


def _enumeration(L: Ledger, n: int) -> None:
    require_n(n, ENUMERATION_MAX_N, "enumeration")
    for k in range(n + 1):
        by_pre = enumerate_topologies(k)
        by_fam = enumerate_topologies_by_families(k)
        L.check("preorder route yields no duplicates", len(set(by_pre)) == len(by_pre), k)
        L.check("preorder and family routes agree", set(by_pre) == by_fam, k)
        L.check("count matches 1, 1, 4, 29, 355, 6942", len(by_pre) == KNOWN_COUNTS[k], [k, len(by_pre)])
    if n >= 3:
        c = len(enumerate_topologies(3, PropertyKind.T0))
        L.check("T0 topologies on 3 points number 19", c == 19, c)


def _sobriety_collapse(L: Ledger, n: int) -> None:
    require_n(n, soft_max_n(), "sobriety-collapse")
    for k in range(n + 1):
        for T in enumerate_topologies(k):
            t0 = check_property(T, PropertyKind.T0)
            sob = check_property(T, PropertyKind.SOBER)
            wf = check_property(T, PropertyKind.WELL_FILTERED)
            d = check_property(T, PropertyKind.D_SPACE)
            L.check("sober iff T0", sob == t0, T)
            L.check("sober implies well-filtered", not sob or wf, T)
            L.check("well-filtered implies d-space", not wf or d, T)
            L.check("TD by definition iff TD by closure criterion", is_td(T) == is_td_by_closure_criterion(T), T)


def _t1_join(L: Ledger, n: int) -> None:
    require_n(n, soft_max_n(), "t1-join")
    for k in range(2, n + 1):
        D = discrete(k)
        X = full_mask(k)
        fam = t1_join_decomposition(D)
        L.check("one member per nonempty proper closed set", len(fam) == (1 << k) - 2, [k, len(fam)])
        L.check("every member is sober", all(check_property(t, PropertyKind.SOBER) for t in fam), k)
        L.check("join of the members is discrete", join(fam) == D, k)
        for A in range(1, X):
            for xA in points_of(A):
                for yA in points_of(X & ~A):
                    t = tau_A(D, A, xA, yA)
                    want = set(tau_A_closed_family(k, A, xA, yA))
                    L.check("closed family matches the formula", set(t.closeds) == want, [k, A, xA, yA])
                    irr = {1 << x for x in range(k) if x not in (xA, yA)} | {A, X}
                    L.check("irreducible closed sets match the formula", set(irr_closed(t)) == irr, [k, A, xA, yA])
                    pc = t.point_closures
                    L.check(
                        "closure of xA is A and closure of yA is X",
                        pc[xA] == A and pc[yA] == X,
                        [k, A, xA, yA],
                    )
                    L.check("A is closed and the result is coarser", t.is_closed(A) and t <= D, [k, A])


def _meet_sober(L: Ledger, n: int) -> None:
    require_n(n, soft_max_n(), "meet-sober")
    for k in range(n + 1):
        for T in enumerate_topologies(k):
            dec = meet_sober_decomposition(T)
            fam = dec.family
            L.check("every member is sober", all(check_property(m, PropertyKind.SOBER) for m in fam), T)
            L.check("every member refines the input", all(T <= m for m in fam), T)
            L.check("meet of the members equals the input", meet(fam) == T, T)
            L.check("constructive stages suffice (no fallback)", not dec.used_fallback, T)


def _alexandroff_meet(L: Ledger, n: int) -> None:
    require_n(n, soft_max_n(), "alexandroff-meet")
    for k in range(n + 1):
        for P in enumerate_preorders(k):
            if not P.is_antisymmetric():
                continue
            P = as_poset(P)
            fam = alexandroff_meet_decomposition(P)
            L.check("every factor is sober", all(check_property(t, PropertyKind.SOBER) for t in fam), P.pairs())
            L.check("meet of the factors is the upper-set topology", meet(fam) == alexandroff_topology(P), P.pairs())
            L.check("Scott topology equals upper-set topology", scott_topology(P) == alexandroff_topology(P), P.pairs())


_UPWARD = (PropertyKind.T0, PropertyKind.T1, PropertyKind.TD, PropertyKind.SOBER)


def _upper_sets(L: Ledger, n: int) -> None:
    require_n(n, soft_max_n(), "upper-sets")
    for k in range(n + 1):
        tops = enumerate_topologies(k)
        props = {t: {p: check_property(t, p) for p in _UPWARD} for t in tops}
        for tau in tops:
            for mu in tops:
                if not tau <= mu:
                    continue
                for p in _UPWARD:
                    if props[tau][p]:
                        L.check(f"{p.value} is upward closed", props[mu][p], [tau, mu])
                if props[tau][PropertyKind.T1] and props[tau][PropertyKind.SOBER]:
                    L.check("T1-sober is upward closed", props[mu][PropertyKind.T1] and props[mu][PropertyKind.SOBER], [tau, mu])
                if props[tau][PropertyKind.TD] and props[tau][PropertyKind.SOBER]:
                    L.check("TD-sober is upward closed", props[mu][PropertyKind.TD] and props[mu][PropertyKind.SOBER], [tau, mu])
        # Finite joins are iterated pair joins, so pairs (joined results staying
        # above the common lower bound) cover every finite family.
        sober = [t for t in tops if props[t][PropertyKind.SOBER]]
        for a, b in combinations(sober, 2):
            if not any(s <= a and s <= b for s in sober):
                continue
            j = join([a, b])
            L.check("join of sober topologies above a common sober one is sober", check_property(j, PropertyKind.SOBER), [a, b])
            L.check("join of two sober topologies has n irreducible closed sets", len(irr_closed(j)) == k, j)


def _tau_star(L: Ledger, n: int) -> None:
    require_n(n, soft_max_n(), "tau-star")
    kinds = (PropertyKind.SOBER, PropertyKind.WELL_FILTERED, PropertyKind.D_SPACE)
    for k in range(n + 1):
        for T in enumerate_topologies(k, PropertyKind.T0):
            before = {p: check_property(T, p) for p in kinds}
            pc = T.point_closures
            for pair in noncomparable_pairs(T):
                x, y = pair.x, pair.y
                S = tau_star(T, pair)
                tag = [T, x, y]
                L.check("strictly coarser", S < T, tag)
                L.check("T0", check_property(S, PropertyKind.T0), tag)
                for p in kinds:
                    if before[p]:
                        L.check(f"{p.value} preserved", check_property(S, p), tag)
                spc = S.point_closures
                law = all(spc[a] == (pc[a] | pc[y] if pc[a] >> x & 1 else pc[a]) for a in range(k))
                L.check("closure law holds pointwise", law, tag)
                spec = specialization(S).below
                want = tuple(pc[v] | (pc[y] if pc[v] >> x & 1 else 0) for v in range(k))
                L.check("specialization order formula", spec == want, tag)
                L.check("closure of x strictly grows", spc[x] == pc[x] | pc[y] != pc[x], tag)


def _minimal_sober(L: Ledger, n: int, chain_n: int = 5) -> None:
    require_n(n, soft_max_n(), "minimal-sober")
    for k in range(2, n + 1):
        mins = set(minimal_in_class(k, PropertyKind.SOBER))
        orders = {alexandroff_topology(total_order(p)) for p in permutations(range(k))}
        ok = L.check("minimal sober topologies are the total orders, n! of them",
                     mins == orders and len(mins) == factorial(k), k)
        if ok and k == n:
            L.note(f"{len(mins)} minimal sober topologies = {len(orders)} total orders", 1)
        L.check("minimal d-space class agrees", set(minimal_in_class(k, PropertyKind.D_SPACE)) == mins, k)
        L.check("minimal well-filtered class agrees", set(minimal_in_class(k, PropertyKind.WELL_FILTERED)) == mins, k)
        for T in enumerate_topologies(k, PropertyKind.SOBER):
            cert = minimal_sober_certificate(T)
            L.check("certificate agrees with class membership", cert.minimal == (T in mins), T)
            if not cert.minimal:
                w = cert.witness
                coarser = tau_star(T, w) if hasattr(w, "x") else w
                L.check("non-minimal witness yields a coarser sober topology",
                        coarser < T and check_property(coarser, PropertyKind.SOBER), T)
        for T in minimal_in_class(k, PropertyKind.T0):
            L.check("soberification of a minimal T0 space is minimal sober",
                    minimal_sober_certificate(soberify(T).space).minimal, T)
    for k in range(1, chain_n + 1):
        for p in permutations(range(k)):
            C = total_order(p)
            L.check("upper and Scott topologies of a chain agree", upper_topology(C) == scott_topology(C), list(p))


# ---------------------------------------------------------------------------
# symbolic suites


def _index_set_pairs(max_index: int):
    idx = range(1, max_index + 1)
    for r1 in range(1, max_index):
        for I1 in combinations(idx, r1):
            rest = [i for i in idx if i > max(I1)]
            for r2 in range(1, len(rest) + 1):
                for I2 in combinations(rest, r2):
                    yield I1, I2


def _residue_tuples(primes, exhaustive_limit: int, rng: random.Random, samples: int):
    if prod(primes) <= exhaustive_limit:
        yield from product(*(range(p) for p in primes))
    else:
        for _ in range(samples):
            yield tuple(rng.randrange(p) for p in primes)


def _crt_chain(L: Ledger, max_index: int, pair_bound: int = 20, exhaustive_limit: int = 1_000,
               samples: int = 32, seed: int = 0) -> None:
    if max_index < 2:
        raise BadParam("max-index must be at least 2")
    rng = random.Random(seed)
    for n in range(1, 5):
        for a in range(pair_bound + 1):
            for b in range(a + 1, pair_bound + 1):
                U, V = sn.t2_separation(n, a, b)
                p = U.congruences[0].modulus
                ok = (a in U and b in V and sn.crt_solve(U.congruences + V.congruences) is sn.INCONSISTENT
                      and sn.prime_index(p) >= n and p > a + b)
                L.check("t2 separation: disjoint neighbourhoods in the n-th topology", ok, [n, a, b])
    primes = {i: sn.nth_prime(i) for i in range(1, max_index + 1)}
    for I1, I2 in _index_set_pairs(max_index):
        ps = [primes[i] for i in I1 + I2]
        for res in _residue_tuples(ps, exhaustive_limit, rng, samples):
            cs = [sn.Congruence(r, p) for r, p in zip(res, ps)]
            B1, B2 = sn.BasicOpen(tuple(cs[: len(I1)])), sn.BasicOpen(tuple(cs[len(I1):]))
            w = sn.meet_chain_irreducibility_witness(B1, B2)
            L.check("witness lies in both basic opens", w in B1 and w in B2, [repr(B1), repr(B2), w])
    # overlapping index sets go through re-basing at a point of B2
    for _ in range(200):
        i1 = sorted(rng.sample(range(1, max_index + 1), rng.randint(1, max_index)))
        i2 = sorted(rng.sample(range(1, max(i1) + 1), rng.randint(1, max(i1))))
        B1 = sn.BasicOpen(tuple(sn.Congruence(rng.randrange(primes[i]), primes[i]) for i in i1))
        B2 = sn.BasicOpen(tuple(sn.Congruence(rng.randrange(primes[i]), primes[i]) for i in i2))
        point = sn.crt_solve(B2.congruences)[0] + B2.modulus * rng.randrange(3)
        w = sn.meet_chain_irreducibility_witness(B1, B2, point=point)
        top = max(i1)
        rebased = sn.BasicOpen(tuple(sn.Congruence.of(point, sn.nth_prime(j))
                                     for j in range(top + 1, top + 1 + len(i2))))
        L.check("re-based witness lies in B1 and in a neighbourhood of the point",
                w in B1 and w in rebased and point in rebased, [repr(B1), repr(B2), point, w])
    for a, m, b, n in product(range(6), range(1, 7), range(6), range(1, 7)):
        sol = sn.crt_solve([sn.Congruence.of(a, m), sn.Congruence.of(b, n)])
        brute = next((x for x in range(m * n) if x % m == a % m and x % n == b % n), None)
        got = None if sol is sn.INCONSISTENT else sol[0]
        L.check("CRT agrees with brute force", got == brute, [a, m, b, n])


def _remark_A(L: Ledger, max_x: int = 50, extra_m: int = 3) -> None:
    for x in range(max_x + 1):
        if sn.in_primorial_set(x):
            L.check("points of A are rejected", _raises(lambda: sn.primorial_gap_certificate(x, 50)), x)
            continue
        m0 = next(m for m in range(1, 100) if sn.nth_prime(m) > x)
        for m in range(m0, m0 + extra_m):
            cert = sn.primorial_gap_certificate(x, m)
            L.check("certificate issued", cert is not sn.REFUTED and cert.ok, [x, m])
            if cert is sn.REFUTED:
                continue
            p_m = cert.p_m
            step = cert.next_after_x - x
            L.check("step is the product of p_m .. p_2m",
                    step == prod(sn.nth_prime(i) for i in range(m, 2 * m + 1)), [x, m])
            L.check("later primorials are multiples of p_m",
                    all(sn.primorial(k) % p_m == 0 for k in range(m, 2 * m + 3)), [x, m])
            hits = [x + j * step for j in range(40) if sn.in_primorial_set(x + j * step)]
            L.check("no progression element is in A", not hits, [x, m, hits[:1]])


def _cofinite_join(L: Ledger, sample: int = 8) -> None:
    cert = sn.cofinite_not_sober_certificate(offset=1, sample=sample)
    L.check("cofinite topology is not sober and splits into two sober ones", cert.ok, repr(cert))
    L.note("pairs of cofinite opens meet", cert.full_set_irreducible_samples)
    L.note("factor closed sets split or are point closures", cert.factor_sobriety_samples)
    L.note("cofinite opens rebuilt from the two factors", cert.join_samples)
    X = sn.UPSet.naturals(1)
    for m in range(1 << sample):
        F = sn.UPSet.finite(1 + i for i in range(sample) if m >> i & 1)
        U = X - F
        if U.is_empty():
            continue
        V1, V2 = sn.cofinite_join_witness(U)
        L.check("V1 & V2 = U with V1, V2 cofinite", (V1 & V2) == U and (X - V1).is_finite() and (X - V2).is_finite(), repr(U))
    A = sn.UPSet.finite([0])
    N0 = sn.UPSet.naturals()
    L.check("tau_A on N0: N0 - {0} is open", sn.tau_A_nat_membership(A, 0, 1, N0 - A), "N0-{0}")
    L.check("tau_A on N0: N0 - {1} is not open", not sn.tau_A_nat_membership(A, 0, 1, N0 - sn.UPSet.finite([1])), "N0-{1}")
    lam, lc = sn.lambda_M_cofinite(sn.UPSet.residue_class(0, 2), 1)
    L.check("lambda_M on a cofinite ambient is T1 and sober", lc.ok, repr(lc))


def _raises(fn: Callable[[], Any]) -> bool:
    try:
        fn()
    except Exception:
        return True
    return False


def _symbolic(L: Ledger, max_index: int) -> None:
    _cofinite_join(L)
    _crt_chain(L, max_index)
    _remark_A(L)


# ---------------------------------------------------------------------------
# UPSet algebra


def _all_upsets(max_threshold: int, max_period: int) -> list[sn.UPSet]:
    out = {}
    for q in range(1, max_period + 1):
        for N in range(max_threshold + 1):
            for pre in range(1 << N):
                for mask in range(1 << q):
                    S = sn.UPSet.make(N, pre, q, mask)
                    out.setdefault(S, (N, pre, q, mask))
    return list(out)


def _raw_member(N: int, pre: int, q: int, mask: int, x: int) -> bool:
    return bool(pre >> x & 1) if x < N else bool(mask >> (x % q) & 1)


def _window(*sets: sn.UPSet) -> int:
    N = max(s.threshold for s in sets)
    q = lcm(*(s.period for s in sets))
    return N + 2 * q


def _upset_algebra(L: Ledger, samples: int = 10_000, seed: int = 0, max_threshold: int = 8,
                   max_period: int = 6) -> None:
    E = sn.UPSet.empty()
    N0 = sn.UPSet.naturals()
    for q in range(1, max_period + 1):
        for N in range(max_threshold + 1):
            for pre in range(1 << N):
                for mask in range(1 << q):
                    S = sn.UPSet.make(N, pre, q, mask)
                    W = N + 2 * q + S.window()
                    L.check("canonical form keeps membership",
                            all((x in S) == _raw_member(N, pre, q, mask, x) for x in range(W)), [N, pre, q, mask])
                    L.check("canonical form is minimal", S.threshold <= N and q % S.period == 0, [N, pre, q, mask])
                    C = ~S
                    L.check("complement laws", (~C) == S and (S | C) == N0 and (S & C) == E, repr(S))
    rng = random.Random(seed)

    def rand_set() -> sn.UPSet:
        q = rng.randint(1, max_period)
        N = rng.randint(0, max_threshold)
        return sn.UPSet.make(N, rng.getrandbits(N) if N else 0, q, rng.getrandbits(q))

    for _ in range(samples):
        A, B, C = rand_set(), rand_set(), rand_set()
        W = _window(A, B, C)
        tag = [repr(A), repr(B), repr(C)]
        ok = all(
            ((x in (A | B)) == (x in A or x in B))
            and ((x in (A & B)) == (x in A and x in B))
            and ((x in (A - B)) == (x in A and x not in B))
            and ((x in ~A) == (x not in A))
            for x in range(W)
        )
        L.check("operations agree with a brute-force window", ok, tag)
        L.check("commutative", (A | B) == (B | A) and (A & B) == (B & A), tag)
        L.check("associative", ((A | B) | C) == (A | (B | C)) and ((A & B) & C) == (A & (B & C)), tag)
        L.check("distributive", (A & (B | C)) == ((A & B) | (A & C)) and (A | (B & C)) == ((A | B) & (A | C)), tag)
        L.check("absorption", (A | (A & B)) == A and (A & (A | B)) == A, tag)
        L.check("De Morgan", ~(A | B) == (~A & ~B) and ~(A & B) == (~A | ~B), tag)
        L.check("equality is extensional on the window",
                (A == B) == all((x in A) == (x in B) for x in range(W)), tag)
        L.check("subset agrees with the window", (A <= B) == all(x in B for x in range(W) if x in A), tag)
        if not A.is_empty():
            L.check("min agrees with the window", A.min() == next(x for x in range(W) if x in A), tag)
        L.check("finite/cofinite flags agree with the tail",
                A.is_finite() == (not any(x in A for x in range(A.threshold, A.threshold + A.period)))
                and A.is_cofinite() == all(x in A for x in range(A.threshold, A.threshold + A.period)), tag)


# ---------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class Suite:
    name: str
    run: Callable[..., None]
    defaults: dict
    about: str


SUITES = {
    s.name: s
    for s in (
        Suite("enumeration", _enumeration, {"n": 5}, "topology counts by two independent enumerations"),
        Suite("sobriety-collapse", _sobriety_collapse, {"n": 4}, "sober = T0 and the sobriety hierarchy on finite sets"),
        Suite("t1-join", _t1_join, {"n": 4}, "discrete topology as a join of sober tau_A topologies"),
        Suite("meet-sober", _meet_sober, {"n": 4}, "every topology is a meet of sober refinements"),
        Suite("alexandroff-meet", _alexandroff_meet, {"n": 4}, "upper-set topologies as meets of two-point orders"),
        Suite("upper-sets", _upper_sets, {"n": 4}, "upward closure of separation properties and sober joins"),
        Suite("tau-star", _tau_star, {"n": 4}, "the coarsening at a noncomparable pair"),
        Suite("minimal-sober", _minimal_sober, {"n": 4}, "minimal sober topologies are chains"),
        Suite("crt-chain", _crt_chain, {"max_index": 8}, "Hausdorff chain and irreducibility of its meet"),
        Suite("remark-A", _remark_A, {"max_x": 50}, "neighbourhoods avoiding {0} plus primorials"),
        Suite("cofinite-join", _cofinite_join, {"sample": 8}, "cofinite topology as a join of two sober ones"),
        Suite("symbolic", _symbolic, {"max_index": 8}, "cofinite-join, crt-chain and remark-A together"),
        Suite("upset-algebra", _upset_algebra, {"samples": 10_000, "seed": 0}, "ultimately periodic set algebra"),
    )
}


def run_suite(name: str, params: Optional[dict] = None, timing: bool = False) -> VerificationReport:
    """Run a registered suite; parameters not given take the suite defaults."""
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}")
    suite = SUITES[name]
    params = dict(params or {})
    extra = set(params) - set(suite.defaults)
    if extra:
        raise BadParam(f"suite {name} does not take {', '.join(sorted(extra))}")
    merged = {**suite.defaults, **params}
    for k, v in merged.items():
        if not isinstance(v, int) or v < 0:
            raise BadParam(f"{k} must be a nonnegative integer, got {v!r}")
    L = Ledger()
    start = time.perf_counter()
    try:
        suite.run(L, **merged)
    except TooLarge as exc:
        report = VerificationReport(name, merged, SKIP, [Evidence(f"skipped: {exc}")])
    else:
        report = VerificationReport(name, merged, L.verdict, L.evidence)
    if timing:
        report.elapsed_ms = round((time.perf_counter() - start) * 1000, 3)
    return report
