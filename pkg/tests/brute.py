"""Slow, definition-level oracles used only by the tests.

Nothing here imports the package: sets are frozensets of ints and
topologies are frozensets of such sets.
"""

from itertools import combinations


def subsets(X):
    X = sorted(X)
    for r in range(len(X) + 1):
        for c in combinations(X, r):
            yield frozenset(c)


def is_topology(X, opens):
    X = frozenset(X)
    if frozenset() not in opens or X not in opens:
        return False
    return all(a | b in opens and a & b in opens for a in opens for b in opens)


def all_topologies(n):
    """Every family of subsets of range(n) satisfying the axioms (feasible for n <= 4)."""
    X = frozenset(range(n))
    middle = [s for s in subsets(X) if s and s != X]
    out = []
    for k in range(1 << len(middle)):
        fam = {frozenset(), X} | {middle[i] for i in range(len(middle)) if k >> i & 1}
        if is_topology(X, fam):
            out.append(frozenset(fam))
    return out


def to_masks(fam):
    return sorted((sum(1 << x for x in s) for s in fam), key=lambda m: (bin(m).count("1"), m))


def from_masks(n, masks):
    return frozenset(frozenset(x for x in range(n) if m >> x & 1) for m in masks)


def closeds(X, opens):
    return {frozenset(X) - U for U in opens}


def closure(X, opens, A):
    out = frozenset(X)
    for C in closeds(X, opens):
        if A <= C:
            out &= C
    return out


def irreducible(X, opens, A):
    """Nonempty, and any two opens meeting A meet each other inside A."""
    if not A:
        return False
    hits = [U for U in opens if U & A]
    return all(U & V & A for U in hits for V in hits)


def is_t0(X, opens):
    return all(any((x in U) != (y in U) for U in opens) for x, y in combinations(sorted(X), 2))


def is_sober(X, opens):
    for C in closeds(X, opens):
        if irreducible(X, opens, C):
            gens = [x for x in C if closure(X, opens, frozenset([x])) == C]
            if len(gens) != 1:
                return False
    return True


def specialization(X, opens):
    """Set of pairs (x, y) with x in cl{y}."""
    return {(x, y) for y in X for x in closure(X, opens, frozenset([y]))}


def upper_sets(n, le):
    X = frozenset(range(n))
    return {U for U in subsets(X) if all(y in U for x in U for y in range(n) if le(x, y))}


def brute_crt(pairs, limit):
    for x in range(limit):
        if all(x % m == a % m for a, m in pairs):
            return x
    return None
