import pytest
from hypothesis import given, settings, strategies as st

from toposcope.errors import MissingWitness
from toposcope.finspace import PropertyKind, check_property, discrete, specialization
from toposcope.lattice import enumerate_topologies
from toposcope.order import (
    NotAPreorder,
    OrderPredicate,
    Poset,
    Preorder,
    alexandroff_topology,
    antichain,
    chain,
    enumerate_preorders,
    is_scott_open,
    order_predicate,
    scott_topology,
    sup,
    total_order,
    upper_topology,
    way_below,
)

import brute


def test_preorder_validation():
    with pytest.raises(NotAPreorder):
        Preorder(2, (0b10, 0b10))  # not reflexive at 0
    with pytest.raises(NotAPreorder):
        Preorder(3, (0b001, 0b011, 0b110))  # 0<=1<=2 but 0 not <= 2
    with pytest.raises(NotAPreorder):
        Poset(2, (0b11, 0b11))
    P = Preorder.from_pairs(3, [(0, 1), (1, 2)])
    assert P.le(0, 2) and not P.le(2, 0)
    assert P == chain(3)


def test_upper_set_topologies_examples():
    assert alexandroff_topology(chain(2)).opens == (0, 0b10, 0b11)
    assert alexandroff_topology(antichain(2)) == discrete(2)
    assert alexandroff_topology(chain(3)).opens == (0, 0b100, 0b110, 0b111)
    assert scott_topology(chain(3)).opens == (0, 0b100, 0b110, 0b111)
    assert scott_topology(antichain(3)) == discrete(3)
    assert upper_topology(chain(3)).opens == (0, 0b100, 0b110, 0b111)
    assert upper_topology(antichain(2)) == discrete(2)


def test_order_predicates():
    assert order_predicate(chain(3), OrderPredicate.CHAIN)
    assert not order_predicate(antichain(2), OrderPredicate.CHAIN)
    assert order_predicate(antichain(3), OrderPredicate.DCPO)
    assert not order_predicate(antichain(2), OrderPredicate.SUP_COMPLETE)
    assert order_predicate(chain(4), OrderPredicate.SUP_COMPLETE)
    assert order_predicate(chain(3), OrderPredicate.DOMAIN)
    assert way_below(chain(2), 0, 1)
    assert order_predicate(chain(3), "directed-subset", {0, 2})
    assert not order_predicate(antichain(2), OrderPredicate.DIRECTED_SUBSET, 0b11)
    with pytest.raises(MissingWitness):
        order_predicate(chain(2), OrderPredicate.DIRECTED_SUBSET)


def _brute_count_preorders(n):
    # relations as sets of pairs, reflexive and transitive
    pts = range(n)
    off = [(x, y) for x in pts for y in pts if x != y]
    count = 0
    for k in range(1 << len(off)):
        rel = {(x, x) for x in pts} | {off[i] for i in range(len(off)) if k >> i & 1}
        if all((a, d) in rel for a, b in rel for c, d in rel if b == c):
            count += 1
    return count


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_preorder_count(n):
    assert sum(1 for _ in enumerate_preorders(n)) == _brute_count_preorders(n)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_alexandroff_bijection(n):
    # every finite topology is the upper-set topology of its specialization order
    for T in enumerate_topologies(n):
        P = specialization(T)
        assert alexandroff_topology(P) == T
        want = brute.upper_sets(n, P.le)
        assert set(T.opens) == set(brute.to_masks(want))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_scott_equals_alexandroff_on_finite_posets(n):
    for P in enumerate_preorders(n):
        if P.is_antisymmetric():
            P = Poset(P.n, P.below)
            assert scott_topology(P) == alexandroff_topology(P)
            assert order_predicate(P, OrderPredicate.DCPO)


def test_finite_t0_spaces_have_dcpo_specialization():
    for T in enumerate_topologies(3, PropertyKind.T0):
        P = Poset(T.n, specialization(T).below)
        assert all(is_scott_open(P, U) for U in T.opens)
        assert check_property(T, PropertyKind.D_SPACE)


@settings(max_examples=60, deadline=None)
@given(st.permutations(range(4)), st.integers(1, 15))
def test_sup_in_a_chain_is_the_top_element(perm, D):
    C = total_order(perm)
    members = [x for x in range(4) if D >> x & 1]
    top = max(members, key=perm.index)
    assert sup(C, D) == top


def test_chain_upper_equals_scott():
    from itertools import permutations

    for k in range(1, 5):
        for p in permutations(range(k)):
            C = total_order(p)
            assert upper_topology(C) == scott_topology(C) == alexandroff_topology(C)
