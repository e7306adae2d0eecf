import pytest

from toposcope.errors import BadPoint, NotATopology, NotT0
from toposcope.finspace import (
    PropertyKind,
    check_property,
    closure,
    discrete,
    generate_from_closed_subbase,
    generate_from_subbase,
    indiscrete,
    irr_closed,
    is_irreducible,
    is_irreducible_by_opens,
    is_td,
    is_td_by_closure_criterion,
    make_topology,
    sierpinski,
    soberify,
    specialization,
    tilde,
)
from toposcope.lattice import enumerate_topologies

import brute

S = sierpinski(1)  # {1} open, so 0 lies in cl{1}


def _brute_view(T):
    X = frozenset(range(T.n))
    return X, brute.from_masks(T.n, T.opens)


def test_make_topology_accepts_and_rejects():
    assert make_topology(2, [0, 2, 3]) == S
    with pytest.raises(NotATopology):
        make_topology(2, [0, 1, 2])
    T = make_topology(3, [set(), {0}, {1}, {0, 1}, {0, 1, 2}])
    assert T.opens == (0, 1, 2, 3, 7)
    with pytest.raises(NotATopology):
        make_topology(3, [0, 1, 2, 7])  # {0} | {1} missing
    with pytest.raises(BadPoint):
        make_topology(2, [0, 4, 3])
    with pytest.raises(BadPoint):
        make_topology(2, [set(), {5}, {0, 1}])


def test_generate_from_subbase_examples():
    assert generate_from_subbase(3, [{0, 1}, {1, 2}]).opens == (0, 2, 3, 6, 7)
    assert generate_from_subbase(2, []) == indiscrete(2)
    assert generate_from_subbase(2, [{0}, {1}]) == discrete(2)
    with pytest.raises(BadPoint):
        generate_from_subbase(2, [{3}])


def test_closed_subbase_is_dual():
    T = generate_from_closed_subbase(3, [{0}, {0, 1}])
    assert set(T.closeds) == {0, 1, 3, 7}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_generated_topology_is_smallest(n):
    # brute force: the least topology containing the subbase among all topologies
    tops = brute.all_topologies(n)
    X = frozenset(range(n))
    for sub in [[{0}], [set(range(n))], [{0}, {n - 1}], [{x} for x in range(1, n)]]:
        sub = [frozenset(s) for s in sub]
        containing = [t for t in tops if all(s in t for s in sub)]
        least = min(containing, key=len)
        assert all(least <= t for t in containing)
        got = generate_from_subbase(n, sub)
        assert set(got.opens) == set(brute.to_masks(least))
        assert X in least


def test_closure_examples():
    assert closure(S, {1}) == 0b11
    assert closure(S, {0}) == 0b01
    assert closure(S, set()) == 0
    assert tilde(S, {1}) == 0b11
    assert tilde(S, {0}) == 0b01
    assert tilde(discrete(3), 0) == 0


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_closure_and_irreducibility_match_definitions(n):
    for T in enumerate_topologies(n):
        X, opens = _brute_view(T)
        for A in range(1 << n):
            As = frozenset(x for x in range(n) if A >> x & 1)
            want = brute.closure(X, opens, As)
            assert closure(T, A) == sum(1 << x for x in want)
            irr = brute.irreducible(X, opens, As)
            assert is_irreducible(T, A) == irr
            assert is_irreducible_by_opens(T, A) == irr


def test_specialization_examples():
    assert specialization(S).strict_pairs() == ((0, 1),)
    assert specialization(discrete(3)).strict_pairs() == ()
    P = specialization(indiscrete(2))
    assert P.equivalent(0, 1)


def test_irr_closed_examples():
    assert irr_closed(S) == (0b01, 0b11)
    assert irr_closed(indiscrete(2)) == (0b11,)


def test_property_examples():
    assert check_property(S, PropertyKind.T0)
    assert not check_property(S, PropertyKind.T1)
    assert check_property(S, PropertyKind.SOBER)
    assert not check_property(indiscrete(2), PropertyKind.SOBER)
    assert check_property(discrete(3), PropertyKind.T2)
    assert not check_property(S, PropertyKind.T2)
    assert check_property(S, "sober")


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_t0_and_sober_match_definitions(n):
    for T in enumerate_topologies(n):
        X, opens = _brute_view(T)
        assert check_property(T, PropertyKind.T0) == brute.is_t0(X, opens)
        assert check_property(T, PropertyKind.SOBER) == brute.is_sober(X, opens)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_td_two_routes_agree(n):
    for T in enumerate_topologies(n):
        assert is_td(T) == is_td_by_closure_criterion(T)
        assert is_td(T) == check_property(T, PropertyKind.TD)


def test_t1_means_discrete_on_finite_sets():
    for n in range(4):
        t1 = [T for T in enumerate_topologies(n) if check_property(T, PropertyKind.T1)]
        assert t1 == [discrete(n)]


def test_soberify_examples():
    sob = soberify(S)
    assert sob.space.n == 2
    assert set(sob.carrier) == {0b01, 0b11}
    # point x goes to cl{x}; the open {1} must come back as the open {cl{1}}
    assert sob.space.is_open(1 << sob.point_map[1])
    d = soberify(discrete(3))
    assert d.space == discrete(3)
    with pytest.raises(NotT0):
        soberify(indiscrete(2))


def test_topology_order_operators():
    assert indiscrete(2) < S < discrete(2)
    assert discrete(2) >= S and not S > discrete(2)
    assert not S <= sierpinski(0) and not sierpinski(0) <= S
