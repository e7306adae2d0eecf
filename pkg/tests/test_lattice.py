from itertools import product

import pytest

from toposcope.errors import EmptyFamily, MixedGroundSize, TooLarge
from toposcope.finspace import PropertyKind, check_property, discrete, indiscrete, sierpinski
from toposcope.lattice import (
    NONE_WIDTH,
    SoberWidth,
    bottom,
    enumerate_topologies,
    enumerate_topologies_by_families,
    is_directed_family,
    join,
    meet,
    minimal_in_class,
    sober_join_width,
    strongly_irreducible,
    strongly_irreducible_by_subsets,
)
from toposcope.order import alexandroff_topology, total_order

import brute

S0, S1 = sierpinski(0), sierpinski(1)


def test_meet_and_join_examples():
    assert meet([S0, S1]) == indiscrete(2)
    assert meet([S1]) == S1
    assert meet(enumerate_topologies(2, PropertyKind.T0)) == indiscrete(2)
    assert join([S0, S1]) == discrete(2)
    assert join([S1, indiscrete(2)]) == S1
    with pytest.raises(EmptyFamily):
        meet([])
    with pytest.raises(EmptyFamily):
        join([])
    with pytest.raises(MixedGroundSize):
        join([S1, discrete(3)])


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
def test_counts_against_axiom_brute_force(n):
    want = {tuple(brute.to_masks(t)) for t in brute.all_topologies(n)}
    got = {T.opens for T in enumerate_topologies(n)}
    assert got == want
    assert {T.opens for T in enumerate_topologies_by_families(n)} == want


def test_t0_count_and_cap():
    assert len(enumerate_topologies(3, PropertyKind.T0)) == 19
    assert len(enumerate_topologies(4, PropertyKind.T0)) == 219
    with pytest.raises(TooLarge):
        enumerate_topologies(6)


def test_enumeration_order_is_stable():
    assert enumerate_topologies(3) == enumerate_topologies(3)
    assert enumerate_topologies(2)[0] == discrete(2)


def test_lattice_laws_on_three_points():
    tops = enumerate_topologies(3)
    for a, b in product(tops, repeat=2):
        assert meet([a, b]) == meet([b, a])
        assert join([a, b]) == join([b, a])
        assert meet([a, join([a, b])]) == a
        assert join([a, meet([a, b])]) == a
        assert meet([a, b]) <= a <= join([a, b])
    for a in tops:
        assert bottom(3) <= a <= discrete(3)
    sample = tops[::5]
    for a, b, c in product(sample, repeat=3):
        assert meet([meet([a, b]), c]) == meet([a, meet([b, c])])
        assert join([join([a, b]), c]) == join([a, join([b, c])])


def test_join_is_least_upper_bound():
    tops = enumerate_topologies(3)
    for a, b in product(tops[::3], repeat=2):
        ubs = [t for t in tops if a <= t and b <= t]
        j = join([a, b])
        assert j in ubs and all(j <= u for u in ubs)


def test_minimal_sober_examples():
    assert set(minimal_in_class(2, PropertyKind.SOBER)) == {S0, S1}
    mins = minimal_in_class(3, PropertyKind.SOBER)
    from itertools import permutations

    assert set(mins) == {alexandroff_topology(total_order(p)) for p in permutations(range(3))}
    assert set(mins) == set(minimal_in_class(3, PropertyKind.D_SPACE))
    assert set(mins) == set(minimal_in_class(3, PropertyKind.WELL_FILTERED))
    with pytest.raises(TooLarge):
        minimal_in_class(5, PropertyKind.SOBER)


def test_strongly_irreducible_examples():
    for n in range(5):
        assert strongly_irreducible(indiscrete(n))
    assert not strongly_irreducible(discrete(2))
    assert strongly_irreducible(S1)
    with pytest.raises(MixedGroundSize):
        strongly_irreducible(S1, 3)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_pair_reduction_matches_subset_exhaustion(n):
    for T in enumerate_topologies(n):
        try:
            audit = strongly_irreducible_by_subsets(T)
        except TooLarge:
            continue
        assert strongly_irreducible(T) == audit


def test_sober_join_width():
    assert sober_join_width(S1) == SoberWidth(1)
    assert sober_join_width(indiscrete(2)) == NONE_WIDTH
    assert repr(NONE_WIDTH) == "SoberWidth(NONE)"
    for T in enumerate_topologies(3, PropertyKind.T0):
        assert sober_join_width(T).value == 1
    for T in enumerate_topologies(3):
        if not check_property(T, PropertyKind.T0):
            assert sober_join_width(T) == NONE_WIDTH


def test_directed_joins_of_sober_topologies_are_sober():
    sober = enumerate_topologies(3, PropertyKind.SOBER)
    for a, b in product(sober, repeat=2):
        fam = [a, b, join([a, b])]
        assert is_directed_family(fam)
        assert check_property(join(fam), PropertyKind.SOBER)
