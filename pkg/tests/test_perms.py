from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from dihedrants.errors import BudgetExceeded, InvalidPartition, InvalidPermutation, NotTransitive
from dihedrants.perms import (Partition, Permutation, PermGroup, action_profile, block_system,
                              close_group, core_in, find_regular_subgroup, index_two_subgroups,
                              normalizer_centralizer, orbits_of, stabilizer)


def perms(n):
    return st.permutations(list(range(n))).map(Permutation)


def symmetric(n):
    return close_group([Permutation.from_cycles(n, (0, 1)),
                        Permutation.from_cycles(n, tuple(range(n)))])


def cyclic_shift(n):
    return Permutation([(i + 1) % n for i in range(n)])


@given(perms(6), perms(6), perms(6))
def test_composition_associative(p, q, r):
    assert (p * q) * r == p * (q * r)


@given(perms(7), perms(7))
def test_right_action_convention(p, q):
    # p*q applies p first, then q
    for x in range(7):
        assert (p * q)(x) == q(p(x))


@given(perms(8))
def test_inverse_and_order(p):
    e = Permutation.identity(8)
    assert p * ~p == e == ~p * p
    assert p ** p.order() == e
    assert sum(len(c) for c in p.cycles(include_fixed=True)) == 8


def test_invalid_permutation():
    with pytest.raises(InvalidPermutation):
        Permutation([0, 0, 1])
    with pytest.raises(InvalidPermutation):
        Permutation.identity(3) * Permutation.identity(4)


def test_from_cycles():
    p = Permutation.from_cycles(5, (0, 1, 2), (3, 4))
    assert p.image == (1, 2, 0, 4, 3)
    assert p.order() == 6
    assert p.fixed_points() == []


def test_symmetric_group_order():
    assert symmetric(4).order == 24
    assert symmetric(5).order == 120


def test_close_group_cap():
    with pytest.raises(BudgetExceeded):
        close_group([Permutation.from_cycles(6, (0, 1)), cyclic_shift(6)], cap=100)


def test_orbits_and_stabilizer():
    p = Permutation.from_cycles(6, (0, 1, 2))
    q = Permutation.from_cycles(6, (3, 4))
    G = close_group([p, q])
    assert sorted(map(sorted, G.orbits())) == [[0, 1, 2], [3, 4], [5]]
    assert orbits_of(6, [p, q]) == G.orbits()
    S = symmetric(5)
    St = stabilizer(S, 0)
    assert St.order == 24
    assert all(g(0) == 0 for g in St.elements)


def test_action_profile():
    C = close_group([cyclic_shift(6)])
    prof = action_profile(C)
    assert prof.transitive and prof.semiregular and prof.regular
    prof = action_profile(symmetric(4))
    assert prof.transitive and not prof.regular


def test_partition_validate():
    Partition([[0, 1], [2, 3]]).validate(4)
    with pytest.raises(InvalidPartition):
        Partition([[0, 1], [1, 2]]).validate(3)
    with pytest.raises(InvalidPartition):
        Partition([[0], []]).validate(1)


def test_block_system_cyclic():
    C = close_group([cyclic_shift(12)])
    P = block_system(C, (0, 4))
    assert P.blocks == [[0, 4, 8], [1, 5, 9], [2, 6, 10], [3, 7, 11]]
    assert len(block_system(symmetric(4), (0, 1))) == 1


def test_block_system_needs_transitivity():
    G = close_group([Permutation.from_cycles(4, (0, 1))])
    with pytest.raises(NotTransitive):
        block_system(G, (0, 1))


def test_core_and_normalizer():
    S4 = symmetric(4)
    S3 = stabilizer(S4, 3)
    assert core_in(S3, S4).order == 1
    V4 = close_group([Permutation.from_cycles(4, (0, 1), (2, 3)),
                      Permutation.from_cycles(4, (0, 2), (1, 3))])
    assert core_in(V4, S4).order == 4
    N, C = normalizer_centralizer(V4, S4)
    assert N.order == 24 and C.order == 4
    N, C = normalizer_centralizer(S3, S4)
    assert N.order == 6 and C.order == 1


def test_index_two_subgroups():
    assert len(index_two_subgroups(symmetric(4))) == 1
    # Z_2 x Z_2 x Z_2 has 7 subgroups of index 2
    E8 = close_group([Permutation.from_cycles(6, (0, 1)), Permutation.from_cycles(6, (2, 3)),
                      Permutation.from_cycles(6, (4, 5))])
    assert len(index_two_subgroups(E8)) == 7


def test_find_regular_subgroup():
    R = find_regular_subgroup(symmetric(4))
    assert R is not None and R.order == 4 and R.is_transitive()
    # S_5 acting on 5 points: Z_5 is regular
    R = find_regular_subgroup(symmetric(5))
    assert R is not None and R.order == 5
    G = close_group([Permutation.from_cycles(4, (0, 1))])
    with pytest.raises(NotTransitive):
        find_regular_subgroup(G)


def test_no_regular_subgroup_in_petersen_like_action():
    # S_5 acting on the 10 two-subsets has no regular subgroup
    pairs = [(i, j) for i in range(5) for j in range(i + 1, 5)]
    idx = {p: k for k, p in enumerate(pairs)}

    def induced(cyc):
        f = Permutation.from_cycles(5, cyc)
        return Permutation([idx[tuple(sorted((f(i), f(j))))] for i, j in pairs])

    G = close_group([induced((0, 1)), induced((0, 1, 2, 3, 4))])
    assert G.order == 120 and G.is_transitive()
    assert find_regular_subgroup(G) is None


def test_lazy_group_needs_closure():
    from dihedrants.errors import NeedsClosure
    G = PermGroup(4, [cyclic_shift(4)], auto_close=False)
    with pytest.raises(NeedsClosure):
        G.elements
