from __future__ import annotations

import re

import pytest

from dihedrants.constructions import (BiCayleyTriple, CayleySet, FamilyParams, bicayley,
                                      bicayley_right_perm, bicayley_vertex, cayley,
                                      cayley_right_perm, cross_ladder, family_builder,
                                      family_triple, generalized_petersen, lex_cycle_product,
                                      mcl_four_cycles, multi_cross_ladder)
from dihedrants.errors import InvalidConnectionSet, InvalidParameter, InvalidTriple
from dihedrants.graphs import are_isomorphic, is_connected, quotient, verify_automorphism
from dihedrants.groups import cyclic, dihedral
from dihedrants.perms import Partition


def test_cayley_set_validation():
    H = dihedral(5)
    with pytest.raises(InvalidConnectionSet):
        CayleySet(H, frozenset([H.word("a")]))
    with pytest.raises(InvalidConnectionSet):
        CayleySet(H, frozenset([H.identity, H.word("b")]))


def test_triple_validation():
    H = dihedral(5)
    with pytest.raises(InvalidTriple):
        BiCayleyTriple.from_words(H, ["a"], [], ["1"])
    with pytest.raises(InvalidTriple):
        BiCayleyTriple.from_words(H, [], [], ["b"])
    T = BiCayleyTriple.from_words(H, ["b", "b.a"], ["a", "a^-1"], ["1"])
    assert T.s_type == 2


def test_cayley_right_regular_action():
    H = dihedral(6)
    G = cayley(H, [H.word("b"), H.word("b.a"), H.word("a^3")])
    assert G.is_regular(3)
    for g in H.elements:
        assert verify_automorphism(G, cayley_right_perm(H, g))


def test_bicayley_structure():
    H = dihedral(5)
    T = BiCayleyTriple.from_words(H, ["b", "b.a^3"], ["b.a", "b.a^2"], ["1"])
    G = bicayley(T)
    assert G.n == 20 and G.is_regular(3)
    one0, one1 = bicayley_vertex(H, H.identity, 0), bicayley_vertex(H, H.identity, 1)
    assert G.has_edge(one0, one1)
    assert G.has_edge(one0, bicayley_vertex(H, H.word("b"), 0))
    assert G.has_edge(one1, bicayley_vertex(H, H.word("b.a"), 1))
    for g in H.elements:
        assert verify_automorphism(G, bicayley_right_perm(T, g))


def test_prism_and_petersen_are_bicirculants():
    Z = cyclic(5)
    T = BiCayleyTriple(Z, frozenset([(1,), (4,)]), frozenset([(2,), (3,)]), frozenset([(0,)]))
    assert are_isomorphic(bicayley(T), generalized_petersen(5, 2)) is not None


def test_ladders():
    CL = cross_ladder(3)
    assert CL.n == 12 and CL.is_regular(3) and is_connected(CL)
    M = multi_cross_ladder(5)
    assert M.n == 40 and M.is_regular(3) and is_connected(M)
    cycles = mcl_four_cycles(5)
    assert len(cycles) == 10
    assert sorted(v for c in cycles for v in c) == list(range(40))
    for c in cycles:
        for k in range(4):
            assert M.has_edge(c[k], c[(k + 1) % 4])
    with pytest.raises(InvalidParameter):
        cross_ladder(1)


def test_mcl_contracts_to_lex_product():
    # contracting the 4-cycle tiling of MCL_{4m,2} gives C_m[2K_1]
    for m in (3, 4, 5):
        Q = quotient(multi_cross_ladder(m), Partition(mcl_four_cycles(m)))
        assert Q.is_regular(4)
        assert are_isomorphic(Q, lex_cycle_product(m)) is not None


def test_generalized_petersen_params():
    assert generalized_petersen(8, 3).n == 16
    with pytest.raises(InvalidParameter):
        generalized_petersen(8, 4)


@pytest.mark.parametrize("P,n_vertices", [
    (FamilyParams(1, n=15, l=2), 60), (FamilyParams(2, n=10, l=2), 40),
    (FamilyParams(3, m=2), 40), (FamilyParams(4, l=1), 192),
])
def test_family_builders(P, n_vertices):
    H, T, G = family_builder(P)
    assert G.n == n_vertices and G.is_regular(3) and is_connected(G)
    assert T.s_type == 2


@pytest.mark.parametrize("P,msg", [
    (FamilyParams(1, n=15, l=3), "l^3"),
    (FamilyParams(1, n=5, l=1), "l^3"),
    (FamilyParams(2, n=9, l=2), "n = 2m"),
    (FamilyParams(2, n=10, l=1), "-1"),
    (FamilyParams(3, m=4), "mod 3"),
    (FamilyParams(3, m=2, n=12), "n = 2(2m+1)"),
    (FamilyParams(4, l=0), "l >= 1"),
    (FamilyParams(4, l=1, n=96), "n = 48l"),
    (FamilyParams(7, n=10), "unknown family"),
])
def test_family_parameter_errors(P, msg):
    with pytest.raises(InvalidParameter, match=re.escape(msg)):
        family_triple(P)


def test_family3_is_multicross_ladder():
    _, _, G = family_builder(FamilyParams(3, m=2))
    assert are_isomorphic(G, multi_cross_ladder(5)) is not None
