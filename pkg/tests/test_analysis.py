from __future__ import annotations

import random

import pytest
from hypothesis import HealthCheck, assume, given, settings, strategies as st

from corpus import corpus
from oracles import oracle_is_cayley
from dihedrants import analysis as an
from dihedrants.cli import random_trivalent_triple
from dihedrants.constructions import (BiCayleyTriple, FamilyParams, bicayley, cayley,
                                      cross_ladder, family_triple, generalized_petersen,
                                      multi_cross_ladder)
from dihedrants.graphs import are_isomorphic, is_connected, verify_automorphism
from dihedrants.groups import abelian, cyclic, dihedral, enumerate_automorphisms

CAYLEY_CORPUS = [G for G in corpus() if G.n <= 16 and is_connected(G)]


@pytest.mark.parametrize("G", CAYLEY_CORPUS, ids=lambda G: G.name or str(G.n))
def test_is_cayley_matches_oracle(G):
    v = an.is_cayley(G)
    assert v.status in ("yes", "no")
    assert (v.status == "yes") == oracle_is_cayley(G)


def test_is_cayley_witness_is_regular():
    v = an.is_cayley(generalized_petersen(8, 3))
    assert v.status == "yes" and an.is_regular_group(v.witness)
    assert an.is_cayley(generalized_petersen(5, 2)).status == "no"


def test_is_cayley_budget_gives_unknown():
    v = an.is_cayley(multi_cross_ladder(5), budget=1)
    assert v.status == "unknown" and not v


def test_transitivity_predicates():
    P = generalized_petersen(5, 2)
    assert an.is_vertex_transitive(P) and an.is_arc_transitive(P)
    prism = generalized_petersen(5, 1)
    assert an.is_vertex_transitive(prism) and not an.is_arc_transitive(prism)
    assert not an.is_vertex_transitive(generalized_petersen(7, 2))


@pytest.mark.parametrize("n", [3, 4, 5, 6, 8, 10])
def test_normality_two_routes_agree(n):
    H = dihedral(n)
    for S in an.trivalent_dihedral_sets(n):
        rep = an.normality_report(H, S)
        assert rep.normal == rep.criterion
        assert an.is_normal_cayley(H, S) == rep.normal


def test_known_normality():
    # the cross-ladder set is never normal; the prism set {a, a^-1, b} is normal for n >= 5
    for n in (6, 8, 10):
        H = dihedral(n)
        assert not an.is_normal_cayley(H, an.cross_ladder_set(n))
        assert an.is_normal_cayley(H, [H.word("a"), H.word("a^-1"), H.word("b")])


def test_right_regular_group():
    H = dihedral(6)
    R = an.right_regular_group(H)
    assert R.order == 12 and an.is_regular_group(R)
    assert len(an.set_stabilizer(H, an.cross_ladder_set(6))) >= 1


@pytest.mark.parametrize("n", range(3, 17))
def test_classification_trichotomy(n):
    tags = []
    for S in an.trivalent_dihedral_sets(n):
        r = an.classify_dihedrant(n, S)
        assert r.family_tag in ("AT", "normal", "cross-ladder")
        assert r.vertex_transitive and r.cayley == "yes"
        if r.family_tag == "cross-ladder":
            assert n % 2 == 0 and not r.arc_transitive and not r.normal_cayley
            assert r.witnesses["iso"]
        tags.append(r.family_tag)
    assert tags.count("cross-ladder") == (1 if n % 2 == 0 and n >= 6 else 0)


def test_cross_ladder_classified_with_iso():
    r = an.classify_dihedrant(8, an.cross_ladder_set(8))
    assert r.family_tag == "cross-ladder"
    iso = r.witnesses["iso"]
    H = dihedral(8)
    G1, G2 = cayley(H, an.cross_ladder_set(8)), cross_ladder(4)
    assert all(G2.has_edge(iso[u], iso[v]) for u, v in G1.edges())


def brute_force_set_classes(n):
    from itertools import combinations
    H = dihedral(n)
    auts = enumerate_automorphisms(H)
    sets = set()
    for X in combinations([x for x in H.elements if x != H.identity], 3):
        X = frozenset(X)
        if H.inv_set(X) == X and H.generated(X) == frozenset(H.elements):
            sets.add(X)
    classes = set()
    for X in sets:
        classes.add(min(tuple(sorted(al.apply_set(X))) for al in auts))
    return len(classes)


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7, 8, 9, 10, 12])
def test_dihedral_set_census_counts(n):
    sets = an.trivalent_dihedral_sets(n)
    assert len(sets) == brute_force_set_classes(n)
    assert all(len(S.S) == 3 for S in sets)


def test_triple_equivalence():
    H = dihedral(10)
    T = family_triple(FamilyParams(2, n=10, l=2))
    al = enumerate_automorphisms(H)[7]
    Ta = BiCayleyTriple(H, al.apply_set(T.R), al.apply_set(T.L), al.apply_set(T.S))
    assert an.triple_equivalent(H, T, Ta) is not None
    Tsw = BiCayleyTriple(H, T.L, T.R, H.inv_set(T.S))
    hit = an.triple_equivalent(H, T, Tsw)
    assert hit is not None and hit[1] is True
    other = family_triple(FamilyParams(3, m=2))
    assert an.triple_equivalent(H, T, other) is None
    assert an.canonical_triple(T) == an.canonical_triple(Ta) == an.canonical_triple(Tsw)


def triples():
    return st.integers(0, 2**32 - 1).map(lambda s: random_trivalent_triple(random.Random(s), 8))


@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(triples(), st.data())
def test_bicayley_isomorphism_invariances(T, data):
    H = T.group
    al = data.draw(st.sampled_from(enumerate_automorphisms(H)))
    G = bicayley(T)
    Ta = BiCayleyTriple(H, al.apply_set(T.R), al.apply_set(T.L), al.apply_set(T.S))
    Tsw = BiCayleyTriple(H, T.L, T.R, H.inv_set(T.S))
    assert are_isomorphic(G, bicayley(Ta)) is not None
    assert are_isomorphic(G, bicayley(Tsw)) is not None


@settings(max_examples=25, deadline=None)
@given(triples())
def test_F_and_I_are_automorphisms_normalizing_RH(T):
    G = bicayley(T)
    assume(is_connected(G))
    F, I = an.compute_F_I(T)
    RH = an.bicayley_R_group(T)
    for p in F | I:
        assert verify_automorphism(G, p)
        pi = ~p
        assert all((pi * r * p) in RH for r in RH.gens)
    # F fixes 1_0; every delta swaps H_0 and H_1
    assert all(p(0) == 0 for p in F)
    N = T.group.order
    assert all(p(0) >= N for p in I)


def test_is_bicayley_over():
    assert an.is_bicayley_over(generalized_petersen(5, 2), cyclic(5)).status == "yes"
    from dihedrants.constructions import FamilyParams, family_builder
    _, _, G = family_builder(FamilyParams(2, n=10, l=2))
    assert an.is_bicayley_over(G, abelian(10, 2)).status == "yes"
    # the Petersen graph is not a bi-Cayley graph over Z_5 x ... of the wrong order
    assert an.is_bicayley_over(generalized_petersen(5, 2), cyclic(4)).status == "no"


def test_match_family():
    T = family_triple(FamilyParams(1, n=5, l=2))
    hits = an.match_family(T)
    assert hits and hits[0][0].family == 1
    assert an.match_family(family_triple(FamilyParams(3, m=2)))[0][0].family == 3


def test_class_report_validation():
    with pytest.raises(ValueError):
        an.ClassReport("x", False, True, "no")
    with pytest.raises(ValueError):
        an.ClassReport("x", True, False, "yes", family_tag="bogus")


def test_trichotomy_cases_can_overlap():
    # the classification is "AT, or normal, or (otherwise) cross ladder"; the first
    # two can coincide, and CL_8 (the cube) is itself arc-transitive
    from dihedrants.graphs import are_isomorphic
    H4 = dihedral(4)
    S = an.cross_ladder_set(4)
    G = cayley(H4, S)
    assert an.is_arc_transitive(G) and are_isomorphic(G, cross_ladder(2)) is not None
    assert an.classify_dihedrant(4, S).family_tag == "AT"
    H13 = dihedral(13)
    S13 = [H13.word(w) for w in ("b", "b.a", "b.a^4")]
    r = an.classify_dihedrant(13, S13)
    assert r.arc_transitive and r.normal_cayley and r.family_tag == "AT"
