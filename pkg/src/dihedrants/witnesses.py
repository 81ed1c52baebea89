"""Explicit maps between the graphs of this package, each rebuilt from its
case-split formula and then machine-checked.

A witness never trusts its formula: the map is assembled cell by cell,
checked for bijectivity (collisions are reported, not papered over), then
checked against the edge set of the target graph.  Named relations between
permutations are evaluated by direct composition.  Permutations compose
left to right (``p * q`` applies ``p`` first), so ``x^(gh) = (x^g)^h``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .constructions import (BiCayleyTriple, bicayley, bicayley_right_perm,
                            bicayley_vertex, cayley, cross_ladder,
                            generalized_petersen, multi_cross_ladder)
from .errors import InvalidParameter
from .graphs import Graph, IsoWitness, verify_automorphism
from .groups import (FCGroup, GroupAutomorphism, dihedral, dihedral_automorphism,
                     mcl_dihedral_relabeling, mcl_group)
from .perms import Permutation, PermGroup, close_group, orbit_of


@dataclass
class WitnessResult:
    name: str
    map: Permutation | IsoWitness | None
    verified: bool
    relations_checked: list[tuple[str, bool]] = field(default_factory=list)
    details: dict = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.verified and all(v for _, v in self.relations_checked)

    def relation(self, name: str) -> bool:
        for k, v in self.relations_checked:
            if k == name:
                return v
        raise KeyError(name)

    def check(self, name: str, value: bool) -> None:
        self.relations_checked.append((name, bool(value)))

    def summary(self) -> dict:
        return {"name": self.name, "verified": self.verified, "ok": self.ok,
                "relations": dict(self.relations_checked), "details": self.details,
                "failures": self.failures}


def _assemble(n: int, cells: dict[int, int], failures: list[str]) -> tuple[int, ...] | None:
    """Turn a vertex -> image dict into a bijection, recording defects."""
    missing = [v for v in range(n) if v not in cells]
    if missing:
        failures.append(f"undefined on {len(missing)} vertices, e.g. {missing[:5]}")
    stray = [w for w in cells.values() if not 0 <= w < n]
    if stray:
        failures.append(f"images out of range, e.g. {stray[:5]}")
        return None
    seen: dict[int, int] = {}
    for v, w in sorted(cells.items()):
        if w in seen:
            failures.append(f"collision: {seen[w]} and {v} both map to {w}")
        seen[w] = v
    if missing or len(seen) != n:
        return None
    return tuple(cells[v] for v in range(n))


def _as_automorphism(res: WitnessResult, G: Graph, cells: dict[int, int]) -> Permutation | None:
    img = _assemble(G.n, cells, res.failures)
    if img is None:
        res.verified = False
        return None
    p = Permutation(img)
    res.map = p
    res.verified = verify_automorphism(G, p)
    if not res.verified:
        bad = [(u, v) for u, v in G.edges() if not G.has_edge(p(u), p(v))]
        res.failures.append(f"{len(bad)} edges not preserved, e.g. {bad[:3]}")
    return p


def _as_isomorphism(res: WitnessResult, G1: Graph, G2: Graph, cells: dict[int, int]) -> None:
    img = _assemble(G1.n, cells, res.failures)
    if img is None:
        res.verified = False
        return
    w = IsoWitness(img, note=res.name)
    res.map = w
    res.verified = w.validate(G1, G2)
    if not res.verified:
        res.failures.append("edges not preserved")


def _regularity(res: WitnessResult, gens: list[Permutation], degree: int,
                expected_order: int | None = None, label: str = "G") -> PermGroup:
    P = close_group(gens, degree=degree)
    trans = len(orbit_of(0, gens)) == degree
    res.details[f"|{label}|"] = P.order
    if expected_order is not None:
        res.check(f"|{label}| = {expected_order}", P.order == expected_order)
    res.check(f"{label} transitive", trans)
    res.check(f"{label} regular", trans and P.order == degree)
    return P


# -- dihedrants: P(n,1) and the cross ladder ---------------------------------------


def petersen_iso(n: int) -> WitnessResult:
    """phi: Cay(D_2n, {b, ba^2, a^(n/2)}) -> P(n, 1).

    a^(2i) -> u_2i, a^(2i+n/2) -> v_2i, ba^(2i) -> u_(2i-1),
    ba^(2i+n/2) -> v_(2i-1).  The exponents 2i and 2i + n/2 cover Z_n only
    when n/2 is odd, which is also exactly when the set generates D_2n.
    """
    if n % 2 or n < 6 or (n // 2) % 2 == 0:
        raise InvalidParameter("petersen_iso needs n = 2 (mod 4), n >= 6")
    H = dihedral(n)
    S = [H.word(w) for w in ("b", "b.a^2", f"a^{n // 2}")]
    X = cayley(H, S)
    P = generalized_petersen(n, 1)
    u = lambda i: i % n
    v = lambda i: n + i % n
    cells = {}
    for i in range(n // 2):
        cells[H.index((0, 2 * i % n))] = u(2 * i)
        cells[H.index((0, (2 * i + n // 2) % n))] = v(2 * i)
        cells[H.index((1, 2 * i % n))] = u(2 * i - 1)
        cells[H.index((1, (2 * i + n // 2) % n))] = v(2 * i - 1)
    res = WitnessResult(f"petersen_iso:n={n}", None, False)
    _as_isomorphism(res, X, P, cells)
    return res


def prism_iso(n: int) -> WitnessResult:
    """a^i -> u_i, ba^i -> v_i: Cay(D_2n, {b, a, a^-1}) -> P(n, 1)."""
    if n < 3:
        raise InvalidParameter("prism_iso needs n >= 3")
    H = dihedral(n)
    X = cayley(H, [H.word("b"), H.word("a"), H.word("a^-1")])
    cells = {H.index((j, i)): j * n + i for j in (0, 1) for i in range(n)}
    res = WitnessResult(f"prism_iso:n={n}", None, False)
    _as_isomorphism(res, X, generalized_petersen(n, 1), cells)
    return res


def crossladder_iso(n: int) -> WitnessResult:
    """phi: Cay(D_2n, {b, ba, ba^(n/2)}) -> CL_4(n/2).

    a^i -> x_2i^0, a^(i+n/2) -> x_2i^1 (0 <= i < n/2); ba^j -> x_(2j-1)^0,
    ba^(j+n/2) -> x_(2j-1)^1 (1 <= j <= n/2).  Column indices live in Z_n.
    Also checks the normalizing automorphisms a -> a^-1, b -> ba (and its
    variant b -> ba^2) and, for n/2 odd, a -> a^(2+n/2), b -> ba^(n/2).
    """
    if n % 2 or n < 4:
        raise InvalidParameter("crossladder_iso needs n even, n >= 4")
    h = n // 2
    H = dihedral(n)
    w = lambda *ws: frozenset(H.word(x) for x in ws)
    X = cayley(H, w("b", "b.a", f"b.a^{h}"))
    CL = cross_ladder(h)
    x = lambda i, r: 2 * (i % n) + r
    cells = {}
    for i in range(h):
        cells[H.index((0, i))] = x(2 * i, 0)
        cells[H.index((0, i + h))] = x(2 * i, 1)
    for j in range(1, h + 1):
        cells[H.index((1, j % n))] = x(2 * j - 1, 0)
        cells[H.index((1, (j + h) % n))] = x(2 * j - 1, 1)
    res = WitnessResult(f"crossladder_iso:n={n}", None, False)
    _as_isomorphism(res, X, CL, cells)
    beta = dihedral_automorphism(n, -1, 1)
    res.check("{b,ba,ba^(1+n/2)}^beta = {b,ba,ba^(n/2)}",
              beta.apply_set(w("b", "b.a", f"b.a^{1 + h}")) == w("b", "b.a", f"b.a^{h}"))
    # the same normalization for the second set needs b -> ba^2, not b -> ba
    beta2 = dihedral_automorphism(n, -1, 2)
    res.check("{b,ba^2,ba^(2+n/2)}^beta' = {b,ba^2,ba^(n/2)} (beta': b -> ba^2)",
              beta2.apply_set(w("b", "b.a^2", f"b.a^{2 + h}")) == w("b", "b.a^2", f"b.a^{h}"))
    if h % 2 == 1:
        eta = dihedral_automorphism(n, 2 + h, h)
        res.check("{b,ba,ba^(n/2)}^eta = {b,ba^2,ba^(n/2)}",
                  eta.apply_set(w("b", "b.a", f"b.a^{h}")) == w("b", "b.a^2", f"b.a^{h}"))
    return res


# -- multi-cross ladders -----------------------------------------------------------


def mcl_triple(m: int) -> BiCayleyTriple:
    """({c, ca}, {ca, ca^2 b}, {1}) over <a,b,c>."""
    return BiCayleyTriple.from_words(mcl_group(m), ["c", "c.a"], ["c.a", "c.a^2.b"], ["1"])


def mcl_dihedral_triple(m: int) -> BiCayleyTriple:
    """({f, fe}, {f, fe^(m-1)}, {1}) over D_4m, written with e -> a, f -> b."""
    return BiCayleyTriple.from_words(dihedral(2 * m), ["b", "b.a"], ["b", f"b.a^{m - 1}"], ["1"])


def mcl_bicayley_iso(m: int) -> WitnessResult:
    """The eight-case phi: MCL_{4m,2} -> BiCay(<a,b,c>, {c,ca}, {ca,ca^2b}, {1})."""
    if m < 2:
        raise InvalidParameter("mcl_bicayley_iso needs m >= 2")
    H = mcl_group(m)
    T = mcl_triple(m)
    X, Gam = multi_cross_ladder(m), bicayley(T)
    x = lambda i, r, s: 4 * (i % (2 * m)) + 2 * r + s
    v = lambda word, side: bicayley_vertex(H, H.word(word), side)
    cells = {}
    for t in range(m):
        cells[x(2 * t, 1, 1)] = v(f"a^{t}", 0)
        cells[x(2 * t + 1, 1, 1)] = v(f"c.a^{t + 1}", 0)
        cells[x(2 * t, 1, 0)] = v(f"c.a^{t + 1}", 1)
        cells[x(2 * t + 1, 1, 0)] = v(f"a^{t}", 1)
        cells[x(2 * t, 0, 1)] = v(f"c.a^{t + 1}.b", 1)
        cells[x(2 * t + 1, 0, 1)] = v(f"a^{t}.b", 1)
        cells[x(2 * t, 0, 0)] = v(f"a^{t}.b", 0)
        cells[x(2 * t + 1, 0, 0)] = v(f"c.a^{t + 1}.b", 0)
    res = WitnessResult(f"mcl_bicayley_iso:m={m}", None, False)
    _as_isomorphism(res, X, Gam, cells)
    return res


def mcl_even_delta(m: int) -> WitnessResult:
    """alpha: a -> ab, b -> b, c -> cb and delta_{alpha,ca,ca} for m even."""
    from .analysis import delta_map

    if m % 2 or m < 2:
        raise InvalidParameter("mcl_even_delta needs m even")
    H = mcl_group(m)
    T = mcl_triple(m)
    w = H.word
    alpha = GroupAutomorphism.from_images(H, {"c": w("c.b"), "b": w("b"), "a": w("a.b")})
    ca = w("c.a")
    res = WitnessResult(f"mcl_even_delta:m={m}", None, False)
    res.check("alpha automorphism of order 2", alpha.order() == 2)
    res.check("R^alpha = ca L ca", alpha.apply_set(T.R) == H.conj_set(T.L, ca))
    res.check("L^alpha = ca R ca", alpha.apply_set(T.L) == H.conj_set(T.R, ca))
    res.check("S^alpha = ca S^-1 ca",
              alpha.apply_set(T.S) == H.right_mul_set(H.left_mul_set(H.inv(ca), H.inv_set(T.S)), ca))
    Gam = bicayley(T)
    _as_automorphism(res, Gam, dict(enumerate(delta_map(T, alpha, ca, ca).image)))
    if res.map is not None:
        gens = [bicayley_right_perm(T, g) for g in H.gens] + [res.map]
        _regularity(res, gens, Gam.n, 8 * m, "<R(H), delta>")
    return res


def mcl_beta(m: int) -> WitnessResult:
    """The six-case involution beta on BiCay(D_4m, {f,fe}, {f,fe^(m-1)}, {1}).

    Vertices are (f^j e^E)_s.  With E read mod 2m (3 | 2m, so E mod 3 is
    well defined) the cases are:

    * E = 0 (mod 3):           (f^j e^E)_s <-> (f^(j+1) e^E)_(s+1)
    * E = 1 (mod 3), j = s:    (f^j e^E)_s <-> (f^j e^(E+m))_s
    * E = 1 (mod 3), j != s:   (f^j e^E)_s <-> (f^(j+1) e^(E+m))_(s+1)
    * E = 2 (mod 3), j != s:   (f^j e^E)_s <-> (f^j e^(E+m))_s
    * E = 2 (mod 3), j = s:    (f^j e^E)_s <-> (f^(j+1) e^(E+m))_(s+1)
    """
    if m % 2 == 0 or m % 3:
        raise InvalidParameter("mcl_beta needs m odd with 3 | m")
    D = dihedral(2 * m)
    T = mcl_dihedral_triple(m)
    Gam = bicayley(T)
    N, M = D.order, 2 * m
    vid = lambda j, E, s: (s % 2) * N + D.index((j % 2, E % M))
    cells = {}
    for s in (0, 1):
        for j in (0, 1):
            for E in range(M):
                c = E % 3
                if c == 0:
                    img = vid(j + 1, E, s + 1)
                elif c == 1:
                    img = vid(j, E + m, s) if j == s else vid(j + 1, E + m, s + 1)
                else:
                    img = vid(j, E + m, s) if j != s else vid(j + 1, E + m, s + 1)
                cells[vid(j, E, s)] = img
    res = WitnessResult(f"mcl_beta:m={m}", None, False)
    beta = _as_automorphism(res, Gam, cells)
    # The re-presented graph is the mclgroup bi-Cayley graph with its sides swapped.
    psi = mcl_dihedral_relabeling(m)
    H = mcl_group(m)
    iso = tuple((1 - s) * N + H.index(psi[h]) for s in (0, 1) for h in D.elements)
    res.check("BiCay(D_4m, ...) ~ BiCay(<a,b,c>, ...) via h_i -> psi(h)_(1-i)",
              IsoWitness(iso).validate(Gam, bicayley(mcl_triple(m))))
    if beta is None:
        return res
    E = bicayley_right_perm(T, D.word("a"))
    F = bicayley_right_perm(T, D.word("b"))
    one = Permutation.identity(Gam.n)
    res.check("R(e)^2m = 1", E ** (2 * m) == one)
    res.check("R(f)^2 = 1", F ** 2 == one)
    res.check("beta^2 = 1", beta ** 2 == one)
    res.check("R(f)^-1 R(e) R(f) = R(e)^-1", ~F * E * F == ~E)
    res.check("R(f)^-1 beta R(f) = beta", ~F * beta * F == beta)
    res.check("R(e)^6 beta = beta R(e)^6", E ** 6 * beta == beta * E ** 6)
    res.check("R(e)^2 beta = beta R(e)^4 beta R(e)^-2", E ** 2 * beta == beta * E ** 4 * beta * E ** -2)
    res.check("(R(e)^2 beta)^3 = R(e^6)", (E ** 2 * beta) ** 3 == bicayley_right_perm(T, D.word("a^6")))
    _regularity(res, [E ** 2, F, beta], Gam.n, 8 * m)
    return res


# -- the 48l family ----------------------------------------------------------------


def vnc48_g(l: int) -> WitnessResult:
    """The ten-case involution g on BiCay(D_2n, {b,ba}, {ba^24l, ba^(12l-1)}, {1}), n = 48l."""
    from .constructions import FamilyParams, family_triple

    if l < 1:
        raise InvalidParameter("vnc48_g needs l >= 1")
    T = family_triple(FamilyParams(4, l=l))
    H = T.group
    n = 48 * l
    Gam = bicayley(T)
    vid = lambda j, e, s: (s % 2) * H.order + H.index((j, e % n))
    cells = {}
    for e in range(n):
        c = e % 3
        if c == 0:
            cells[vid(0, e, 0)] = vid(0, e, 0)
            cells[vid(0, e, 1)] = vid(1, e, 0)
            cells[vid(1, e, 0)] = vid(0, e, 1)
            cells[vid(1, e, 1)] = vid(1, 24 * l + e, 1)
        elif c == 1:
            cells[vid(0, e, 0)] = vid(1, e, 1)
            cells[vid(0, e, 1)] = vid(0, 24 * l + e, 1)
            cells[vid(1, e, 0)] = vid(1, e, 0)
            cells[vid(1, e, 1)] = vid(0, e, 0)
        else:
            for s in (0, 1):
                cells[vid(0, e, s)] = vid(1, 12 * l + e, s + 1)
                cells[vid(1, e, s)] = vid(0, -12 * l + e, s + 1)
    res = WitnessResult(f"vnc48_g:l={l}", None, False)
    g = _as_automorphism(res, Gam, cells)
    if g is None:
        return res
    R = lambda word: bicayley_right_perm(T, H.word(word))
    one = Permutation.identity(Gam.n)
    res.check("g^2 = 1", g ** 2 == one and not g.is_identity())
    res.check("g fixes 1_0", g(vid(0, 0, 0)) == vid(0, 0, 0))
    res.check("g maps 1_1 to b_0", g(vid(0, 0, 1)) == vid(1, 0, 0))
    gb = g * R("b")
    res.check("(g R(b))^4 = R(a^24l)", gb ** 4 == R(f"a^{24 * l}"))
    res.check("g R(a^3) = R(a^3) g", g * R("a^3") == R("a^3") * g)
    res.check("g R(ba) = R(ba) g", g * R("b.a") == R("b.a") * g)
    res.check("g = R(a) (g R(b))^2 R(a^(12l-1))", g == R("a") * gb ** 2 * R(f"a^{12 * l - 1}"))
    gens = [R("a"), R("b"), g]
    res.check("<R(H), g> transitive", len(orbit_of(0, gens)) == Gam.n)
    return res


def vnc48_structure(l: int = 1) -> WitnessResult:
    """Aut-level facts about the 48l graph: cycles, |Aut|, stabilizer, quotient."""
    from .analysis import is_cayley
    from .constructions import FamilyParams, family_triple
    from .graphs import are_isomorphic, automorphism_group, count_cycles_through, quotient
    from .groups import cyclic
    from .perms import block_system, stabilizer

    res = vnc48_g(l)
    res.name = f"vnc48_structure:l={l}"
    T = family_triple(FamilyParams(4, l=l))
    H = T.group
    n = 48 * l
    Gam = bicayley(T)
    v = lambda word, s: bicayley_vertex(H, H.word(word), s)
    res.check("one 8-cycle through 1_0, 1_1, b_0",
              count_cycles_through(Gam, [v("1", 0), v("1", 1), v("b", 0)], 8) == 1)
    res.check("no 8-cycle through 1_0, (ba)_0",
              count_cycles_through(Gam, [v("1", 0), v("b.a", 0)], 8) == 0)
    A = automorphism_group(Gam)
    res.details["|Aut|"] = A.order
    res.check("|Aut| = 8n", A.order == 8 * n)
    St = stabilizer(A, v("1", 0))
    res.details["|Aut_{1_0}|"] = St.order
    res.check("|Aut_{1_0}| = 2", St.order == 2)
    if res.map is not None:
        res.check("Aut_{1_0} = <g>", St.order == 2 and res.map in St)
    B = block_system(A, (v("1", 0), v("b.a", 0)))
    res.check("blocks have size 2", all(len(b) == 2 for b in B.blocks))
    Q = quotient(Gam, B)
    Z = cyclic(n)
    Tq = BiCayleyTriple.from_words(Z, ["a", "a^-1"], [f"a^{12 * l + 1}", f"a^{-12 * l - 1}"],
                                   ["1", f"a^{-12 * l + 2}"])
    res.check("quotient ~ BiCay(Z_n, {a,a^-1}, {a^(12l+1),a^-(12l+1)}, {1,a^(2-12l)})",
              are_isomorphic(Q, bicayley(Tq)) is not None)
    verdict = is_cayley(Gam)
    res.details["is_cayley"] = verdict.status
    res.check("not Cayley", verdict.status == "no")
    return res


# -- the 12m families ----------------------------------------------------------------


def cayley_12m_triple(m: int, i: int) -> BiCayleyTriple:
    n = 12 * m
    return BiCayleyTriple.from_words(dihedral(n), ["b", f"b.a^{i % n}"],
                                     [f"b.a^{6 * m}", f"b.a^{(3 * m - i) % n}"], ["1"])


def cayley_12m_g(m: int, i: int) -> WitnessResult:
    """The twelve-case g on BiCay(D_24m, {b, ba^i}, {ba^6m, ba^(3m-i)}, {1}), m odd.

    The exponent e is classified by c = e * i^-1 (mod 3); within a class the
    map is a fixed shift:

    * c = 0: (a^e)_j -> (ba^(e+6m))_(j+1), (ba^e)_j -> (a^e)_(j+1)
    * c = 1: (a^e)_0 -> (a^(e+3m))_0, (ba^e)_0 -> (a^(e+3m))_1,
      (a^e)_1 -> (ba^(e+3m))_0, (ba^e)_1 -> (ba^(e-3m))_1
    * c = 2: (a^e)_0 -> (ba^(e+3m))_1, (ba^e)_0 -> (ba^(e+3m))_0,
      (a^e)_1 -> (a^(e-3m))_1, (ba^e)_1 -> (a^(e+3m))_0
    """
    if m % 2 == 0 or m < 1:
        raise InvalidParameter("cayley_12m_g needs m odd")
    n = 12 * m
    if math.gcd(i, 3 * m) != 1:
        raise InvalidParameter(f"<a^{i}, a^{3 * m}> != <a>")
    T = cayley_12m_triple(m, i)
    H = T.group
    Gam = bicayley(T)
    vid = lambda j, e, s: (s % 2) * H.order + H.index((j % 2, e % n))
    q = 3 * m
    cells = {}
    for e in range(n):
        c = (e * i) % 3  # i is its own inverse mod 3
        if c == 0:
            for s in (0, 1):
                cells[vid(0, e, s)] = vid(1, e + 2 * q, s + 1)
                cells[vid(1, e, s)] = vid(0, e, s + 1)
        elif c == 1:
            cells[vid(0, e, 0)] = vid(0, e + q, 0)
            cells[vid(1, e, 0)] = vid(0, e + q, 1)
            cells[vid(0, e, 1)] = vid(1, e + q, 0)
            cells[vid(1, e, 1)] = vid(1, e - q, 1)
        else:
            cells[vid(0, e, 0)] = vid(1, e + q, 1)
            cells[vid(1, e, 0)] = vid(1, e + q, 0)
            cells[vid(0, e, 1)] = vid(0, e - q, 1)
            cells[vid(1, e, 1)] = vid(0, e + q, 0)
    res = WitnessResult(f"cayley_12m_g:m={m},i={i}", None, False)
    g = _as_automorphism(res, Gam, cells)
    if g is None:
        return res
    R = lambda word: bicayley_right_perm(T, H.word(word))
    one = Permutation.identity(Gam.n)
    res.check("R(a^12m) = 1", R(f"a^{n}") == one)
    res.check("g^4 = 1", g ** 4 == one)
    res.check("g^2 = R(a^6m)", g ** 2 == R(f"a^{6 * m}"))
    res.check("R(a^6) g = g R(a^6)", R("a^6") * g == g * R("a^6"))
    # The relations are stated in coordinates scaled by i; with i = 1 (mod 3)
    # the scaled and unscaled forms coincide modulo the central R(a^6).
    k = 2 * i % n
    res.check("R(a^2i) g = g R(a^4i) g R(a^-2i)",
              R(f"a^{k}") * g == g * R(f"a^{2 * k}") * g * R(f"a^{-k}"))
    res.check("(R(a^2i) g)^3 = R(a^6i)", (R(f"a^{k}") * g) ** 3 == R(f"a^{3 * k}"))
    res.details["printed (R(a^2) g)^3 = R(a^6)"] = (R("a^2") * g) ** 3 == R("a^6")
    res.details["printed R(a^2) g = g R(a^4) g R(a^-2)"] = (
        R("a^2") * g == g * R("a^4") * g * R("a^-2"))
    Q = close_group([R("a^2"), g], degree=Gam.n)
    res.details["|<R(a^2),g>|"] = Q.order
    res.check("|<R(a^2),g>| = 24m", Q.order == 24 * m)
    _regularity(res, [R("a^2"), R("b"), g], Gam.n, 48 * m, "<R(a^2),R(b),g>")
    return res


def cayley_12m_even_triple(m: int, variant: int) -> BiCayleyTriple:
    k = {1: 3 * m - 1, 2: 9 * m - 1}[variant]
    return BiCayleyTriple.from_words(dihedral(12 * m), ["b", "b.a"], [f"b.a^{6 * m}", f"b.a^{k}"], ["1"])


def cayley_12m_even_g(m: int, variant: int) -> WitnessResult:
    """g_1 / g_2 on BiCay(D_24m, {b,ba}, {ba^6m, ba^(3m-1) or ba^(9m-1)}, {1}).

    Every image changes side; with e = 4r + c the shifts are
    (a^e) -> (ba^(e+s_c)), (ba^e) -> (a^(e+t_c)) where for g_1
    s = (6m, 9m, 0, 3m), t = (0, 3m, 6m, 9m), and g_2 swaps 3m and 9m.
    """
    if m % 4 != 2:
        raise InvalidParameter("cayley_12m_even_g needs m = 2 (mod 4)")
    if variant not in (1, 2):
        raise InvalidParameter("variant is 1 or 2")
    n = 12 * m
    T = cayley_12m_even_triple(m, variant)
    H = T.group
    Gam = bicayley(T)
    vid = lambda j, e, s: (s % 2) * H.order + H.index((j % 2, e % n))
    p, q = (9 * m, 3 * m) if variant == 1 else (3 * m, 9 * m)
    sh_a = (6 * m, p, 0, q)
    sh_b = (0, q, 6 * m, p)
    cells = {}
    for e in range(n):
        for s in (0, 1):
            cells[vid(0, e, s)] = vid(1, e + sh_a[e % 4], s + 1)
            cells[vid(1, e, s)] = vid(0, e + sh_b[e % 4], s + 1)
    res = WitnessResult(f"cayley_12m_even_g:m={m},variant={variant}", None, False)
    g = _as_automorphism(res, Gam, cells)
    if g is None:
        return res
    R = lambda word: bicayley_right_perm(T, H.word(word))
    one = Permutation.identity(Gam.n)
    Rb = R("b")
    res.check("R(a^12m) = R(b^2) = g^4 = 1", R(f"a^{n}") == one and Rb ** 2 == one and g ** 4 == one)
    res.check("R(b) R(a^2) R(b) = R(a^-2)", Rb * R("a^2") * Rb == R("a^-2"))
    res.check("g^2 = R(a^6m)", g ** 2 == R(f"a^{6 * m}"))
    res.check("R(b) g R(b) = g^-1", Rb * g * Rb == ~g)
    k = 3 * m + 1 if variant == 1 else 9 * m + 1
    res.check(f"g^-1 R(a) g = R(a^{k})", ~g * R("a") * g == R(f"a^{k}"))
    _regularity(res, [R("a"), Rb, g], Gam.n, 48 * m, "G")
    return res
