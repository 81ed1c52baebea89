"""Graph families: Cayley and bi-Cayley graphs, cross ladders, multi-cross
ladders, generalized Petersen graphs, C_m[2K_1], and the four families of
trivalent vertex-transitive non-Cayley bi-dihedrants.

Vertex numbering is fixed, because the witness maps depend on it:

* Cayley graphs: vertex k is ``G.elements[k]``.
* Bi-Cayley graphs: ``h_0`` is ``G.index(h)``, ``h_1`` is ``|G| + G.index(h)``;
  labels are ``(h, side)``.
* Cross ladder: ``x_i^r`` is ``2*i + r``.
* Multi-cross ladder: ``x_i^{r,s}`` is ``4*i + 2*r + s``.
* Generalized Petersen: ``u_i`` is ``i``, ``v_i`` is ``n + i``.
* C_m[2K_1]: ``C_j^x`` is ``2*j + x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidConnectionSet, InvalidParameter, InvalidTriple
from .graphs import Graph
from .groups import FCGroup, dihedral
from .perms import Permutation


@dataclass(frozen=True)
class CayleySet:
    group: FCGroup
    S: frozenset

    def __post_init__(self):
        G = self.group
        S = frozenset(G.check(tuple(x)) for x in self.S)
        object.__setattr__(self, "S", S)
        if G.identity in S:
            raise InvalidConnectionSet("identity in connection set")
        if G.inv_set(S) != S:
            raise InvalidConnectionSet("connection set is not inverse-closed")


@dataclass(frozen=True)
class BiCayleyTriple:
    group: FCGroup
    R: frozenset
    L: frozenset
    S: frozenset

    def __post_init__(self):
        G = self.group
        for name in "RLS":
            object.__setattr__(self, name, frozenset(G.check(tuple(x)) for x in getattr(self, name)))
        if G.inv_set(self.R) != self.R or G.inv_set(self.L) != self.L:
            raise InvalidTriple("R and L must be inverse-closed")
        if G.identity in self.R | self.L:
            raise InvalidTriple("identity in R or L")
        if G.identity not in self.S:
            raise InvalidTriple("normalized triples contain the identity in S")

    @classmethod
    def from_words(cls, group: FCGroup, R: Iterable[str], L: Iterable[str], S: Iterable[str]):
        w = group.word
        return cls(group, frozenset(map(w, R)), frozenset(map(w, L)), frozenset(map(w, S)))

    @property
    def s_type(self) -> int | None:
        return len(self.R) if len(self.R) == len(self.L) else None

    def describe(self) -> str:
        G = self.group
        fmt = lambda X: "{" + ",".join(G.fmt(x) for x in sorted(X)) + "}"
        return f"({fmt(self.R)}, {fmt(self.L)}, {fmt(self.S)})"


def cayley(G: FCGroup, S: CayleySet | Iterable) -> Graph:
    """Cay(G, S): edges {g, sg}."""
    if not isinstance(S, CayleySet):
        S = CayleySet(G, frozenset(S))
    edges = [(G.index(g), G.index(G._mul(s, g))) for g in G.elements for s in S.S]
    return Graph(G.order, edges, labels=G.elements, name=f"Cay({G})")


def cayley_right_perm(G: FCGroup, g) -> Permutation:
    """R(g): x -> xg on the vertices of a Cayley graph over G."""
    G.check(g)
    return Permutation([G.index(G._mul(x, g)) for x in G.elements], check=False)


def bicayley(T: BiCayleyTriple) -> Graph:
    G = T.group
    N = G.order
    idx = G.index
    edges = []
    for h in G.elements:
        for r in T.R:
            edges.append((idx(h), idx(G._mul(r, h))))
        for l in T.L:
            edges.append((N + idx(h), N + idx(G._mul(l, h))))
        for s in T.S:
            edges.append((idx(h), N + idx(G._mul(s, h))))
    labels = [(h, 0) for h in G.elements] + [(h, 1) for h in G.elements]
    return Graph(2 * N, edges, labels=labels, name=f"BiCay({G}, {T.describe()})")


def bicayley_vertex(G: FCGroup, h, side: int) -> int:
    return side * G.order + G.index(h)


def bicayley_right_perm(T: BiCayleyTriple | FCGroup, g) -> Permutation:
    """R(g): h_i -> (hg)_i."""
    G = T.group if isinstance(T, BiCayleyTriple) else T
    G.check(g)
    N = G.order
    img = [G.index(G._mul(h, g)) for h in G.elements]
    return Permutation(img + [N + k for k in img], check=False)


def cross_ladder(m: int) -> Graph:
    """CL_4m on vertices x_i^r, i in Z_2m."""
    if m < 2:
        raise InvalidParameter("cross ladder needs m >= 2")
    x = lambda i, r: 2 * (i % (2 * m)) + r
    edges = []
    for i in range(m):
        for r in (0, 1):
            edges.append((x(2 * i, r), x(2 * i + 1, r)))
            for s in (0, 1):
                edges.append((x(2 * i + 1, r), x(2 * i + 2, s)))
    labels = [(i, r) for i in range(2 * m) for r in (0, 1)]
    return Graph(4 * m, edges, labels=labels, name=f"CL_{4 * m}")


def multi_cross_ladder(m: int) -> Graph:
    """MCL_{4m,2} on vertices x_i^{r,s}."""
    if m < 2:
        raise InvalidParameter("multi-cross ladder needs m >= 2")
    x = lambda i, r, s: 4 * (i % (2 * m)) + 2 * r + s
    edges = []
    for i in range(m):
        for r in (0, 1):
            for s in (0, 1):
                for t in (0, 1):
                    edges.append((x(2 * i, r, s), x(2 * i + 1, r, t)))
                edges.append((x(2 * i + 1, r, s), x(2 * i + 2, s, r)))
    labels = [(i, r, s) for i in range(2 * m) for r in (0, 1) for s in (0, 1)]
    return Graph(8 * m, edges, labels=labels, name=f"MCL_{4 * m},2")


def mcl_four_cycles(m: int) -> list[list[int]]:
    """The 4-cycles C_j^0, C_j^1 (as vertex lists) that tile MCL_{4m,2}."""
    x = lambda i, r, s: 4 * (i % (2 * m)) + 2 * r + s
    out = []
    for j in range(m):
        out.append([x(2 * j, 0, 0), x(2 * j + 1, 0, 0), x(2 * j, 0, 1), x(2 * j + 1, 0, 1)])
        out.append([x(2 * j, 1, 1), x(2 * j + 1, 1, 1), x(2 * j, 1, 0), x(2 * j + 1, 1, 0)])
    return out


def generalized_petersen(n: int, t: int) -> Graph:
    if n < 3 or not 1 <= t < n / 2:
        raise InvalidParameter("P(n, t) needs n >= 3 and 1 <= t < n/2")
    edges = []
    for i in range(n):
        edges += [(i, (i + 1) % n), (n + i, n + (i + t) % n), (i, n + i)]
    labels = [("u", i) for i in range(n)] + [("v", i) for i in range(n)]
    return Graph(2 * n, edges, labels=labels, name=f"P({n},{t})")


def lex_cycle_product(m: int) -> Graph:
    """C_m[2K_1]."""
    if m < 3:
        raise InvalidParameter("C_m[2K_1] needs m >= 3")
    edges = [(2 * j + x, 2 * ((j + 1) % m) + y) for j in range(m) for x in (0, 1) for y in (0, 1)]
    labels = [(j, x) for j in range(m) for x in (0, 1)]
    return Graph(2 * m, edges, labels=labels, name=f"C_{m}[2K_1]")


# -- the four VNC families -----------------------------------------------------


@dataclass(frozen=True)
class FamilyParams:
    family: int
    n: int | None = None
    l: int | None = None
    m: int | None = None


def family_triple(P: FamilyParams) -> BiCayleyTriple:
    """Validate the family's congruences and return its bi-Cayley triple."""
    k = P.family
    if k == 1:
        n, l = P.n, P.l
        if n is None or l is None:
            raise InvalidParameter("family 1 needs n and l")
        if n < 5:
            raise InvalidParameter("family 1: n >= 5 violated")
        if (l**3 + l**2 + l + 1) % n:
            raise InvalidParameter("family 1: l^3 + l^2 + l + 1 = 0 (mod n) violated")
        if (l * l - 1) % n == 0:
            raise InvalidParameter("family 1: l^2 != 1 (mod n) violated")
        R, L = [f"b", f"b.a^{l + 1}"], ["b.a", f"b.a^{l * l + l + 1}"]
    elif k == 2:
        n, l = P.n, P.l
        if n is None or l is None:
            raise InvalidParameter("family 2 needs n and l")
        if n % 2:
            raise InvalidParameter("family 2: n = 2m violated (n odd)")
        m = n // 2
        if (l * l + 1) % m:
            raise InvalidParameter("family 2: l^2 = -1 (mod m) violated")
        R, L = [f"b.a^{-l}", f"b.a^{l}"], ["a", "a^-1"]
    elif k == 3:
        m = P.m
        if m is None:
            raise InvalidParameter("family 3 needs m")
        if m < 1:
            raise InvalidParameter("family 3: m >= 1 violated")
        if m % 3 == 1:
            raise InvalidParameter("family 3: m != 1 (mod 3) violated")
        n = 2 * (2 * m + 1)
        if P.n is not None and P.n != n:
            raise InvalidParameter("family 3: n = 2(2m+1) violated")
        R, L = ["b", "b.a"], ["b", f"b.a^{2 * m}"]
    elif k == 4:
        l = P.l
        if l is None or l < 1:
            raise InvalidParameter("family 4: l >= 1 violated")
        n = 48 * l
        if P.n is not None and P.n != n:
            raise InvalidParameter("family 4: n = 48l violated")
        R, L = ["b", "b.a"], [f"b.a^{24 * l}", f"b.a^{12 * l - 1}"]
    else:
        raise InvalidParameter(f"unknown family {k}")
    H = dihedral(n)
    T = BiCayleyTriple.from_words(H, R, L, ["1"])
    if len(T.R) != 2 or len(T.L) != 2:
        raise InvalidParameter(f"family {k}: parameters give a degenerate triple")
    return T


def family_builder(P: FamilyParams) -> tuple[FCGroup, BiCayleyTriple, Graph]:
    T = family_triple(P)
    G = bicayley(T)
    G.name = f"family{P.family}(" + ",".join(
        f"{k}={v}" for k, v in (("n", P.n), ("l", P.l), ("m", P.m)) if v is not None) + ")"
    return T.group, T, G
