"""Small finite groups in normal form: dihedral groups, the D_2m x Z_2 group
used for multi-cross ladders, and cyclic/abelian groups for bi-circulants.

Elements are plain tuples of exponents, one per generator in *word order*
(``FCGroup.word_gens``); the element ``x`` stands for the word
``prod(gen[p] ** x[p])``.  For the dihedral group the word order is
``(b, a)``, so ``(j, i)`` is ``b^j a^i``; for ``mclgroup`` it is
``(c, b, a)``.  Equality of elements is tuple equality.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import BudgetExceeded, InvalidElement, NotAUnit, UsageError

Element = tuple


@dataclass(frozen=True)
class FCGroup:
    """A finite group given by a fixed normal form.

    kind is one of ``dihedral`` (params ``(n,)``, order 2n), ``mclgroup``
    (params ``(m,)``, the group <a,b,c | a^m=b^2=c^2=1, a^b=a, a^c=a^-1,
    b^c=b> of order 4m), ``cyclic`` (``(n,)``) or ``abelian``
    (``(n1, n2, ...)``, a direct product of cyclic groups).
    """

    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in ("dihedral", "mclgroup", "cyclic", "abelian"):
            raise UsageError(f"unknown group kind {self.kind!r}")
        if not self.params or any(p < 1 for p in self.params):
            raise UsageError(f"bad parameters {self.params!r} for {self.kind}")
        if self.kind in ("dihedral", "mclgroup", "cyclic") and len(self.params) != 1:
            raise UsageError(f"{self.kind} takes one parameter")

    # -- structure ---------------------------------------------------------

    @cached_property
    def moduli(self) -> tuple[int, ...]:
        """Exponent modulus for each coordinate of the normal form."""
        p = self.params
        if self.kind == "dihedral":
            return (2, p[0])
        if self.kind == "mclgroup":
            return (2, 2, p[0])
        return tuple(p)

    @cached_property
    def word_gens(self) -> tuple[str, ...]:
        if self.kind == "dihedral":
            return ("b", "a")
        if self.kind == "mclgroup":
            return ("c", "b", "a")
        return tuple("abcdefgh"[: len(self.params)])

    @property
    def order(self) -> int:
        return math.prod(self.moduli)

    @cached_property
    def elements(self) -> tuple[Element, ...]:
        return tuple(itertools.product(*(range(q) for q in self.moduli)))

    @cached_property
    def _index(self) -> dict[Element, int]:
        return {x: k for k, x in enumerate(self.elements)}

    def index(self, x: Element) -> int:
        try:
            return self._index[x]
        except (KeyError, TypeError):
            raise InvalidElement(f"{x!r} is not an element of {self}") from None

    @property
    def identity(self) -> Element:
        return (0,) * len(self.moduli)

    @cached_property
    def gens(self) -> tuple[Element, ...]:
        """Generators in word order."""
        k = len(self.moduli)
        return tuple(tuple(int(q == p) for q in range(k)) for p in range(k))

    def gen(self, name: str) -> Element:
        try:
            return self.gens[self.word_gens.index(name)]
        except ValueError:
            raise InvalidElement(f"{self} has no generator {name!r}") from None

    def __str__(self):
        if self.kind == "abelian":
            return "abelian:" + "x".join(map(str, self.params))
        return f"{self.kind}:{self.params[0]}"

    # -- arithmetic --------------------------------------------------------

    def check(self, x) -> Element:
        if x not in self._index:
            raise InvalidElement(f"{x!r} is not an element of {self}")
        return x

    def mul(self, x: Element, y: Element) -> Element:
        self.check(x)
        self.check(y)
        return self._mul(x, y)

    def _mul(self, x, y):
        if self.kind == "dihedral":
            n = self.params[0]
            # b^j1 a^i1 . b^j2 a^i2 = b^(j1+j2) a^((-1)^j2 i1 + i2)
            i1 = -x[1] if y[0] else x[1]
            return ((x[0] + y[0]) % 2, (i1 + y[1]) % n)
        if self.kind == "mclgroup":
            m = self.params[0]
            i1 = -x[2] if y[0] else x[2]
            return ((x[0] + y[0]) % 2, (x[1] + y[1]) % 2, (i1 + y[2]) % m)
        return tuple((u + v) % q for u, v, q in zip(x, y, self.moduli))

    def prod(self, *xs: Element) -> Element:
        out = self.identity
        for x in xs:
            out = self._mul(out, self.check(x))
        return out

    def inv(self, x: Element) -> Element:
        self.check(x)
        if self.kind == "dihedral":
            return x if x[0] else (0, -x[1] % self.params[0])
        if self.kind == "mclgroup":
            return x if x[0] else (0, x[1], -x[2] % self.params[0])
        return tuple(-u % q for u, q in zip(x, self.moduli))

    def power(self, x: Element, k: int) -> Element:
        if k < 0:
            x, k = self.inv(x), -k
        out = self.identity
        for _ in range(k % self.element_order(x) if k else 0):
            out = self._mul(out, x)
        return out

    def element_order(self, x: Element) -> int:
        self.check(x)
        k, y = 1, x
        while y != self.identity:
            y = self._mul(y, x)
            k += 1
        return k

    def conj_set(self, xs: Iterable[Element], g: Element) -> frozenset:
        """The set g^-1 X g."""
        gi = self.inv(g)
        return frozenset(self._mul(self._mul(gi, x), g) for x in xs)

    def left_mul_set(self, g: Element, xs: Iterable[Element]) -> frozenset:
        return frozenset(self._mul(g, x) for x in xs)

    def right_mul_set(self, xs: Iterable[Element], g: Element) -> frozenset:
        return frozenset(self._mul(x, g) for x in xs)

    def inv_set(self, xs: Iterable[Element]) -> frozenset:
        return frozenset(self.inv(x) for x in xs)

    def generated(self, xs: Iterable[Element]) -> frozenset:
        """Subgroup generated by xs (BFS closure)."""
        xs = [self.check(x) for x in xs]
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for y in frontier:
                for x in xs:
                    z = self._mul(y, x)
                    if z not in seen:
                        seen.add(z)
                        nxt.append(z)
            frontier = nxt
        return frozenset(seen)

    # -- text --------------------------------------------------------------

    def word(self, text: str) -> Element:
        """Parse a word such as ``b.a^3``, ``c.a^{t}.b`` or ``a^-1``.

        Tokens are separated by ``.``, ``*`` or whitespace; ``1`` is the
        identity.
        """
        out = self.identity
        text = text.strip()
        if text in ("", "1"):
            return out
        for tok in re.split(r"[.*\s]+", text):
            if not tok or tok == "1":
                continue
            m = re.fullmatch(r"([a-z])(?:\^\{?(-?\d+)\}?)?", tok)
            if not m:
                raise InvalidElement(f"cannot parse token {tok!r} in {text!r}")
            g = self.gen(m.group(1))
            out = self._mul(out, self.power(g, int(m.group(2) or 1)))
        return out

    def fmt(self, x: Element) -> str:
        self.check(x)
        parts = []
        for name, e in zip(self.word_gens, x):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
        return ".".join(parts) or "1"


def dihedral(n: int) -> FCGroup:
    return FCGroup("dihedral", (n,))


def mcl_group(m: int) -> FCGroup:
    return FCGroup("mclgroup", (m,))


def cyclic(n: int) -> FCGroup:
    return FCGroup("cyclic", (n,))


def abelian(*ns: int) -> FCGroup:
    return FCGroup("abelian", tuple(ns))


def parse_group(spec: str) -> FCGroup:
    """``dihedral:<n>``, ``mclgroup:<m>``, ``cyclic:<n>``, ``abelian:<n1>x<n2>``."""
    try:
        kind, arg = spec.split(":", 1)
        if kind == "abelian":
            return abelian(*(int(t) for t in arg.split("x")))
        return FCGroup(kind, (int(arg),))
    except ValueError as exc:
        raise UsageError(f"bad group spec {spec!r}: {exc}") from None


# -- automorphisms -----------------------------------------------------------


def _extend(G: FCGroup, images: Sequence[Element]) -> dict | None:
    """Extend generator images to the whole group; None unless the result
    is a bijective homomorphism."""
    pows = []
    for y, q in zip(images, G.moduli):
        row = [G.identity]
        for _ in range(q - 1):
            row.append(G._mul(row[-1], y))
        pows.append(row)
    f = {}
    for x in G.elements:
        out = G.identity
        for p, e in enumerate(x):
            if e:
                out = G._mul(out, pows[p][e])
        f[x] = out
    if len(set(f.values())) != G.order:
        return None
    # f(x s) = f(x) f(s) for every x and generator s forces a homomorphism
    for s, fs in zip(G.gens, images):
        for x in G.elements:
            if f[G._mul(x, s)] != G._mul(f[x], fs):
                return None
    return f


@dataclass(frozen=True)
class GroupAutomorphism:
    """An automorphism stored as generator images (word order)."""

    group: FCGroup
    images: tuple[Element, ...]

    @cached_property
    def mapping(self) -> dict:
        f = _extend(self.group, self.images)
        if f is None:
            raise InvalidElement(
                f"images {self.images!r} do not define an automorphism of {self.group}")
        return f

    @classmethod
    def from_images(cls, group: FCGroup, images: dict | Sequence[Element]):
        if isinstance(images, dict):
            images = tuple(images[name] for name in group.word_gens)
        images = tuple(group.check(tuple(y)) for y in images)
        aut = cls(group, images)
        aut.mapping  # validates
        return aut

    def __call__(self, x: Element) -> Element:
        return self.mapping[self.group.check(x)]

    def apply_set(self, xs: Iterable[Element]) -> frozenset:
        f = self.mapping
        return frozenset(f[x] for x in xs)

    def compose(self, other: "GroupAutomorphism") -> "GroupAutomorphism":
        """x -> other(self(x)) (self first)."""
        return GroupAutomorphism(self.group, tuple(other(y) for y in self.images))

    def is_identity(self) -> bool:
        return self.images == self.group.gens

    def order(self) -> int:
        k, cur = 1, self
        while not cur.is_identity():
            cur = cur.compose(self)
            k += 1
        return k

    def describe(self) -> str:
        G = self.group
        return ", ".join(f"{g} -> {G.fmt(y)}" for g, y in zip(G.word_gens, self.images))


def dihedral_automorphism(n: int, lam: int, k: int) -> GroupAutomorphism:
    """The automorphism a -> a^lam, b -> b a^k of D_2n."""
    if math.gcd(lam, n) != 1:
        raise NotAUnit(f"{lam} is not a unit mod {n}")
    G = dihedral(n)
    return GroupAutomorphism.from_images(G, ((1, k % n), (0, lam % n)))


def enumerate_automorphisms(G: FCGroup, cap: int = 1000) -> list[GroupAutomorphism]:
    """All automorphisms of G by exhaustive search over generator images."""
    if G.order > cap:
        raise BudgetExceeded(f"|{G}| = {G.order} exceeds automorphism cap {cap}")
    return list(_automorphisms_cached(G))


_AUT_CACHE: dict[FCGroup, tuple] = {}


def _automorphisms_cached(G: FCGroup) -> tuple:
    if G not in _AUT_CACHE:
        by_order: dict[int, list] = {}
        for x in G.elements:
            by_order.setdefault(G.element_order(x), []).append(x)
        cands = [by_order.get(G.element_order(s), []) for s in G.gens]
        out = []
        for images in itertools.product(*cands):
            if _extend(G, images) is not None:
                out.append(GroupAutomorphism(G, tuple(images)))
        _AUT_CACHE[G] = tuple(out)
    return _AUT_CACHE[G]


def mcl_dihedral_relabeling(m: int) -> dict:
    """For odd m, the isomorphism D_4m -> mclgroup(m) sending the dihedral
    rotation to e = ab and the reflection to f = ca.

    Returns a dict on elements; checked to be a bijective homomorphism.
    """
    if m % 2 == 0:
        raise InvalidElement("the dihedral re-presentation needs m odd")
    D, H = dihedral(2 * m), mcl_group(m)
    e, f = H.word("a.b"), H.word("c.a")
    phi = {x: H.prod(H.power(f, x[0]), H.power(e, x[1])) for x in D.elements}
    if len(set(phi.values())) != H.order:
        raise AssertionError("relabeling is not bijective")
    for x in D.elements:
        for y in D.elements:
            if phi[D._mul(x, y)] != H._mul(phi[x], phi[y]):
                raise AssertionError("relabeling is not a homomorphism")
    return phi
