"""Permutations on {0..N-1} and permutation groups given by full element
enumeration.

Composition follows the right-action convention: ``p * q`` applies ``p``
first, then ``q``, so ``x^(pq) = (x^p)^q``.  Conjugates ``g^-1 h g`` are
written ``~g * h * g``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (BudgetExceeded, InvalidPermutation, NeedsClosure,
                     NotASubgroup, NotTransitive)

DEFAULT_CAP = 10**6


class Permutation:
    __slots__ = ("image", "_hash")

    def __init__(self, image: Sequence[int], check: bool = True):
        image = tuple(image)
        if check and sorted(image) != list(range(len(image))):
            raise InvalidPermutation(f"not a bijection of 0..{len(image) - 1}")
        self.image = image
        self._hash = None

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n), check=False)

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> "Permutation":
        img = list(range(n))
        for cyc in cycles:
            for k, x in enumerate(cyc):
                img[x] = cyc[(k + 1) % len(cyc)]
        return cls(img)

    @property
    def degree(self) -> int:
        return len(self.image)

    def __call__(self, x: int) -> int:
        return self.image[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise InvalidPermutation("degree mismatch")
        return Permutation(tuple(map(other.image.__getitem__, self.image)), check=False)

    def __invert__(self) -> "Permutation":
        inv = [0] * self.degree
        for x, y in enumerate(self.image):
            inv[y] = x
        return Permutation(inv, check=False)

    inverse = __invert__

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else ~self
        out = Permutation.identity(self.degree)
        k = abs(k)
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.image == other.image

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.image)
        return self._hash

    def __lt__(self, other):
        return self.image < other.image

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.image))

    def fixed_points(self) -> list[int]:
        return [x for x, y in enumerate(self.image) if x == y]

    def order(self) -> int:
        from math import lcm
        return lcm(*(len(c) for c in self.cycles(include_fixed=True)))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for x in range(self.degree):
            if x in seen:
                continue
            cyc, y = [x], self.image[x]
            seen.add(x)
            while y != x:
                cyc.append(y)
                seen.add(y)
                y = self.image[y]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def __repr__(self):
        cyc = self.cycles()
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"
        return f"Permutation[{self.degree}]{body}"

    def to_list(self) -> list[int]:
        return list(self.image)


class PermGroup:
    """A permutation group: generators plus (optionally) all elements.

    ``elements`` is computed by closure on first access unless the group was
    built with ``auto_close=False``; then accessing it raises NeedsClosure.
    """

    def __init__(self, degree: int, gens: Iterable[Permutation], *,
                 elements: Iterable[Permutation] | None = None,
                 order: int | None = None, cap: int = DEFAULT_CAP,
                 auto_close: bool = True):
        self.degree = degree
        self.gens = tuple(g for g in gens if not g.is_identity())
        for g in self.gens:
            if g.degree != degree:
                raise InvalidPermutation("generator degree mismatch")
        self._elements = None if elements is None else tuple(elements)
        self._order = order if elements is None else len(self._elements)
        self.cap = cap
        self.auto_close = auto_close

    @property
    def elements(self) -> tuple[Permutation, ...]:
        if self._elements is None:
            if not self.auto_close:
                raise NeedsClosure("group elements are not materialized")
            self._elements = close_group(self.gens, self.cap, degree=self.degree)._elements
            self._order = len(self._elements)
        return self._elements

    @property
    def order(self) -> int:
        if self._order is None:
            return len(self.elements)
        return self._order

    def __len__(self):
        return self.order

    @cached_property
    def element_set(self) -> frozenset:
        return frozenset(p.image for p in self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p.image in self.element_set

    def orbits(self) -> list[list[int]]:
        return orbits_of(self.degree, self.gens)

    def orbit(self, v: int) -> list[int]:
        return orbit_of(v, self.gens)

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree if self.degree else True

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, gens={len(self.gens)}, order={self._order})"


def orbit_of(v: int, gens: Sequence[Permutation]) -> list[int]:
    seen = {v}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = g.image[x]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return sorted(seen)


def orbits_of(n: int, gens: Sequence[Permutation]) -> list[list[int]]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for x, y in enumerate(g.image):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
    cells: dict[int, list[int]] = {}
    for x in range(n):
        cells.setdefault(find(x), []).append(x)
    return sorted(cells.values())


def close_group(gens: Iterable[Permutation], cap: int = DEFAULT_CAP,
                degree: int | None = None) -> PermGroup:
    """Enumerate the group generated by gens (BFS over words)."""
    gens = list(gens)
    if degree is None:
        if not gens:
            raise InvalidPermutation("degree needed for an empty generating set")
        degree = gens[0].degree
    if any(g.degree != degree for g in gens):
        raise InvalidPermutation("generators of different degrees")
    ident = tuple(range(degree))
    gimgs = [g.image for g in gens if g.image != ident]
    seen = {ident: None}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gimgs:
                y = tuple(map(g.__getitem__, x))
                if y not in seen:
                    seen[y] = None
                    nxt.append(y)
                    if len(seen) > cap:
                        raise BudgetExceeded(f"group order exceeds cap {cap}")
        frontier = nxt
    elements = [Permutation(x, check=False) for x in seen]
    return PermGroup(degree, gens, elements=elements, cap=cap)


@dataclass
class Partition:
    blocks: list[list[int]]

    def __post_init__(self):
        self.blocks = sorted(sorted(b) for b in self.blocks)

    def validate(self, n: int) -> None:
        from .errors import InvalidPartition
        pts = [x for b in self.blocks for x in b]
        if any(not b for b in self.blocks) or sorted(pts) != list(range(n)):
            raise InvalidPartition("cells must be non-empty, disjoint and cover 0..n-1")

    def cell_of(self) -> dict[int, int]:
        return {x: k for k, b in enumerate(self.blocks) for x in b}

    def __len__(self):
        return len(self.blocks)


@dataclass
class ActionProfile:
    transitive: bool
    semiregular: bool
    regular: bool
    orbits: Partition


def action_profile(G: PermGroup) -> ActionProfile:
    orbs = G.orbits()
    semi = all(p.is_identity() or not p.fixed_points() for p in G.elements)
    trans = len(orbs) == 1
    return ActionProfile(trans, semi, trans and semi, Partition(orbs))


def stabilizer(G: PermGroup, v: int) -> PermGroup:
    elems = [p for p in G.elements if p.image[v] == v]
    if len(G.orbit(v)) * len(elems) != G.order:
        raise AssertionError("orbit-stabilizer identity failed")
    return PermGroup(G.degree, _small_gens(elems), elements=elems)


def _small_gens(elems: Sequence[Permutation]) -> list[Permutation]:
    """A generating subset of a closed element list (greedy)."""
    gens: list[Permutation] = []
    reached = {tuple(range(elems[0].degree))} if elems else set()
    for p in sorted(elems, key=lambda q: q.image):
        if p.image not in reached:
            gens.append(p)
            reached = close_group(gens, degree=p.degree).element_set
    return gens


def _require_subgroup(H: PermGroup, G: PermGroup) -> None:
    if H.degree != G.degree or not H.element_set <= G.element_set:
        raise NotASubgroup("first group is not a subgroup of the second")


def core_in(H: PermGroup, G: PermGroup) -> PermGroup:
    """Largest normal subgroup of G contained in H."""
    _require_subgroup(H, G)
    inv = [~g for g in G.gens]
    core = set(H.element_set)
    changed = True
    while changed:
        changed = False
        for h in list(core):
            for g, gi in zip(G.gens, inv):
                hp = Permutation(h, check=False)
                if (gi * hp * g).image not in core or (g * hp * gi).image not in core:
                    core.discard(h)
                    changed = True
                    break
    elems = [Permutation(x, check=False) for x in sorted(core)]
    return PermGroup(G.degree, _small_gens(elems), elements=elems)


def normalizer_centralizer(H: PermGroup, G: PermGroup) -> tuple[PermGroup, PermGroup]:
    _require_subgroup(H, G)
    hset = H.element_set
    norm, cent = [], []
    for g in G.elements:
        gi = ~g
        if all((gi * h * g).image in hset for h in H.gens):
            norm.append(g)
            if all(h * g == g * h for h in H.gens):
                cent.append(g)
    return (PermGroup(G.degree, _small_gens(norm), elements=norm),
            PermGroup(G.degree, _small_gens(cent), elements=cent))


def block_system(G: PermGroup, seed: tuple[int, int]) -> Partition:
    """Finest G-invariant partition with the seed pair in one cell."""
    if not G.is_transitive():
        raise NotTransitive("block systems are defined for transitive groups")
    n = G.degree
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    queue = deque()
    a, b = seed
    if find(a) != find(b):
        parent[find(b)] = find(a)
        queue.append((a, b))
    while queue:
        x, y = queue.popleft()
        for g in G.gens:
            u, v = find(g.image[x]), find(g.image[y])
            if u != v:
                parent[v] = u
                queue.append((u, v))
    cells: dict[int, list[int]] = {}
    for x in range(n):
        cells.setdefault(find(x), []).append(x)
    return Partition(list(cells.values()))


# -- regular subgroups -------------------------------------------------------


def _gf2_nullspace(rows: list[int], k: int) -> list[int]:
    """Basis of {c in GF(2)^k : <r, c> = 0 for all rows} (bitmask vectors)."""
    pivots: dict[int, int] = {}
    for r in rows:
        for bit, prow in pivots.items():
            if r >> bit & 1:
                r ^= prow
        if r:
            bit = r.bit_length() - 1
            for b2 in list(pivots):
                if pivots[b2] >> bit & 1:
                    pivots[b2] ^= r
            pivots[bit] = r
    free = [j for j in range(k) if j not in pivots]
    basis = []
    for f in free:
        vec = 1 << f
        for bit, prow in pivots.items():
            if prow >> f & 1:
                vec |= 1 << bit
        basis.append(vec)
    return basis


def index_two_subgroups(G: PermGroup) -> list[frozenset]:
    """All subgroups of index 2, as kernels of homomorphisms onto Z_2."""
    gens = list(G.gens)
    k = len(gens)
    ident = tuple(range(G.degree))
    word = {ident: 0}  # parity vector of a spanning-tree word reaching each element
    queue = deque([ident])
    rows = []
    while queue:
        x = queue.popleft()
        for s, g in enumerate(gens):
            y = tuple(map(g.image.__getitem__, x))
            w = word[x] ^ (1 << s)
            if y not in word:
                word[y] = w
                queue.append(y)
            elif word[y] != w:
                rows.append(word[y] ^ w)
    basis = _gf2_nullspace(rows, k)
    out = []
    for mask in range(1, 1 << len(basis)):
        c = 0
        for j, v in enumerate(basis):
            if mask >> j & 1:
                c ^= v
        kernel = frozenset(x for x, w in word.items() if bin(w & c).count("1") % 2 == 0)
        out.append(kernel)
    return out


def _closure_within(gens: list[tuple], allowed: set, limit: int, ident: tuple):
    """Closure of gens, or None once it leaves `allowed` or exceeds `limit`."""
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(map(g.__getitem__, x))
                if y not in seen:
                    if y not in allowed:
                        return None
                    seen.add(y)
                    if len(seen) > limit:
                        return None
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def find_regular_subgroup(G: PermGroup, budget: int = 200_000) -> PermGroup | None:
    """A subgroup of G acting regularly, or None if none exists.

    Raises BudgetExceeded when the search tree exceeds `budget` nodes, so an
    exhausted search is never reported as absence.
    """
    N = G.degree
    if not G.is_transitive():
        raise NotTransitive("regular subgroups need a transitive group")
    order = G.order
    if order % N:
        return None
    ident = tuple(range(N))
    if order == N:
        return G
    if order == 2 * N:
        for kernel in index_two_subgroups(G):
            if len({x[0] for x in kernel}) == N:
                elems = [Permutation(x, check=False) for x in sorted(kernel)]
                return PermGroup(N, _small_gens(elems), elements=elems)
        return None

    fpf = {p.image for p in G.elements if all(x != y for x, y in enumerate(p.image))}
    fpf.add(ident)
    by_target: dict[int, list[tuple]] = {}
    for x in fpf:
        if x != ident:
            by_target.setdefault(x[0], []).append(x)
    for lst in by_target.values():
        lst.sort(key=lambda x: (Permutation(x, check=False).order(), x))

    visited: set[frozenset] = set()
    nodes = 0

    def dfs(gens: list[tuple], K: frozenset):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"regular-subgroup search exceeded {budget} nodes")
        if len(K) == N:
            return K
        reached = {x[0] for x in K}
        v = next(u for u in range(N) if u not in reached)
        # a regular overgroup of K contains exactly one element sending 0 to v
        for x in by_target.get(v, ()):
            K2 = _closure_within(gens + [x], fpf, N, ident)
            if K2 is None or K2 in visited:
                continue
            visited.add(K2)
            if N % len(K2):
                continue
            found = dfs(gens + [x], K2)
            if found is not None:
                return found
        return None

    found = dfs([], frozenset([ident]))
    if found is None:
        return None
    elems = [Permutation(x, check=False) for x in sorted(found)]
    return PermGroup(N, _small_gens(elems), elements=elems)


def all_subgroups_up_to(G: PermGroup, max_order: int, cap: int = 200_000) -> set[frozenset]:
    """Every subgroup of G with order <= max_order (exhaustive, for oracles).

    Each subgroup is reached by adding one element at a time to a smaller
    subgroup, so the search is complete for the stated order bound.
    """
    ident = tuple(range(G.degree))
    elems = [p.image for p in G.elements]
    allowed = set(elems)
    start = frozenset([ident])
    found = {start: []}
    queue = deque([start])
    while queue:
        K = queue.popleft()
        for x in elems:
            if x in K:
                continue
            gens = found[K] + [x]
            K2 = _closure_within(gens, allowed, max_order, ident)
            if K2 is not None and K2 not in found:
                found[K2] = gens
                queue.append(K2)
                if len(found) > cap:
                    raise BudgetExceeded("too many subgroups")
    return set(found)
