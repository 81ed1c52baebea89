"""Simple undirected graphs, cycle counting, quotients, and an
individualization-refinement engine for automorphism groups and
isomorphism testing.

The engine colours vertices by degree, refines by the multiset of
neighbour colours until stable, and branches on the first smallest
non-singleton cell (lowest vertex first on the reference side).  The
automorphism group is found level by level along the reference path:
for each base point we search for automorphisms fixing the earlier base
points and moving it to every candidate not already in its orbit, so the
group order is the product of the basic orbit lengths.
"""

from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import BudgetExceeded, InvalidPartition, InvalidPermutation
from .perms import DEFAULT_CAP, Partition, Permutation, PermGroup, orbit_of

DESK_SCALE = 500


class Graph:
    """Simple undirected graph on vertices 0..n-1 with optional labels.

    Equality ignores labels.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (),
                 labels: Sequence | None = None, name: str = ""):
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in nbrs)
        self._adjsets = [frozenset(s) for s in nbrs]
        if labels is not None and len(labels) != n:
            raise ValueError("one label per vertex required")
        self.labels = tuple(labels) if labels is not None else None
        self.name = name
        self._aut: PermGroup | None = None

    @property
    def n_vertices(self) -> int:
        return self.n

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @property
    def n_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjsets[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def is_regular(self, k: int | None = None) -> bool:
        ds = set(self.degrees())
        return len(ds) <= 1 and (k is None or ds <= {k})

    def vertex(self, label) -> int:
        """Index of the vertex carrying `label`."""
        if self.labels is None:
            raise KeyError("graph has no labels")
        if not hasattr(self, "_label_index"):
            self._label_index = {lab: k for k, lab in enumerate(self.labels)}
        return self._label_index[label]

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        tag = f" {self.name}" if self.name else ""
        return f"<Graph{tag} n={self.n} m={self.n_edges}>"

    # -- serialization -------------------------------------------------

    def to_edgelist(self) -> str:
        lines = [f"p {self.n} {self.n_edges}"]
        lines += [f"e {u} {v}" for u, v in self.edges()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_edgelist(cls, text: str) -> "Graph":
        n, edges = None, []
        for line in text.splitlines():
            parts = line.split()
            if not parts or parts[0].startswith("#"):
                continue
            if parts[0] == "p":
                n = int(parts[1])
            elif parts[0] == "e":
                edges.append((int(parts[1]), int(parts[2])))
            else:
                raise ValueError(f"unrecognized line {line!r}")
        if n is None:
            raise ValueError("missing 'p <n> <m>' header")
        return cls(n, edges)

    def to_json(self) -> str:
        return json.dumps({
            "name": self.name,
            "n_vertices": self.n,
            "edges": self.edges(),
            "labels": [_jsonable(lab) for lab in self.labels] if self.labels else None,
        })


def _jsonable(x):
    if isinstance(x, tuple):
        return [_jsonable(y) for y in x]
    return x


def is_connected(G: Graph) -> bool:
    if G.n == 0:
        return True
    return len(_bfs_dist(G, 0)) == G.n


def _bfs_dist(G: Graph, v: int) -> dict[int, int]:
    dist = {v: 0}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for y in G.adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def sphere(G: Graph, v: int, i: int) -> set[int]:
    """Vertices at distance exactly i from v."""
    if i < 0:
        raise ValueError("radius must be non-negative")
    return {u for u, d in _bfs_dist(G, v).items() if d == i}


def count_cycles_through(G: Graph, required: Iterable[int], length: int) -> int:
    """Number of cycles of exactly `length` containing every required vertex."""
    req = set(required)
    if length < 3 or not req or len(req) > length:
        return 0
    s = min(req)
    dist = _bfs_dist(G, s)
    adj = G.adj
    on_path = {s}
    count = 0

    def dfs(v: int, steps: int, missing: int):
        nonlocal count
        if steps == length - 1:
            if missing == 0 and s in G._adjsets[v]:
                count += 1
            return
        remaining = length - steps - 1
        for u in adj[v]:
            if u in on_path or dist.get(u, length) > remaining:
                continue
            m2 = missing - (u in req)
            if m2 > remaining - 1:
                continue
            on_path.add(u)
            dfs(u, steps + 1, m2)
            on_path.discard(u)

    dfs(s, 0, len(req) - 1)
    return count // 2  # each cycle is walked once in each direction


def quotient(G: Graph, P: Partition) -> Graph:
    """Cells become vertices; two cells are adjacent when some edge joins them.

    Loops (edges inside a cell) and parallel edges are dropped.
    """
    try:
        P.validate(G.n)
    except InvalidPartition:
        raise
    cell = P.cell_of()
    edges = {(min(cell[u], cell[v]), max(cell[u], cell[v]))
             for u, v in G.edges() if cell[u] != cell[v]}
    return Graph(len(P.blocks), sorted(edges), labels=[tuple(b) for b in P.blocks])


def verify_automorphism(G: Graph, p: Permutation | Sequence[int]) -> bool:
    img = p.image if isinstance(p, Permutation) else tuple(p)
    if len(img) != G.n:
        raise InvalidPermutation(f"degree {len(img)} does not match {G.n} vertices")
    if sorted(img) != list(range(G.n)):
        raise InvalidPermutation("not a bijection")
    sets = G._adjsets
    return all(img[v] in sets[img[u]] for u, v in G.edges())


@dataclass
class IsoWitness:
    bijection: tuple[int, ...]
    note: str = ""

    def validate(self, G1: Graph, G2: Graph) -> bool:
        f = self.bijection
        if G1.n != G2.n or G1.n_edges != G2.n_edges or sorted(f) != list(range(G2.n)):
            return False
        return all(G2.has_edge(f[u], f[v]) for u, v in G1.edges())


# -- refinement engine ---------------------------------------------------------


def _rank(values: Sequence) -> list[int]:
    order = {v: k for k, v in enumerate(sorted(set(values)))}
    return [order[v] for v in values]


def _refine(adj, colors: list[int]) -> tuple[list[int], tuple]:
    """Refine to the coarsest stable colouring; returns it with a trace that
    any isomorphism-respecting run must reproduce."""
    k = len(set(colors))
    trace = []
    while True:
        sigs = [(colors[v], tuple(sorted([colors[u] for u in nb]))) for v, nb in enumerate(adj)]
        counts = Counter(sigs)
        if len(counts) == k:
            trace.append(k)
            return colors, tuple(trace)
        distinct = sorted(counts)
        trace.append(tuple((s, counts[s]) for s in distinct))
        index = {s: i for i, s in enumerate(distinct)}
        colors = [index[s] for s in sigs]
        k = len(distinct)


def _individualize(colors: list[int], v: int) -> list[int]:
    c = [2 * x for x in colors]
    c[v] += 1
    return _rank(c)


def _target_cell(colors: list[int]) -> int | None:
    """Colour of the first smallest non-singleton cell, or None if discrete."""
    sizes = Counter(colors)
    best = None
    for col, size in sizes.items():
        if size > 1 and (best is None or (size, col) < best):
            best = (size, col)
    return None if best is None else best[1]


@dataclass
class _Path:
    colorings: list[list[int]] = field(default_factory=list)
    traces: list[tuple] = field(default_factory=list)
    base: list[int] = field(default_factory=list)


def _initial(G: Graph) -> tuple[list[int], tuple]:
    degs = G.degrees()
    colors, tr = _refine(G.adj, _rank(degs))
    return colors, (tuple(sorted(Counter(degs).items())),) + tr


def _reference_path(G: Graph) -> _Path:
    path = _Path()
    colors, tr = _initial(G)
    path.colorings.append(colors)
    path.traces.append(tr)
    while (col := _target_cell(colors)) is not None:
        v = colors.index(col)
        colors, tr = _refine(G.adj, _individualize(colors, v))
        path.base.append(v)
        path.colorings.append(colors)
        path.traces.append(tr)
    return path


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def tick(self):
        self.used += 1
        if self.used > self.limit:
            raise BudgetExceeded(f"search exceeded {self.limit} nodes")


def _search(G1: Graph, G2: Graph, path: _Path, depth: int, D: list[int],
            budget: _Budget) -> tuple[int, ...] | None:
    """Find a leaf below the right-hand colouring D (matched to depth) whose
    colour correspondence is an isomorphism G1 -> G2."""
    budget.tick()
    if depth == len(path.base):
        where = [0] * G2.n
        for w, c in enumerate(D):
            where[c] = w
        leaf = path.colorings[depth]
        f = tuple(where[leaf[v]] for v in range(G1.n))
        sets = G2._adjsets
        if all(f[v] in sets[f[u]] for u, v in G1.edges()):
            return f
        return None
    col = path.colorings[depth][path.base[depth]]
    for w in [w for w, c in enumerate(D) if c == col]:
        D2, tr = _refine(G2.adj, _individualize(D, w))
        if tr != path.traces[depth + 1]:
            continue
        found = _search(G1, G2, path, depth + 1, D2, budget)
        if found is not None:
            return found
    return None


def automorphism_group(G: Graph, cap: int = DEFAULT_CAP, budget: int = 2_000_000,
                       max_vertices: int = DESK_SCALE) -> PermGroup:
    """Full automorphism group (generators, exact order; elements on demand).

    Cached on the graph.
    """
    if G._aut is not None:
        return G._aut
    if G.n > max_vertices:
        raise BudgetExceeded(f"{G.n} vertices is beyond the desk-scale bound {max_vertices}")
    path = _reference_path(G)
    bud = _Budget(budget)
    gens: list[Permutation] = []
    order = 1
    for d in range(len(path.base) - 1, -1, -1):
        C = path.colorings[d]
        b = path.base[d]
        cell = [w for w, c in enumerate(C) if c == C[b]]
        orbit = set(orbit_of(b, gens))
        for w in cell:
            if w in orbit:
                continue
            D, tr = _refine(G.adj, _individualize(C, w))
            if tr != path.traces[d + 1]:
                continue
            f = _search(G, G, path, d + 1, D, bud)
            if f is not None:
                gens.append(Permutation(f, check=False))
                orbit = set(orbit_of(b, gens))
        order *= len(orbit)
    group = PermGroup(G.n, gens, order=order, cap=cap)
    G._aut = group
    return group


def are_isomorphic(G1: Graph, G2: Graph, budget: int = 2_000_000) -> IsoWitness | None:
    """An explicit isomorphism G1 -> G2, or None when none exists."""
    if G1.n != G2.n or G1.n_edges != G2.n_edges or sorted(G1.degrees()) != sorted(G2.degrees()):
        return None
    if G1.n == 0:
        return IsoWitness(())
    path = _reference_path(G1)
    D, tr = _initial(G2)
    if tr != path.traces[0]:
        return None
    f = _search(G1, G2, path, 0, D, _Budget(budget))
    if f is None:
        return None
    w = IsoWitness(f, note=f"{G1.name or 'G1'} -> {G2.name or 'G2'}")
    assert w.validate(G1, G2)
    return w


def arc_orbits(G: Graph, group: PermGroup) -> list[list[tuple[int, int]]]:
    arcs = [(u, v) for u in range(G.n) for v in G.adj[u]]
    index = {a: k for k, a in enumerate(arcs)}
    gens = [Permutation([index[(g.image[u], g.image[v])] for u, v in arcs], check=False)
            for g in group.gens]
    from .perms import orbits_of
    return [[arcs[k] for k in orb] for orb in orbits_of(len(arcs), gens)]


def naive_automorphism_count(G: Graph) -> int:
    """Count automorphisms by trying every bijection (tiny graphs only)."""
    import itertools
    if G.n > 9:
        raise BudgetExceeded("naive oracle limited to 9 vertices")
    edges = G.edges()
    return sum(all(G.has_edge(p[u], p[v]) for u, v in edges)
               for p in itertools.permutations(range(G.n)))
