"""Slow, independent reference implementations used to cross-check the engines.

Nothing here imports the refinement/backtracking code: automorphisms are found
by trying every bijection (tiny graphs) or by a plain neighbourhood-guided
extension search, and Cayley-ness by listing every subgroup of Aut whose
non-identity elements are fixed-point-free.
"""

from __future__ import annotations

from itertools import permutations


def _edge_set(G):
    return {frozenset(e) for e in G.edges()}


def naive_aut_count(G) -> int:
    """|Aut(G)| by checking all n! bijections.  Only for n <= 8."""
    assert G.n <= 8, "naive oracle is for tiny graphs"
    E = _edge_set(G)
    edges = list(E)
    count = 0
    for p in permutations(range(G.n)):
        if all(frozenset((p[u], p[v])) in E for u, v in (tuple(e) for e in edges)):
            count += 1
    return count


def plain_automorphisms(G) -> list[tuple[int, ...]]:
    """All automorphisms of a connected graph by extending maps along a BFS
    order; each vertex's image must be a neighbour of its parent's image."""
    n = G.n
    nbrs = [set(G.adj[v]) for v in range(n)]
    order, parent, seen = [0], {0: None}, {0}
    for v in order:
        for w in sorted(nbrs[v]):
            if w not in seen:
                seen.add(w)
                parent[w] = v
                order.append(w)
    assert len(order) == n, "oracle expects a connected graph"
    out = []
    img = {}

    def ok(v, x):
        for w in nbrs[v]:
            if w in img and img[w] not in nbrs[x]:
                return False
        return len(nbrs[v]) == len(nbrs[x])

    def rec(k, used):
        if k == n:
            out.append(tuple(img[v] for v in range(n)))
            return
        v = order[k]
        cands = range(n) if parent[v] is None else nbrs[img[parent[v]]]
        for x in cands:
            if x not in used and ok(v, x):
                img[v] = x
                used.add(x)
                rec(k + 1, used)
                used.discard(x)
                del img[v]

    rec(0, set())
    return out


def _compose(p, q):
    return tuple(q[i] for i in p)


def _close(gens, ident):
    """The subgroup generated by ``gens`` (finite, so products suffice)."""
    elems = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                z = _compose(x, g)
                if z not in elems:
                    elems.add(z)
                    new.append(z)
        frontier = new
    return frozenset(elems)


def oracle_is_cayley(G) -> bool:
    """Whether Aut(G) has a regular subgroup, by growing every subgroup made of
    fixed-point-free elements one generator at a time.  Connected, <= 16 vertices."""
    assert G.n <= 16
    n = G.n
    auts = plain_automorphisms(G)
    ident = tuple(range(n))
    fpf = [p for p in auts if all(p[i] != i for i in range(n))]
    fpf_set = set(fpf)
    seen = {frozenset([ident])}
    frontier = [(frozenset([ident]), ())]
    while frontier:
        nxt = []
        for K, gens in frontier:
            for g in fpf:
                if g in K:
                    continue
                K2 = _close(gens + (g,), ident)
                if len(K2) > n or K2 in seen:
                    continue
                if any(x != ident and x not in fpf_set for x in K2):
                    continue
                seen.add(K2)
                if len(K2) == n:
                    return True
                nxt.append((K2, gens + (g,)))
        frontier = nxt
    return False
