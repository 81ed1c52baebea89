"""Small graphs shared by the engine and oracle tests."""

from __future__ import annotations

from dihedrants import analysis as an
from dihedrants.constructions import (bicayley, cayley, cross_ladder, generalized_petersen,
                                      lex_cycle_product, multi_cross_ladder)
from dihedrants.graphs import Graph, is_connected
from dihedrants.groups import cyclic, dihedral


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def complete(n):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)], name=f"K{n}")


def complete_bipartite(a, b):
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)], name=f"K{a},{b}")


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)], name=f"P{n}")


def hypercube3():
    return Graph(8, [(i, i ^ (1 << k)) for i in range(8) for k in range(3) if i < i ^ (1 << k)],
                 name="Q3")


def corpus():
    """A mixed bag, mostly connected, from 3 to 16 vertices."""
    gs = [cycle(n) for n in range(3, 9)] + [complete(n) for n in range(3, 6)]
    gs += [complete_bipartite(3, 3), complete_bipartite(2, 3), path(5), hypercube3(),
           cross_ladder(2), cross_ladder(3), cross_ladder(4), multi_cross_ladder(2),
           lex_cycle_product(3), lex_cycle_product(4), lex_cycle_product(5)]
    gs += [generalized_petersen(n, t) for n in range(3, 9) for t in range(1, (n + 1) // 2)]
    gs += [cayley(cyclic(n), [(1,), (n - 1,), (n // 2,)]) for n in (6, 8, 10)]
    for n in range(3, 9):
        for S in an.trivalent_dihedral_sets(n):
            gs.append(cayley(dihedral(n), S))
    for n in (3, 4):
        for s_type in (0, 1, 2):
            for T in an.trivalent_triples(n, s_type):
                G = bicayley(T)
                if is_connected(G):
                    gs.append(G)
    # an asymmetric-ish tree-like graph and a disjoint union
    gs.append(Graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (5, 6), (2, 6)], name="odd7"))
    gs.append(Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)], name="2K3"))
    return gs
