"""Shared helpers: seeded random graph generators used across test modules."""

from __future__ import annotations

import random

from bindex.graphs import Graph, add_edge, bipartition, new_graph, relabel
from bindex.transforms import CutEdgeContext, cut_edge_context


def random_connected_bipartite(rng: random.Random, lo: int = 4, hi: int = 10) -> Graph:
    """A random connected bipartite graph on lo..hi vertices.

    A random recursive tree fixes the two color classes; a random number of
    extra cross-color edges is then layered on top. Deterministic given rng.
    """
    n = rng.randint(lo, hi)
    g = new_graph(n, [(rng.randrange(i), i) for i in range(1, n)])
    part = bipartition(g)
    assert part is not None
    in_x = set(part.part_x)
    extra = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if ((u in in_x) != (v in in_x)) and not g.has_edge(u, v)
    ]
    rng.shuffle(extra)
    for u, v in extra[: rng.randint(0, len(extra))]:
        g = add_edge(g, u, v)
    return g


def random_bridge_context(rng: random.Random) -> CutEdgeContext:
    """Two random connected bipartite sides of 2..6 vertices joined by a bridge."""
    left = random_connected_bipartite(rng, lo=2, hi=6)
    right = random_connected_bipartite(rng, lo=2, hi=6)
    n = left.n + right.n
    edges = list(left.edges())
    edges += [(u + left.n, v + left.n) for u, v in right.edges()]
    u = rng.randrange(left.n)
    w = left.n + rng.randrange(right.n)
    edges.append((u, w))
    return cut_edge_context(new_graph(n, edges), u, w)


def scrambled(rng: random.Random, g: Graph) -> Graph:
    """A random relabeling of g."""
    perm = list(range(g.n))
    rng.shuffle(perm)
    return relabel(g, {old: new for old, new in enumerate(perm)})
