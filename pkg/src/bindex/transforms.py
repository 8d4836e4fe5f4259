"""Index-monotone graph surgeries and the edge-addition probe.

Three operations, each preserving vertex count and changing all five
indices in a known direction:

* contract_bridge: slide one side of a cut edge together and hang a new
  pendant, keeping edge count too;
* shift_pendants_within_part: move all pendants of one decorated core
  vertex to a decorated mate in the same part;
* shift_pendants_across_parts: move the pendants sitting on the large-part
  vertex of a doubly decorated core over to the small-part vertex.

Where a delta has a closed form it is predicted exactly; everywhere else
only its strict sign is promised. monotonicity_probe checks the edge
addition law (W, WW, EDS fall, H and CEI rise) on sampled absent edges.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .constructors import DecoratedCore
from .graphs import Graph, add_edge, bridges, distances_from, graph6_encode, is_connected, new_graph
from .indices import IndexKind, all_indices

DOWN = -1  # strict decrease
UP = 1  # strict increase
FLAT_OR_UP = 0  # may stay equal, never falls

EDGE_ADDITION_SIGNS = {
    IndexKind.W: DOWN,
    IndexKind.WW: DOWN,
    IndexKind.H: UP,
    IndexKind.CEI: UP,
    IndexKind.EDS: DOWN,
}


def index_deltas(before: Graph, after: Graph) -> dict[IndexKind, int | Fraction]:
    """after minus before, per index."""
    a = all_indices(before)
    b = all_indices(after)
    return {kind: b[kind] - a[kind] for kind in IndexKind}


def _sign_ok(delta, sign: int) -> bool:
    if sign == DOWN:
        return delta < 0
    if sign == UP:
        return delta > 0
    return delta >= 0


@dataclass(frozen=True, eq=False)
class CutEdgeContext:
    """A cut edge (u, w) of a connected graph, with its two shores."""

    graph: Graph
    u: int
    w: int
    side_u: frozenset[int]
    side_w: frozenset[int]


def cut_edge_context(g: Graph, u: int, w: int) -> CutEdgeContext:
    """Validate that (u, w) is a cut edge with at least 2 vertices per side."""
    if not is_connected(g):
        raise ValueError("cut edge context needs a connected graph")
    if (min(u, w), max(u, w)) not in bridges(g):
        raise ValueError(f"({u}, {w}) is not a cut edge")
    # removing the edge splits the graph; collect u's side by BFS
    adj = list(g.adj)
    adj[u] &= ~(1 << w)
    adj[w] &= ~(1 << u)
    cut = Graph(g.n, tuple(adj))
    side_u = frozenset(
        v for v, d in enumerate(distances_from(cut, u).dist) if d >= 0
    )
    side_w = frozenset(range(g.n)) - side_u
    if len(side_u) < 2 or len(side_w) < 2:
        raise ValueError("both sides of the cut edge must have at least 2 vertices")
    return CutEdgeContext(g, u, w, side_u, side_w)


def contract_bridge(ctx: CutEdgeContext) -> Graph:
    """Identify the ends of the cut edge and hang a new pendant on the merge.

    Vertex count and edge count are both preserved. W, WW and EDS strictly
    fall; H and CEI strictly rise. Labels: w disappears, the survivors keep
    their relative order, the new pendant becomes n-1.
    """
    g, u, w = ctx.graph, ctx.u, ctx.w
    relab = {}
    nxt = 0
    for v in range(g.n):
        if v == w:
            continue
        relab[v] = nxt
        nxt += 1
    edges = []
    for a, b in g.edges():
        if w in (a, b):
            continue
        edges.append((relab[a], relab[b]))
    for z in range(g.n):
        # reattach w's neighbors to u; a shared neighbor would mean a cycle
        # through the cut edge, so no duplicate can arise
        if z != u and g.has_edge(w, z):
            edges.append((relab[u], relab[z]))
    edges.append((relab[u], g.n - 1))
    return new_graph(g.n, edges)


CONTRACT_SIGNS = EDGE_ADDITION_SIGNS  # same directions, all strict


@dataclass(frozen=True, eq=False)
class ShiftPrediction:
    """Contract of one pendant shift: exact deltas where known, else signs."""

    core: DecoratedCore
    shifted: DecoratedCore
    exact: dict[IndexKind, Fraction]
    signs: dict[IndexKind, int]

    def check(self, deltas: dict[IndexKind, int | Fraction]) -> bool:
        for kind, want in self.exact.items():
            if deltas[kind] != want:
                return False
        return all(_sign_ok(deltas[k], s) for k, s in self.signs.items())


def _part_of(core: DecoratedCore, vertex: int) -> int:
    if not 0 <= vertex < core.s + core.t:
        raise ValueError(f"core vertex {vertex} out of range")
    return 0 if vertex < core.s else 1


def shift_pendants_within_part(
    core: DecoratedCore, donor: int, receiver: int
) -> ShiftPrediction:
    """Move all of donor's pendants onto receiver (same core part).

    With a = pendants(donor) and b = pendants(receiver), both >= 1, the
    exact deltas are W: -2ab, WW: -7ab, H: +ab/4. CEI stays exactly flat
    when a third vertex of that part is decorated and rises strictly
    otherwise (the receiver's eccentricity drops, so no simple product
    formula applies); EDS falls strictly, by exactly -16ab in the
    decorated-third case. Needs both core parts of size >= 2.
    """
    if core.s < 2 or core.t < 2:
        raise ValueError("within-part shift needs both core parts of size >= 2")
    if donor == receiver:
        raise ValueError("donor and receiver must differ")
    if _part_of(core, donor) != _part_of(core, receiver):
        raise ValueError("donor and receiver must sit in the same core part")
    a = core.pendants[donor]
    b = core.pendants[receiver]
    if a < 1 or b < 1:
        raise ValueError("donor and receiver must each hold at least one pendant")
    part = range(core.s) if donor < core.s else range(core.s, core.s + core.t)
    third_decorated = any(
        core.pendants[v] > 0 for v in part if v not in (donor, receiver)
    )
    pendants = list(core.pendants)
    pendants[receiver] += pendants[donor]
    pendants[donor] = 0
    shifted = DecoratedCore(core.s, core.t, tuple(pendants))
    exact = {
        IndexKind.W: Fraction(-2 * a * b),
        IndexKind.WW: Fraction(-7 * a * b),
        IndexKind.H: Fraction(a * b, 4),
    }
    signs = {IndexKind.W: DOWN, IndexKind.WW: DOWN, IndexKind.H: UP, IndexKind.EDS: DOWN}
    if third_decorated:
        exact[IndexKind.CEI] = Fraction(0)
        exact[IndexKind.EDS] = Fraction(-16 * a * b)
        signs[IndexKind.CEI] = FLAT_OR_UP
    else:
        signs[IndexKind.CEI] = UP
    return ShiftPrediction(core, shifted, exact, signs)


def shift_pendants_across_parts(core: DecoratedCore) -> ShiftPrediction:
    """Move the large-part pendants onto the decorated small-part vertex.

    The core must be K_{s,t} with 2 <= s <= t and pendants on exactly two
    vertices: a >= 1 on small-part vertex 0 and b >= 1 on large-part vertex
    s. Exact deltas: W by -ab + b(s-t), CEI by +s(t-1)/6; WW and EDS fall
    strictly, H rises strictly.
    """
    s, t = core.s, core.t
    if not 2 <= s <= t:
        raise ValueError("across-part shift needs part sizes 2 <= s <= t")
    a = core.pendants[0]
    b = core.pendants[s]
    if a < 1 or b < 1:
        raise ValueError("need pendants on small-part vertex 0 and large-part vertex s")
    for v, count in enumerate(core.pendants):
        if v not in (0, s) and count:
            raise ValueError(
                "across-part shift allows pendants only on vertices 0 and s"
            )
    pendants = list(core.pendants)
    pendants[0] += b
    pendants[s] = 0
    shifted = DecoratedCore(s, t, tuple(pendants))
    exact = {
        IndexKind.W: Fraction(-a * b + b * (s - t)),
        IndexKind.CEI: Fraction(s * (t - 1), 6),
    }
    signs = {
        IndexKind.W: DOWN,
        IndexKind.WW: DOWN,
        IndexKind.H: UP,
        IndexKind.CEI: UP,
        IndexKind.EDS: DOWN,
    }
    return ShiftPrediction(core, shifted, exact, signs)


@dataclass(frozen=True, eq=False)
class EdgeProbe:
    u: int
    v: int
    deltas: dict[IndexKind, int | Fraction]
    consistent: bool


@dataclass(frozen=True, eq=False)
class ProbeReport:
    graph6: str
    probes: tuple[EdgeProbe, ...]
    consistent: bool


def monotonicity_probe(g: Graph, samples: int | None = None, seed: int = 0) -> ProbeReport:
    """Add absent edges and check every index moves the right way.

    samples=None probes every absent pair; otherwise a seeded sample of
    that size. The graph must be connected and not complete.
    """
    if not is_connected(g):
        raise ValueError("monotonicity probe needs a connected graph")
    absent = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.has_edge(u, v)
    ]
    if not absent:
        raise ValueError("graph is complete: no edge can be added")
    if samples is not None and samples < len(absent):
        absent = sorted(random.Random(seed).sample(absent, samples))
    probes = []
    for u, v in absent:
        deltas = index_deltas(g, add_edge(g, u, v))
        ok = all(_sign_ok(deltas[k], s) for k, s in EDGE_ADDITION_SIGNS.items())
        probes.append(EdgeProbe(u, v, deltas, ok))
    return ProbeReport(graph6_encode(g), tuple(probes), all(p.consistent for p in probes))
