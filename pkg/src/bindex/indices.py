"""Five exact distance-based indices of connected graphs.

wiener      W   = sum over unordered pairs of d(u, v)
hyper_wiener WW = (1/2) sum over pairs of (d + d^2), always an integer
harary      H   = sum over pairs of 1/d               (exact Fraction)
cei             = sum over vertices of deg(u)/ecc(u)  (exact Fraction)
eds             = sum over vertices of ecc(u) * D(u), D = transmission

All computation aggregates integer counts first and divides exactly at the
end, so sweeps over thousands of graphs stay cheap and no floats appear
anywhere.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .graphs import UNREACHABLE, Graph, distances_from


class IndexKind(str, Enum):
    """The five indices, with their behavior under edge addition."""

    W = "w"
    WW = "ww"
    H = "h"
    CEI = "cei"
    EDS = "eds"

    @property
    def decreases_when_edges_added(self) -> bool:
        return self in (IndexKind.W, IndexKind.WW, IndexKind.EDS)

    @property
    def bound_direction(self) -> str:
        """Over graphs with fixed n and cut edges: the side the optimum sits on.

        Indices that shrink as edges are added are bounded from below (the
        extremal graph minimizes them); the other two are bounded from above.
        """
        return "lower" if self.decreases_when_edges_added else "upper"

    @property
    def is_rational(self) -> bool:
        return self in (IndexKind.H, IndexKind.CEI)


@lru_cache(maxsize=256)
def _profile(g: Graph) -> tuple[tuple[int, int, tuple[int, ...]], ...]:
    """Per-vertex (eccentricity, transmission, count-per-distance) rows."""
    rows = []
    for u in range(g.n):
        dist = distances_from(g, u).dist
        if UNREACHABLE in dist:
            raise ValueError("index undefined: graph is disconnected")
        ecc = max(dist)
        counts = [0] * (ecc + 1)
        for d in dist:
            counts[d] += 1
        rows.append((ecc, sum(dist), tuple(counts)))
    return tuple(rows)


def wiener(g: Graph) -> int:
    return sum(trans for _, trans, _ in _profile(g)) // 2


def hyper_wiener(g: Graph) -> int:
    s1 = 0
    s2 = 0
    for _, trans, counts in _profile(g):
        s1 += trans
        s2 += sum(d * d * c for d, c in enumerate(counts))
    # (s1 + s2) counts ordered pairs of d + d^2, each pair twice and even
    return (s1 + s2) // 4


def harary(g: Graph) -> Fraction:
    total: dict[int, int] = {}
    for _, _, counts in _profile(g):
        for d, c in enumerate(counts):
            if d and c:
                total[d] = total.get(d, 0) + c
    return sum((Fraction(c, 2 * d) for d, c in total.items()), Fraction(0))


def cei(g: Graph) -> Fraction:
    """Connective eccentricity: degree over eccentricity, summed.

    Undefined on K_1 (eccentricity zero).
    """
    by_ecc: dict[int, int] = {}
    for u, (ecc, _, _) in enumerate(_profile(g)):
        if ecc == 0:
            raise ValueError("cei undefined: eccentricity zero (single vertex)")
        by_ecc[ecc] = by_ecc.get(ecc, 0) + g.degree(u)
    return sum((Fraction(deg, e) for e, deg in by_ecc.items()), Fraction(0))


def eds(g: Graph) -> int:
    return sum(ecc * trans for ecc, trans, _ in _profile(g))


def compute(kind: IndexKind, g: Graph) -> int | Fraction:
    return _DISPATCH[kind](g)


def all_indices(g: Graph) -> dict[IndexKind, int | Fraction]:
    return {kind: fn(g) for kind, fn in _DISPATCH.items()}


_DISPATCH = {
    IndexKind.W: wiener,
    IndexKind.WW: hyper_wiener,
    IndexKind.H: harary,
    IndexKind.CEI: cei,
    IndexKind.EDS: eds,
}


def eds_by_pairs(g: Graph) -> int:
    """EDS through its pair form: sum of (ecc(u) + ecc(v)) * d(u, v).

    Slower than eds(); kept as an identity cross-check.
    """
    prof = _profile(g)
    total = 0
    for u in range(g.n):
        dist = distances_from(g, u).dist
        for v in range(u + 1, g.n):
            total += (prof[u][0] + prof[v][0]) * dist[v]
    return total


def cei_by_edges(g: Graph) -> Fraction:
    """CEI through its edge form: sum over edges of 1/ecc(u) + 1/ecc(v)."""
    prof = _profile(g)
    total = Fraction(0)
    for u, v in g.edges():
        total += Fraction(1, prof[u][0]) + Fraction(1, prof[v][0])
    return total
