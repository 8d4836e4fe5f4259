"""Surgeries and probes: exact deltas in covered regimes, strict signs elsewhere."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from bindex.constructors import DecoratedCore, realize, star
from bindex.graphs import certificate, new_graph
from bindex.indices import IndexKind, all_indices
from bindex.transforms import (
    CONTRACT_SIGNS,
    DOWN,
    EDGE_ADDITION_SIGNS,
    FLAT_OR_UP,
    UP,
    contract_bridge,
    cut_edge_context,
    index_deltas,
    monotonicity_probe,
    shift_pendants_across_parts,
    shift_pendants_within_part,
)
from conftest import random_bridge_context, scrambled

F = Fraction


def path(n):
    return new_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


def two_triangles():
    return new_graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)])


def signs_hold(deltas, signs):
    for kind, sign in signs.items():
        d = deltas[kind]
        if sign == DOWN and not d < 0:
            return False
        if sign == UP and not d > 0:
            return False
        if sign == FLAT_OR_UP and not d >= 0:
            return False
    return True


def test_contract_bridge_turns_p4_into_star():
    g = path(4)
    ctx = cut_edge_context(g, 1, 2)
    assert ctx.side_u == frozenset({0, 1})
    assert ctx.side_w == frozenset({2, 3})
    after = contract_bridge(ctx)
    assert certificate(after) == certificate(star(4))
    deltas = index_deltas(g, after)
    assert deltas[IndexKind.W] == -1
    assert deltas[IndexKind.WW] == -3
    assert deltas[IndexKind.H] == F(1, 6)
    assert deltas[IndexKind.CEI] == F(11, 6)
    assert deltas[IndexKind.EDS] == -19


def test_contract_bridge_on_two_triangles():
    g = two_triangles()
    from bindex.indices import wiener

    assert wiener(g) == 27
    after = contract_bridge(cut_edge_context(g, 2, 3))
    assert wiener(after) == 23
    assert after.n == g.n
    assert after.edge_count == g.edge_count


def test_cut_edge_context_rejects_bad_input():
    with pytest.raises(ValueError):
        cut_edge_context(cycle(4), 0, 1)  # not a cut edge
    with pytest.raises(ValueError):
        cut_edge_context(path(3), 0, 1)  # one side is a single vertex
    with pytest.raises(ValueError):
        cut_edge_context(new_graph(4, [(0, 1), (2, 3)]), 0, 1)  # disconnected


def test_contract_bridge_directions_on_seeded_contexts():
    rng = random.Random(2024)
    for _ in range(200):
        ctx = random_bridge_context(rng)
        after = contract_bridge(ctx)
        assert after.n == ctx.graph.n
        assert after.edge_count == ctx.graph.edge_count
        assert signs_hold(index_deltas(ctx.graph, after), CONTRACT_SIGNS)


def test_within_part_shift_minimal_example():
    core = DecoratedCore.make(2, 2, {0: 1, 1: 1})
    pred = shift_pendants_within_part(core, 0, 1)
    deltas = index_deltas(realize(core), realize(pred.shifted))
    assert deltas[IndexKind.W] == -2
    assert deltas[IndexKind.WW] == -7
    assert deltas[IndexKind.H] == F(1, 4)
    assert pred.check(deltas)


def test_within_part_shift_flat_cei_case():
    # a third decorated vertex in the same part pins every eccentricity
    core = DecoratedCore.make(3, 3, {0: 2, 1: 3, 2: 1})
    pred = shift_pendants_within_part(core, 0, 1)
    deltas = index_deltas(realize(core), realize(pred.shifted))
    assert deltas[IndexKind.CEI] == 0
    assert deltas[IndexKind.EDS] == -16 * 2 * 3
    assert pred.check(deltas)


def test_within_part_shift_grid():
    # every core shape and pendant load in the documented regime, both parts,
    # with and without a third decorated vertex
    for s in range(2, 5):
        for t in range(s, 5):
            for a in range(1, 4):
                for b in range(1, 4):
                    setups = [
                        ({0: a, 1: b}, 0, 1, t),
                        ({s: a, s + 1: b}, s, s + 1, s),
                    ]
                    if s >= 3:
                        setups.append(({0: a, 1: b, 2: 1}, 0, 1, None))
                    if t >= 3:
                        setups.append(({s: a, s + 1: b, s + 2: 2}, s, s + 1, None))
                    for pendants, donor, receiver, far_part in setups:
                        core = DecoratedCore.make(s, t, pendants)
                        pred = shift_pendants_within_part(core, donor, receiver)
                        before, after = realize(core), realize(pred.shifted)
                        assert after.n == before.n
                        assert after.edge_count == before.edge_count
                        deltas = index_deltas(before, after)
                        assert pred.check(deltas), (s, t, pendants)
                        assert deltas[IndexKind.W] == -2 * a * b
                        assert deltas[IndexKind.WW] == -7 * a * b
                        assert deltas[IndexKind.H] == F(a * b, 4)
                        assert deltas[IndexKind.EDS] < 0
                        if far_part is not None:
                            # receiver's eccentricity falls, lifting CEI by
                            # far_part/6 plus (a+b)/4
                            assert deltas[IndexKind.CEI] == F(far_part, 6) + F(a + b, 4)


def test_within_part_shift_rejects_bad_input():
    core = DecoratedCore.make(2, 2, {0: 1, 1: 1})
    with pytest.raises(ValueError):
        shift_pendants_within_part(core, 0, 0)  # donor equals receiver
    with pytest.raises(ValueError):
        shift_pendants_within_part(core, 0, 2)  # crosses parts
    with pytest.raises(ValueError):
        shift_pendants_within_part(DecoratedCore.make(2, 2, {0: 1}), 0, 1)
    with pytest.raises(ValueError):
        shift_pendants_within_part(DecoratedCore.make(1, 3, {1: 1, 2: 1}), 1, 2)


def test_across_part_shift_minimal_example():
    core = DecoratedCore.make(2, 3, {0: 1, 2: 1})
    pred = shift_pendants_across_parts(core)
    deltas = index_deltas(realize(core), realize(pred.shifted))
    assert deltas[IndexKind.CEI] == F(2 * (3 - 1), 6)
    assert deltas[IndexKind.W] == -1 + 1 * (2 - 3)
    assert pred.check(deltas)


def test_across_part_shift_grid():
    for s in range(2, 5):
        for t in range(s, 5):
            for a in range(1, 4):
                for b in range(1, 4):
                    core = DecoratedCore.make(s, t, {0: a, s: b})
                    pred = shift_pendants_across_parts(core)
                    before, after = realize(core), realize(pred.shifted)
                    assert after.n == before.n
                    assert after.edge_count == before.edge_count
                    deltas = index_deltas(before, after)
                    assert pred.check(deltas), (s, t, a, b)
                    assert deltas[IndexKind.W] == -a * b + b * (s - t)
                    assert deltas[IndexKind.CEI] == F(s * (t - 1), 6)
                    assert deltas[IndexKind.WW] < 0
                    assert deltas[IndexKind.EDS] < 0
                    assert deltas[IndexKind.H] > 0


def test_across_part_shift_rejects_bad_input():
    with pytest.raises(ValueError):
        shift_pendants_across_parts(DecoratedCore.make(1, 3, {0: 1, 1: 1}))
    with pytest.raises(ValueError):
        shift_pendants_across_parts(DecoratedCore.make(2, 3, {0: 1}))
    with pytest.raises(ValueError):
        shift_pendants_across_parts(DecoratedCore.make(2, 3, {0: 1, 2: 1, 3: 1}))


def test_probe_star_and_cycle_are_consistent():
    for g in (star(6), cycle(6)):
        report = monotonicity_probe(g)
        assert report.consistent
        assert all(p.consistent for p in report.probes)
    assert len(monotonicity_probe(star(6)).probes) == 10  # all leaf pairs


def test_probe_is_isomorphism_invariant():
    rng = random.Random(11)
    g = two_triangles()
    a = monotonicity_probe(g)
    b = monotonicity_probe(scrambled(rng, g))
    assert a.consistent == b.consistent
    assert len(a.probes) == len(b.probes)


def test_probe_sampling_is_deterministic():
    g = cycle(8)
    a = monotonicity_probe(g, samples=5, seed=3)
    b = monotonicity_probe(g, samples=5, seed=3)
    assert [(p.u, p.v) for p in a.probes] == [(p.u, p.v) for p in b.probes]
    assert len(a.probes) == 5


def test_probe_rejects_complete_and_disconnected():
    k4 = new_graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    with pytest.raises(ValueError):
        monotonicity_probe(k4)
    with pytest.raises(ValueError):
        monotonicity_probe(new_graph(4, [(0, 1), (2, 3)]))


def test_edge_addition_sign_table():
    assert EDGE_ADDITION_SIGNS[IndexKind.W] == DOWN
    assert EDGE_ADDITION_SIGNS[IndexKind.H] == UP
    assert EDGE_ADDITION_SIGNS[IndexKind.CEI] == UP
    assert set(EDGE_ADDITION_SIGNS) == set(IndexKind)
    g = path(5)
    deltas = index_deltas(g, new_graph(5, list(g.edges()) + [(0, 4)]))
    assert signs_hold(deltas, EDGE_ADDITION_SIGNS)
    assert not signs_hold(index_deltas(g, g), EDGE_ADDITION_SIGNS)


def test_all_indices_consistency_helper():
    g = path(4)
    vals = all_indices(g)
    assert set(vals) == set(IndexKind)
