"""Canonical labeling: invariance, agreement with brute force, class counts."""

from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given, settings

from pancyclic import (
    are_isomorphic,
    build_graph,
    canonical_code,
    canonical_graph,
    canonical_labeling,
    emit_graph6,
)
from conftest import random_graph
from oracles import (
    burnside_class_count,
    iter_labeled_graphs,
    normalized,
    perm_isomorphic,
)
from test_graphs import graphs, petersen


def shuffled(rng: random.Random, g):
    perm = list(range(g.order))
    rng.shuffle(perm)
    return g.relabel(tuple(perm))


def test_code_invariant_under_relabeling():
    rng = random.Random(1)
    for _ in range(300):
        n = rng.randint(0, 11)
        g = random_graph(rng, n, rng.random())
        code = canonical_code(g)
        for _ in range(10):
            assert canonical_code(shuffled(rng, g)) == code


def test_canonical_graph_is_isomorphic_relabeling():
    rng = random.Random(2)
    for _ in range(100):
        n = rng.randint(1, 7)
        g = random_graph(rng, n, 0.5)
        cg = canonical_graph(g)
        assert cg.order == g.order and cg.size == g.size
        assert sorted(cg.degrees()) == sorted(g.degrees())
        assert perm_isomorphic(n, g.edges(), cg.edges())


def test_canonical_labeling_realizes_canonical_graph():
    rng = random.Random(3)
    for _ in range(100):
        n = rng.randint(1, 9)
        g = random_graph(rng, n, 0.4)
        lab = canonical_labeling(g)
        assert sorted(lab) == list(range(n))
        assert g.relabel(tuple(lab)) == canonical_graph(g)


def test_are_isomorphic_against_brute_force():
    rng = random.Random(4)
    hits = misses = 0
    while hits < 40 or misses < 40:
        n = rng.randint(2, 6)
        a = random_graph(rng, n, 0.5)
        b = shuffled(rng, a) if rng.random() < 0.5 else random_graph(rng, n, 0.5)
        want = perm_isomorphic(n, a.edges(), b.edges())
        assert are_isomorphic(a, b) == want
        hits += want
        misses += not want


def test_are_isomorphic_against_networkx():
    rng = random.Random(5)
    for _ in range(60):
        n = rng.randint(2, 9)
        a, b = random_graph(rng, n, 0.5), random_graph(rng, n, 0.5)
        ha, hb = nx.Graph(), nx.Graph()
        ha.add_nodes_from(range(n))
        hb.add_nodes_from(range(n))
        ha.add_edges_from(a.edges())
        hb.add_edges_from(b.edges())
        assert are_isomorphic(a, b) == nx.is_isomorphic(ha, hb)


def test_naive_dedup_matches_burnside_small():
    # Group every labeled graph by canonical code; class counts must match
    # the cycle-index formula, which involves no canonical labeling at all.
    for n, expected in ((1, 1), (2, 2), (3, 4), (4, 11), (5, 34)):
        classes: dict[bytes, tuple] = {}
        for order, edges in iter_labeled_graphs(n):
            g = build_graph(order, edges)
            classes.setdefault(canonical_code(g).bits, (order, edges))
        assert len(classes) == expected
        assert burnside_class_count(n) == expected


def test_distinct_codes_are_non_isomorphic():
    rng = random.Random(6)
    reps = {}
    for order, edges in iter_labeled_graphs(4):
        g = build_graph(order, edges)
        reps.setdefault(canonical_code(g).bits, g)
    graphs_ = list(reps.values())
    for i in range(len(graphs_)):
        for j in range(i + 1, len(graphs_)):
            assert not perm_isomorphic(4, graphs_[i].edges(), graphs_[j].edges())


def test_code_regression_vectors():
    # Frozen values: exchanged codes must stay stable across releases.
    k4 = build_graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    c5 = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    assert canonical_code(k4).hex() == "3f"
    assert emit_graph6(canonical_graph(k4)) == "C~"
    assert canonical_code(c5).hex() == "0323"
    assert emit_graph6(canonical_graph(c5)) == "DqK"
    assert canonical_code(petersen()).hex() == "1a220a24322c"
    assert emit_graph6(canonical_graph(petersen())) == "IsP@PGXD_"


def test_code_orders_differ():
    g1 = build_graph(2, [])
    g2 = build_graph(3, [])
    assert canonical_code(g1) != canonical_code(g2)
    assert not are_isomorphic(g1, g2)


def test_symmetric_worst_cases_complete_quickly():
    # Highly symmetric graphs exercise the orbit pruning.
    n = 12
    e12 = build_graph(n, [])
    k12 = build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
    k66 = build_graph(12, [(u, v) for u in range(6) for v in range(6, 12)])
    assert canonical_code(e12).order == 12
    assert canonical_code(k12).order == 12
    assert canonical_code(k66) == canonical_code(
        k66.relabel(tuple(reversed(range(12))))
    )


@settings(max_examples=150, deadline=None)
@given(graphs(max_order=10))
def test_code_equality_iff_isomorphic_property(g):
    # A relabeling never changes the code; adding one edge always does.
    rng = random.Random(g.size)
    assert canonical_code(shuffled(rng, g)) == canonical_code(g)
    missing = [
        (u, v)
        for u in range(g.order)
        for v in range(u + 1, g.order)
        if not g.has_edge(u, v)
    ]
    if missing:
        h = g.with_edge(*missing[0])
        assert canonical_code(h) != canonical_code(g)
