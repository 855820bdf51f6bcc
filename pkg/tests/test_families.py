"""Constructed families: orders, sizes, labels, basic structural facts."""

from __future__ import annotations

import pytest

from pancyclic import (
    FAMILY_NAMES,
    FamilySpec,
    GraphError,
    a_graph,
    are_isomorphic,
    complete,
    cycle,
    diameter,
    empty,
    fan,
    g_ring,
    h_block,
    h_block_spine_edges,
    has_triangle_cover,
    is_k_connected,
    join,
    odd_extremal,
    part_from_token,
    path,
    q_graph,
    sequential_join,
    wheel,
)


def test_basic_families():
    assert (cycle(5).order, cycle(5).size) == (5, 5)
    assert (path(5).order, path(5).size) == (5, 4)
    assert (complete(6).order, complete(6).size) == (6, 15)
    assert (empty(4).order, empty(4).size) == (4, 0)
    with pytest.raises(GraphError):
        cycle(2)
    with pytest.raises(GraphError):
        path(0)


def test_wheel_structure():
    for n in range(4, 10):
        w = wheel(n)
        assert (w.order, w.size) == (n, 2 * n - 2)
        assert w.degree(0) == n - 1  # hub
        assert sorted(w.degrees())[:-1] == [3] * (n - 1)
    assert are_isomorphic(wheel(4), complete(4))
    with pytest.raises(GraphError):
        wheel(3)


def test_fan_structure():
    for n in range(3, 8):
        f = fan(n)
        assert (f.order, f.size) == (n, 2 * n - 3)
        assert f.degree(0) == n - 1


def test_join_against_wheel():
    assert are_isomorphic(join(complete(1), cycle(4)), wheel(5))
    g = join(path(2), empty(3))
    assert (g.order, g.size) == (5, 1 + 6)


def test_sequential_join_chains_consecutive_parts_only():
    g = sequential_join([complete(1), cycle(3), complete(1)])
    # 3 cycle edges + 3 + 3 join edges; the two K1 ends are non-adjacent
    assert (g.order, g.size) == (5, 9)
    assert not g.has_edge(0, 4)
    assert are_isomorphic(sequential_join([complete(1), cycle(4)]), wheel(5))


def test_part_from_token():
    assert are_isomorphic(part_from_token("K3"), complete(3))
    assert are_isomorphic(part_from_token("C5"), cycle(5))
    assert are_isomorphic(part_from_token("P4"), path(4))
    assert are_isomorphic(part_from_token("E2"), empty(2))
    for bad in ("X3", "K", "C2", "", "K100"):
        with pytest.raises(GraphError):
            part_from_token(bad)


def test_even_extremal_family():
    for n in (8, 10, 12):
        lab = a_graph(n)
        g = lab.graph
        assert (g.order, g.size) == (n, 3 * n // 2)
        assert has_triangle_cover(g).verdict is True
        assert is_k_connected(g, 2)
        q = n // 2
        for i in range(1, q + 1):
            u = lab.labels[f"u{i}"]
            assert g.degree(u) == 2
    with pytest.raises(GraphError):
        a_graph(9)
    with pytest.raises(GraphError):
        a_graph(6)


def test_odd_extremal_families():
    for n in (9, 11):
        graphs = {}
        for kind in "FGH":
            lab = odd_extremal(kind, n)
            g = lab.graph
            assert (g.order, g.size) == (n, (3 * n + 1) // 2)
            assert has_triangle_cover(g).verdict is True
            assert is_k_connected(g, 2)
            graphs[kind] = g
        assert not are_isomorphic(graphs["F"], graphs["G"])
        assert not are_isomorphic(graphs["F"], graphs["H"])
        assert not are_isomorphic(graphs["G"], graphs["H"])
    with pytest.raises(GraphError):
        odd_extremal("F", 8)
    with pytest.raises(GraphError):
        odd_extremal("X", 9)


def test_h_block_shape():
    for k in (3, 4, 5, 6):
        lab = h_block(k)
        g = lab.graph
        assert (g.order, g.size) == (6 * k - 4, 12 * k - 11)
        spine = h_block_spine_edges(lab)
        assert len(spine) == 6 * k - 5
        for u, v in spine:
            assert g.has_edge(u, v)
        for name in ("v", "u", "v1", "u1"):
            assert name in lab.labels
        assert g.has_edge(lab.labels["v"], lab.labels["u"])
    with pytest.raises(GraphError):
        h_block(2)


def test_ring_construction():
    lab = g_ring(3)
    g = lab.graph
    assert (g.order, g.size) == (39, 75)
    assert has_triangle_cover(g).verdict is True
    for k in (2, 4):
        with pytest.raises(GraphError):
            g_ring(k)


def test_diameter_family_order_and_diameter():
    for n in range(10, 26):
        g = q_graph(n)
        assert g.order == n
        assert diameter(g) == 2 * n // 5
    with pytest.raises(GraphError):
        q_graph(9)
    with pytest.raises(GraphError):
        q_graph(65)


def test_family_spec_dispatch():
    g, labels = FamilySpec("wheel", n=6).build()
    assert are_isomorphic(g, wheel(6)) and labels is None
    g, labels = FamilySpec("h-block", k=3).build()
    assert g.order == 14 and labels["v"] == 0
    g, labels = FamilySpec("odd-extremal", n=9, kind="G").build()
    assert g.size == 14
    g, _ = FamilySpec("seq-join", parts=("K1", "C4")).build()
    assert are_isomorphic(g, wheel(5))
    g, _ = FamilySpec("join", parts=("K1", "C4")).build()
    assert are_isomorphic(g, wheel(5))
    with pytest.raises(GraphError):
        FamilySpec("wheel").build()  # --n missing
    with pytest.raises(GraphError):
        FamilySpec("no-such-family", n=5).build()
    for name in FAMILY_NAMES:
        assert isinstance(name, str) and name
