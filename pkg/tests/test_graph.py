from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cospectral_pm.family import build_family, build_H_tilde
from cospectral_pm.graph import (
    Graph,
    add_edge,
    complement,
    complete_graph,
    components,
    cycle_graph,
    degree_sequence,
    delete_vertices,
    disjoint_union,
    empty_graph,
    from_graph6,
    is_connected,
    is_regular,
    odd_component_count,
    path_graph,
    remove_edge,
    star_graph,
    to_dot,
    to_graph6,
)


@st.composite
def graphs(draw, max_n: int = 12):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


def test_empty_graph():
    assert empty_graph(0).n == 0
    g = empty_graph(3)
    assert g.n == 3 and g.num_edges() == 0 and degree_sequence(g) == [0, 0, 0]
    assert complement(empty_graph(5)) == complete_graph(5)


def test_add_edge():
    p2 = add_edge(empty_graph(2), 0, 1)
    assert p2.edges() == [(0, 1)]
    assert add_edge(p2, 0, 1) == p2
    assert add_edge(p2, 1, 0).num_edges() == 1
    with pytest.raises(ValueError):
        add_edge(empty_graph(2), 0, 0)
    with pytest.raises(ValueError):
        add_edge(empty_graph(2), 0, 2)


def test_constructor_rejects_bad_adjacency():
    with pytest.raises(ValueError):
        Graph([{1}, set()])
    with pytest.raises(ValueError):
        Graph([{0}])
    with pytest.raises(ValueError):
        Graph.from_edges(-1, [])


def test_complement():
    assert complement(complete_graph(4)) == empty_graph(4)
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randint(0, 9)
        g = Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4])
        assert complement(complement(g)) == g


def test_complement_builds_H5():
    # two disjoint edges plus a 3-vertex path, then complement
    base = disjoint_union(Graph.from_edges(4, [(0, 1), (2, 3)]), path_graph(3))
    h5 = complement(base)
    assert h5.n == 7
    assert degree_sequence(h5) == [5, 5, 5, 5, 5, 5, 4]


def test_disjoint_union():
    g = disjoint_union(complete_graph(3), cycle_graph(5))
    assert g.n == 8 and g.num_edges() == 8 and len(components(g)) == 2
    c = cycle_graph(6)
    assert disjoint_union(c, empty_graph(0)) == c
    fixture = disjoint_union(cycle_graph(4), path_graph(4))
    assert fixture.n == 8 and fixture.num_edges() == 7


def test_standard_graphs():
    assert cycle_graph(3) == complete_graph(3)
    assert path_graph(1).n == 1 and path_graph(1).num_edges() == 0
    assert path_graph(0).n == 0
    assert degree_sequence(remove_edge(complete_graph(6), 4, 5)) == [5, 5, 5, 5, 4, 4]
    with pytest.raises(ValueError):
        cycle_graph(2)


def test_delete_vertices():
    rest, index = delete_vertices(star_graph(4), [0])
    assert rest == empty_graph(4)
    assert index == {1: 0, 2: 1, 3: 2, 4: 3}
    g = cycle_graph(7)
    same, index = delete_vertices(g, [])
    assert same == g and index == {v: v for v in range(7)}


def test_delete_W_from_family_b5():
    layout = build_family(5)
    rest, _ = delete_vertices(layout.graph, layout.w)
    orders = sorted(len(c) for c in components(rest))
    assert orders == [3, 7, 7, 7, 15]
    assert odd_component_count(rest) == 5


def test_components_and_connectivity():
    g = disjoint_union(complete_graph(3), cycle_graph(5))
    assert odd_component_count(g) == 2
    assert is_connected(cycle_graph(9))
    assert is_connected(empty_graph(0)) and is_connected(empty_graph(1))
    assert not is_connected(empty_graph(2))


def test_degrees_and_regularity():
    assert is_regular(cycle_graph(5), 2)
    assert is_regular(build_family(5).graph, 5)
    g, u, v = build_H_tilde(5)
    assert g.n == 8
    assert g.degree(v) == 1
    assert sorted(g.degree(x) for x in range(8) if x != v) == [5] * 7


def test_graph6_known_strings():
    assert to_graph6(complete_graph(4)) == "C~"
    assert to_graph6(complete_graph(3)) == "Bw"
    assert to_graph6(empty_graph(0)) == "?"
    assert from_graph6("C~") == complete_graph(4)
    assert from_graph6(">>graph6<<Bw\n") == complete_graph(3)


def test_graph6_long_size_field():
    g = cycle_graph(63)
    s = to_graph6(g)
    assert s.startswith("~??~")
    assert from_graph6(s) == g


@pytest.mark.parametrize("bad", ["", "C", "C~~", "B\x7f"])
def test_graph6_rejects_malformed(bad):
    with pytest.raises(ValueError):
        from_graph6(bad)


def test_graph6_round_trip_up_to_500():
    rng = random.Random(11)
    sizes = [0, 1, 2, 61, 62, 63, 64, 127, 200, 500]
    for n in sizes + [rng.randint(0, 500) for _ in range(10)]:
        p = min(1.0, 4.0 / max(n, 1))
        g = Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])
        assert from_graph6(to_graph6(g)) == g


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=20))
def test_graph6_round_trip_property(g):
    assert from_graph6(to_graph6(g)) == g


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_structural_invariants(g):
    assert sum(g.degree(v) for v in range(g.n)) == 2 * g.num_edges()
    assert complement(complement(g)) == g
    comps = components(g)
    assert sorted(v for c in comps for v in c) == list(range(g.n))
    assert delete_vertices(g, [])[0] == g


@settings(max_examples=50, deadline=None)
@given(graphs(max_n=6), graphs(max_n=6), graphs(max_n=6))
def test_disjoint_union_associative(a, b, c):
    assert disjoint_union(disjoint_union(a, b), c) == disjoint_union(a, disjoint_union(b, c))


def test_dot_export():
    text = to_dot(cycle_graph(3))
    assert text.startswith("graph G {")
    assert text.count("--") == 3
    layout = build_family(5)
    dot = to_dot(layout.graph, layout.vertex_labels())
    assert dot.count("--") == layout.graph.num_edges()
    assert 'label="triangle[0]"' in dot
    assert 'label="gadget_0.v"' in dot
