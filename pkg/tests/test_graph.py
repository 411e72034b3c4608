import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from defcolor.exceptions import InvalidGraph, UnknownVertex
from defcolor.graph import Graph, delete_vertices, induced_subgraph


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, edges)


def test_induced_subgraph_of_k4_on_everything_is_k4():
    k4 = Graph.complete(4)
    sub, ids = induced_subgraph(k4, range(4))
    assert sub == k4
    assert ids == (0, 1, 2, 3)


def test_three_vertices_of_k4_induce_a_triangle():
    sub, ids = induced_subgraph(Graph.complete(4), {0, 2, 3})
    assert sub == Graph.complete(3)
    assert ids == (0, 2, 3)


def test_c5_on_0_1_3_is_one_edge_and_an_isolated_vertex():
    sub, ids = induced_subgraph(Graph.cycle(5), {0, 1, 3})
    assert ids == (0, 1, 3)
    assert sub.edges() == [(0, 1)]
    assert sub.degree(2) == 0


def test_k7_minus_a_vertex_is_k6():
    g = delete_vertices(Graph.complete(7), {3})
    assert g == Graph.complete(6)
    assert set(g.degrees()) == {5}


def test_path_minus_middle_leaves_two_isolated_vertices():
    g = delete_vertices(Graph.path(3), {1})
    assert g.n == 2 and g.m == 0


def test_c5_minus_0_is_a_path():
    assert delete_vertices(Graph.cycle(5), {0}) == Graph.path(4)


def test_unknown_vertex_is_rejected():
    with pytest.raises(UnknownVertex):
        induced_subgraph(Graph.complete(3), {5})
    with pytest.raises(UnknownVertex):
        delete_vertices(Graph.complete(3), {-1})
    with pytest.raises(UnknownVertex):
        Graph.complete(3).neighbours(3)


@pytest.mark.parametrize("adjacency", [
    [[0]],              # loop
    [[1], []],          # asymmetric
    [[2]],              # out of range
])
def test_invalid_adjacency(adjacency):
    with pytest.raises(InvalidGraph):
        Graph(adjacency)


def test_graphs_are_hashable_values():
    assert len({Graph.cycle(4), Graph.from_edges(4, [(3, 0), (0, 1), (1, 2), (2, 3)])}) == 1


def test_components_and_connectivity():
    g = Graph.from_edges(5, [(0, 1), (3, 4)])
    assert sorted(map(sorted, g.components())) == [[0, 1], [2], [3, 4]]
    assert not g.is_connected()
    assert Graph.cycle(5).is_connected()


@given(graphs(), st.data())
def test_deletion_removes_exactly_the_set(g, data):
    s = data.draw(st.sets(st.sampled_from(range(g.n)))) if g.n else set()
    h = delete_vertices(g, s)
    sub, ids = induced_subgraph(g, set(g.vertices()) - s)
    assert h == sub
    assert h.n == g.n - len(s)
    assert all(g.has_edge(ids[u], ids[v]) for u, v in h.edges())


@given(graphs())
def test_degree_sum_is_twice_the_edge_count(g):
    assert sum(g.degrees()) == 2 * g.m
    assert sum(g.degrees()) % 2 == 0


@settings(max_examples=60)
@given(graphs(), st.randoms(use_true_random=False))
def test_induced_subgraphs_compose(g, rnd):
    s = {v for v in g.vertices() if rnd.random() < 0.7}
    gs, ids_s = induced_subgraph(g, s)
    t_local = {i for i in gs.vertices() if rnd.random() < 0.7}
    via_s, ids_via = induced_subgraph(gs, t_local)
    direct, ids_direct = induced_subgraph(g, {ids_s[i] for i in t_local})
    assert via_s == direct
    assert tuple(ids_s[i] for i in ids_via) == ids_direct


def test_random_subgraph_edges_match_enumeration():
    rng = random.Random(4)
    for _ in range(50):
        n = rng.randrange(1, 15)
        edges = {(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.3}
        g = Graph.from_edges(n, edges)
        s = sorted(v for v in range(n) if rng.random() < 0.5)
        sub, ids = induced_subgraph(g, s)
        expected = {(ids.index(u), ids.index(v)) for u, v in edges if u in s and v in s}
        assert set(sub.edges()) == expected
