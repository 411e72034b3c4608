import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from defcolor.colouring import ListAssignment, verify
from defcolor.exceptions import ListTooShort
from defcolor.graph import Graph
from defcolor.local_search import lovasz_colour, lovasz_search

from helpers import brute_defect_colouring, random_graph


def per_vertex_ok(g, colouring, k):
    return all(sum(colouring[w] == colouring[v] for w in g.neighbours(v)) <= g.degree(v) // k
               for v in g.vertices())


def test_enough_colours_gives_a_proper_colouring():
    g = Graph.complete(5)
    lists = ListAssignment.uniform(5, range(6))
    assert verify(g, lists, lovasz_colour(g, lists, 6)).defect == 0


def test_k4_two_lists_splits_two_and_two():
    g = Graph.complete(4)
    lists = ListAssignment.uniform(4, [1, 2])
    colouring = lovasz_colour(g, lists, 2)
    assert verify(g, lists, colouring).defect == 1
    assert sorted(colouring.values()) == [1, 1, 2, 2]
    # defect 0 is impossible, so the search reached the optimum
    assert brute_defect_colouring(g.adjacency(), lists, 0) is None


def test_c5_two_lists_has_defect_one():
    g = Graph.cycle(5)
    lists = ListAssignment.uniform(5, [1, 2])
    assert verify(g, lists, lovasz_colour(g, lists, 2)).defect <= 1
    assert brute_defect_colouring(g.adjacency(), lists, 1) is not None


def test_short_list_is_rejected():
    with pytest.raises(ListTooShort):
        lovasz_colour(Graph.path(2), [[1, 2], [1]], 2)


def test_runs_are_deterministic():
    g = random_graph(random.Random(3), 40, 0.3)
    lists = ListAssignment.uniform(40, [1, 2, 3])
    first = lovasz_search(g, lists, 3)
    assert first == lovasz_search(g, lists, 3)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 40), st.floats(0, 0.9), st.sampled_from([1, 2, 3, 5]), st.integers(0, 10**6))
def test_per_vertex_bound_and_descent(n, p, k, seed):
    rng = random.Random(seed)
    g = random_graph(rng, n, p)
    lists = ListAssignment(rng.sample(range(1, 2 * k + 2), k) for _ in range(n))
    result = lovasz_search(g, lists, k)
    assert per_vertex_ok(g, result.colouring, k)
    assert all(result.colouring[v] in lists[v] for v in g.vertices())
    assert all(b < a for a, b in zip(result.history, result.history[1:]))
    assert result.iterations == len(result.history) - 1 <= g.m
    if g.max_degree() < 2 * k:
        assert verify(g, lists, result.colouring).defect <= 1
