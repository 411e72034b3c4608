import random
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from defcolor.colouring import ListAssignment, verify
from defcolor.exceptions import InstanceTooLarge
from defcolor.graph import Graph
from defcolor.oracle import (
    _all_assignments,
    _canonical_assignments,
    choosable,
    list_colourable,
    list_colourable_search,
)

from helpers import brute_defect_colouring, random_graph

AB = [1, 2]


def test_k5_two_colours_defect_one_is_unsat():
    assert list_colourable(Graph.complete(5), ListAssignment.uniform(5, AB), 1) is None


def test_k4_two_colours_defect_one_is_sat():
    g = Graph.complete(4)
    lists = ListAssignment.uniform(4, AB)
    colouring = list_colourable(g, lists, 1)
    assert verify(g, lists, colouring).defect == 1


def test_k3_two_colours_defect_one_is_sat():
    g = Graph.complete(3)
    colouring = list_colourable(g, ListAssignment.uniform(3, AB), 1)
    assert sorted(colouring.values()) in ([1, 1, 2], [1, 2, 2])


def test_budget_guard(monkeypatch):
    with pytest.raises(InstanceTooLarge):
        list_colourable(Graph.complete(7), ListAssignment.uniform(7, AB), 1, budget=1)
    monkeypatch.setenv("DEFCOLOR_BUDGET", "1")
    with pytest.raises(InstanceTooLarge):
        list_colourable(Graph.complete(7), ListAssignment.uniform(7, AB), 1)


def test_empty_list_is_rejected():
    with pytest.raises(ValueError):
        list_colourable(Graph.path(2), [[1], []], 1)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 8), st.floats(0, 0.9), st.integers(0, 2), st.integers(0, 10**6))
def test_agrees_with_exhaustive_product(n, p, d, seed):
    rng = random.Random(seed)
    g = random_graph(rng, n, p)
    lists = ListAssignment(rng.sample(range(1, 5), rng.randrange(1, 3)) for _ in range(n))
    found = list_colourable(g, lists, d)
    expected = brute_defect_colouring(g.adjacency(), lists, d)
    assert (found is None) == (expected is None)
    if found is not None:
        assert verify(g, lists, found).defect <= d


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 8), st.floats(0, 0.9), st.integers(0, 10**6))
def test_monotone_in_defect(n, p, seed):
    rng = random.Random(seed)
    g = random_graph(rng, n, p)
    lists = ListAssignment(rng.sample(range(1, 4), 2) for _ in range(n))
    for d in range(3):
        if list_colourable(g, lists, d) is not None:
            assert list_colourable(g, lists, d + 1) is not None


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 8), st.floats(0, 0.9), st.integers(0, 10**6))
def test_defect_one_witness_has_clustering_two(n, p, seed):
    rng = random.Random(seed)
    g = random_graph(rng, n, p)
    lists = ListAssignment(rng.sample(range(1, 4), 2) for _ in range(n))
    found = list_colourable(g, lists, 1)
    if found is not None:
        assert verify(g, lists, found).clustering <= 2


def test_parallel_search_matches_serial():
    g = Graph.complete(5)
    for lists, sat in ((ListAssignment.uniform(5, AB), False),
                       (ListAssignment.uniform(5, [1, 2, 3]), True)):
        res = list_colourable_search(g, lists, 1, jobs=2)
        assert res.satisfiable == sat
        if sat:
            assert verify(g, lists, res.colouring).defect <= 1


# -- choosability ----------------------------------------------------------

def test_k2_is_one_choosable_with_defect_one():
    verdict = choosable(Graph.complete(2), 1, 1)
    assert verdict.choosable and verdict.counterexample is None


def test_k4_is_not_one_choosable_with_defect_one():
    verdict = choosable(Graph.complete(4), 1, 1)
    assert not verdict.choosable
    bad = list(verdict.counterexample)
    assert all(lst == bad[0] for lst in bad)


def test_c4_is_two_choosable():
    verdict = choosable(Graph.cycle(4), 2, 0, palette=8)
    assert verdict.choosable


def test_c4_canonical_and_full_enumeration_agree():
    g = Graph.cycle(4)
    full = choosable(g, 2, 0, palette=5, canonical=False)
    canon = choosable(g, 2, 0, palette=5)
    assert full.choosable == canon.choosable
    assert canon.assignments_checked < full.assignments_checked


def test_k3_with_two_lists_and_no_defect_is_not_choosable():
    verdict = choosable(Graph.complete(3), 2, 0)
    assert not verdict.choosable
    g = Graph.complete(3)
    assert list_colourable(g, verdict.counterexample, 0) is None


def test_parallel_choosability_matches_serial():
    g = Graph.cycle(5)
    serial = choosable(g, 2, 0, palette=4)
    parallel = choosable(g, 2, 0, palette=4, jobs=2, chunk_size=16)
    assert serial.choosable == parallel.choosable


def test_palette_smaller_than_k():
    with pytest.raises(ValueError):
        choosable(Graph.complete(2), 3, 0, palette=2)


def _relabellings(assignment, colours):
    used = sorted({c for lst in assignment for c in lst})
    for image in permutations(colours, len(used)):
        mapping = dict(zip(used, image))
        yield tuple(tuple(sorted(mapping[c] for c in lst)) for lst in assignment)


@pytest.mark.parametrize("n, k, p", [(2, 1, 3), (3, 2, 4), (2, 2, 4), (3, 1, 3)])
def test_canonical_enumeration_covers_every_relabelling(n, k, p):
    canon = {tuple(tuple(sorted(lst)) for lst in a) for a in _canonical_assignments(n, k, p)}
    for assignment in _all_assignments(n, k, p):
        assert any(r in canon for r in _relabellings(assignment, range(1, p + 1)))
