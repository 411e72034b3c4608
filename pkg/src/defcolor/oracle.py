"""Brute-force ground truth for defective list colouring and choosability."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator

from .colouring import Colouring, ListAssignment, check_lists
from .exceptions import InstanceTooLarge
from .graph import Graph

DEFAULT_BUDGET = 10 ** 8


def default_budget() -> int:
    value = os.environ.get("DEFCOLOR_BUDGET")
    return int(value) if value else DEFAULT_BUDGET


@dataclass
class SearchResult:
    colouring: Colouring | None
    nodes: int

    @property
    def satisfiable(self) -> bool:
        return self.colouring is not None


def search_order(g: Graph) -> list[int]:
    """Descending degree, ties by vertex id."""
    return sorted(g.vertices(), key=lambda v: (-g.degree(v), v))


class _Backtracker:
    def __init__(self, g: Graph, lists: ListAssignment, d: int, budget: int):
        self.g = g
        self.lists = lists
        self.d = d
        self.budget = budget
        self.nodes = 0
        self.order = search_order(g)
        self.colour: dict[int, int] = {}
        self.same = [0] * g.n

    def run(self, depth: int = 0) -> bool:
        if depth == len(self.order):
            return True
        v = self.order[depth]
        nbrs = self.g.neighbours(v)
        for c in sorted(self.lists[v]):
            self.nodes += 1
            if self.nodes > self.budget:
                raise InstanceTooLarge(f"backtracking exceeded {self.budget} nodes")
            clash = [w for w in nbrs if self.colour.get(w) == c]
            if len(clash) > self.d or any(self.same[w] >= self.d for w in clash):
                continue
            self.colour[v] = c
            self.same[v] = len(clash)
            for w in clash:
                self.same[w] += 1
            if self.run(depth + 1):
                return True
            for w in clash:
                self.same[w] -= 1
            self.same[v] = 0
            del self.colour[v]
        return False


def _search_branch(args) -> SearchResult:
    g, lists, d, budget = args
    bt = _Backtracker(g, lists, d, budget)
    found = bt.run()
    return SearchResult(dict(sorted(bt.colour.items())) if found else None, bt.nodes)


def list_colourable_search(g: Graph, lists, d: int, budget: int | None = None,
                           jobs: int = 1) -> SearchResult:
    """Exhaustive backtracking; ``jobs > 1`` splits on the colour of the first vertex searched."""
    lists = check_lists(g, lists)
    if any(not lst for lst in lists):
        raise ValueError("every list must be nonempty")
    budget = default_budget() if budget is None else budget
    if jobs <= 1 or g.n == 0:
        return _search_branch((g, lists, d, budget))
    first = search_order(g)[0]
    branches = []
    for c in sorted(lists[first]):
        sub = list(lists)
        sub[first] = [c]
        branches.append((g, ListAssignment(sub), d, budget))
    nodes = 0
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for res in pool.map(_search_branch, branches):
            nodes += res.nodes
            if res.satisfiable:
                return SearchResult(res.colouring, nodes)
    return SearchResult(None, nodes)


def list_colourable(g: Graph, lists, d: int, budget: int | None = None) -> Colouring | None:
    """A colouring from ``lists`` with defect at most ``d``, or ``None`` if none exists."""
    return list_colourable_search(g, lists, d, budget).colouring


# -- choosability ----------------------------------------------------------

def _canonical_assignments(n: int, k: int, p: int) -> Iterator[tuple]:
    """k-subsets of 1..p per vertex, with fresh colours introduced in increasing order.

    Every assignment is a relabelling of one produced here.
    """
    def rec(i, used, acc):
        if i == n:
            yield tuple(acc)
            return
        for fresh in range(0, min(k, p - used) + 1):
            for old in combinations(range(1, used + 1), k - fresh):
                lst = old + tuple(range(used + 1, used + fresh + 1))
                acc.append(lst)
                yield from rec(i + 1, used + fresh, acc)
                acc.pop()

    yield from rec(0, 0, [])


def _all_assignments(n: int, k: int, p: int) -> Iterator[tuple]:
    return product(combinations(range(1, p + 1), k), repeat=n)


@dataclass
class ChoosabilityVerdict:
    choosable: bool
    counterexample: ListAssignment | None
    assignments_checked: int
    nodes: int


def _check_chunk(args):
    g, d, chunk, budget = args
    nodes = 0
    for assignment in chunk:
        res = list_colourable_search(g, assignment, d, budget - nodes)
        nodes += res.nodes
        if not res.satisfiable:
            return assignment, nodes, len(chunk)
    return None, nodes, len(chunk)


def choosable(g: Graph, k: int, d: int, palette: int | None = None, *,
              canonical: bool = True, budget: int | None = None,
              jobs: int = 1, chunk_size: int = 256) -> ChoosabilityVerdict:
    """Decide (k, d)-choosability by enumerating every k-list assignment over ``palette`` colours.

    The default palette ``k * n`` is complete.  ``canonical`` skips
    assignments that differ only by renaming colours; pass ``False`` to
    enumerate everything.
    """
    p = k * g.n if palette is None else palette
    if p < k:
        raise ValueError("palette must have at least k colours")
    budget = default_budget() if budget is None else budget
    source = _canonical_assignments(g.n, k, p) if canonical else _all_assignments(g.n, k, p)
    checked = nodes = 0

    def chunks():
        chunk = []
        for a in source:
            chunk.append(a)
            if len(chunk) == chunk_size:
                yield chunk
                chunk = []
        if chunk:
            yield chunk

    def verdict(bad):
        if bad is None:
            return ChoosabilityVerdict(True, None, checked, nodes)
        return ChoosabilityVerdict(False, ListAssignment(bad), checked, nodes)

    if jobs <= 1:
        for chunk in chunks():
            bad, used, count = _check_chunk((g, d, chunk, budget - nodes))
            nodes += used
            if bad is not None:
                checked += chunk.index(bad) + 1
                return verdict(bad)
            checked += count
        return verdict(None)

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # chunks are consumed in order so the first counterexample is deterministic
        for bad, used, count in pool.map(_check_chunk, ((g, d, c, budget) for c in chunks())):
            nodes += used
            if nodes > budget:
                raise InstanceTooLarge(f"choosability search exceeded {budget} nodes")
            if bad is not None:
                checked += count
                return verdict(bad)
            checked += count
    return verdict(None)
