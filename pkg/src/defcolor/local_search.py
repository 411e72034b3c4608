"""Recolouring local search giving each vertex at most floor(deg(v)/k) same-coloured neighbours.

Start from the colouring that gives every vertex its smallest list colour.
While some vertex has too many same-coloured neighbours, recolour it with
the list colour shared by the fewest neighbours.  Among ``k`` list colours
one is shared by at most ``floor(deg/k)`` neighbours, so every move strictly
lowers the number of monochromatic edges and the search stops within ``m``
moves.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .colouring import Colouring, check_lists
from .graph import Graph


@dataclass
class LocalSearchResult:
    colouring: Colouring
    iterations: int
    # monochromatic edge count before the first move and after each move
    history: list[int] = field(default_factory=list)


def lovasz_search(g: Graph, lists, k: int) -> LocalSearchResult:
    if k < 1:
        raise ValueError("k must be positive")
    lists = check_lists(g, lists)
    lists.require(k)

    colour = {v: min(lists[v]) for v in g.vertices()}
    same = {v: sum(1 for w in g.neighbours(v) if colour[w] == colour[v]) for v in g.vertices()}
    bound = {v: g.degree(v) // k for v in g.vertices()}
    mono = sum(same.values()) // 2
    history = [mono]

    heap = [v for v in g.vertices() if same[v] > bound[v]]
    heapq.heapify(heap)
    iterations = 0
    while heap:
        v = heapq.heappop(heap)
        if same[v] <= bound[v]:
            continue
        counts = {c: 0 for c in lists[v]}
        for w in g.neighbours(v):
            if colour[w] in counts:
                counts[colour[w]] += 1
        best = min(sorted(counts), key=counts.__getitem__)
        old = colour[v]
        assert counts[best] <= bound[v] < same[v]
        for w in g.neighbours(v):
            if colour[w] == old:
                same[w] -= 1
            elif colour[w] == best:
                same[w] += 1
                if same[w] > bound[w]:
                    heapq.heappush(heap, w)
        colour[v] = best
        new_mono = mono - same[v] + counts[best]
        assert new_mono < mono, "monochromatic edge count failed to decrease"
        same[v] = counts[best]
        mono = new_mono
        history.append(mono)
        iterations += 1
        assert iterations <= g.m
    return LocalSearchResult(colour, iterations, history)


def lovasz_colour(g: Graph, lists, k: int) -> Colouring:
    """List colouring where each vertex has at most ``deg(v) // k`` same-coloured neighbours."""
    return lovasz_search(g, lists, k).colouring
