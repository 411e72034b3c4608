"""Independent reference implementations and constructed instances shared by the tests.

Nothing here imports the search or tracing code under test; the brute-force
colourer and the orientable face tracer are written from the definitions.
"""

from __future__ import annotations

import random
from itertools import product

from defcolor.colouring import ListAssignment
from defcolor.graph import Graph
from defcolor.reducer import BigContext


# torus triangulation (genus 2) whose first configuration at t = 4 is the
# alternating neighbourhood around vertex 8
BIG_EVEN_TORUS = [
    [6, 1, 12, 3, 11], [13, 2, 11, 7, 15, 4, 5, 12, 0, 6], [4, 15, 11, 1, 13],
    [7, 11, 0, 12, 14, 15], [5, 1, 15, 2, 13, 6, 11, 9, 10], [4, 10, 8, 12, 1],
    [13, 1, 0, 11, 4], [3, 15, 1, 11], [12, 5, 10, 14], [15, 10, 4, 11],
    [4, 9, 15, 14, 8, 5], [0, 3, 7, 1, 2, 15, 9, 4, 6], [5, 8, 14, 3, 0, 1],
    [1, 6, 4, 2], [15, 3, 12, 8, 10], [3, 14, 10, 9, 11, 2, 4, 1, 7],
]


def brute_defect_colouring(adjacency, lists, d):
    """First colouring (in product order) with at most ``d`` same-coloured neighbours per vertex."""
    n = len(adjacency)
    for colours in product(*[sorted(lst) for lst in lists]):
        if all(sum(colours[w] == colours[v] for w in adjacency[v]) <= d for v in range(n)):
            return dict(enumerate(colours))
    return None


def orientable_face_count(rotation):
    """Faces of an all-positive rotation system: dart (u, v) is followed by (v, succ_v(u))."""
    darts = {(u, v) for u, row in enumerate(rotation) for v in row}
    faces = 0
    while darts:
        start = dart = next(iter(darts))
        faces += 1
        while True:
            darts.discard(dart)
            u, v = dart
            row = rotation[v]
            dart = (v, row[(row.index(u) + 1) % len(row)])
            if dart == start:
                break
    return faces


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def components_by_bfs(n, edges):
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen, comps = set(), []
    for s in range(n):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x] - seen:
                seen.add(y)
                stack.append(y)
        comps.append(comp)
    return comps


# -- constructed extension instances ----------------------------------------

class Gadget:
    """A graph, lists, a partial colouring of everything outside ``removed``, and the removed vertices."""

    def __init__(self, g, lists, partial, removed, **extra):
        self.g = g
        self.lists = ListAssignment(lists)
        self.partial = partial
        self.removed = tuple(removed)
        self.__dict__.update(extra)


def _pendants(edges, colours, lists, partial, anchor, palette_lists):
    """Hang one new vertex per entry of ``colours`` off ``anchor``, precoloured with that colour."""
    for c in colours:
        x = len(lists)
        edges.append((anchor, x))
        lists.append(palette_lists(c))
        partial[x] = c


def _single(c):
    return [c]


def adjacent_pair_equal_colours(t: int = 5) -> Gadget:
    """Adjacent degree-t pair whose only free colours coincide."""
    v, w = 0, 1
    edges = [(v, w)]
    lists = [list(range(1, t + 1)), list(range(t, 2 * t))]
    partial = {}
    _pendants(edges, range(1, t), lists, partial, v, _single)
    _pendants(edges, range(t + 1, 2 * t), lists, partial, w, _single)
    return Gadget(Graph.from_edges(len(lists), edges), lists, partial, (v, w), v=v, w=w, t=t,
                  shared=t)


def adjacent_pair_distinct(t: int = 5) -> Gadget:
    v, w = 0, 1
    edges = [(v, w)]
    lists = [list(range(1, t + 1)), list(range(1, t + 1))]
    partial = {}
    _pendants(edges, range(1, t), lists, partial, v, _single)
    _pendants(edges, range(2, t + 1), lists, partial, w, _single)
    return Gadget(Graph.from_edges(len(lists), edges), lists, partial, (v, w), v=v, w=w, t=t)


def triangle(t: int = 5, exhausted: bool = True) -> Gadget:
    """Triangle v, w, u of degrees t, t+1, t+1.

    With ``exhausted`` the t - 2 other neighbours of v plus the colours
    forced on w and u cover all of L(v).
    """
    v, w, u = 0, 1, 2
    edges = [(v, w), (v, u), (w, u)]
    lv = list(range(1, t + 1))
    outer = list(range(t + 1, 2 * t))            # t - 1 colours blocking w and u elsewhere
    lists = [lv, [1] + outer, [2] + outer]
    partial = {}
    blockers = range(3, t + 1) if exhausted else [t + 1] * (t - 2)
    _pendants(edges, blockers, lists, partial, v, _single)
    _pendants(edges, outer, lists, partial, w, _single)
    _pendants(edges, outer, lists, partial, u, _single)
    return Gadget(Graph.from_edges(len(lists), edges), lists, partial, (v, w, u),
                  v=v, w=w, u=u, t=t)


def big_even(seed: int | None = None, t: int = 6, mode: str = "random") -> Gadget:
    """Centre v of degree t on a neighbour cycle of degrees t+2, t+1, t+2, ... .

    Every cycle vertex gets pendant neighbours (precoloured) to reach its
    degree.  ``mode`` picks the lists:

    * ``"random"``: t-lists from a palette of t+2 colours; pendant colours
      are distinct members of the owner's list, so reduced lists sit at
      their guaranteed minimum sizes.
    * ``"with_b"``: reduced lists chosen so that some even-position vertex
      sees both of its reduced colours on its cycle neighbours.
    * ``"v_exhausted"``: the neighbourhood of v ends up using every colour
      of L(v), forcing v onto a used colour.
    * ``"all_a"``: every even-position vertex keeps a free colour.
    """
    if t % 2:
        raise ValueError("t must be even")
    rng = random.Random(seed)
    v = 0
    cycle = list(range(1, t + 1))
    edges = [(v, x) for x in cycle] + [(cycle[i - 1], cycle[i]) for i in range(t)]
    palette = list(range(1, t + 3))
    lists = [None] * (t + 1)
    partial = {}
    if mode == "random":
        lists[v] = sorted(rng.sample(palette, t))
    elif mode == "all_a":
        lists[v] = list(range(1, t)) + [50]
    else:
        lists[v] = list(range(1, t + 1))

    def reduced_for(i):
        # the reduced list each cycle position should end with in the constructed modes
        odd = i % 2 == 0                      # 0-based even index is a 1-indexed odd position
        if mode == "with_b":
            if odd:
                return [i // 2 + 1]
            return [i // 2 + 1, (i // 2 + 1) % (t // 2) + 1]
        if mode in ("v_exhausted", "all_a"):
            return [i + 1] if odd else [i + 1, 100 + i]
        return None

    for i, x in enumerate(cycle):
        extra = (t + 2 if i % 2 == 0 else t + 1) - 3
        keep = reduced_for(i)
        if keep is None:
            own = sorted(rng.sample(palette, t))
            blockers = rng.sample(own, extra)
        else:
            fill = [200 + 10 * i + j for j in range(t - len(keep))]
            own = sorted(keep + fill)
            blockers = (fill * extra)[:extra]
        lists[x] = own
        for c in blockers:
            y = len(lists)
            edges.append((x, y))
            lists.append([c])
            partial[y] = c
    g = Graph.from_edges(len(lists), edges)
    ctx = BigContext.build(g, v, cycle)
    return Gadget(g, lists, partial, [v] + cycle, ctx=ctx, v=v, cycle=tuple(cycle), t=t)
