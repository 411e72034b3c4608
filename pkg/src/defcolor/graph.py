"""Immutable simple undirected graphs on dense integer vertex ids."""

from __future__ import annotations

from typing import Iterable, Sequence

from .exceptions import InvalidGraph, UnknownVertex


class Graph:
    """A simple undirected graph with vertices ``0..n-1``.

    Instances are immutable; every operation that removes or adds vertices
    returns a new graph.
    """

    __slots__ = ("_adj", "_m")

    def __init__(self, adjacency: Sequence[Iterable[int]]):
        adj = tuple(frozenset(nbrs) for nbrs in adjacency)
        n = len(adj)
        total = 0
        for v, nbrs in enumerate(adj):
            for w in nbrs:
                if not isinstance(w, int) or not 0 <= w < n:
                    raise InvalidGraph(f"vertex {v} lists unknown neighbour {w!r}")
                if w == v:
                    raise InvalidGraph(f"self-loop at vertex {v}")
                if v not in adj[w]:
                    raise InvalidGraph(f"edge {v}-{w} is not symmetric")
            total += len(nbrs)
        self._adj = adj
        self._m = total // 2

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidGraph(f"edge {u}-{v} has an endpoint outside 0..{n - 1}")
            if u == v:
                raise InvalidGraph(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(adj)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls([[w for w in range(n) if w != v] for v in range(n)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return self._m

    def __len__(self) -> int:
        return len(self._adj)

    def vertices(self) -> range:
        return range(len(self._adj))

    def neighbours(self, v: int) -> frozenset[int]:
        self._check(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self._adj]

    def min_degree(self) -> int:
        return min((len(a) for a in self._adj), default=0)

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self._adj[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nbrs in enumerate(self._adj) for v in sorted(nbrs) if u < v]

    def adjacency(self) -> tuple[frozenset[int], ...]:
        return self._adj

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by smallest vertex."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack = [s]
            comp = []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self._adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def _check(self, v) -> None:
        if not isinstance(v, int) or not 0 <= v < len(self._adj):
            raise UnknownVertex(v)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Return ``g[s]`` with vertices renumbered densely, plus the id map.

    ``id_map[i]`` is the vertex of ``g`` that became vertex ``i``; the
    renumbering preserves the relative order of ``s``'s members.
    """
    keep = sorted(set(s))
    for v in keep:
        g._check(v)
    index = {v: i for i, v in enumerate(keep)}
    adj = [[index[w] for w in g.neighbours(v) if w in index] for v in keep]
    return Graph(adj), tuple(keep)


def delete_vertices(g: Graph, s: Iterable[int]) -> Graph:
    """``g - s``; use :func:`induced_subgraph` on the complement for the id map."""
    drop = set(s)
    for v in drop:
        g._check(v)
    sub, _ = induced_subgraph(g, (v for v in g.vertices() if v not in drop))
    return sub
