"""List assignments, colourings and their defect/clustering verifiers.

A colouring is a plain ``dict`` mapping vertex to colour; partial
colourings simply omit vertices.  Colours are opaque integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .exceptions import (
    ListExhausted,
    ListTooShort,
    NotFromList,
    PartialColouring,
    UnknownVertex,
)
from .graph import Graph

Colouring = dict


class ListAssignment:
    """Per-vertex colour lists ``L(v)``."""

    __slots__ = ("lists",)

    def __init__(self, lists: Iterable[Iterable[int]]):
        self.lists = tuple(frozenset(int(c) for c in lst) for lst in lists)

    @classmethod
    def uniform(cls, n: int, colours: Iterable[int]) -> "ListAssignment":
        colours = frozenset(colours)
        return cls([colours] * n)

    def __len__(self) -> int:
        return len(self.lists)

    def __getitem__(self, v: int) -> frozenset[int]:
        return self.lists[v]

    def __iter__(self):
        return iter(self.lists)

    @property
    def t(self) -> int:
        """Largest t for which this is a t-list assignment."""
        return min((len(lst) for lst in self.lists), default=0)

    def is_t_assignment(self, t: int) -> bool:
        return all(len(lst) >= t for lst in self.lists)

    def require(self, t: int) -> None:
        for v, lst in enumerate(self.lists):
            if len(lst) < t:
                raise ListTooShort(v, len(lst), t)

    def restrict(self, id_map: Sequence[int]) -> "ListAssignment":
        return ListAssignment(self.lists[old] for old in id_map)

    def __eq__(self, other) -> bool:
        return isinstance(other, ListAssignment) and self.lists == other.lists

    def __repr__(self) -> str:
        return f"ListAssignment(n={len(self.lists)}, t={self.t})"


def check_lists(g: Graph, lists) -> ListAssignment:
    """Coerce ``lists`` to a :class:`ListAssignment` covering every vertex of ``g``."""
    if not isinstance(lists, ListAssignment):
        lists = ListAssignment(lists)
    if len(lists) != g.n:
        raise ValueError(f"list assignment covers {len(lists)} vertices, graph has {g.n}")
    return lists


@dataclass(frozen=True)
class DefectReport:
    defect: int
    clustering: int
    worst_vertex: int | None = None
    worst_component: tuple[int, ...] = field(default_factory=tuple)

    def meets(self, defect: int | None = None, clustering: int | None = None) -> bool:
        if defect is not None and self.defect > defect:
            return False
        if clustering is not None and self.clustering > clustering:
            return False
        return True


def same_colour_count(g: Graph, colouring: Mapping[int, int], v: int) -> int:
    c = colouring.get(v)
    if c is None:
        return 0
    return sum(1 for w in g.neighbours(v) if colouring.get(w) == c)


def partial_defect(g: Graph, colouring: Mapping[int, int]) -> int:
    """Defect of a possibly partial colouring, counting coloured vertices only."""
    return max((same_colour_count(g, colouring, v) for v in colouring), default=0)


def monochromatic_edges(g: Graph, colouring: Mapping[int, int]) -> int:
    return sum(1 for u, v in g.edges()
               if u in colouring and colouring.get(u) == colouring.get(v))


def verify(g: Graph, lists, colouring: Mapping[int, int] | Sequence[int]) -> DefectReport:
    """Defect and clustering of a total colouring, with witnesses.

    ``lists`` may be ``None`` to skip the list-membership check.
    """
    if not isinstance(colouring, Mapping):
        colouring = dict(enumerate(colouring))
    if lists is not None:
        lists = check_lists(g, lists)
    for v in g.vertices():
        if colouring.get(v) is None:
            raise PartialColouring(v)
        if lists is not None and colouring[v] not in lists[v]:
            raise NotFromList(v, colouring[v])
    for v in colouring:
        if not isinstance(v, int) or not 0 <= v < g.n:
            raise UnknownVertex(v)

    defect, worst_vertex = 0, None
    for v in g.vertices():
        d = same_colour_count(g, colouring, v)
        if d > defect:
            defect, worst_vertex = d, v

    # monochromatic components by search over monochromatic edges only
    seen = [False] * g.n
    clustering, worst_component = (1, ()) if g.n else (0, ())
    for s in g.vertices():
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [s], [s]
        while stack:
            v = stack.pop()
            for w in g.neighbours(v):
                if not seen[w] and colouring[w] == colouring[s]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        if len(comp) > clustering:
            clustering, worst_component = len(comp), tuple(sorted(comp))
    return DefectReport(defect, clustering, worst_vertex, worst_component)


def greedy_proper(g: Graph, lists, order: Iterable[int] | None = None,
                  colouring: Mapping[int, int] | None = None) -> Colouring:
    """Colour the vertices in ``order`` properly, smallest free colour first.

    Vertices already present in ``colouring`` are kept and block their
    colours for later vertices.
    """
    lists = check_lists(g, lists)
    result = dict(colouring or {})
    for v in (g.vertices() if order is None else order):
        if v in result:
            continue
        used = {result[w] for w in g.neighbours(v) if w in result}
        free = sorted(lists[v] - used)
        if not free:
            raise ListExhausted(v)
        result[v] = free[0]
    return result


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    members = set(s)
    for v in members:
        g._check(v)
    return not any(g.neighbours(v) & members for v in members)
