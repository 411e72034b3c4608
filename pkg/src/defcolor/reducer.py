"""Recursive defect-1 list colouring by reducible configurations.

The solver triangulates the embedding, looks for one of five local
configurations, deletes it, colours the rest recursively and extends the
colouring back over the deleted vertices.  The discharging argument in
:mod:`defcolor.discharging` shows that one configuration always exists once
``t >= ceil(2 + sqrt(3*mu + 3))`` and ``t >= 5``; failing to find one is
reported as :class:`InternalContradiction` together with the audit.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping, Union

from .colouring import Colouring, ListAssignment, check_lists
from .discharging import AuditReport, _find_t11_triangle, audit, required_list_size
from .embedding import (
    RotationSystem,
    corners_closed,
    delete_vertices_embedded,
    euler_genus,
    induced_rotation,
    triangulate,
)
from .exceptions import (
    BranchInvariantViolated,
    ContextInvalid,
    InternalContradiction,
    ListTooShort,
    NoFreeColour,
    NotTriangulated,
    PartialColouring,
    PreconditionTooSmallT,
)
from .graph import Graph
from .local_search import lovasz_colour


# -- configurations --------------------------------------------------------

@dataclass(frozen=True)
class LowDegree:
    v: int

    def removed(self):
        return (self.v,)


@dataclass(frozen=True)
class LowMaxDegree:
    def removed(self):
        return ()


@dataclass(frozen=True)
class AdjacentTT:
    v: int
    w: int

    def removed(self):
        return (self.v, self.w)


@dataclass(frozen=True)
class TriangleT11:
    v: int      # degree t
    w: int      # degree t+1
    u: int      # degree t+1

    def removed(self):
        return (self.v, self.w, self.u)


@dataclass(frozen=True)
class BigEven:
    v: int
    cycle: tuple      # neighbours of v in rotation order, starting at a degree-(t+2) anchor
    degrees: tuple    # degrees of ``cycle`` in the graph the configuration was found in

    def removed(self):
        return (self.v,) + self.cycle


@dataclass(frozen=True)
class DischargingContradiction:
    audit: AuditReport


ReducibleConfig = Union[LowDegree, LowMaxDegree, AdjacentTT, TriangleT11, BigEven]


def _big_even_at(rs: RotationSystem, v: int, t: int) -> BigEven | None:
    g = rs.graph
    rot = rs.rotation[v]
    deg = [g.degree(w) for w in rot]
    high = [d for d in deg if d >= t + 2]
    if len(high) != t // 2 or any(d != t + 2 for d in high):
        return None
    start = next(i for i, d in enumerate(deg) if d == t + 2)
    cycle = rot[start:] + rot[:start]
    degrees = tuple(deg[start:] + deg[:start])
    if any(d != (t + 2 if i % 2 == 0 else t + 1) for i, d in enumerate(degrees)):
        return None
    return BigEven(v, cycle, degrees)


def find_config(rs: RotationSystem, t: int) -> ReducibleConfig | DischargingContradiction:
    """First reducible configuration in the fixed search order.

    Order: low-degree vertex, small maximum degree, adjacent degree-t pair,
    (t, t+1, t+1)-triangle, and for even ``t`` the alternating neighbourhood.
    Ties go to the lowest vertex id.
    """
    g = rs.graph
    if g.n >= 3 and not corners_closed(rs):
        raise NotTriangulated("configuration search needs a triangulated embedding")
    deg = g.degrees()
    for v in g.vertices():
        if deg[v] < t:
            return LowDegree(v)
    if g.max_degree() < 2 * t:
        return LowMaxDegree()
    for v in g.vertices():
        if deg[v] == t:
            for w in sorted(g.neighbours(v)):
                if deg[w] == t:
                    return AdjacentTT(v, w)
    tri = _find_t11_triangle(g, t)
    if tri is not None:
        return TriangleT11(*tri)
    if t % 2 == 0:
        for v in g.vertices():
            if deg[v] == t:
                cfg = _big_even_at(rs, v, t)
                if cfg is not None:
                    return cfg
    return DischargingContradiction(audit(rs, t))


# -- extension steps -------------------------------------------------------

def _base(g: Graph, partial: Mapping[int, int], removed) -> dict:
    removed = set(removed)
    for v in g.vertices():
        if v not in removed and v not in partial:
            raise PartialColouring(v)
    return {v: c for v, c in partial.items() if v not in removed}


def _free(lists: ListAssignment, colouring: Mapping[int, int], v: int, nbrs) -> list[int]:
    used = {colouring[w] for w in nbrs if w in colouring}
    return sorted(lists[v] - used)


def _check_t(g, lists, t, expected):
    if t is None:
        return
    for v, d in expected:
        if len(lists[v]) < t:
            raise ListTooShort(v, len(lists[v]), t)
        ok = g.degree(v) < t if d == "<t" else g.degree(v) == d
        if not ok:
            raise ContextInvalid(f"vertex {v} has degree {g.degree(v)}, expected {d}")


def extend_low_degree(g: Graph, lists, partial: Mapping[int, int], v: int, *, t: int | None = None) -> Colouring:
    """Give ``v`` a list colour missing from its neighbourhood."""
    lists = check_lists(g, lists)
    _check_t(g, lists, t, [(v, "<t")])
    result = _base(g, partial, [v])
    free = _free(lists, result, v, g.neighbours(v))
    if not free:
        raise NoFreeColour(v)
    result[v] = free[0]
    return result


def extend_adjacent_tt(g: Graph, lists, partial: Mapping[int, int], v: int, w: int,
                       *, t: int | None = None) -> Colouring:
    """Colour an adjacent pair of degree-t vertices; equal colours on the pair are allowed."""
    lists = check_lists(g, lists)
    if w not in g.neighbours(v):
        raise ContextInvalid(f"{v} and {w} are not adjacent")
    if t is not None:
        _check_t(g, lists, t, [(v, t), (w, t)])
    result = _base(g, partial, [v, w])
    c1 = _free(lists, result, v, g.neighbours(v) - {w})
    c2 = _free(lists, result, w, g.neighbours(w) - {v})
    if not c1:
        raise NoFreeColour(v)
    if not c2:
        raise NoFreeColour(w)
    result[v], result[w] = c1[0], c2[0]
    return result


def extend_triangle(g: Graph, lists, partial: Mapping[int, int], v: int, w: int, u: int,
                    *, t: int | None = None) -> Colouring:
    """Colour a triangle whose degrees are t, t+1, t+1 (``v`` has degree t)."""
    lists = check_lists(g, lists)
    if not (w in g.neighbours(v) and u in g.neighbours(v) and u in g.neighbours(w)):
        raise ContextInvalid(f"{v}, {w}, {u} is not a triangle")
    if t is not None:
        _check_t(g, lists, t, [(v, t), (w, t + 1), (u, t + 1)])
    result = _base(g, partial, [v, w, u])
    c1 = _free(lists, result, w, g.neighbours(w) - {v, u})
    c2 = _free(lists, result, u, g.neighbours(u) - {v, w})
    if not c1:
        raise NoFreeColour(w)
    if not c2:
        raise NoFreeColour(u)
    result[w], result[u] = c1[0], c2[0]
    free = _free(lists, result, v, g.neighbours(v))
    if free:
        result[v] = free[0]
        return result
    # every colour of L(v) sits on a distinct neighbour of v
    if result[w] == result[u] or result[w] not in lists[v]:
        raise BranchInvariantViolated(
            f"exhausted list at {v} but w and u coloured {result[w]}, {result[u]}")
    result[v] = result[w]
    return result


@dataclass
class BigContext:
    """Neighbourhood data for the alternating even-t configuration.

    ``h`` is N(v), ``hp`` is {v} plus N(v), ``s`` holds the cycle vertices
    at even 1-indexed positions.  ``lp``, ``a`` and ``b`` are filled in by
    :func:`extend_big_detailed`.
    """
    graph: Graph
    v: int
    cycle: tuple
    h: frozenset = frozenset()
    hp: frozenset = frozenset()
    s: tuple = ()
    lp: dict = field(default_factory=dict)
    a: tuple = ()
    b: tuple = ()

    @classmethod
    def from_config(cls, g: Graph, cfg: BigEven) -> "BigContext":
        return cls.build(g, cfg.v, cfg.cycle)

    @classmethod
    def build(cls, g: Graph, v: int, cycle) -> "BigContext":
        cycle = tuple(cycle)
        return cls(g, v, cycle, frozenset(cycle), frozenset(cycle) | {v}, cycle[1::2])

    def validate(self) -> None:
        g, v, cycle = self.graph, self.v, self.cycle
        t = len(cycle)
        if t % 2 or t < 2:
            raise ContextInvalid(f"neighbour cycle has odd length {t}")
        if set(cycle) != g.neighbours(v) or len(set(cycle)) != t:
            raise ContextInvalid("cycle is not the neighbourhood of v")
        for i in range(t):
            if cycle[i - 1] not in g.neighbours(cycle[i]):
                raise ContextInvalid(f"{cycle[i - 1]} and {cycle[i]} are consecutive but not adjacent")
            want = t + 2 if i % 2 == 0 else t + 1
            if g.degree(cycle[i]) != want:
                raise ContextInvalid(
                    f"cycle position {i + 1} has degree {g.degree(cycle[i])}, expected {want}")
        s = set(self.s)
        if any(g.neighbours(x) & s for x in s):
            raise ContextInvalid("even-position vertices are not independent")


@dataclass
class BigExtension:
    colouring: Colouring
    lp: dict
    a: tuple
    b: tuple


def extend_big_detailed(ctx: BigContext, lists, partial: Mapping[int, int]) -> BigExtension:
    g, v, cycle = ctx.graph, ctx.v, ctx.cycle
    lists = check_lists(g, lists)
    ctx.validate()
    outside = _base(g, partial, ctx.hp)
    hp, h = ctx.hp, ctx.h

    lp = {}
    for x in hp:
        lp[x] = lists[x] - {outside[y] for y in g.neighbours(x) if y not in hp}
    if len(lp[v]) != len(lists[v]):
        raise ContextInvalid("v has a neighbour outside its closed neighbourhood")
    for i, x in enumerate(cycle):
        deg_hp = len(g.neighbours(x) & hp)
        need = deg_hp - 2 if i % 2 == 0 else deg_hp - 1
        if len(lp[x]) < need:
            raise ContextInvalid(f"reduced list of {x} has {len(lp[x])} colours, {need} guaranteed")

    rest = cycle[0::2]
    col: dict[int, int] = {}
    # H - S is greedily proper: every reduced list beats the degree in H - S
    for x in rest:
        free = sorted(lp[x] - {col[y] for y in g.neighbours(x) & h if y in col})
        if not free:
            raise ContextInvalid(f"greedy colouring of H - S blocked at {x}")
        col[x] = free[0]

    a, b = [], []
    for x in ctx.s:
        used = {col[y] for y in g.neighbours(x) & h}
        free = sorted(lp[x] - used)
        if free:
            col[x] = free[0]
            a.append(x)
        else:
            b.append(x)
    position = {x: i for i, x in enumerate(cycle)}
    for x in b:
        pred = cycle[position[x] - 1]
        if col[pred] not in lp[x]:
            raise BranchInvariantViolated(
                f"colour {col[pred]} of the cycle predecessor of {x} is not in its reduced list")
        col[x] = col[pred]

    free = sorted(lp[v] - {col[y] for y in h})
    col[v] = free[0] if free else min(lp[v])

    ctx.lp, ctx.a, ctx.b = lp, tuple(a), tuple(b)
    outside.update(col)
    return BigExtension(outside, lp, tuple(a), tuple(b))


def extend_big(ctx: BigContext, lists, partial: Mapping[int, int]) -> Colouring:
    """Extend over v and its alternating neighbourhood."""
    return extend_big_detailed(ctx, lists, partial).colouring


# -- solver ----------------------------------------------------------------

@dataclass
class ReductionResult:
    colouring: Colouring
    genus: int
    dispatches: Counter = field(default_factory=Counter)


def check_list_size(mu: int, t: int) -> None:
    """Raise :class:`PreconditionTooSmallT` unless ``t`` is in the solver's range for genus ``mu``."""
    need = required_list_size(mu)
    if t < 5:
        if mu == 0 and t == 4:
            raise PreconditionTooSmallT(
                "t=4 on a planar embedding is the Cushing-Kierstead theorem, which this "
                "solver delegates and does not implement; use t >= 5")
        raise PreconditionTooSmallT(f"the reducer needs t >= 5, got t={t}")
    if t < need:
        raise PreconditionTooSmallT(
            f"genus {mu} needs lists of size at least {need}, got t={t}")


def _local_defect_ok(g: Graph, colouring, vertices) -> bool:
    touched = set(vertices)
    for v in vertices:
        touched |= g.neighbours(v)
    return all(sum(1 for w in g.neighbours(x) if colouring[w] == colouring[x]) <= 1
               for x in touched)


def _solve_any(rs: RotationSystem, lists: ListAssignment, t: int, stats: Counter) -> dict:
    result = {}
    for comp in rs.graph.components():
        sub, ids = induced_rotation(rs, comp)
        part = _solve_connected(sub, lists.restrict(ids), t, stats)
        result.update({ids[i]: c for i, c in part.items()})
    return result


def _solve_connected(rs: RotationSystem, lists: ListAssignment, t: int, stats: Counter) -> dict:
    work = rs if rs.n < 3 else triangulate(rs, partial=True)
    g = work.graph
    cfg = find_config(work, t)
    stats[type(cfg).__name__] += 1
    if isinstance(cfg, DischargingContradiction):
        raise InternalContradiction(
            "no reducible configuration found; failing properties: "
            + ", ".join(cfg.audit.failed_properties), cfg.audit)
    if isinstance(cfg, LowMaxDegree):
        return lovasz_colour(g, lists, t)

    removed = cfg.removed()
    sub, ids = delete_vertices_embedded(work, removed)
    assert sub.n < work.n
    sub_colouring = _solve_any(sub, lists.restrict(ids), t, stats) if sub.n else {}
    partial = {ids[i]: c for i, c in sub_colouring.items()}

    if isinstance(cfg, LowDegree):
        colouring = extend_low_degree(g, lists, partial, cfg.v)
    elif isinstance(cfg, AdjacentTT):
        colouring = extend_adjacent_tt(g, lists, partial, cfg.v, cfg.w, t=t)
    elif isinstance(cfg, TriangleT11):
        colouring = extend_triangle(g, lists, partial, cfg.v, cfg.w, cfg.u, t=t)
    else:
        colouring = extend_big(BigContext.from_config(g, cfg), lists, partial)
    assert _local_defect_ok(g, colouring, removed), f"extension over {cfg} raised the defect"
    return colouring


def reduce_colour(rs: RotationSystem, lists, t: int) -> ReductionResult:
    """Defect-1 colouring from ``lists`` together with per-configuration dispatch counts."""
    lists = check_lists(rs.graph, lists)
    genera = []
    for comp in rs.graph.components():
        sub, _ = induced_rotation(rs, comp)
        genera.append(euler_genus(sub))
    for mu in genera or [0]:
        check_list_size(mu, t)
    lists.require(t)
    stats: Counter = Counter()
    colouring = _solve_any(rs, lists, t, stats) if rs.n else {}
    return ReductionResult(dict(sorted(colouring.items())), sum(genera), stats)


def solve(rs: RotationSystem, lists, t: int) -> Colouring:
    """Colour the embedded graph from ``lists`` with every vertex having at most one same-coloured neighbour."""
    return reduce_colour(rs, lists, t).colouring
