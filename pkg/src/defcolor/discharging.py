"""Exact bounds, discharging rules and the charge audit.

Every quantity here is an integer or a :class:`fractions.Fraction`; closed
forms containing square roots are evaluated with :func:`math.isqrt`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .embedding import RotationSystem, corners_closed, euler_genus, trace_faces
from .exceptions import NotTriangulated
from .graph import Graph


def ceil_sqrt(x: int) -> int:
    r = math.isqrt(x)
    return r if r * r == x else r + 1


def required_list_size(mu: int) -> int:
    """List size ``ceil(2 + sqrt(3*mu + 3))`` sufficient for defect 1 at Euler genus ``mu``."""
    if mu < 0:
        raise ValueError("Euler genus must be nonnegative")
    return 2 + ceil_sqrt(3 * mu + 3)


def heawood_bound(mu: int) -> int:
    """``floor((7 + sqrt(24*mu + 1)) / 2)``; not attained on the Klein bottle (mu = 2, non-orientable)."""
    if mu < 0:
        raise ValueError("Euler genus must be nonnegative")
    return (7 + math.isqrt(24 * mu + 1)) // 2


def lower_bound_choice1(mu: int) -> int:
    """``ceil(1.75 + sqrt(1.5*mu + 1/16))`` == ``ceil((7 + sqrt(24*mu + 1)) / 4)``."""
    if mu < 0:
        raise ValueError("Euler genus must be nonnegative")
    return -(-(7 + ceil_sqrt(24 * mu + 1)) // 4)


def transfer_amounts(t: int) -> tuple[Fraction, Fraction]:
    """Charge a degree-(t+2) vertex and a degree->=t+3 vertex send to each degree-t neighbour."""
    small = Fraction(1, t // 2 + 1)
    if t % 2:
        return small, small
    return small, Fraction(2, t // 2 + 1)


@dataclass(frozen=True)
class ChargeLedger:
    charge: tuple
    t: int

    @property
    def total(self) -> Fraction:
        return sum(self.charge, Fraction(0))

    def minimum(self) -> Fraction:
        return min(self.charge)


def initial_charges(g: Graph, t: int) -> ChargeLedger:
    return ChargeLedger(tuple(Fraction(d) for d in g.degrees()), t)


def _require_closed(rs: RotationSystem) -> None:
    if not corners_closed(rs):
        raise NotTriangulated("discharging needs a triangulated embedding")


def apply_rules(rs: RotationSystem, t: int) -> ChargeLedger:
    _require_closed(rs)
    g = rs.graph
    deg = g.degrees()
    to_t_from_t2, to_t_from_big = transfer_amounts(t)
    charge = [Fraction(d) for d in deg]
    for v in g.vertices():
        if deg[v] == t + 2:
            amount = to_t_from_t2
        elif deg[v] >= t + 3:
            amount = to_t_from_big
        else:
            continue
        for w in g.neighbours(v):
            if deg[w] == t:
                charge[v] -= amount
                charge[w] += amount
    return ChargeLedger(tuple(charge), t)


# -- structural properties of a minimal counterexample ---------------------

def structural_properties(g: Graph, t: int) -> dict[str, bool]:
    """Which local properties forced on a minimal non-(t,1)-choosable graph hold in ``g``.

    The last four are only meaningful on triangulated (corner-closed)
    embeddings of ``g``.
    """
    deg = g.degrees()
    n = g.n
    deg_t = [v for v in g.vertices() if deg[v] == t]

    def high(v):
        return sum(1 for w in g.neighbours(v) if deg[w] >= t + 2)

    props = {
        "min_degree_at_least_t": g.min_degree() >= t,
        "max_degree_at_least_2t": g.max_degree() >= 2 * t,
        "vertex_count_at_least_2t_plus_1": n >= 2 * t + 1,
        "degree_t_independent": not any(deg[w] == t for v in deg_t for w in g.neighbours(v)),
        "no_t_t1_t1_triangle": _find_t11_triangle(g, t) is None,
        "degree_t_neighbour_cap": all(
            sum(1 for w in g.neighbours(v) if deg[w] == t) <= deg[v] // 2
            for v in g.vertices()),
        "high_degree_neighbour_floor": all(high(v) >= -(-t // 2) for v in deg_t),
    }
    if t % 2:
        props["big_neighbour_for_even_t"] = True
    else:
        props["big_neighbour_for_even_t"] = all(
            any(deg[w] >= t + 3 for w in g.neighbours(v))
            for v in deg_t if high(v) == t // 2)
    return props


def _find_t11_triangle(g: Graph, t: int):
    deg = g.degrees()
    for v in g.vertices():
        if deg[v] != t:
            continue
        ring = sorted(w for w in g.neighbours(v) if deg[w] == t + 1)
        for i, w in enumerate(ring):
            for u in ring[i + 1:]:
                if u in g.neighbours(w):
                    return v, w, u
    return None


# -- audit -----------------------------------------------------------------

@dataclass
class AuditReport:
    t: int
    n: int
    m: int
    faces: int
    genus: int
    euler_bound: int            # 6*mu - 12
    charge_excess: int          # sum(deg(v) - 6) before discharging
    euler_inequality_holds: bool
    euler_tight: bool           # equality, i.e. f == 2m/3
    total_before: Fraction
    total_after: Fraction
    min_charge_after: Fraction
    min_charge_vertices: list[int]
    all_at_least_t_plus_1: bool
    properties: dict[str, bool]
    contradiction_lhs: int      # (2t+2)(t-5)
    contradiction_rhs: int      # 6*mu - 12
    contradiction_line_true: bool
    notes: list[str] = field(default_factory=list)

    @property
    def failed_properties(self) -> list[str]:
        return [name for name, ok in self.properties.items() if not ok]

    def to_text(self) -> str:
        lines = [
            f"t={self.t} n={self.n} m={self.m} f={self.faces} genus={self.genus}",
            f"euler: sum(deg-6) = {self.charge_excess} <= 6*genus-12 = {self.euler_bound}: "
            f"{self.euler_inequality_holds} (tight={self.euler_tight})",
            f"charge: total before = {self.total_before} after = {self.total_after}",
            f"charge: minimum after = {self.min_charge_after} at {self.min_charge_vertices}; "
            f"all >= t+1 = {self.t + 1}: {self.all_at_least_t_plus_1}",
        ]
        for name, ok in self.properties.items():
            lines.append(f"property {name}: {'holds' if ok else 'FAILS'}")
        lines.append(
            f"contradiction line: (2t+2)(t-5) = {self.contradiction_lhs} < 6*genus-12 = "
            f"{self.contradiction_rhs}: {self.contradiction_line_true}")
        lines.extend(f"note: {note}" for note in self.notes)
        return "\n".join(lines) + "\n"

    def to_record(self) -> dict:
        record = {}
        for key, value in self.__dict__.items():
            record[key] = str(value) if isinstance(value, Fraction) else value
        record["failed_properties"] = self.failed_properties
        return record


def audit(rs: RotationSystem, t: int) -> AuditReport:
    _require_closed(rs)
    g = rs.graph
    faces = trace_faces(rs)
    mu = euler_genus(rs, faces)
    before = initial_charges(g, t)
    after = apply_rules(rs, t)
    low = after.minimum()
    excess = 2 * g.m - 6 * g.n
    bound = 6 * mu - 12
    lhs = (2 * t + 2) * (t - 5)
    notes = []
    if t < 5:
        notes.append(f"t={t} is below 5, outside the range the discharging argument covers")
    if t < required_list_size(mu):
        notes.append(f"t={t} is below the sufficient list size {required_list_size(mu)} "
                     f"for genus {mu}")
    if faces.face_count * 3 != 2 * g.m:
        notes.append("not every face is a triangle; remaining faces span cliques")
    return AuditReport(
        t=t, n=g.n, m=g.m, faces=faces.face_count, genus=mu,
        euler_bound=bound, charge_excess=excess,
        euler_inequality_holds=excess <= bound, euler_tight=excess == bound,
        total_before=before.total, total_after=after.total,
        min_charge_after=low,
        min_charge_vertices=[v for v, c in enumerate(after.charge) if c == low],
        all_at_least_t_plus_1=low >= t + 1,
        properties=structural_properties(g, t),
        contradiction_lhs=lhs, contradiction_rhs=bound,
        contradiction_line_true=lhs < bound,
        notes=notes,
    )
