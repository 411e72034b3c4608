"""Rotation systems (combinatorial maps) for 2-cell embeddings.

A rotation system stores, for every vertex, the cyclic order of its
neighbours, plus an optional sign per edge.  All-positive signs describe an
orientable embedding; negative edges flip the local orientation and make
non-orientable surfaces (odd Euler genus) representable.

Faces are traced with an orientation bit.  A walk state ``(u, v, s)`` means
"traverse u->v, having local orientation ``s`` at ``u``".  Crossing the
edge multiplies ``s`` by its sign; at ``v`` the walk continues with the
rotation-successor of ``u`` when the orientation is positive and with the
predecessor otherwise.  Each facial walk is found twice (once per
direction); only one copy is kept.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Sequence

from .exceptions import (
    CorruptRotation,
    DisconnectedGraph,
    InvalidGraph,
    UnknownVertex,
    UntriangulatableFace,
)
from .graph import Graph


def _edge_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class RotationSystem:
    """Per-vertex cyclic neighbour orders with optional edge signs."""

    __slots__ = ("graph", "rotation", "_negative", "_pos")

    def __init__(self, rotations: Sequence[Sequence[int]],
                 signs: Mapping[tuple[int, int], int] | None = None):
        rotation = tuple(tuple(r) for r in rotations)
        for v, r in enumerate(rotation):
            if len(set(r)) != len(r):
                raise InvalidGraph(f"rotation at vertex {v} repeats a neighbour")
        self.graph = Graph(rotation)
        self.rotation = rotation
        negative = set()
        for (u, v), s in (signs or {}).items():
            if s not in (1, -1):
                raise InvalidGraph(f"sign of edge {u}-{v} must be +1 or -1, got {s!r}")
            if not (0 <= u < self.graph.n and 0 <= v < self.graph.n) \
                    or v not in self.graph.neighbours(u):
                raise InvalidGraph(f"sign given for non-edge {u}-{v}")
            if s == -1:
                negative.add(_edge_key(u, v))
        self._negative = frozenset(negative)
        self._pos = tuple({w: i for i, w in enumerate(r)} for r in rotation)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    @property
    def signs(self) -> dict[tuple[int, int], int]:
        """Negative edges only; every other edge has sign +1."""
        return {e: -1 for e in sorted(self._negative)}

    def sign(self, u: int, v: int) -> int:
        return -1 if _edge_key(u, v) in self._negative else 1

    def is_orientable_labelling(self) -> bool:
        return not self._negative

    def successor(self, v: int, w: int) -> int:
        r = self.rotation[v]
        return r[(self._pos[v][w] + 1) % len(r)]

    def predecessor(self, v: int, w: int) -> int:
        r = self.rotation[v]
        return r[(self._pos[v][w] - 1) % len(r)]

    def __eq__(self, other) -> bool:
        return (isinstance(other, RotationSystem) and self.rotation == other.rotation
                and self._negative == other._negative)

    def __hash__(self) -> int:
        return hash((self.rotation, self._negative))

    def __repr__(self) -> str:
        return f"RotationSystem(n={self.n}, m={self.m}, negative_edges={len(self._negative)})"


class Step(NamedTuple):
    """One traversal of a face walk: ``tail -> head`` with orientation at ``tail``."""
    tail: int
    head: int
    orientation: int


Face = tuple  # tuple[Step, ...]


@dataclass(frozen=True)
class FaceSet:
    faces: tuple

    @property
    def face_count(self) -> int:
        return len(self.faces)

    def sizes(self) -> list[int]:
        return [len(f) for f in self.faces]

    def histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(self.sizes()).items()))


def face_vertices(face) -> list[int]:
    return [step.tail for step in face]


def _next_state(rs: RotationSystem, u: int, v: int, s: int) -> tuple[int, int, int]:
    s2 = s * rs.sign(u, v)
    w = rs.successor(v, u) if s2 == 1 else rs.predecessor(v, u)
    return v, w, s2


def _reverse_state(rs: RotationSystem, u: int, v: int, s: int) -> tuple[int, int, int]:
    return v, u, -s * rs.sign(u, v)


def _require_connected(rs: RotationSystem) -> None:
    if rs.n == 0:
        raise InvalidGraph("the empty graph has no embedding")
    if not rs.graph.is_connected():
        raise DisconnectedGraph("face tracing needs a connected graph")


def trace_faces(rs: RotationSystem) -> FaceSet:
    _require_connected(rs)
    if rs.m == 0:
        return FaceSet(((),))
    used = set()
    faces = []
    for u in range(rs.n):
        for v in rs.rotation[u]:
            for s in (1, -1):
                if (u, v, s) in used:
                    continue
                walk = []
                state = (u, v, s)
                while state not in used:
                    used.add(state)
                    walk.append(Step(*state))
                    state = _next_state(rs, *state)
                if state != (u, v, s):
                    raise CorruptRotation("face walk did not close on its start")
                for step in walk:
                    used.add(_reverse_state(rs, *step))
                faces.append(tuple(walk))
    if sum(len(f) for f in faces) != 2 * rs.m:
        raise CorruptRotation("traced faces do not cover every edge side exactly once")
    return FaceSet(tuple(faces))


def euler_genus(rs: RotationSystem, faces: FaceSet | None = None) -> int:
    if faces is None:
        faces = trace_faces(rs)
    mu = rs.m - rs.n + 2 - faces.face_count
    if mu < 0:
        raise CorruptRotation(f"negative Euler genus {mu}")
    return mu


def is_triangulated(rs: RotationSystem, faces: FaceSet | None = None) -> bool:
    if rs.n < 3 or not rs.graph.is_connected():
        return False
    if faces is None:
        faces = trace_faces(rs)
    return all(len(f) == 3 for f in faces.faces)


def cyclic_neighbours(rs: RotationSystem, v: int) -> tuple[int, ...]:
    if not isinstance(v, int) or not 0 <= v < rs.n:
        raise UnknownVertex(v)
    return rs.rotation[v]


def delete_vertices_embedded(rs: RotationSystem, s: Iterable[int]) -> tuple[RotationSystem, tuple[int, ...]]:
    """Remove ``s`` from the graph and from every rotation.

    Returns the new rotation system on dense ids and the id map back to
    ``rs`` (``id_map[new] == old``).
    """
    drop = set(s)
    for v in drop:
        if not isinstance(v, int) or not 0 <= v < rs.n:
            raise UnknownVertex(v)
    keep = [v for v in range(rs.n) if v not in drop]
    index = {v: i for i, v in enumerate(keep)}
    rotations = [[index[w] for w in rs.rotation[v] if w in index] for v in keep]
    signs = {(index[a], index[b]): -1 for a, b in rs._negative
             if a in index and b in index}
    return RotationSystem(rotations, signs), tuple(keep)


def delete_vertex_embedded(rs: RotationSystem, v: int) -> RotationSystem:
    return delete_vertices_embedded(rs, [v])[0]


def induced_rotation(rs: RotationSystem, vertices: Iterable[int]) -> tuple[RotationSystem, tuple[int, ...]]:
    """The embedding induced on ``vertices`` (rotations restricted to them)."""
    keep = set(vertices)
    return delete_vertices_embedded(rs, [v for v in range(rs.n) if v not in keep])


def rotation_from_faces(n: int, faces: Iterable[Sequence[int]]) -> RotationSystem:
    """Build an orientable rotation system from consistently oriented faces.

    Each face ``(a, b, c, ...)`` is a closed walk; at every vertex ``b``
    preceded by ``a`` and followed by ``c`` the rotation-successor of ``a``
    is ``c``.
    """
    succ: list[dict[int, int]] = [dict() for _ in range(n)]
    for face in faces:
        k = len(face)
        for i in range(k):
            a, b, c = face[i - 1], face[i], face[(i + 1) % k]
            if a in succ[b]:
                raise InvalidGraph(f"corner {a}-{b}-{c} conflicts with an earlier face")
            succ[b][a] = c
    rotations = []
    for v in range(n):
        if not succ[v]:
            rotations.append([])
            continue
        start = min(succ[v])
        order = [start]
        w = succ[v][start]
        while w != start:
            if w not in succ[v] or len(order) > len(succ[v]):
                raise InvalidGraph(f"faces around vertex {v} do not close into one cycle")
            order.append(w)
            w = succ[v][w]
        if len(order) != len(succ[v]):
            raise InvalidGraph(f"faces around vertex {v} form more than one cycle")
        rotations.append(order)
    return RotationSystem(rotations)


# -- triangulation ---------------------------------------------------------

def _corner(face, i: int) -> tuple[int, int, int, int]:
    """(vertex, previous vertex, next vertex, orientation) at corner ``i``."""
    k = len(face)
    step = face[i % k]
    return step.tail, face[(i - 1) % k].tail, step.head, step.orientation


def _fan_targets(rs: RotationSystem, face, i: int) -> list[int] | None:
    k = len(face)
    x = face[i].tail
    targets = [face[(i + j) % k].tail for j in range(2, k - 1)]
    nbrs = rs.graph.neighbours(x)
    if x in targets or len(set(targets)) != len(targets) or nbrs.intersection(targets):
        return None
    return targets


def _insert_after(rot: list[list[int]], v: int, anchor: int, items: list[int]) -> None:
    idx = rot[v].index(anchor) + 1
    rot[v][idx:idx] = items


def _place_in_corner(rot, corner, items: list[int]) -> None:
    # ``items`` listed in walk-direction order from prev to next
    x, prev, nxt, s = corner
    if s == 1:
        _insert_after(rot, x, prev, items)
    else:
        _insert_after(rot, x, nxt, items[::-1])


def _add_chords(rs: RotationSystem, face, i: int, targets: Sequence[tuple[int, int]]) -> RotationSystem:
    """Insert chords from corner ``i`` to the corners ``j`` listed in ``targets``.

    ``targets`` holds ``(j, vertex)`` pairs in face order after corner ``i``.
    """
    rot = [list(r) for r in rs.rotation]
    signs = dict(rs.signs)
    cx = _corner(face, i)
    # walking prev -> x -> next, the fan chords appear from the far end backwards
    _place_in_corner(rot, cx, [y for _, y in reversed(targets)])
    for j, y in targets:
        cy = _corner(face, j)
        _place_in_corner(rot, cy, [cx[0]])
        if cx[3] * cy[3] == -1:
            signs[_edge_key(cx[0], y)] = -1
    return RotationSystem(rot, signs)


def _split_face(rs: RotationSystem, face) -> RotationSystem | None:
    k = len(face)
    for i in range(k):
        targets = _fan_targets(rs, face, i)
        if targets is not None:
            return _add_chords(rs, face, i, [((i + j) % k, y) for j, y in enumerate(targets, 2)])
    # no full fan works: fall back to any single chord, which still shrinks the face
    for i in range(k):
        x = face[i].tail
        for j in range(i + 2, i + k - 1):
            y = face[j % k].tail
            if y != x and y not in rs.graph.neighbours(x):
                return _add_chords(rs, face, i, [(j % k, y)])
    return None


def triangulate(rs: RotationSystem, *, partial: bool = False) -> RotationSystem:
    """Add chords inside faces until every face is a triangle.

    Each face of length > 3 is first fanned from one of its corners; if no
    corner admits a full fan, a single chord is inserted and the face is
    revisited.  Raises :class:`UntriangulatableFace` when some face admits
    no chord at all, unless ``partial`` is set, in which case the embedding
    with every splittable face split is returned instead.
    """
    _require_connected(rs)
    if rs.n < 3:
        raise InvalidGraph("triangulation needs at least 3 vertices")
    current = rs
    faces = trace_faces(current)
    mu = euler_genus(current, faces)
    blocked = set()
    while True:
        todo = [f for f in faces.faces if len(f) > 3
                and frozenset(f) not in blocked]
        if not todo:
            break
        face = todo[0]
        new = _split_face(current, face)
        if new is None:
            if not partial:
                raise UntriangulatableFace(face_vertices(face))
            blocked.add(frozenset(face))
            continue
        added = new.m - current.m
        new_faces = trace_faces(new)
        if new_faces.face_count != faces.face_count + added or euler_genus(new, new_faces) != mu:
            raise CorruptRotation("chord insertion changed the surface")
        current, faces = new, new_faces
    return current


def corners_closed(rs: RotationSystem) -> bool:
    """True when consecutive neighbours in every rotation are adjacent.

    Holds for triangulations, and also for embeddings where every face is
    a triangle or spans a clique (what :func:`triangulate` returns with
    ``partial=True``).  This is the local form of edge-maximality the
    reducible-configuration search relies on.
    """
    if rs.n < 3 or not rs.graph.is_connected():
        return False
    for v, r in enumerate(rs.rotation):
        if len(r) < 2:
            return False
        for i in range(len(r)):
            if r[i - 1] not in rs.graph.neighbours(r[i]):
                return False
    return True
