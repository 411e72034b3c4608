"""Embedded instance generators and random list assignments."""

from __future__ import annotations

import random

from .colouring import ListAssignment
from .embedding import RotationSystem, delete_vertices_embedded, rotation_from_faces

K7_TORUS_OFFSETS = (1, 3, 2, 6, 4, 5)
MAX_VERTICES = 100_000


def k7_torus() -> RotationSystem:
    """K7 on the torus: vertex i rotates through i+1, i+3, i+2, i+6, i+4, i+5 (mod 7)."""
    return RotationSystem([[(i + d) % 7 for d in K7_TORUS_OFFSETS] for i in range(7)])


def tetrahedron() -> RotationSystem:
    return rotation_from_faces(4, [(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)])


def complete(n: int) -> RotationSystem:
    """An embedding of K_n.

    K4 is the tetrahedron, K5 and K6 are induced from the K7 torus
    embedding, and n >= 8 uses the cyclic rotation ``i+1, ..., i+n-1``,
    whose genus is only an upper bound on the genus of K_n.
    """
    if n < 1 or n > MAX_VERTICES:
        raise ValueError(f"complete graph size must be in 1..{MAX_VERTICES}")
    if n <= 3:
        return RotationSystem([[(i + d) % n for d in range(1, n)] for i in range(n)])
    if n == 4:
        return tetrahedron()
    if n <= 7:
        return delete_vertices_embedded(k7_torus(), range(n, 7))[0]
    return RotationSystem([[(i + d) % n for d in range(1, n)] for i in range(n)])


def icosahedron() -> RotationSystem:
    top, bottom = 0, 11
    up = [1 + i for i in range(5)]
    low = [6 + i for i in range(5)]
    faces = []
    for i in range(5):
        j = (i + 1) % 5
        faces.append((top, up[i], up[j]))
        faces.append((up[j], up[i], low[i]))
        faces.append((low[i], up[i], low[i - 1]))
        faces.append((bottom, low[i], low[i - 1]))
    return rotation_from_faces(12, faces)


def planar_triangulation(n: int, seed: int = 0, flips: int = 0) -> RotationSystem:
    """Random planar triangulation by repeated insertion of a vertex into a random face.

    ``flips`` further random edge flips (each keeping the graph simple and
    every degree at least 3) spread the degree distribution.
    """
    if n < 3 or n > MAX_VERTICES:
        raise ValueError(f"planar triangulation size must be in 3..{MAX_VERTICES}")
    rng = random.Random(seed)
    rot = [[1, 2], [2, 0], [0, 1]]
    # (a, b, c) with c the rotation-successor of a at b
    faces = [(0, 1, 2), (1, 0, 2)]
    for x in range(3, n):
        k = rng.randrange(len(faces))
        a, b, c = faces[k]
        for at, after in ((b, a), (c, b), (a, c)):
            i = rot[at].index(after) + 1
            rot[at].insert(i, x)
        rot.append([b, a, c])
        faces[k] = (a, b, x)
        faces.append((b, c, x))
        faces.append((c, a, x))
    rs = RotationSystem(rot)
    return random_flips(rs, flips, rng) if flips and n >= 5 else rs


def random_flips(rs: RotationSystem, count: int, seed=0) -> RotationSystem:
    """Apply ``count`` random edge-flip attempts to an orientable triangulation.

    Attempts that would create a parallel edge or a vertex of degree below
    3 are skipped.
    """
    if rs.signs:
        raise ValueError("edge flips need an orientable (all-positive) rotation system")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    rot = [list(r) for r in rs.rotation]
    for _ in range(count):
        a = rng.randrange(len(rot))
        _flip(rot, a, rng.choice(rot[a]))
    return RotationSystem(rot)


def _successor(rot, v, w):
    r = rot[v]
    return r[(r.index(w) + 1) % len(r)]


def _flip(rot, a, b) -> bool:
    """Replace edge a-b by the other diagonal of its two triangles, if that stays simple."""
    c = _successor(rot, b, a)
    d = _successor(rot, a, b)
    if c == d or d in rot[c] or len(rot[a]) <= 3 or len(rot[b]) <= 3:
        return False
    rot[a].remove(b)
    rot[b].remove(a)
    rot[c].insert(rot[c].index(b) + 1, d)
    rot[d].insert(rot[d].index(a) + 1, c)
    return True


def toroidal_grid(width: int, height: int) -> RotationSystem:
    """The width x height torus quadrangulation with one diagonal per square."""
    if width < 3 or height < 3:
        raise ValueError("toroidal grid needs width and height of at least 3")
    if width * height > MAX_VERTICES:
        raise ValueError("toroidal grid too large")

    def vid(i, j):
        return (i % width) * height + (j % height)

    rot = [None] * (width * height)
    for i in range(width):
        for j in range(height):
            rot[vid(i, j)] = [vid(i + 1, j), vid(i + 1, j + 1), vid(i, j + 1),
                              vid(i - 1, j), vid(i - 1, j - 1), vid(i, j - 1)]
    return RotationSystem(rot)


def random_lists(n: int, k: int, palette: int, seed: int = 0) -> ListAssignment:
    """Uniform random k-subsets of 1..palette, one per vertex."""
    if k > palette:
        raise ValueError("list size exceeds palette")
    rng = random.Random(seed)
    return ListAssignment(sorted(rng.sample(range(1, palette + 1), k)) for _ in range(n))
