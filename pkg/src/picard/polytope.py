"""Exact planes and half-space vertex enumeration in (Re zeta, Im zeta, t) space."""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .heisenberg import CplxRQ, HeisPoint
from .qfield import RealQuad

Vec = tuple  # three RealQuad


def coords(p: HeisPoint) -> Vec:
    return (p.zeta.re, p.zeta.im, p.t)


def from_coords(v: Vec) -> HeisPoint:
    return HeisPoint(CplxRQ(v[0], v[1]), v[2])


def sub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def cross(a: Vec, b: Vec) -> Vec:
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def dot(a: Vec, b: Vec) -> RealQuad:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


@dataclass(frozen=True)
class HalfSpace:
    """{x : normal . x <= offset}."""
    normal: Vec
    offset: RealQuad
    label: str = ""

    def value(self, v: Vec) -> RealQuad:
        return dot(self.normal, v) - self.offset

    def flipped(self) -> HalfSpace:
        return HalfSpace(tuple(-c for c in self.normal), -self.offset, self.label)


def plane_through(a: Vec, b: Vec, c: Vec, label: str = "") -> HalfSpace:
    n = cross(sub(b, a), sub(c, a))
    if all(not x for x in n):
        raise ValueError("degenerate plane")
    return HalfSpace(n, dot(n, a), label)


def halfspace_excluding(plane: HalfSpace, outside: Vec) -> HalfSpace:
    """The closed side of the plane that does not contain the given point."""
    s = plane.value(outside).sign()
    if s == 0:
        raise ValueError("point lies on the plane")
    return plane if s > 0 else plane.flipped()


def _det3(m) -> RealQuad:
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def solve3(rows, rhs) -> Vec | None:
    D = _det3(rows)
    if not D:
        return None
    out = []
    for k in range(3):
        m = [list(r) for r in rows]
        for i in range(3):
            m[i][k] = rhs[i]
        out.append(_det3(m) / D)
    return tuple(out)


def enumerate_vertices(hs: list[HalfSpace]) -> list[Vec]:
    """Vertices of the bounded polytope cut out by the half-spaces."""
    verts: list = []
    for a, b, c in combinations(hs, 3):
        v = solve3([a.normal, b.normal, c.normal], [a.offset, b.offset, c.offset])
        if v is None:
            continue
        if all(h.value(v).sign() <= 0 for h in hs) and v not in verts:
            verts.append(v)
    return verts


def polytope_faces(hs: list[HalfSpace], verts: list[Vec]) -> list[list[int]]:
    """Vertex-index cycles of the facets, ordered by angle (floats are enough for ordering)."""
    faces = []
    for h in hs:
        idx = [i for i, v in enumerate(verts) if not h.value(v)]
        if len(idx) < 3:
            continue
        pts = [[float(x) for x in verts[i]] for i in idx]
        cx = [sum(p[k] for p in pts) / len(pts) for k in range(3)]
        n = [float(x) for x in h.normal]
        # an orthonormal frame in the plane
        u = [pts[0][k] - cx[k] for k in range(3)]
        ul = math.sqrt(sum(x * x for x in u)) or 1.0
        u = [x / ul for x in u]
        w = [n[1] * u[2] - n[2] * u[1], n[2] * u[0] - n[0] * u[2], n[0] * u[1] - n[1] * u[0]]
        ang = []
        for i, p in zip(idx, pts):
            r = [p[k] - cx[k] for k in range(3)]
            ang.append((math.atan2(sum(a * b for a, b in zip(r, w)), sum(a * b for a, b in zip(r, u))), i))
        faces.append([i for _, i in sorted(ang)])
    return faces
