"""Triangle meshes of the prisms, the covering spheres and the cells, for plotting."""
from __future__ import annotations

import math
from itertools import combinations

from .covering import covering_spheres, published_cells
from .qfield import check_d
from .stabilizer import _cached_prism

FORMAT_VERSION = 1


def sphere_mesh(ball, label: str, rings: int = 12, sectors: int = 24) -> dict:
    """Both sheets t = t0 - 2 Im(zeta conj(zeta0)) +- sqrt(r^4 - |zeta - zeta0|^4) over the disc."""
    x0, y0, t0, r4 = ball.as_floats()
    r = r4 ** 0.25
    verts = []
    tris = []

    def vert(s, th, sheet):
        x = x0 + s * math.cos(th)
        y = y0 + s * math.sin(th)
        h = math.sqrt(max(r4 - s ** 4, 0.0))
        t = t0 - 2 * (y * x0 - x * y0) + sheet * h
        verts.append([x, y, t])
        return len(verts) - 1

    rim = [vert(r, 2 * math.pi * k / sectors, 0) for k in range(sectors)]
    for sheet in (1, -1):
        pole = vert(0.0, 0.0, sheet)
        prev = None
        for i in range(1, rings):
            s = r * math.sin(0.5 * math.pi * i / rings)
            ring = [vert(s, 2 * math.pi * k / sectors, sheet) for k in range(sectors)]
            if prev is None:
                for k in range(sectors):
                    tris.append([pole, ring[k], ring[(k + 1) % sectors]])
            else:
                _band(tris, prev, ring)
            prev = ring
        _band(tris, prev, rim)
    return {"label": label, "vertices": verts, "triangles": tris}


def _band(tris, a, b):
    n = len(a)
    for k in range(n):
        k1 = (k + 1) % n
        tris.append([a[k], b[k], b[k1]])
        tris.append([a[k], b[k1], a[k1]])


def hull_faces(pts: list) -> list:
    """Facets of the convex hull of a small point set, as index cycles."""
    n = len(pts)
    planes = []
    for i, j, k in combinations(range(n), 3):
        a, b, c = pts[i], pts[j], pts[k]
        u = [b[m] - a[m] for m in range(3)]
        v = [c[m] - a[m] for m in range(3)]
        nv = [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]]
        ln = math.sqrt(sum(x * x for x in nv))
        if ln < 1e-12:
            continue
        nv = [x / ln for x in nv]
        off = sum(nv[m] * a[m] for m in range(3))
        vals = [sum(nv[m] * p[m] for m in range(3)) - off for p in pts]
        if all(x <= 1e-9 for x in vals) or all(x >= -1e-9 for x in vals):
            on = frozenset(q for q in range(n) if abs(vals[q]) <= 1e-9)
            if on not in [p[0] for p in planes]:
                planes.append((on, nv))
    faces = []
    for on, nv in planes:
        idx = sorted(on)
        cx = [sum(pts[q][m] for q in idx) / len(idx) for m in range(3)]
        u = [pts[idx[0]][m] - cx[m] for m in range(3)]
        w = [nv[1] * u[2] - nv[2] * u[1], nv[2] * u[0] - nv[0] * u[2], nv[0] * u[1] - nv[1] * u[0]]
        ang = sorted((math.atan2(sum((pts[q][m] - cx[m]) * w[m] for m in range(3)),
                                 sum((pts[q][m] - cx[m]) * u[m] for m in range(3))), q) for q in idx)
        faces.append([q for _, q in ang])
    return faces


def _fan(faces):
    tris = []
    for f in faces:
        for i in range(1, len(f) - 1):
            tris.append([f[0], f[i], f[i + 1]])
    return tris


def prism_mesh(d: int) -> dict:
    P = _cached_prism(d)
    names = [n + s for s in "+-" for n in P.corner_names]
    verts = [list(P.point(n).as_floats()) for n in names]
    tris = _fan(hull_faces(verts))
    return {"label": f"prism{d}", "vertices": verts, "triangles": tris}


def cell_mesh(cell) -> dict:
    names = list(cell.points)
    verts = [list(cell.points[n].as_floats()) for n in names]
    if cell.faces and isinstance(cell.target, tuple):
        index = {n: i for i, n in enumerate(names)}
        faces = [[index[n] for n in f] for f in cell.faces]
    else:
        faces = hull_faces(verts)
    return {"label": cell.label, "vertices": verts, "triangles": _fan(faces)}


def export(what: str, d: int, resolution: int = 12) -> dict:
    check_d(d)
    if what == "spheres":
        meshes = [sphere_mesh(m.ball, m.label, resolution, 2 * resolution) for m in covering_spheres(d)]
    elif what == "prism":
        meshes = [prism_mesh(d)]
    elif what == "cells":
        meshes = [cell_mesh(c) for c in published_cells(d)]
    else:
        raise ValueError(f"unknown export target {what!r}")
    return {"v": FORMAT_VERSION, "what": what, "d": d, "meshes": meshes}
