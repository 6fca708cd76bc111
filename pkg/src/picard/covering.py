"""Cygan balls covering the prism, and exact certificates that they do."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from . import covering_data as data
from .heisenberg import CplxRQ, HeisPoint, HoroPoint, im_mul_conj
from .isometry import CyganBall, GroupElem, act_boundary, isometric_sphere
from .polyroots import isolate_roots
from .polytope import (coords, enumerate_vertices, halfspace_excluding, plane_through,
                       polytope_faces, HalfSpace)
from .qfield import RealQuad, check_d
from .stabilizer import _cached_prism
from .words import Word, evaluate_word, format_word, parse_word


def ball_value(p, ball: CyganBall) -> RealQuad:
    """X^2 + Y^2 - r^4; negative exactly inside the ball."""
    c = ball.center
    x = (p.zeta - c.zeta).abs2()
    if isinstance(p, HoroPoint):
        x = x + p.u
    y = p.t - c.t + 2 * im_mul_conj(p.zeta, c.zeta)
    return x * x + y * y - ball.r4


def ball_side(p, ball: CyganBall) -> int:
    """-1 inside, 0 on the isometric sphere, +1 outside."""
    return ball_value(p, ball).sign()


def ball_value_float(xyz, ball_f) -> float:
    x0, y0, t0, r4 = ball_f
    x, y, t = xyz
    X = (x - x0) ** 2 + (y - y0) ** 2
    Y = t - t0 + 2 * (y * x0 - x * y0)
    return X * X + Y * Y - r4


# --- the families -------------------------------------------------------------

@dataclass(frozen=True)
class FamilyMember:
    label: str
    word: Word  # stabiliser element W
    base_word: Word  # B, whose isometric sphere is moved by W
    element: GroupElem  # B W^-1, whose isometric sphere is this ball
    ball: CyganBall

    def floats(self):
        return self.ball.as_floats()


@dataclass(frozen=True)
class SphereFamily:
    d: int
    members: tuple

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def labels(self) -> list[str]:
        return [m.label for m in self.members]

    def get(self, label: str) -> FamilyMember:
        for m in self.members:
            if m.label == label:
                return m
        raise KeyError(label)

    def without(self, label: str) -> SphereFamily:
        return SphereFamily(self.d, tuple(m for m in self.members if m.label != label))

    def subset(self, labels: Iterable[str]) -> SphereFamily:
        return SphereFamily(self.d, tuple(self.get(l) for l in labels))


def member_label(w: Word, base: str) -> str:
    return base if not len(w) else f"{format_word(w)}({base})"


def make_member(d: int, wtxt: str, btxt: str, base_label: str) -> FamilyMember:
    W, B = parse_word(wtxt), parse_word(btxt)
    Wm, Bm = evaluate_word(W, d), evaluate_word(B, d)
    A = Bm @ Wm.inverse()
    ball = isometric_sphere(A)
    # the same ball computed by moving the base sphere
    base = isometric_sphere(Bm)
    moved = act_boundary(Wm, base.center)
    if moved != ball.center or base.r4 != ball.r4:
        raise AssertionError("transported sphere disagrees with isometric sphere of B W^-1")
    return FamilyMember(member_label(W, base_label), W, B, A, ball)


@lru_cache(maxsize=None)
def covering_spheres(d: int) -> SphereFamily:
    check_d(d)
    names = data.BASE_LABELS_7 if d == 7 else data.BASE_LABELS
    return SphereFamily(d, tuple(make_member(d, w, b, names[b]) for w, b in data.FAMILIES[d]))


# --- cells and certificates ----------------------------------------------------

@dataclass
class Cell:
    label: str
    points: dict  # name -> HeisPoint
    target: object  # ball label, or tuple of labels for a star cell
    faces: list = field(default_factory=list)  # name cycles
    apex: str | None = None
    note: str = ""

    @property
    def names(self) -> list[str]:
        return list(self.points)


@dataclass
class CheckLine:
    cell: str
    ball: str
    point: str
    sign: int
    ok: bool
    extra: str = ""

    def text(self) -> str:
        s = f"cell={self.cell} ball={self.ball} point={self.point} sign={self.sign:+d}"
        if self.extra:
            s += " " + self.extra
        return s + f" verdict={'pass' if self.ok else 'fail'}"

    def as_dict(self) -> dict:
        return {"cell": self.cell, "ball": self.ball, "point": self.point, "sign": self.sign,
                "verdict": "pass" if self.ok else "fail", "extra": self.extra}


@dataclass
class Certificate:
    cell: str
    target: object
    lines: list
    ok: bool
    note: str = ""

    def failures(self) -> list[CheckLine]:
        return [l for l in self.lines if not l.ok]


def cell_in_ball(cell: Cell, member: FamilyMember) -> Certificate:
    """Every vertex strictly inside one ball; Cygan balls are convex, so the hull is too."""
    lines = []
    for name, p in cell.points.items():
        s = ball_side(p, member.ball)
        lines.append(CheckLine(cell.label, member.label, name, s, s < 0))
    return Certificate(cell.label, member.label, lines, all(l.ok for l in lines), cell.note)


def _closed_surface(faces: Sequence[Sequence[str]]) -> bool:
    count: dict = {}
    for f in faces:
        for a, b in zip(f, list(f[1:]) + [f[0]]):
            k = frozenset((a, b))
            count[k] = count.get(k, 0) + 1
    return all(v == 2 for v in count.values())


def _tri_ball_float(tri, members):
    """Members whose balls contain all three points, by float value, best first."""
    fl = [p.as_floats() for p in tri]
    cands = []
    for m in members:
        bf = m.floats()
        worst = max(ball_value_float(x, bf) for x in fl)
        cands.append((worst, m))
    cands.sort(key=lambda c: c[0])
    return [m for w, m in cands if w < 1e-6]


def _tri_in_some_ball(tri, members, cache) -> FamilyMember | None:
    for m in _tri_ball_float(tri, members):
        ok = True
        for p in tri:
            key = (p, m.label)
            s = cache.get(key)
            if s is None:
                s = cache[key] = ball_side(p, m.ball)
            if s >= 0:
                ok = False
                break
        if ok:
            return m
    return None


def _midpoint(p: HeisPoint, q: HeisPoint) -> HeisPoint:
    return HeisPoint(CplxRQ((p.zeta.re + q.zeta.re) / 2, (p.zeta.im + q.zeta.im) / 2), (p.t + q.t) / 2)


def _certify_triangle(tri, members, cache, depth: int, max_depth: int):
    """(ok, pieces, balls used), splitting into four by midpoints when needed."""
    m = _tri_in_some_ball(tri, members, cache)
    if m is not None:
        return True, 1, {m.label}
    if depth >= max_depth:
        return False, 1, set()
    a, b, c = tri
    ab, bc, ca = _midpoint(a, b), _midpoint(b, c), _midpoint(c, a)
    pieces, used = 0, set()
    for sub in ((a, ab, ca), (ab, b, bc), (ca, bc, c), (ab, bc, ca)):
        ok, n, u = _certify_triangle(sub, members, cache, depth + 1, max_depth)
        if not ok:
            return False, pieces + n, used
        pieces += n
        used |= u
    return True, pieces, used


def _fans(face: Sequence[str]):
    n = len(face)
    for r in range(n):
        f = list(face[r:]) + list(face[:r])
        yield [[f[0], f[i], f[i + 1]] for i in range(1, n - 1)]


def star_cell_in_union(cell: Cell, family: SphereFamily, max_depth: int = 6) -> Certificate:
    """Star certificate: the apex lies in every ball of the union, and every boundary
    triangle (after refinement) has its vertices inside one ball of the union.

    The cone from the apex over a closed boundary surface covers the enclosed
    region, and each cone over a triangle lies in the ball holding the triangle."""
    members = [m for m in family if m.label in cell.target]
    pts = cell.points
    lines = []
    apex = pts[cell.apex]
    for m in members:
        s = ball_side(apex, m.ball)
        lines.append(CheckLine(cell.label, m.label, cell.apex, s, s < 0, "role=apex"))
    closed = _closed_surface(cell.faces)
    lines.append(CheckLine(cell.label, "-", "-", 0, closed, f"role=surface closed={'yes' if closed else 'no'}"))
    cache: dict = {}
    for face in cell.faces:
        best = None
        for depth in (0, max_depth):
            for fan in _fans(face):
                res = [(tri,) + _certify_triangle([pts[x] for x in tri], members, cache, 0, depth)
                       for tri in fan]
                if best is None:
                    best = res
                if all(r[1] for r in res):
                    best = res
                    break
            if all(r[1] for r in best):
                break
        for tri, ok, n, used in best:
            lines.append(CheckLine(cell.label, "+".join(sorted(used)) or "none", ",".join(tri),
                                   -1 if ok else 1, ok, f"role=face pieces={n}"))
    return Certificate(cell.label, tuple(cell.target), lines, all(l.ok for l in lines), cell.note)


def certify_cell(cell: Cell, family: SphereFamily) -> Certificate:
    if isinstance(cell.target, tuple):
        return star_cell_in_union(cell, family)
    if cell.target not in family.labels():
        line = CheckLine(cell.label, cell.target, "-", 1, False, "role=missing-ball")
        return Certificate(cell.label, cell.target, [line], False, cell.note)
    return cell_in_ball(cell, family.get(cell.target))


def minimality_probe(d: int) -> dict:
    """For each ball, the published cells whose certificate fails once that ball is removed."""
    fam = covering_spheres(d)
    cells = published_cells(d)
    out = {}
    for m in fam:
        reduced = fam.without(m.label)
        out[m.label] = [c.label for c in cells if not certify_cell(c, reduced).ok]
    return out


# --- the published decompositions ---------------------------------------------

def named_points(d: int, literal: bool = False) -> dict:
    P = _cached_prism(d)
    pts = dict(P.vertices)
    if d == 7:
        pts.update(data.D7_POINTS)
    elif d == 11:
        pts.update(data.D11_POINTS)
        if literal:
            pts.update(data.D11_POINTS_LITERAL)
    return pts


def _names_of(layout) -> list[str]:
    if layout and isinstance(layout[0], list):
        out = []
        for f in layout:
            for n in f:
                if n not in out:
                    out.append(n)
        return out
    return list(layout)


def _build(label, layout, target, apex, pts, note="") -> Cell:
    faces = layout if layout and isinstance(layout[0], list) else []
    names = _names_of(layout)
    if apex and apex not in names:
        names = names + [apex]
    return Cell(label, {n: pts[n] for n in names}, target, faces, apex, note)


def published_cells(d: int, literal: bool = False) -> list[Cell]:
    """The cells of the decomposition; literal=True replays the printed values."""
    check_d(d)
    if d == 2:
        return d2_cells()
    pts = named_points(d, literal)
    out = []
    if d == 7:
        for label, (names, ball) in data.D7_CELLS.items():
            if literal and label in data.D7_CELLS_LITERAL:
                names, ball = data.D7_CELLS_LITERAL[label]
            out.append(_build(label, names, ball, None, pts))
        return out
    for label, (kind, layout, target, apex) in data.D11_CELLS.items():
        if literal and label in data.D11_CELLS_LITERAL:
            kind, layout, target, apex = data.D11_CELLS_LITERAL[label]
        out.append(_build(label, layout, target, apex, pts))
    return out


# --- d = 2: corner tetrahedra and the core --------------------------------------

D2_LAMBDA = RealQuad(Fraction(1, 2), Fraction(-1, 4), 2)  # (2 - sqrt2)/4 of each edge


def _lerp(p: HeisPoint, q: HeisPoint, lam: RealQuad) -> HeisPoint:
    return HeisPoint(CplxRQ(p.zeta.re + (q.zeta.re - p.zeta.re) * lam, p.zeta.im + (q.zeta.im - p.zeta.im) * lam),
                     p.t + (q.t - p.t) * lam)


def d2_corner_edges() -> dict:
    """corner -> its three neighbouring corners (vertical edge first)."""
    out = {}
    for s, o in (("+", "-"), ("-", "+")):
        for i, (j, k) in {1: (2, 3), 2: (3, 1), 3: (1, 2)}.items():
            out[f"v{i}{s}"] = [f"v{i}{o}", f"v{j}{s}", f"v{k}{s}"]
    return out


def d2_cut_points() -> dict:
    P = _cached_prism(2)
    cuts = {}
    for c, nbrs in d2_corner_edges().items():
        cuts[c] = [_lerp(P.point(c), P.point(n), D2_LAMBDA) for n in nbrs]
    return cuts


def d2_cut_planes() -> dict:
    return {c: plane_through(*(coords(p) for p in pts), label=c) for c, pts in d2_cut_points().items()}


def d2_prism_halfspaces() -> list[HalfSpace]:
    P = _cached_prism(2)
    v = P.vertices
    # the centroid of the triangle at height 0
    inner = (RealQuad(Fraction(1, 3), 0, 2), RealQuad(0, Fraction(1, 6), 2), RealQuad(0, 0, 2))
    faces = [("v1+", "v2+", "v3+"), ("v1-", "v2-", "v3-"), ("v1+", "v2+", "v2-"),
             ("v2+", "v3+", "v3-"), ("v3+", "v1+", "v1-")]
    out = []
    for f in faces:
        pl = plane_through(*(coords(v[n]) for n in f), label="prism")
        # keep the side containing an interior point
        out.append(pl if pl.value(inner).sign() < 0 else pl.flipped())
    return out


def d2_core_vertices() -> tuple[list, list[HalfSpace]]:
    P = _cached_prism(2)
    hs = d2_prism_halfspaces()
    for c, pl in d2_cut_planes().items():
        hs.append(halfspace_excluding(pl, coords(P.point(c))))
    return enumerate_vertices(hs), hs


def d2_separation_checks() -> list[CheckLine]:
    """Each cut plane leaves its corner strictly on one side and the other five strictly on the other."""
    P = _cached_prism(2)
    lines = []
    corners = list(data.D2_CORNER_BALLS)
    for c, pl in d2_cut_planes().items():
        sc = pl.value(coords(P.point(c))).sign()
        for o in corners:
            if o == c:
                continue
            so = pl.value(coords(P.point(o))).sign()
            ok = sc != 0 and so == -sc
            lines.append(CheckLine(f"T({c})", "plane", o, so * (sc or 1), ok, "role=separation"))
    return lines


def d2_cells() -> list[Cell]:
    P = _cached_prism(2)
    cuts = d2_cut_points()
    cells = []
    for c, ball in data.D2_CORNER_BALLS.items():
        pts = {c: P.point(c)}
        for k, p in enumerate(cuts[c], 1):
            pts[f"{c}^{k}"] = p
        faces = [[c, f"{c}^1", f"{c}^2"], [c, f"{c}^2", f"{c}^3"], [c, f"{c}^3", f"{c}^1"],
                 [f"{c}^1", f"{c}^2", f"{c}^3"]]
        cells.append(Cell(f"T({c})", pts, ball, faces))
    verts, hs = d2_core_vertices()
    pts = {f"c{i}": HeisPoint(CplxRQ(v[0], v[1]), v[2]) for i, v in enumerate(verts)}
    faces = [[f"c{i}" for i in f] for f in polytope_faces(hs, verts)]
    cells.append(Cell("core", pts, "S0", faces))
    return cells


# --- edge crossings -----------------------------------------------------------

@dataclass
class EdgeCrossing:
    lo: Fraction
    hi: Fraction
    entering: bool  # the edge enters the ball as lambda increases past the root

    def coords_at(self, a: HeisPoint, b: HeisPoint):
        return _lerp(a, b, RealQuad(self.lo, 0, a.d)), _lerp(a, b, RealQuad(self.hi, 0, a.d))


def edge_polynomial(a: HeisPoint, b: HeisPoint, ball: CyganBall) -> list:
    """F(lambda) = ball_value(a + lambda (b - a)), coefficients lowest first."""
    d = a.d
    c = ball.center
    w = a.zeta - c.zeta
    dz = b.zeta - a.zeta
    x0 = w.abs2()
    x1 = 2 * (w.re * dz.re + w.im * dz.im)
    x2 = dz.abs2()
    y0 = a.t - c.t + 2 * im_mul_conj(a.zeta, c.zeta)
    y1 = (b.t - a.t) + 2 * im_mul_conj(dz, c.zeta)
    X = [x0, x1, x2]
    Y = [y0, y1]
    out = [RealQuad(0, 0, d)] * 5
    for i, p in enumerate(X):
        for j, q in enumerate(X):
            out[i + j] = out[i + j] + p * q
    for i, p in enumerate(Y):
        for j, q in enumerate(Y):
            out[i + j] = out[i + j] + p * q
    out[0] = out[0] - ball.r4
    return out


def edge_sphere_interval(a: HeisPoint, b: HeisPoint, ball: CyganBall,
                         tol: float = 1e-3) -> list[EdgeCrossing]:
    """Isolating intervals in lambda in [0, 1] for the crossings of segment a->b with the sphere,
    refined until they are tol-narrow in lambda and in every coordinate."""
    from .polyroots import peval, trim
    p = trim(edge_polynomial(a, b, ball))
    span = max(abs(x) for x in (float(b.zeta.re - a.zeta.re), float(b.zeta.im - a.zeta.im),
                                float(b.t - a.t)))
    w = Fraction(tol) / max(1, math.ceil(span + 1))
    out = []
    for lo, hi in isolate_roots(p, Fraction(0), Fraction(1), w):
        eps = max(hi - lo, w / 16)
        before = peval(p, RealQuad(max(lo - eps, Fraction(0)), 0, a.d)).sign()
        after = peval(p, RealQuad(min(hi + eps, Fraction(1)), 0, a.d)).sign()
        out.append(EdgeCrossing(lo, hi, before > 0 >= after))
    return out


def _poly2(coeffs) -> list:
    return [RealQuad(*c, 2) if isinstance(c, tuple) else RealQuad(c, 0, 2) for c in coeffs]


def _edge_coord(p: HeisPoint, which: str) -> RealQuad:
    return p.t if which == "t" else p.zeta.im


def d2_edge_checks() -> list[CheckLine]:
    """The crossings of S0 and S1 with the three edges at v1+, each isolated to width
    <= 1e-3 and matched to its closed form by an exact sign change of a defining polynomial."""
    from .polyroots import peval, sturm_sequence, count_roots
    P = _cached_prism(2)
    fam = covering_spheres(2)
    lines = []
    for (s, e), which, ends in data.D2_EDGE_CLAIMS:
        a, b = P.point(s), P.point(e)
        cell = f"edge({s},{e})"
        found = []
        for label, coeffs, approx in ends:
            crossings = edge_sphere_interval(a, b, fam.get(label).ball)
            best = None
            for c in crossings:
                lo, hi = sorted((_edge_coord(q, which) for q in c.coords_at(a, b)), key=float)
                if best is None or abs(float(lo + hi) / 2 - approx) < abs(float(best[0] + best[1]) / 2 - approx):
                    best = (lo, hi)
            if best is None:
                lines.append(CheckLine(cell, label, which, 0, False, "role=edge no crossing"))
                continue
            lo, hi = best
            poly = _poly2(coeffs)
            sg = peval(poly, lo).sign() * peval(poly, hi).sign()
            width = float(hi - lo)
            ok = sg <= 0 and width <= 1e-3 and abs(float(lo + hi) / 2 - approx) < 2e-3
            found.append((lo, hi))
            lines.append(CheckLine(cell, label, f"{which}=[{float(lo):.6f},{float(hi):.6f}]", sg, ok,
                                   f"role=edge width={width:.1e}"))
        if len(found) == 2:
            # between the two crossings the edge lies in both balls
            (l0, h0), (l1, h1) = sorted(found, key=lambda x: float(x[0]))
            mid = (h0 + l1) * RealQuad(Fraction(1, 2), 0, 2)
            lam = (mid - _edge_coord(a, which)) / (_edge_coord(b, which) - _edge_coord(a, which))
            q = _lerp(a, b, lam)
            sides = [ball_side(q, fam.get(label).ball) for label, _, _ in ends]
            lines.append(CheckLine(cell, "S0&S1", f"{which}={float(mid):.6f}", max(sides),
                                   all(x < 0 for x in sides), "role=edge-interior"))
    for name, coeffs, lo, hi in data.D2_DELTA_BRACKETS:
        poly = _poly2(coeffs)
        seq = sturm_sequence(poly)
        bound = Fraction(math.ceil(1 + max(abs(float(c)) for c in poly) / abs(float(poly[-1]))))
        sg = peval(poly, RealQuad(lo, 0, 2)).sign() * peval(poly, RealQuad(hi, 0, 2)).sign()
        inside = count_roots(seq, RealQuad(lo, 0, 2), RealQuad(hi, 0, 2))
        above = count_roots(seq, RealQuad(hi, 0, 2), RealQuad(bound, 0, 2))
        lines.append(CheckLine("root", name, f"({float(lo)},{float(hi)})", sg,
                               sg < 0 and inside == 1 and above == 0,
                               f"role=largest-root roots_in={inside} roots_above={above}"))
    name, balls = data.D2_SAMPLE
    p = data.D2_V1_CUTS[name]
    for label in balls:
        sd = ball_side(p, fam.get(label).ball)
        lines.append(CheckLine("sample", label, name, sd, sd < 0, "role=point"))
    return lines


# --- point claims and locations ----------------------------------------------

def point_claim_checks(d: int) -> list[CheckLine]:
    if d != 11:
        return []
    fam = covering_spheres(d)
    pts = named_points(d)
    lines = []
    for name, balls in data.D11_POINT_CLAIMS.items():
        for b in balls:
            s = ball_side(pts[name], fam.get(b).ball)
            lines.append(CheckLine("claim", b, name, s, s < 0, "role=point"))
    return lines


def _literal_point_replay(fam: SphereFamily) -> Certificate:
    P = _cached_prism(11)
    lines = []
    for name, p in data.D11_POINTS_LITERAL.items():
        ok = P.location(p)["inside"]
        lines.append(CheckLine(name, "prism", name, 0, ok, "role=location"))
        for b in data.D11_POINT_CLAIMS.get(name, ()):
            s = ball_side(p, fam.get(b).ball)
            lines.append(CheckLine(name, b, name, s, s < 0, "role=point"))
    return Certificate("points", "-", lines, all(l.ok for l in lines))


def _on_segment(p: HeisPoint, a: HeisPoint, b: HeisPoint) -> bool:
    pa, ba = [p.zeta.re - a.zeta.re, p.zeta.im - a.zeta.im, p.t - a.t], \
        [b.zeta.re - a.zeta.re, b.zeta.im - a.zeta.im, b.t - a.t]
    lam = None
    for x, y in zip(pa, ba):
        if y:
            lam = x / y
            break
    if lam is None:
        return False
    if not all(x == y * lam for x, y in zip(pa, ba)):
        return False
    return 0 <= lam <= 1


def location_checks(d: int, literal: bool = False) -> list[CheckLine]:
    P = _cached_prism(d)
    pts = named_points(d, literal)
    lines = []
    if d == 7:
        for name, p in data.D7_POINTS.items():
            loc = P.location(p)
            ok = loc["inside"] and bool(loc["sides"] or loc["caps"])
            lines.append(CheckLine("location", "prism boundary", name, 0, ok, "role=location"))
    elif d == 11:
        for name, claim in data.D11_LOCATIONS.items():
            p = pts[name]
            loc = P.location(p)
            kind = claim[0]
            if kind == "edge":
                ok = _on_segment(p, P.point(claim[1]), P.point(claim[2]))
                where = f"edge({claim[1]},{claim[2]})"
            elif kind == "side":
                ok = loc["inside"] and loc["sides"] == [claim[1]] and not loc["caps"]
                where = f"side{claim[1]}-interior"
            elif kind in ("top", "bottom"):
                ok = loc["inside"] and not loc["sides"] and loc["caps"] == [kind]
                where = f"{kind}-interior"
            else:
                ok = P.contains(p, strict=True)
                where = "interior"
            lines.append(CheckLine("location", where, name, 0, ok, "role=location"))
    return lines


def corner_coverage(d: int, cells: list[Cell]) -> CheckLine:
    P = _cached_prism(d)
    corners = [n + s for n in P.corner_names for s in "+-"]
    covered = set()
    for c in cells:
        for name, p in c.points.items():
            for k in corners:
                if P.point(k) == p:
                    covered.add(k)
    missing = [k for k in corners if k not in covered]
    return CheckLine("corners", "-", ",".join(corners), 0, not missing,
                     "role=corners missing=" + (",".join(missing) or "none"))


# --- the report ---------------------------------------------------------------

@dataclass
class CoveringReport:
    d: int
    family: SphereFamily
    certificates: list  # for the cells as corrected
    literal: list  # replays of the published values where corrections were made
    points: list
    locations: list
    corners: CheckLine
    extra: list  # d = 2 separation checks
    subdivision: object = None
    corrections: list = field(default_factory=list)

    @property
    def cells_ok(self) -> bool:
        return all(c.ok for c in self.certificates) and self.corners.ok and all(l.ok for l in self.extra)

    @property
    def ok(self) -> bool:
        parts = [self.cells_ok, all(l.ok for l in self.points), all(l.ok for l in self.locations)]
        if self.subdivision is not None:
            parts.append(self.subdivision.ok)
        return all(parts)

    def lines(self) -> list[CheckLine]:
        out = []
        for c in self.certificates:
            out.extend(c.lines)
        out.append(self.corners)
        out.extend(self.extra)
        out.extend(self.points)
        out.extend(self.locations)
        for c in self.literal:
            for l in c.lines:
                out.append(CheckLine("literal:" + l.cell, l.ball, l.point, l.sign, l.ok, l.extra))
        if self.subdivision is not None:
            out.append(self.subdivision.line())
        return out


def verify_covering(d: int, subdivision: bool = True) -> CoveringReport:
    check_d(d)
    fam = covering_spheres(d)
    cells = published_cells(d)
    certs = [certify_cell(c, fam) for c in cells]
    lit = []
    if d != 2:
        changed = set(data.D7_CELLS_LITERAL if d == 7 else data.D11_CELLS_LITERAL)
        for c in published_cells(d, literal=True):
            if c.label in changed:
                lit.append(certify_cell(c, fam))
        if d == 11:
            lit.append(_literal_point_replay(fam))
    extra = d2_separation_checks() + d2_edge_checks() if d == 2 else []
    sub = None
    if subdivision:
        from .subdivision import certify_subdivision
        sub = certify_subdivision(d, fam)
    return CoveringReport(d, fam, certs, lit, point_claim_checks(d), location_checks(d),
                          corner_coverage(d, cells), extra, sub, data.CORRECTIONS.get(d, []))


def sample_interior(ball: CyganBall, rng, denom: int = 997) -> HeisPoint:
    """A random point with rational offsets from the centre, strictly inside the ball."""
    d = ball.center.d
    r = float(ball.r4) ** 0.25
    c = ball.center
    while True:
        ox, oy, ot = (Fraction(rng.randint(-denom, denom), denom) * Fraction(r).limit_denominator(64)
                      for _ in range(3))
        zeta = c.zeta + CplxRQ(RealQuad(ox, 0, d), RealQuad(oy, 0, d))
        # keep the Heisenberg shape: move t by the twist too so samples spread over the ball
        t = c.t + RealQuad(ot * Fraction(r).limit_denominator(64), 0, d) - 2 * im_mul_conj(zeta, c.zeta)
        p = HeisPoint(zeta, t)
        if ball_side(p, ball) < 0:
            return p
