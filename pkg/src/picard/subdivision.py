"""An independent covering certificate by adaptive subdivision of the prism.

The prism is the affine image of (triangle) x [0, 1]. Cells are split eight
ways (the triangle into four, the interval into two) until all six vertices of
a cell lie strictly inside one ball; convexity of Cygan balls does the rest."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .covering import CheckLine, SphereFamily, ball_side, ball_value_float
from .heisenberg import CplxRQ, HeisPoint
from .qfield import RealQuad
from .stabilizer import _cached_prism

HALF = Fraction(1, 2)


class _Mapper:
    def __init__(self, d: int):
        P = _cached_prism(d)
        self.d = d
        a, b, c = (P.point(n + "-") for n in P.corner_names)
        self.a, self.ab, self.ac = a, (b.zeta - a.zeta, b.t - a.t), (c.zeta - a.zeta, c.t - a.t)
        self.h = P.height
        self.cache: dict = {}
        self.fcache: dict = {}

    def point(self, al: Fraction, be: Fraction, ga: Fraction) -> HeisPoint:
        key = (al, be, ga)
        p = self.cache.get(key)
        if p is None:
            d = self.d
            A, B, G = RealQuad(al, 0, d), RealQuad(be, 0, d), RealQuad(ga, 0, d)
            z = self.a.zeta + self.ab[0] * A + self.ac[0] * B
            t = self.a.t + self.ab[1] * A + self.ac[1] * B + self.h * G
            p = self.cache[key] = HeisPoint(CplxRQ(z.re, z.im), t)
            self.fcache[key] = p.as_floats()
        return p

    def floats(self, key):
        self.point(*key)
        return self.fcache[key]


@dataclass
class SubdivisionResult:
    d: int
    ok: bool
    leaves: int
    max_depth: int
    usage: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)  # centres of cells that could not be certified
    limit: int = 0

    def line(self) -> CheckLine:
        used = ",".join(f"{k}:{v}" for k, v in self.usage.items())
        return CheckLine("subdivision", "family", "-", 0, self.ok,
                         f"role=subdivision leaves={self.leaves} depth={self.max_depth} "
                         f"unresolved={len(self.failures)} usage={used}")


def certify_subdivision(d: int, family: SphereFamily, max_depth: int = 14,
                        max_failures: int = 1) -> SubdivisionResult:
    M = _Mapper(d)
    members = list(family)
    fl = [m.floats() for m in members]
    exact: dict = {}
    usage = {m.label: 0 for m in members}
    res = SubdivisionResult(d, True, 0, 0, usage, [], max_depth)
    z, o = Fraction(0), Fraction(1)
    stack = [(((z, z), (o, z), (z, o)), (z, o), 0)]
    while stack:
        tri, (g0, g1), depth = stack.pop()
        keys = [(a, b, g) for (a, b) in tri for g in (g0, g1)]
        pts_f = [M.floats(k) for k in keys]
        order = sorted(range(len(members)),
                       key=lambda i: max(ball_value_float(x, fl[i]) for x in pts_f))
        found = None
        for i in order:
            if max(ball_value_float(x, fl[i]) for x in pts_f) > 1e-6:
                break
            ok = True
            for k in keys:
                s = exact.get((k, i))
                if s is None:
                    s = exact[(k, i)] = ball_side(M.point(*k), members[i].ball)
                if s >= 0:
                    ok = False
                    break
            if ok:
                found = i
                break
        if found is not None:
            res.leaves += 1
            res.max_depth = max(res.max_depth, depth)
            usage[members[found].label] += 1
            continue
        if depth >= max_depth:
            res.ok = False
            (a0, b0), (a1, b1), (a2, b2) = tri
            res.failures.append(((a0 + a1 + a2) / 3, (b0 + b1 + b2) / 3, (g0 + g1) / 2))
            if len(res.failures) >= max_failures:
                return res
            continue
        p, q, r = tri
        pq = ((p[0] + q[0]) * HALF, (p[1] + q[1]) * HALF)
        qr = ((q[0] + r[0]) * HALF, (q[1] + r[1]) * HALF)
        rp = ((r[0] + p[0]) * HALF, (r[1] + p[1]) * HALF)
        gm = (g0 + g1) * HALF
        for sub in ((p, pq, rp), (pq, q, qr), (rp, qr, r), (pq, qr, rp)):
            for gi in ((g0, gm), (gm, g1)):
                stack.append((sub, gi, depth + 1))
    return res


def param_point(d: int, al, be, ga) -> HeisPoint:
    return _Mapper(d).point(Fraction(al), Fraction(be), Fraction(ga))


@dataclass
class NecessityResult:
    label: str
    status: str  # "necessary", "redundant" or "undetermined"
    witness: object = None  # a prism point outside every other ball
    witness_name: str = ""

    def line(self) -> CheckLine:
        extra = f"role=minimality status={self.status}"
        if self.witness is not None:
            extra += f" witness={self.witness_name}"
        return CheckLine("minimality", self.label, self.witness_name or "-", 0,
                         self.status != "redundant", extra)


def find_witness(d: int, family: SphereFamily, label: str, extra_points: dict | None = None,
                 grid: int = 24):
    """A point of the closed prism lying in no open ball of the family except the given one."""
    others = [m for m in family if m.label != label]
    fl = [m.floats() for m in others]
    P = _cached_prism(d)
    named = dict(P.vertices)
    if extra_points:
        named.update(extra_points)
    for name, p in named.items():
        if P.contains(p) and all(ball_side(p, m.ball) >= 0 for m in others):
            return name, p
    M = _Mapper(d)
    n = grid
    scored = []
    for i in range(n + 1):
        for j in range(n + 1 - i):
            for k in range(n + 1):
                key = (Fraction(i, n), Fraction(j, n), Fraction(k, n))
                x = M.floats(key)
                v = min(ball_value_float(x, b) for b in fl)
                if v > -1e-9:
                    scored.append((-v, key))
    scored.sort()
    for _, key in scored[:50]:
        p = M.point(*key)
        if all(ball_side(p, m.ball) >= 0 for m in others):
            return f"grid({','.join(str(c) for c in key)})", p
    return None


def necessity(d: int, family: SphereFamily, extra_points: dict | None = None,
              max_depth: int = 10) -> list[NecessityResult]:
    out = []
    for m in family:
        w = find_witness(d, family, m.label, extra_points)
        if w is not None:
            out.append(NecessityResult(m.label, "necessary", w[1], w[0]))
            continue
        sub = certify_subdivision(d, family.without(m.label), max_depth=max_depth)
        out.append(NecessityResult(m.label, "redundant" if sub.ok else "undetermined"))
    return out
