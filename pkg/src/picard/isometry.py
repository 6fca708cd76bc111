"""Matrices in U(2,1) over Q(sqrt -d), their action on the boundary and isometric spheres."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .heisenberg import HeisPoint, HoroPoint, heis_point
from .qfield import KNum, RealQuad, od_contains


class _Infinity:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "INFINITY"


INFINITY = _Infinity()
BoundaryPoint = Union[HeisPoint, _Infinity]


class GroupElem:
    """A 3x3 matrix over Q(sqrt -d), stored row-major.

    Equality is projective: M == N when M = +-N, which is equality in PU(2,1)
    for integral matrices (the only units are +-1)."""

    __slots__ = ("m", "d")

    def __init__(self, rows: Sequence[Sequence], d: int):
        self.d = d
        self.m = tuple(tuple(_k(e, d) for e in row) for row in rows)
        if len(self.m) != 3 or any(len(r) != 3 for r in self.m):
            raise ValueError("expected a 3x3 matrix")

    @classmethod
    def identity(cls, d: int) -> GroupElem:
        return cls([[1, 0, 0], [0, 1, 0], [0, 0, 1]], d)

    def __getitem__(self, ij):
        i, j = ij
        return self.m[i][j]

    def __matmul__(self, o: GroupElem) -> GroupElem:
        a, b = self.m, o.m
        d = self.d
        rows = []
        for i in range(3):
            ai = [(k, a[i][k]) for k in range(3) if a[i][k]]
            row = []
            for j in range(3):
                acc = None
                for k, x in ai:
                    y = b[k][j]
                    if y:
                        acc = x * y if acc is None else acc + x * y
                row.append(acc if acc is not None else KNum(0, 0, d))
            rows.append(row)
        return GroupElem(rows, d)

    def apply(self, v: Sequence[KNum]) -> tuple[KNum, KNum, KNum]:
        a = self.m
        return tuple(a[i][0] * v[0] + a[i][1] * v[1] + a[i][2] * v[2] for i in range(3))

    def star(self) -> GroupElem:
        """Conjugate transpose."""
        return GroupElem([[self.m[j][i].conj() for j in range(3)] for i in range(3)], self.d)

    def inverse(self) -> GroupElem:
        """J M* J, the inverse of a unitary matrix."""
        s = self.star().m
        return GroupElem([[s[2 - i][2 - j] for j in range(3)] for i in range(3)], self.d)

    def __pow__(self, n: int) -> GroupElem:
        if n < 0:
            return self.inverse() ** (-n)
        out = GroupElem.identity(self.d)
        base = self
        while n:
            if n & 1:
                out = out @ base
            base = base @ base
            n >>= 1
        return out

    def neg(self) -> GroupElem:
        return GroupElem([[-e for e in row] for row in self.m], self.d)

    def __eq__(self, o):
        if not isinstance(o, GroupElem):
            return NotImplemented
        return self.m == o.m or self.m == o.neg().m

    def __hash__(self):
        # hash must agree with projective equality
        return hash(frozenset((self.m, self.neg().m)))

    def exactly_equal(self, o: GroupElem) -> bool:
        return self.m == o.m

    def is_identity(self) -> bool:
        return self == GroupElem.identity(self.d)

    def is_integral(self) -> bool:
        return all(od_contains(e) for row in self.m for e in row)

    @property
    def g(self) -> KNum:
        return self.m[2][0]

    def fixes_infinity(self) -> bool:
        return not self.m[2][0]

    def __repr__(self):
        rows = "; ".join(", ".join(str(e) for e in row) for row in self.m)
        return f"GroupElem([{rows}], d={self.d})"


def _k(e, d: int) -> KNum:
    if isinstance(e, KNum):
        return e
    if isinstance(e, (int, Fraction)):
        return KNum(e, 0, d)
    raise TypeError(f"matrix entry {e!r} is not in Q(sqrt -d)")


def J(d: int) -> GroupElem:
    return GroupElem([[0, 0, 1], [0, 1, 0], [1, 0, 0]], d)


def herm_form(z: Sequence[KNum], w: Sequence[KNum]) -> KNum:
    """<z, w> = z1 w3bar + z2 w2bar + z3 w1bar."""
    return z[0] * w[2].conj() + z[1] * w[1].conj() + z[2] * w[0].conj()


def is_unitary(M: GroupElem) -> bool:
    """M* J M == J exactly."""
    return (M.star() @ J(M.d) @ M).exactly_equal(J(M.d))


def boundary_lift(zeta: KNum, t: RealQuad | Fraction | int, u=0) -> tuple[KNum, KNum, KNum]:
    """Standard lift [(-|zeta|^2 - u + i t)/2, zeta, 1] of a K-rational horospherical point."""
    d = zeta.d
    t = t if isinstance(t, RealQuad) else RealQuad(t, 0, d)
    if t.a:
        raise ValueError("t must lie in Q*sqrt(d) for a K-rational lift")
    u = Fraction(u)
    z1 = KNum((-zeta.norm() - u) / 2, t.b / 2, d)
    return z1, zeta, KNum(1, 0, d)


def _knum_coords(p: HeisPoint) -> tuple[KNum, RealQuad]:
    z = p.zeta.to_knum()
    if z is None or p.t.a:
        raise ValueError("point is not K-rational")
    return z, p.t


def lift_point(p: Union[HeisPoint, _Infinity], d: int) -> tuple[KNum, KNum, KNum]:
    if p is INFINITY:
        return KNum(1, 0, d), KNum(0, 0, d), KNum(0, 0, d)
    z, t = _knum_coords(p)
    return boundary_lift(z, t)


def dehomogenize(v: Sequence[KNum]) -> Union[HeisPoint, HoroPoint, _Infinity]:
    """Horospherical coordinates of [z1, z2, z3]; a HeisPoint when on the boundary."""
    z1, z2, z3 = v
    d = z1.d
    if not z3:
        if z2:
            raise ValueError("vector is not in closure of complex hyperbolic space")
        return INFINITY
    zeta = z2 / z3
    w = z1 / z3
    t = RealQuad(0, 2 * w.y, d)
    u = -zeta.norm() - 2 * w.x
    p = heis_point(zeta, t, d)
    if u == 0:
        return p
    return HoroPoint(p.zeta, p.t, RealQuad(u, 0, d))


def act_boundary(M: GroupElem, p: BoundaryPoint) -> BoundaryPoint:
    return dehomogenize(M.apply(lift_point(p, M.d)))


@dataclass(frozen=True)
class CyganBall:
    """{p : rho0(p, center)^4 < r4}; the isometric sphere is its boundary."""
    center: HeisPoint
    r4: RealQuad

    def as_floats(self):
        return self.center.as_floats() + (float(self.r4),)


def isometric_sphere(M: GroupElem) -> CyganBall:
    """Centre M^-1(infinity) and radius r with r^4 = 4/|g|^2."""
    g = M.g
    if not g:
        raise ValueError("M fixes infinity and has no isometric sphere")
    d = M.d
    h, j = M[2, 1], M[2, 2]
    zeta = h.conj() / g.conj()
    t = RealQuad(0, 2 * (j.conj() / g.conj()).y, d)
    return CyganBall(heis_point(zeta, t, d), RealQuad(Fraction(4) / g.norm(), 0, d))


def pi_star(M: GroupElem) -> tuple[tuple[KNum, KNum], tuple[KNum, KNum]]:
    """Action of a stabiliser element on the vertical projection: zeta -> e*zeta + f."""
    if not M.fixes_infinity() or M[2, 1]:
        raise ValueError("M does not fix infinity")
    j = M[2, 2]
    e = M[1, 1] / j
    f = M[1, 2] / j
    d = M.d
    return (e, f), (KNum(0, 0, d), KNum(1, 0, d))


def translation_matrix(beta: KNum, t: RealQuad | Fraction | int) -> GroupElem:
    """The Heisenberg translation T_{beta,t} as a matrix (not necessarily integral)."""
    d = beta.d
    t = t if isinstance(t, RealQuad) else RealQuad(t, 0, d)
    if t.a:
        raise ValueError("t must lie in Q*sqrt(d)")
    corner = KNum(-beta.norm() / 2, t.b / 2, d)
    return GroupElem([[1, -beta.conj(), corner], [0, 1, beta], [0, 0, 1]], d)


def lift_translation(beta: KNum, t: RealQuad | Fraction | int, d: int) -> GroupElem | None:
    """T_{beta,t} when it is integral, else None."""
    if beta.d != d and beta.y:
        raise ValueError("beta has the wrong d")
    beta = KNum(beta.x, beta.y, d)
    M = translation_matrix(beta, t)
    return M if M.is_integral() else None


def g_norm(M: GroupElem) -> Fraction:
    return M.g.norm()


def interior_act(M: GroupElem, p: HoroPoint):
    """Action on a K-rational horospherical point with rational height u."""
    z = p.zeta.to_knum()
    if z is None or p.t.a or p.u.b:
        raise ValueError("point is not K-rational")
    return dehomogenize(M.apply(boundary_lift(z, p.t, p.u.a)))
