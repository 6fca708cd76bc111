"""The Heisenberg group C x R, its Cygan metric and its similarities."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .qfield import KNum, RealQuad


class CplxRQ:
    """Complex number re + i*im with re, im in Q(sqrt d)."""

    __slots__ = ("re", "im")

    def __init__(self, re: RealQuad, im: RealQuad):
        self.re = re
        self.im = im

    @classmethod
    def from_knum(cls, z: KNum) -> CplxRQ:
        return cls(RealQuad(z.x, 0, z.d), RealQuad(0, z.y, z.d))

    @classmethod
    def const(cls, x, d: int) -> CplxRQ:
        return cls(RealQuad(x, 0, d), RealQuad(0, 0, d))

    @property
    def d(self) -> int:
        return self.re.d

    def __add__(self, o: CplxRQ) -> CplxRQ:
        return CplxRQ(self.re + o.re, self.im + o.im)

    def __sub__(self, o: CplxRQ) -> CplxRQ:
        return CplxRQ(self.re - o.re, self.im - o.im)

    def __neg__(self) -> CplxRQ:
        return CplxRQ(-self.re, -self.im)

    def __mul__(self, o) -> CplxRQ:
        if isinstance(o, CplxRQ):
            return CplxRQ(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)
        return CplxRQ(self.re * o, self.im * o)

    __rmul__ = __mul__

    def conj(self) -> CplxRQ:
        return CplxRQ(self.re, -self.im)

    def abs2(self) -> RealQuad:
        return self.re * self.re + self.im * self.im

    def __eq__(self, o):
        if not isinstance(o, CplxRQ):
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def to_knum(self) -> KNum | None:
        """The K-rational value, or None when the number is not in Q(sqrt -d)."""
        if self.re.b or self.im.a:
            return None
        return KNum(self.re.a, self.im.b, self.d)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"CplxRQ({self.re}, {self.im})"


def im_mul_conj(z: CplxRQ, w: CplxRQ) -> RealQuad:
    """Im(z * conj(w))."""
    return z.im * w.re - z.re * w.im


@dataclass(frozen=True)
class HeisPoint:
    zeta: CplxRQ
    t: RealQuad

    @property
    def d(self) -> int:
        return self.t.d

    def as_floats(self) -> tuple[float, float, float]:
        return float(self.zeta.re), float(self.zeta.im), float(self.t)

    def is_k_rational(self) -> bool:
        return self.zeta.to_knum() is not None and self.t.a == 0


@dataclass(frozen=True)
class HoroPoint:
    """Horospherical coordinates (zeta, t, u); u = 0 is the boundary."""
    zeta: CplxRQ
    t: RealQuad
    u: RealQuad

    def heis(self) -> HeisPoint:
        return HeisPoint(self.zeta, self.t)


def heis_point(zeta, t, d: int) -> HeisPoint:
    """Convenience constructor accepting KNum/CplxRQ for zeta and rational/RealQuad for t."""
    if isinstance(zeta, KNum):
        zeta = CplxRQ.from_knum(zeta)
    elif not isinstance(zeta, CplxRQ):
        zeta = CplxRQ.const(zeta, d)
    if not isinstance(t, RealQuad):
        t = RealQuad(t, 0, d)
    return HeisPoint(zeta, t)


def heis_compose(p: HeisPoint, q: HeisPoint) -> HeisPoint:
    return HeisPoint(p.zeta + q.zeta, p.t + q.t + 2 * im_mul_conj(p.zeta, q.zeta))


def heis_inverse(p: HeisPoint) -> HeisPoint:
    return HeisPoint(-p.zeta, -p.t)


def _xy(p, q) -> tuple[RealQuad, RealQuad]:
    x = (p.zeta - q.zeta).abs2()
    y = q.t - p.t - 2 * im_mul_conj(p.zeta, q.zeta)
    return x, y


def cygan_dist4(p: HeisPoint, q: HeisPoint) -> RealQuad:
    """Fourth power of the Cygan distance between boundary points."""
    x, y = _xy(p, q)
    return x * x + y * y


def cygan_ext_dist4(p: HoroPoint, q: HoroPoint) -> RealQuad:
    """Fourth power of the extended Cygan distance on horospherical coordinates."""
    x, y = _xy(p, q)
    du = p.u - q.u
    x = x + (du if du.sign() >= 0 else -du)
    return x * x + y * y


def vertical_project(p: HeisPoint) -> CplxRQ:
    return p.zeta


def heis_translation(tau: CplxRQ, v: RealQuad) -> Callable[[HeisPoint], HeisPoint]:
    """Left translation by (tau, v)."""
    left = HeisPoint(tau, v)
    return lambda p: heis_compose(left, p)


def heis_rotation(theta: CplxRQ) -> Callable[[HeisPoint], HeisPoint]:
    """(zeta, t) -> (theta*zeta, t) for a unit complex number theta."""
    if theta.abs2() != 1:
        raise ValueError("rotation needs |theta| = 1")
    return lambda p: HeisPoint(theta * p.zeta, p.t)


def heis_dilation(r: RealQuad) -> Callable[[HeisPoint], HeisPoint]:
    """(zeta, t) -> (r*zeta, r^2*t) for r > 0."""
    if r.sign() <= 0:
        raise ValueError("dilation needs r > 0")
    return lambda p: HeisPoint(p.zeta * r, p.t * r * r)


def _iv(x: RealQuad):
    from mpmath import iv
    return iv.mpf(x.a.numerator) / x.a.denominator + \
        iv.mpf(x.b.numerator) / x.b.denominator * iv.sqrt(x.d)


def cygan_dist_interval(p: HeisPoint, q: HeisPoint):
    """An mpmath interval enclosing the Cygan distance rho0(p, q)."""
    from mpmath import iv
    r4 = _iv(cygan_dist4(p, q))
    if r4.a < 0:
        r4 = iv.mpf([0, r4.b])
    return iv.sqrt(iv.sqrt(r4))


def triangle_slack(a: HeisPoint, b: HeisPoint, c: HeisPoint):
    """A guaranteed lower bound (mpf) for rho0(a,b) + rho0(b,c) - rho0(a,c)."""
    from mpmath import mpf
    s = cygan_dist_interval(a, b) + cygan_dist_interval(b, c) - cygan_dist_interval(a, c)
    return mpf(s.a)
