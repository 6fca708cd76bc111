"""Exact arithmetic in Q(sqrt d), Q(sqrt -d) and their ring of integers."""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Union

SUPPORTED_D = (2, 7, 11)

Rat = Union[int, Fraction]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not a rational: {x!r}")


def check_d(d: int) -> int:
    if d not in SUPPORTED_D:
        raise ValueError(f"unsupported d={d}; expected one of {SUPPORTED_D}")
    return d


class RealQuad:
    """a + b*sqrt(d) with rational a, b."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a: Rat = 0, b: Rat = 0, d: int = 2):
        self.a = _frac(a)
        self.b = _frac(b)
        self.d = d

    def _coerce(self, other) -> RealQuad:
        if isinstance(other, RealQuad):
            if other.d != self.d and other.b and self.b:
                raise ValueError(f"mixed d: {self.d} and {other.d}")
            if other.d != self.d and other.b:
                return RealQuad(other.a, other.b, other.d)
            return other if other.d == self.d else RealQuad(other.a, 0, self.d)
        if isinstance(other, (int, Fraction)):
            return RealQuad(other, 0, self.d)
        return NotImplemented

    def _dd(self, o: RealQuad) -> int:
        # the d of a combination; a purely rational side adopts the other's d
        if self.d == o.d:
            return self.d
        if not self.b:
            return o.d
        if not o.b:
            return self.d
        raise ValueError(f"mixed d: {self.d} and {o.d}")

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RealQuad(self.a + o.a, self.b + o.b, self._dd(o))

    __radd__ = __add__

    def __neg__(self):
        return RealQuad(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RealQuad(self.a - o.a, self.b - o.b, self._dd(o))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        d = self._dd(o)
        return RealQuad(self.a * o.a + d * self.b * o.b, self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def conj(self) -> RealQuad:
        """Galois conjugate a - b*sqrt(d)."""
        return RealQuad(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def inverse(self) -> RealQuad:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("RealQuad division by zero")
        return RealQuad(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = RealQuad(1, 0, self.d)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def sign(self) -> int:
        a, b = self.a, self.b
        sa = (a > 0) - (a < 0)
        sb = (b > 0) - (b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare a^2 with d b^2
        n = a * a - self.d * b * b
        if n > 0:
            return sa
        if n < 0:
            return sb
        return 0

    def is_rational(self) -> bool:
        return self.b == 0

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        o = self._coerce(other) if isinstance(other, (int, Fraction, RealQuad)) else NotImplemented
        if o is NotImplemented:
            return NotImplemented
        if self.b == 0 and o.b == 0:
            return self.a == o.a
        return self.d == o.d and self.a == o.a and self.b == o.b

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def _cmp(self, other) -> int:
        return (self - other).sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def floor(self) -> int:
        n = math.floor(float(self))
        while self < n:
            n -= 1
        while self >= n + 1:
            n += 1
        return n

    def __repr__(self):
        return f"RealQuad({self.a}, {self.b}, d={self.d})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*sqrt({self.d})"
        sgn = "+" if self.b > 0 else "-"
        return f"{self.a}{sgn}{abs(self.b)}*sqrt({self.d})"


def sqrt_d(d: int, coeff: Rat = 1) -> RealQuad:
    return RealQuad(0, coeff, d)


class KNum:
    """x + y*sqrt(-d) with rational x, y."""

    __slots__ = ("x", "y", "d")

    def __init__(self, x: Rat = 0, y: Rat = 0, d: int = 2):
        self.x = _frac(x)
        self.y = _frac(y)
        self.d = d

    def _coerce(self, other) -> KNum:
        if isinstance(other, KNum):
            if other.d != self.d:
                if other.y and self.y:
                    raise ValueError(f"mixed d: {self.d} and {other.d}")
                if other.y:
                    return other
                return KNum(other.x, 0, self.d)
            return other
        if isinstance(other, (int, Fraction)):
            return KNum(other, 0, self.d)
        return NotImplemented

    def _dd(self, o: KNum) -> int:
        if self.d == o.d:
            return self.d
        if not self.y:
            return o.d
        if not o.y:
            return self.d
        raise ValueError(f"mixed d: {self.d} and {o.d}")

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return KNum(self.x + o.x, self.y + o.y, self._dd(o))

    __radd__ = __add__

    def __neg__(self):
        return KNum(-self.x, -self.y, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return KNum(self.x - o.x, self.y - o.y, self._dd(o))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        d = self._dd(o)
        if not o.y:
            return KNum(self.x * o.x, self.y * o.x, d)
        if not self.y:
            return KNum(self.x * o.x, self.x * o.y, d)
        return KNum(self.x * o.x - d * self.y * o.y, self.x * o.y + self.y * o.x, d)

    __rmul__ = __mul__

    def conj(self) -> KNum:
        return KNum(self.x, -self.y, self.d)

    def norm(self) -> Fraction:
        """|z|^2 = x^2 + d y^2."""
        return self.x * self.x + self.d * self.y * self.y

    def inverse(self) -> KNum:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("KNum division by zero")
        return KNum(self.x / n, -self.y / n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = KNum(1, 0, self.d)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def re(self) -> RealQuad:
        return RealQuad(self.x, 0, self.d)

    def im(self) -> RealQuad:
        return RealQuad(0, self.y, self.d)

    def __bool__(self):
        return bool(self.x) or bool(self.y)

    def __eq__(self, other):
        if not isinstance(other, (int, Fraction, KNum)):
            return NotImplemented
        o = self._coerce(other)
        if self.y == 0 and o.y == 0:
            return self.x == o.x
        return self.d == o.d and self.x == o.x and self.y == o.y

    def __hash__(self):
        if self.y == 0:
            return hash(self.x)
        return hash((self.x, self.y, self.d))

    def __complex__(self):
        return complex(float(self.x), float(self.y) * math.sqrt(self.d))

    def __repr__(self):
        return f"KNum({self.x}, {self.y}, d={self.d})"

    def __str__(self):
        return format_knum(self)


def i_sqrt(d: int, coeff: Rat = 1) -> KNum:
    return KNum(0, coeff, d)


def omega(d: int) -> KNum:
    """Generator of O_d over Z: i*sqrt(2) for d=2, (1+sqrt(-d))/2 otherwise."""
    check_d(d)
    if d % 4 == 3:
        return KNum(Fraction(1, 2), Fraction(1, 2), d)
    return KNum(0, 1, d)


def od_contains(z: KNum) -> bool:
    x, y = z.x, z.y
    if z.d % 4 == 3:
        return (2 * y).denominator == 1 and (x - y).denominator == 1
    return x.denominator == 1 and y.denominator == 1


def od_element(z: KNum) -> KNum:
    if not od_contains(z):
        raise ValueError(f"{z} is not in O_{z.d}")
    return z


def od_coords(z: KNum) -> tuple[Fraction, Fraction]:
    """(m, n) with z = m + n*omega(d)."""
    if z.d % 4 == 3:
        n = 2 * z.y
        return z.x - n / 2, n
    return z.x, z.y


def od_from_coords(m: Rat, n: Rat, d: int) -> KNum:
    return KNum(m, 0, d) + omega(d) * n


def od_round(z: KNum) -> KNum:
    """Nearest element of O_d to z.

    Ties break on the smallest (real part, imaginary part)."""
    d = z.d
    best = None
    if d % 4 == 3:
        n0 = math.floor(2 * z.y)
        for n in range(n0 - 1, n0 + 3):
            m0 = math.floor(z.x - Fraction(n, 2))
            for m in range(m0 - 1, m0 + 3):
                w = od_from_coords(m, n, d)
                key = ((z - w).norm(), w.x, w.y)
                if best is None or key < best[0]:
                    best = (key, w)
    else:
        for x in (math.floor(z.x), math.floor(z.x) + 1):
            for y in (math.floor(z.y), math.floor(z.y) + 1):
                w = KNum(x, y, d)
                key = ((z - w).norm(), w.x, w.y)
                if best is None or key < best[0]:
                    best = (key, w)
    return best[1]


def od_units(d: int) -> list[KNum]:
    check_d(d)
    return [KNum(1, 0, d), KNum(-1, 0, d)]


def format_knum(z: KNum) -> str:
    y = z.y
    sign = "-" if y < 0 else "+"
    return f"{z.x}{sign}{abs(y)}*sqrt(-{z.d})"


_KNUM_RE = re.compile(
    r"^\s*([+-]?\d+(?:/\d+)?)\s*([+-])\s*(\d+(?:/\d+)?)\s*\*\s*sqrt\(\s*-\s*(\d+)\s*\)\s*$"
)


def parse_knum(text: str, d: int | None = None) -> KNum:
    """Inverse of format_knum; a bare rational is also accepted when d is given."""
    m = _KNUM_RE.match(text)
    if m:
        x, sign, y, dd = m.groups()
        dd = int(dd)
        if d is not None and dd != d:
            raise ValueError(f"{text!r} has d={dd}, expected {d}")
        yv = Fraction(y)
        return KNum(Fraction(x), yv if sign == "+" else -yv, dd)
    if d is not None:
        try:
            return KNum(Fraction(text.strip()), 0, d)
        except ValueError:
            pass
    raise ValueError(f"cannot parse {text!r} as an element of Q(sqrt(-d))")
