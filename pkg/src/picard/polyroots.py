"""Real root isolation for polynomials over Q(sqrt d) via Sturm sequences."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .qfield import RealQuad

# A polynomial is a list of RealQuad coefficients, lowest degree first.


def trim(p: list) -> list:
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def padd(p, q):
    n = max(len(p), len(q))
    z = _zero(p, q)
    return trim([(p[i] if i < len(p) else z) + (q[i] if i < len(q) else z) for i in range(n)])


def pneg(p):
    return [-c for c in p]


def pmul(p, q):
    if not p or not q:
        return []
    z = _zero(p, q)
    out = [z] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return trim(out)


def _zero(p, q=()):
    for c in list(p) + list(q):
        if isinstance(c, RealQuad):
            return RealQuad(0, 0, c.d)
    return RealQuad(0, 0, 2)


def pdivmod(p, q):
    p, q = trim(p), trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    z = _zero(p, q)
    quo = [z] * max(len(p) - len(q) + 1, 0)
    rem = list(p)
    lead = q[-1]
    while len(rem) >= len(q) and rem:
        k = len(rem) - len(q)
        c = rem[-1] / lead
        quo[k] = c
        for i, b in enumerate(q):
            rem[i + k] = rem[i + k] - c * b
        rem = trim(rem[:-1]) if not rem[-1] else trim(rem)
    return trim(quo), trim(rem)


def pderiv(p):
    return trim([c * i for i, c in enumerate(p)][1:])


def peval(p, x):
    acc = _zero(p)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def sturm_sequence(p) -> list:
    seq = [trim(p), pderiv(p)]
    while seq[-1]:
        _, r = pdivmod(seq[-2], seq[-1])
        if not r:
            break
        seq.append(pneg(r))
    return seq


def _variations(seq, x) -> int:
    signs = [s for s in (peval(q, x).sign() for q in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(seq, a, b) -> int:
    """Number of distinct real roots in (a, b]."""
    return _variations(seq, a) - _variations(seq, b)


def isolate_roots(p, lo: Fraction, hi: Fraction, width: Fraction) -> list[tuple[Fraction, Fraction]]:
    """Intervals [a, b] with b - a <= width, each holding exactly one distinct root in [lo, hi].

    A root found exactly is returned as the degenerate interval [r, r]."""
    p = trim(p)
    if len(p) <= 1:
        return []
    seq = sturm_sequence(p)
    out = []
    if not peval(p, lo):
        out.append((lo, lo))
    stack = [(lo, hi)]
    while stack:
        a, b = stack.pop()
        n = count_roots(seq, a, b)  # roots in (a, b]
        if n == 0:
            continue
        if n == 1 and not peval(p, b):
            out.append((b, b))
        elif n == 1 and b - a <= width:
            out.append((a, b))
        else:
            m = (a + b) / 2
            stack.append((m, b))
            stack.append((a, m))
    return sorted(out)


def poly_from_coeffs(coeffs: Sequence, d: int) -> list:
    return trim([c if isinstance(c, RealQuad) else RealQuad(c, 0, d) for c in coeffs])
