"""Writing elements of the Picard modular groups as words in the generators.

Given N with g != 0, z = N(infinity) is moved into the prism by a stabiliser
element P and then lies strictly inside some ball iso(A) of the covering family.
Since |(X N)_31| = |g_N| |g_X| rho0(N(inf), X^-1(inf))^2 / 2, the element
A P N has strictly smaller |g|^2. Once g = 0 the remainder fixes infinity."""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .covering import ball_value, covering_spheres
from .generators import GEN_NAMES
from .isometry import INFINITY, GroupElem, act_boundary, is_unitary
from .qfield import check_d
from .stabilizer import InternalError, generator_orders, prism_reduce, stab_decompose
from .words import Word, evaluate_word, format_word, parse_word, reduce_orders  # noqa: F401  (re-exported)


class NonUnitary(ValueError):
    pass


class NonIntegral(ValueError):
    pass


class CoveringViolation(RuntimeError):
    """A reduced point that no ball of the family contains; the covering would be false."""


@dataclass
class Trace:
    g_norms: list = field(default_factory=list)  # |g|^2 before each step
    balls: list = field(default_factory=list)


def nearest_ball(z, d: int):
    """The family member containing z most deeply; ties go to the earlier member."""
    best = None
    for m in covering_spheres(d):
        v = ball_value(z, m.ball)
        if v.sign() < 0 and (best is None or v < best[0]):
            best = (v, m)
    if best is None:
        raise CoveringViolation(f"no ball of the family contains {z}")
    return best[1]


def decompose(M: GroupElem, check: bool = False, trace: Trace | None = None) -> Word:
    """A word w with evaluate_word(w) == M in PU(2,1)."""
    d = M.d
    check_d(d)
    if not is_unitary(M):
        raise NonUnitary("matrix is not unitary for the form J")
    if not M.is_integral():
        raise NonIntegral(f"matrix entries are not all in O_{d}")
    N = M
    W = Word()
    while N.g:
        g2 = N.g.norm()
        z = act_boundary(N, INFINITY)
        Pw, zr = prism_reduce(z, d)
        m = nearest_ball(zr, d)
        N_new = m.element @ evaluate_word(Pw, d) @ N
        if not N_new.g.norm() < g2:
            raise InternalError("|g|^2 did not decrease")
        if trace is not None:
            trace.g_norms.append(g2)
            trace.balls.append(m.label)
        # M = W N = W P^-1 A^-1 (A P N), and A^-1 = W_k B^-1
        W = W + Pw.inverse() + m.word + m.base_word.inverse()
        N = N_new
        if check and not (evaluate_word(W, d) @ N) == M:
            raise InternalError("bookkeeping broke the invariant M = W N")
    W = reduce_orders(W + stab_decompose(N), generator_orders(d))
    if check and not evaluate_word(W, d) == M:
        raise InternalError("decomposition does not evaluate to the input")
    return W


def random_word(d: int, length: int, seed: int | None = None) -> Word:
    check_d(d)
    rng = random.Random(seed)
    letters = [(rng.choice(GEN_NAMES), rng.choice((1, -1))) for _ in range(length)]
    return Word(tuple(letters))


def random_element(d: int, length: int, seed: int | None = None) -> GroupElem:
    return evaluate_word(random_word(d, length, seed), d)
