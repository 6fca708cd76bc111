import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from picard.qfield import (KNum, RealQuad, format_knum, od_contains, od_round, od_units, omega,
                           parse_knum)

from conftest import DS, knums, realquads


def test_sign_examples():
    assert RealQuad(0, 0, 2).sign() == 0
    assert RealQuad(Fraction(-3, 2), 1, 2).sign() == -1  # sqrt2 < 3/2
    assert RealQuad(Fraction(-3, 2), 1, 7).sign() == 1
    assert RealQuad(1, -1, 2).sign() == -1
    assert RealQuad(-2, 1, 2).sign() == -1


def test_norm_examples():
    assert omega(7).norm() == 2
    assert KNum(0, 0, 2).norm() == 0
    assert KNum(1, 1, 2).norm() == 3
    assert omega(11).norm() == 3


def test_od_contains_examples():
    assert od_contains(omega(7))
    assert not od_contains(KNum(Fraction(1, 2), 0, 2))
    assert od_contains(KNum(Fraction(3, 2), Fraction(1, 2), 11))
    assert not od_contains(KNum(Fraction(1, 2), 0, 7))
    assert not od_contains(KNum(0, Fraction(1, 2), 2))


def test_od_round_examples():
    assert od_round(KNum(Fraction(2, 5), Fraction(1, 10), 2)) == KNum(0, 0, 2)
    assert od_round(KNum(Fraction(1, 2), 0, 2)) == KNum(0, 0, 2)  # tie, lexicographic
    w = omega(11) + 3
    assert od_round(w) == w


def test_units():
    for d in DS:
        assert od_units(d) == [KNum(1, 0, d), KNum(-1, 0, d)]
    with pytest.raises(ValueError):
        od_units(3)


def test_mixed_d_rejected():
    with pytest.raises(ValueError):
        KNum(1, 1, 2) + KNum(1, 1, 7)
    with pytest.raises(ValueError):
        RealQuad(0, 1, 2) * RealQuad(0, 1, 7)


def test_canonical_text():
    z = KNum(Fraction(-3, 4), Fraction(5, 6), 7)
    assert format_knum(z) == "-3/4+5/6*sqrt(-7)"
    assert parse_knum(format_knum(z)) == z
    assert parse_knum("2+0*sqrt(-2)") == KNum(2, 0, 2)


@given(realquads(), st.data())
def test_field_axioms_realquad(x, data):
    y = data.draw(realquads(x.d))
    z = data.draw(realquads(x.d))
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    if x:
        assert x * x.inverse() == 1


@given(realquads(), st.data())
def test_sign_is_total_order(x, data):
    y = data.draw(realquads(x.d))
    assert x.sign() == -(-x).sign()
    assert (x * x).sign() >= 0
    assert sum([x < y, x == y, x > y]) == 1
    # sign agrees with floats when clearly separated from zero
    if abs(float(x)) > 1e-9:
        assert x.sign() == (1 if float(x) > 0 else -1)


@given(knums(), st.data())
def test_field_axioms_knum(z, data):
    w = data.draw(knums(z.d))
    assert (z * w).norm() == z.norm() * w.norm()
    assert (z * w).conj() == z.conj() * w.conj()
    assert z * (w + 1) == z * w + z
    if z:
        assert z * z.inverse() == 1


@given(st.sampled_from(DS), st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9))
def test_od_closure(d, a, b, c, e):
    w = omega(d) if d != 2 else KNum(0, 1, 2)
    z1 = a + b * w
    z2 = c + e * w
    assert od_contains(z1) and od_contains(z2)
    assert od_contains(z1 + z2) and od_contains(z1 * z2)
    assert (z1.norm()).denominator == 1


@pytest.mark.parametrize("d", DS)
def test_od_round_euclidean(d):
    rng = random.Random(d)
    for _ in range(1000):
        z = KNum(Fraction(rng.randint(-500, 500), rng.randint(1, 60)),
                 Fraction(rng.randint(-500, 500), rng.randint(1, 60)), d)
        w = od_round(z)
        assert od_contains(w)
        assert (z - w).norm() < 1
