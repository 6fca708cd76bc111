import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from picard.generators import generators, unit_sphere_element
from picard.heisenberg import CplxRQ, HeisPoint, heis_point
from picard.isometry import (INFINITY, GroupElem, act_boundary, boundary_lift, herm_form,
                             isometric_sphere, is_unitary, lift_translation, pi_star)
from picard.qfield import KNum, RealQuad, omega
from picard.words import evaluate_word, parse_word

from conftest import DS, k_rational_points

STAB = ("R1", "R2", "R3", "T")


def ev(w, d):
    return evaluate_word(parse_word(w), d)


def random_stab(d, rng, n=6):
    return ev(" ".join(f"{rng.choice(STAB)}^{rng.choice((-1, 1))}" for _ in range(n)), d)


def test_herm_form_examples():
    d = 2
    qinf = [KNum(1, 0, d), KNum(0, 0, d), KNum(0, 0, d)]
    assert herm_form(qinf, qinf) == 0
    o = [KNum(0, 0, d), KNum(0, 0, d), KNum(1, 0, d)]
    assert herm_form(o, o) == 0
    v = boundary_lift(KNum(0, 0, d), 0, 1)
    assert herm_form(v, v) == -1


def test_lift_examples():
    assert boundary_lift(KNum(0, 0, 2), 0) == (KNum(0, 0, 2), KNum(0, 0, 2), KNum(1, 0, 2))
    assert boundary_lift(KNum(0, 0, 2), RealQuad(0, 2, 2))[0] == KNum(0, 1, 2)
    assert boundary_lift(KNum(1, 0, 2), 0)[0] == KNum(Fraction(-1, 2), 0, 2)
    with pytest.raises(ValueError):
        boundary_lift(KNum(0, 0, 2), RealQuad(1, 0, 2))


def test_unitarity_examples():
    G = generators(2)
    assert is_unitary(GroupElem.identity(2))
    assert is_unitary(G["I0"])
    bad = GroupElem([[0, 0, 2], [0, -1, 0], [1, 0, 0]], 2)
    assert not is_unitary(bad)


def test_action_examples():
    G = generators(2)
    o = heis_point(0, 0, 2)
    assert act_boundary(G["I0"], INFINITY) == o
    assert act_boundary(G["I0"], o) is INFINITY
    assert act_boundary(G["R2"], o) == heis_point(2, 0, 2)
    z = heis_point(KNum(Fraction(1, 3), Fraction(1, 5), 2), RealQuad(0, Fraction(1, 7), 2), 2)
    assert act_boundary(G["T"], z) == HeisPoint(z.zeta, z.t + RealQuad(0, 2, 2))
    # R2 : (zeta, t) -> (-zeta + 2, t + 4 Im zeta)
    w = act_boundary(G["R2"], z)
    assert w.zeta == CplxRQ.const(2, 2) - z.zeta
    assert w.t == z.t + 4 * z.zeta.im


def test_isometric_sphere_examples():
    G = generators(2)
    b = isometric_sphere(G["I0"])
    assert b.center == heis_point(0, 0, 2) and b.r4 == 4
    b = isometric_sphere(ev("I0 R2 I0", 2))
    assert b.center == heis_point(1, 0, 2) and b.r4 == 1
    assert ev("I0 R2 I0", 2)[2, 0] == KNum(-2, 0, 2)
    # d = 7: I0 R2 I0 and its inverse have |g|^2 = 2
    b = isometric_sphere(ev("I0 R2 I0", 7))
    assert b.r4 == 2
    assert b.center == heis_point(omega(7).conj() / 2, RealQuad(0, Fraction(1, 2), 7), 7)
    b = isometric_sphere(ev("I0 R2^-1 I0", 7))
    assert b.center == heis_point(omega(7) / 2, RealQuad(0, Fraction(-1, 2), 7), 7)
    with pytest.raises(ValueError):
        isometric_sphere(G["T"])


def test_pi_star_examples():
    G = generators(2)
    one = (KNum(1, 0, 2), KNum(0, 0, 2))
    assert pi_star(G["T"])[0] == one
    assert pi_star(G["R2"])[0] == (KNum(-1, 0, 2), KNum(2, 0, 2))
    with pytest.raises(ValueError):
        pi_star(G["I0"])


def test_lift_translation_examples():
    assert lift_translation(KNum(1, 1, 2), RealQuad(0, 2, 2), 2) is None
    M = lift_translation(KNum(2, 0, 2), 0, 2)
    assert M is not None and is_unitary(M)
    # (-|w|^2 + i sqrt7)/2 = -3/2 + w7 is not integral, so t must be an even multiple of sqrt7 here
    assert lift_translation(omega(7), RealQuad(0, 1, 7), 7) is None
    M = lift_translation(omega(7), RealQuad(0, 2, 7), 7)
    assert M is not None and M[0, 2] == KNum(-1, 1, 7)
    # |beta|^2 odd needs an odd multiple
    assert lift_translation(KNum(1, 0, 7), RealQuad(0, 1, 7), 7) is not None


@pytest.mark.parametrize("d", DS)
def test_generators_unitary_integral(d):
    for name, M in generators(d).gens.items():
        assert is_unitary(M), name
        assert M.is_integral(), name
    G = generators(d)
    assert (G["I0"] @ G["I0"]).exactly_equal(GroupElem.identity(d))


def test_generator_rows():
    assert generators(2)["R3"].m[0] == (KNum(1, 0, 2), KNum(0, -1, 2), KNum(-1, 0, 2))
    assert generators(7)["R3"].m[0] == (KNum(1, 0, 7), omega(7).conj(), KNum(-1, 0, 7))
    assert generators(11)["R3"].m[0] == (KNum(1, 0, 11), omega(11).conj(), -1 - omega(11).conj())


@pytest.mark.parametrize("d", DS)
@settings(max_examples=25, deadline=None)
@given(data=st.data(), seed=st.integers(0, 10 ** 6))
def test_action_is_group_action(d, data, seed):
    rng = random.Random(seed)
    p = data.draw(k_rational_points(d))
    M = ev(" ".join(rng.choice(("I0", "R1", "R2", "R3", "T")) for _ in range(4)), d)
    N = ev(" ".join(rng.choice(("I0", "R1", "R2", "R3", "T")) for _ in range(4)), d)
    assert act_boundary(M @ N, p) == act_boundary(M, act_boundary(N, p))
    assert act_boundary(M.inverse(), act_boundary(M, p)) == p


@pytest.mark.parametrize("d", DS)
@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_lift_norm(d, data):
    p = data.draw(k_rational_points(d))
    u = data.draw(st.fractions(0, 5, max_denominator=9))
    v = boundary_lift(p.zeta.to_knum(), p.t, u)
    assert herm_form(v, v) == KNum(-u, 0, d)


@pytest.mark.parametrize("d", DS)
def test_sphere_centre_is_preimage_of_infinity(d):
    rng = random.Random(d)
    for _ in range(30):
        M = ev(" ".join(rng.choice(("I0", "R1", "R2", "R3", "T")) for _ in range(5)), d)
        if M.fixes_infinity():
            continue
        b = isometric_sphere(M)
        assert act_boundary(M.inverse(), INFINITY) == b.center
        assert b.r4 == Fraction(4) / M.g.norm()


@pytest.mark.parametrize("d", DS)
def test_pi_star_homomorphism(d):
    rng = random.Random(7 * d)

    def mul(a, b):
        (e1, f1), _ = a
        (e2, f2), _ = b
        return e1 * e2, e1 * f2 + f1

    for _ in range(40):
        A, B = random_stab(d, rng), random_stab(d, rng)
        assert pi_star(A @ B)[0] == mul(pi_star(A), pi_star(B))


def test_lift_criterion_d2():
    rng = random.Random(2)
    for _ in range(200):
        beta = KNum(rng.randint(-6, 6), rng.randint(-6, 6), 2)
        M = lift_translation(beta, RealQuad(0, 2 * rng.randint(-3, 3), 2), 2)
        assert (M is not None) == (beta.norm() % 2 == 0)


@pytest.mark.parametrize("d", (7, 11))
def test_lift_criterion_odd(d):
    # every beta in O_d lifts; the vertical part must make (-|beta|^2 + i t)/2 integral
    rng = random.Random(d)
    for _ in range(200):
        beta = rng.randint(-6, 6) + rng.randint(-6, 6) * omega(d)
        n2 = beta.norm()
        t = RealQuad(0, n2 % 2 + 2 * rng.randint(-3, 3), d)
        M = lift_translation(beta, t, d)
        assert M is not None and is_unitary(M)
        bad = lift_translation(beta, t + RealQuad(0, 1, d), d)
        assert bad is None


@pytest.mark.parametrize("d", DS)
def test_unit_sphere_witness(d):
    rng = random.Random(d + 100)
    for _ in range(50):
        S = random_stab(d, rng)
        W = unit_sphere_element(S)
        b = isometric_sphere(W)
        assert W.g.norm() == 1 and b.r4 == 4
        assert b.center == act_boundary(S, heis_point(0, 0, d))
