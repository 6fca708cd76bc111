from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from picard.heisenberg import (CplxRQ, HoroPoint, cygan_dist4, cygan_dist_interval,
                               cygan_ext_dist4, heis_compose, heis_dilation, heis_inverse,
                               heis_point, heis_rotation, heis_translation, triangle_slack,
                               vertical_project)
from picard.qfield import KNum, RealQuad

from conftest import DS, heis_points

O2 = heis_point(0, 0, 2)


def rq(a, b=0, d=2):
    return RealQuad(a, b, d)


def test_compose_examples():
    p = heis_point(KNum(1, 0, 2), 0, 2)
    q = heis_point(KNum(0, 1, 2), 0, 2)
    assert heis_compose(p, q) == heis_point(KNum(1, 1, 2), rq(0, -2), 2)
    assert heis_compose(O2, q) == q
    assert heis_inverse(heis_point(1, rq(0, 1), 2)) == heis_point(-1, rq(0, -1), 2)


def test_distance_examples():
    one = heis_point(1, 0, 2)
    assert cygan_dist4(one, one) == 0
    assert cygan_dist4(O2, one) == 1
    assert cygan_dist4(O2, heis_point(0, 3, 2)) == 9


def test_extended_distance_examples():
    z = CplxRQ.const(0, 2)
    a = HoroPoint(z, rq(0), rq(0))
    assert cygan_ext_dist4(a, HoroPoint(z, rq(0), rq(4))) == 16
    assert cygan_ext_dist4(HoroPoint(z, rq(0), rq(1)), HoroPoint(CplxRQ.const(1, 2), rq(0), rq(0))) == 4


def test_projection_and_maps():
    p = heis_point(KNum(1, 1, 2), rq(0, -2), 2)
    assert vertical_project(p) == CplxRQ.from_knum(KNum(1, 1, 2))
    shift = heis_translation(CplxRQ.const(0, 2), rq(0, 2))
    assert shift(p) == heis_point(KNum(1, 1, 2), rq(0), 2)
    assert heis_translation(CplxRQ.const(1, 2), rq(0))(O2) == heis_point(1, 0, 2)
    rot = heis_rotation(CplxRQ.const(-1, 2))
    assert rot(heis_point(1, rq(0, 1), 2)) == heis_point(-1, rq(0, 1), 2)
    assert rot(rot(p)) == p
    assert heis_dilation(rq(2))(heis_point(1, 1, 2)) == heis_point(2, 4, 2)
    with pytest.raises(ValueError):
        heis_dilation(rq(0))
    with pytest.raises(ValueError):
        heis_rotation(CplxRQ.const(2, 2))


@pytest.mark.parametrize("d", DS)
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_group_axioms(d, data):
    a, b, c = (data.draw(heis_points(d)) for _ in range(3))
    e = heis_point(0, 0, d)
    assert heis_compose(heis_compose(a, b), c) == heis_compose(a, heis_compose(b, c))
    assert heis_compose(a, e) == a == heis_compose(e, a)
    assert heis_compose(a, heis_inverse(a)) == e
    assert vertical_project(heis_compose(a, b)) == vertical_project(a) + vertical_project(b)


@pytest.mark.parametrize("d", DS)
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_metric_invariances(d, data):
    g, a, b = (data.draw(heis_points(d)) for _ in range(3))
    r = cygan_dist4(a, b)
    assert cygan_dist4(heis_compose(g, a), heis_compose(g, b)) == r
    rot = heis_rotation(CplxRQ.const(-1, d))
    assert cygan_dist4(rot(a), rot(b)) == r
    lam = RealQuad(Fraction(3, 2), 0, d)
    D = heis_dilation(lam)
    assert cygan_dist4(D(a), D(b)) == lam ** 4 * r
    assert cygan_dist4(a, b) == cygan_dist4(b, a)
    assert (r.sign() == 0) == (a == b)
    inv = heis_translation(-g.zeta, -g.t)
    assert inv(heis_translation(g.zeta, g.t)(a)) == a
    assert cygan_ext_dist4(HoroPoint(a.zeta, a.t, RealQuad(0, 0, d)),
                           HoroPoint(b.zeta, b.t, RealQuad(0, 0, d))) == r


@pytest.mark.parametrize("d", DS)
@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_triangle_inequality_intervals(d, data):
    a, b, c = (data.draw(heis_points(d)) for _ in range(3))
    assert triangle_slack(a, b, c) >= -1e-12
    r = cygan_dist_interval(a, b)
    assert float(r.a) <= float(cygan_dist4(a, b)) ** 0.25 <= float(r.b) + 1e-15
