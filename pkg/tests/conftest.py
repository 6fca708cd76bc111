import sys
from fractions import Fraction

from hypothesis import strategies as st

from picard.heisenberg import CplxRQ, HeisPoint
from picard.qfield import KNum, RealQuad

DS = (2, 7, 11)

fracs = st.fractions(min_value=-20, max_value=20, max_denominator=12)
small_fracs = st.fractions(min_value=-3, max_value=3, max_denominator=8)


@st.composite
def realquads(draw, d=None):
    d = d or draw(st.sampled_from(DS))
    return RealQuad(draw(fracs), draw(fracs), d)


@st.composite
def knums(draw, d=None):
    d = d or draw(st.sampled_from(DS))
    return KNum(draw(fracs), draw(fracs), d)


@st.composite
def heis_points(draw, d):
    rq = lambda: RealQuad(draw(small_fracs), draw(small_fracs), d)
    return HeisPoint(CplxRQ(rq(), rq()), rq())


@st.composite
def k_rational_points(draw, d):
    """Points that matrices can act on: zeta in K and t in Q sqrt(d)."""
    z = KNum(draw(small_fracs), draw(small_fracs), d)
    return HeisPoint(CplxRQ.from_knum(z), RealQuad(0, draw(small_fracs), d))


def F(x):
    return Fraction(x)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
