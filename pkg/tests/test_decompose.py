import pytest
from hypothesis import given, settings, strategies as st

from picard.decompose import (CoveringViolation, NonIntegral, NonUnitary, Trace, decompose,
                              nearest_ball, random_element, random_word)
from picard.generators import GEN_NAMES, generators
from picard.isometry import GroupElem, is_unitary, translation_matrix
from picard.qfield import KNum, RealQuad
from picard.words import Word, evaluate_word, format_word, parse_word, reduce_orders

from conftest import DS


def test_parse_format():
    assert parse_word("T^-2 R1").letters == (("T", -2), ("R1", 1))
    assert parse_word("R2^0 R1").letters == (("R1", 1),)
    assert format_word(Word((("I0", 1), ("T", 3)))) == "I0 T^3"
    assert parse_word("T T^+2 T^-1") == parse_word("T^2")
    assert len(parse_word("")) == 0 and len(parse_word("id")) == 0
    for bad in ("Q", "T^", "T^x", "R4", "T^1.5"):
        with pytest.raises(ValueError):
            parse_word(bad)


@settings(max_examples=100)
@given(st.lists(st.tuples(st.sampled_from(GEN_NAMES), st.integers(-4, 4)), max_size=12))
def test_word_round_trip(letters):
    w = Word(tuple(letters))
    assert parse_word(format_word(w)) == w
    for (g1, _), (g2, _) in zip(w.letters, w.letters[1:]):
        assert g1 != g2
    assert all(e for _, e in w.letters)


@pytest.mark.parametrize("d", DS)
def test_evaluate_examples(d):
    assert evaluate_word(Word(), d).is_identity()
    assert evaluate_word(parse_word("I0 I0"), d).is_identity()
    w = parse_word("R3 T^2 R2^-1 I0")
    assert (evaluate_word(w, d) @ evaluate_word(w.inverse(), d)).is_identity()


def test_evaluate_bottom_row():
    M = evaluate_word(parse_word("I0 R2 I0"), 2)
    assert M.m[2] == (KNum(-2, 0, 2), KNum(-2, 0, 2), KNum(1, 0, 2))


def test_reduce_orders():
    orders = {"I0": 2, "R1": 2}
    assert reduce_orders(parse_word("R1^3 T R1^-1 R1^2"), orders) == parse_word("R1 T R1")
    assert reduce_orders(parse_word("T I0 I0 T"), orders) == parse_word("T^2")


@pytest.mark.parametrize("d", DS)
def test_decompose_examples(d):
    G = generators(d)
    assert decompose(GroupElem.identity(d)) == Word()
    assert decompose(G["I0"]) == parse_word("I0")
    M = evaluate_word(parse_word("I0 T R2 I0 R3^-1"), d)
    assert evaluate_word(decompose(M, check=True), d) == M
    Mneg = M.neg()
    assert evaluate_word(decompose(Mneg), d) == Mneg


@pytest.mark.parametrize("d", DS)
def test_decompose_stabiliser_has_no_inversion(d):
    for seed in range(50):
        w = Word(tuple(x for x in random_word(d, 10, seed).letters if x[0] != "I0"))
        v = decompose(evaluate_word(w, d))
        assert "I0" not in [g for g, _ in v]


def test_decompose_rejects():
    bad = GroupElem([[0, 0, 2], [0, -1, 0], [1, 0, 0]], 2)
    with pytest.raises(NonUnitary):
        decompose(bad)
    half = translation_matrix(KNum(0, 0, 7), RealQuad(0, 1, 7))  # vertical (0, sqrt7)
    assert is_unitary(half) and not half.is_integral()
    with pytest.raises(NonIntegral):
        decompose(half)


def test_random_element():
    assert random_element(7, 0, 1).is_identity()
    assert random_element(11, 12, 5) == random_element(11, 12, 5)
    M = random_element(11, 20, 3)
    assert is_unitary(M) and M.is_integral()


@pytest.mark.parametrize("d", DS)
def test_round_trip_and_measure(d):
    for seed in range(500):
        M = random_element(d, seed % 16, seed)
        tr = Trace()
        w = decompose(M, trace=tr)
        assert evaluate_word(w, d) == M
        g = tr.g_norms + [0]
        assert all(a > b for a, b in zip(g, g[1:]))
        assert len(tr.g_norms) <= (M.g.norm() if M.g else 0)
        E = evaluate_word(w, d)
        assert is_unitary(E) and E.is_integral()


def test_nearest_ball_outside_raises():
    from picard.heisenberg import heis_point
    with pytest.raises(CoveringViolation):
        nearest_ball(heis_point(50, 0, 2), 2)
