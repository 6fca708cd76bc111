"""Ball families, auxiliary points and cell decompositions of the prisms.

Values are transcribed as published. Where a published value is evidently a
misprint, the literal entry is kept alongside the corrected one so that both can
be replayed; see CORRECTIONS."""
from __future__ import annotations

from fractions import Fraction as F

from .heisenberg import CplxRQ, HeisPoint
from .qfield import RealQuad


def pt(d: int, re, im=0, im_s=0, t=0, t_s=0) -> HeisPoint:
    """(re + i*(im + im_s*sqrt d), t + t_s*sqrt d) with decimal strings or Fractions."""
    return HeisPoint(CplxRQ(RealQuad(F(re), 0, d), RealQuad(F(im), F(im_s), d)), RealQuad(F(t), F(t_s), d))


# (stabiliser word, base word) per family member; the ball is W(iso(B)) = iso(B W^-1)
FAMILIES = {
    2: [("", "I0"), ("", "I0 R2 I0"), ("T", "I0 R2 I0"), ("T^-1", "I0 R2 I0"),
        ("R1", "I0 R2 I0"), ("T^-1 R1", "I0 R2 I0")],
    7: [("", "I0"), ("", "I0 R2^-1 I0"), ("R2", "I0"), ("R2^-1", "I0"), ("R2^-1", "I0 R2 I0"),
        ("R3 R2", "I0 R2 I0"), ("R1 R3 R2", "I0 R2 I0")],
    11: [("", "I0"), ("T", "I0"), ("R2", "I0"), ("R2^-1", "I0"), ("R3", "I0"), ("R3^-1", "I0"),
         ("R1 R3^-1 R2", "I0"), ("R1 R3 R2", "I0"), ("R1 R2", "I0"), ("R3 R2", "I0")],
}

BASE_LABELS = {"I0": "S0", "I0 R2 I0": "S1", "I0 R2^-1 I0": "S2"}
# for d = 7 the sphere of I0 R2 I0 is called S3 (S1 is used for d = 2 only)
BASE_LABELS_7 = {"I0": "S0", "I0 R2 I0": "S3", "I0 R2^-1 I0": "S2"}


# --- d = 2 -------------------------------------------------------------------

# designated ball for the tetrahedron cut off at each corner
D2_CORNER_BALLS = {
    "v1+": "S1", "v2+": "T(S1)", "v3+": "R1(S1)",
    "v1-": "T^-1(S1)", "v2-": "S1", "v3-": "T^-1 R1(S1)",
}

# the three published cut points at v1+
D2_V1_CUTS = {
    "v1+^1": pt(2, "1", 0, "-1/2", "1"),
    "v1+^2": pt(2, "1", "-1/2", 0, 0, "1"),
    "v1+^3": HeisPoint(CplxRQ(RealQuad(0, F(1, 2), 2), RealQuad(F(-1, 2), 0, 2)), RealQuad(0, 1, 2)),
}

# S0 n S1 along the edges at v1+: (edge, coordinate, [(ball, defining polynomial
# over Q(sqrt2) lowest degree first, approximate root)]) for the two endpoints.
# sqrt2 - sqrt3/2 is a root of t^2 - 2 sqrt2 t + 5/4 and 2^(1/4)/sqrt3 of x^4 - 2/9.
D2_EDGE_CLAIMS = [
    (("v1+", "v1-"), "t", [
        ("S1", [F(5, 4), (0, -2), 1], 1.4142135623730951 - 0.8660254037844386),
        ("S0", [F(-7, 4), 0, 1], 1.3228756555322954)]),
    (("v1+", "v2+"), "im", [
        ("S0", [(1, -1), 0, 1], -0.6435942529055826),
        ("S1", [1, (0, 4), 4, 0, 1], -0.208)]),
    (("v1+", "v3+"), "im", [
        ("S0", [F(-2, 9), 0, 0, 0, 1], -0.6865890479690392),
        ("S1", [2, (0, 8), 18, (0, 12), 9], -0.264)]),
]

# the published brackets for the largest real roots delta1, delta2
D2_DELTA_BRACKETS = [
    ("delta1", [1, (0, 4), 4, 0, 1], F(-209, 1000), F(-207, 1000)),
    ("delta2", [2, (0, 8), 18, (0, 12), 9], F(-265, 1000), F(-263, 1000)),
]

# a sample point of the edge (v1+, v1-) inside S0 n S1
D2_SAMPLE = ("v1+^1", ("S0", "S1"))


# --- d = 7 -------------------------------------------------------------------

D7_POINTS = {
    "p1": pt(7, "1/4", 0, "-1/4", "3/2"),
    "p2": pt(7, "0.11", 0, "-0.11", "1.44", "1/50"),
    "p3": pt(7, "1/2", 0, 0, "8/5"),
    "p4": pt(7, "-1/10", 0, "1/10", 0, 1),
    "p5": pt(7, "-1/10", 0, "1/10", 0, "1/2"),
    "p6": pt(7, "3/4", 0, "1/4", "1.7"),
    "p7": pt(7, "-1/4", 0, "1/4", 1),
    "p8": pt(7, "1/4", 0, "-1/4", -1),
    "p9": pt(7, "1/60", 0, "-1/60", 0, "-2/3"),
    "p10": pt(7, "-1/20", 0, "1/20", 0, -1),
    "p11": pt(7, "3/5", 0, "1/10", 0, "-2/3"),
    "p12": pt(7, "7/10", 0, "1/5", 0, -1),
    "p13": pt(7, "3/4", 0, "1/4", 0, "-2/3"),
    "p14": pt(7, "5/12", 0, "1/4", 0, "-2/3"),
    "p15": pt(7, "1/4", 0, "1/4", 0, -1),
    "p16": pt(7, "-1/4", 0, "1/4", -1),
}

# label -> (vertex names, designated ball)
D7_CELLS = {
    "T": (["v1+", "p1", "p2", "p3"], "R1 R3 R2(S3)"),
    "H1": (["v1+", "v2+", "p2", "p3", "p4", "p5", "p6"], "R2(S0)"),
    "P1": (["v2+", "p4", "p5", "p6", "v4+", "p7"], "R3 R2(S3)"),
    "P2": (["v1-", "p8", "p9", "p10", "p11", "p12"], "R2^-1(S0)"),
    "H2": (["p9", "p10", "p11", "p12", "p13", "v2-", "p14", "p15"], "R2^-1(S3)"),
    "P3": (["p9", "p10", "p14", "p15", "p16", "v4-"], "S2"),
    "O": (["p1", "p2", "p3", "p5", "p6", "p7", "p8", "p9", "p11", "p13", "p14", "p16"], "S0"),
}
D7_CELLS_LITERAL = {"P3": (["p9", "p10", "p14", "p15", "p16", "v4+"], "S2")}


# --- d = 11 ------------------------------------------------------------------

D11_POINTS = {
    "q1": pt(11, "1/4", 0, "-1/4", 0, "-2/3"),
    "q2": pt(11, "3/20", 0, "-3/20", 0, "-4/5"),
    "q3": pt(11, "7/20", 0, "-3/20", 0, "-9/10"),
    "q4": pt(11, "1/4", 0, "-1/4", "-1/2"),
    "q5": pt(11, "0.42", "0.26", 0, "0.39", "-0.71"),
    "q6": pt(11, "0.6", 0, "1/10", 0, "-0.65"),
    "q7": pt(11, "0.58", 0, "2/25", "-1.92"),
    "q8": pt(11, "3/4", 0, "1/4", 0),
    "q9": pt(11, "0.55", 0, "1/4", 0, "-2/5"),
    "q10": pt(11, "0.2", "-0.4", 0, "2.4"),
    "q11": pt(11, "0.18", "0.72", 0, "4.8"),
    "q12": pt(11, "1/4", 0, "-1/4", 0, "1/2"),
    "q13": pt(11, "0.21", 0, "-0.21", 0, "1/2"),
    "q14": pt(11, 0, 0, 0, 0, "1/2"),
    "q15": pt(11, "-0.21", 0, "0.21", 0, "1/2"),
    "q16": pt(11, 0, 0, "1/4", 1),
    "q17": pt(11, "3/4", 0, "1/4", 1),
    "q18": pt(11, "0.42", 0, "-2/25", "1.95"),
    "q19": pt(11, "3/4", 0, "1/4", 0, 1),
    "q20": pt(11, "0.6", 0, "1/10", 0, "27/20"),
    "q21": pt(11, "0.42", "0.26", 0, "0.39", "1.29"),
    "q22": pt(11, "-0.14", 0, "0.14", 0, "4/5"),
    "q23": pt(11, "-1/4", 0, "1/4", 0, "1/2"),
    "q24": pt(11, "-0.16", "0.74", 0, "1.4"),
    "q25": pt(11, "0.328", "-0.28", 0, "1.99"),
    "q26": pt(11, "0.325", "0.29", 0, "4.652"),
}
D11_POINTS_LITERAL = {"q22": pt(11, "-1.4", 0, "1.4", 0, "4/5")}

U1 = ("R2(S0)", "R1 R2(S0)", "R1 R3 R2(S0)")
U2 = ("T(S0)", "R3(S0)", "R1 R2(S0)", "R3 R2(S0)")

X1 = ["q12", "q13", "q14", "q15", "q16", "q17", "q18"]
X2 = ["q16", "q19", "q20", "q21", "v0+", "q22", "q24"]


def cone(apex: str, chain: list) -> list:
    n = len(chain)
    return [[apex, chain[i], chain[(i + 1) % n]] for i in range(n)]


# bounded by these faces; the polygonal faces are planar pieces of the prism
# boundary except where they are triangles
D11_P1_FACES = cone("q25", X1) + cone("q26", X2) + [
    ["v1+", "q12", "q18", "q17", "q19", "q20"],
    ["v1+", "q12", "q13", "q14", "q15", "q22", "v0+"],
    ["v1+", "q20", "q21", "v0+"],
    ["q16", "q17", "q19"],
    ["q15", "q22", "q24"],
    ["q15", "q24", "q16"],
]
D11_P2_FACES = cone("q26", X2) + [
    ["q20", "v2+", "v3+", "v0+", "q21"],
    ["q19", "v2+", "q20"],
    ["q16", "q19", "v2+", "v3+", "q23"],
    ["q22", "v0+", "v3+", "q23", "q15"],
    ["q15", "q23", "q24"],
    ["q23", "q16", "q24"],
    ["q15", "q22", "q24"],
]
D11_P3_FACES_LITERAL = cone("q25", X1) + [
    ["q4", "q5", "q7"], ["q5", "q7", "q8"], ["q4", "q5", "v0-"], ["q15", "q23", "q24"],
    ["q8", "q9", "v3-", "q23", "q16", "q17"], ["q23", "q16", "q24"],
    ["q4", "q7", "q8", "q17", "q18", "q12"], ["v3-", "v0-", "q5", "q9"],
    ["q12", "q13", "q14", "q15", "q23", "v3-", "v0-", "q4"],
]
D11_P3_FACES = D11_P3_FACES_LITERAL + [["q15", "q24", "q16"]]

# as printed: the second list repeats faces of the first
D11_P1_FACES_LITERAL = cone("q25", X1) + cone("q26", X2) + [
    ["v1+", "q12", "q18", "q17", "q19", "q20"],
    ["v1+", "q12", "q13", "q14", "q15", "q22", "v0+"],
    ["v1+", "q20", "q21", "v0+"],
]
D11_P2_FACES_LITERAL = cone("q26", X2) + [
    ["q15", "q23", "q24"], ["v1+", "q20", "q21", "v0+"],
    ["v1+", "q12", "q18", "q17", "q19", "q20"],
    ["v1+", "q12", "q13", "q14", "q15", "q22", "v0+"],
    ["q23", "q16", "q24"],
]

D11_H1_FACES = [["q1", "q2", "q3"], ["q1", "q3", "q6", "q7", "q4"], ["q1", "q2", "v0-", "q4"],
                ["q4", "q5", "v0-"], ["q4", "q5", "q7"], ["q5", "q6", "q7"],
                ["q2", "q3", "q6", "q5", "v0-"]]
D11_H2_FACES = [["q5", "q6", "q7"], ["q5", "q7", "q8"], ["v2-", "q8", "q9"], ["q5", "q8", "q9"],
                ["q6", "q7", "q8", "v2-"], ["q5", "q6", "v2-", "q9"]]

# label -> (kind, vertex names or faces, target, apex)
D11_CELLS = {
    "T": ("ball", ["v1-", "q1", "q2", "q3"], "R1 R3^-1 R2(S0)", None),
    "H1": ("ball", ["q1", "q2", "q3", "q4", "q5", "q6", "q7", "v0-"], "R2^-1(S0)", None),
    "H2": ("ball", ["v2-", "q5", "q6", "q7", "q8", "q9"], "R3^-1(S0)", None),
    "P1": ("star", D11_P1_FACES, U1, "q10"),
    "P2": ("star", D11_P2_FACES, U2, "q11"),
    "P3": ("ball", D11_P3_FACES, "S0", None),
}
D11_CELLS_LITERAL = {
    "H1": ("ball", ["q1", "q2", "q3", "q4", "q5", "q6", "q7", "v0+"], "R2^-1(S0)", None),
    "P1": ("star", D11_P1_FACES_LITERAL, U1, "q11"),
    "P2": ("star", D11_P2_FACES_LITERAL, U2, "q12"),
}

# point -> balls whose interiors are claimed to contain it
D11_POINT_CLAIMS = {
    "q10": U1,
    "q11": U2,
    "q12": ("R1 R3 R2(S0)", "S0"),
    "q13": ("S0", "R1 R2(S0)", "R1 R3 R2(S0)"),
    "q14": ("S0", "R2(S0)", "R1 R2(S0)"),
    "q15": ("S0", "R2(S0)", "R3(S0)", "R3 R2(S0)"),
    "q16": ("R2(S0)", "R3(S0)"),
    "q19": ("R2(S0)", "R3(S0)"),
    "q20": ("R2(S0)", "R3(S0)"),
    "q17": ("S0", "R2(S0)"),
    "q18": ("S0", "R2(S0)", "R1 R3 R2(S0)"),
    "q21": ("T(S0)", "R2(S0)", "R3(S0)"),
    "q22": ("R1 R2(S0)", "R2(S0)", "R3(S0)"),
    "v0+": ("R1 R2(S0)", "T(S0)", "R2(S0)"),
    "q23": ("S0", "R3(S0)", "R3 R2(S0)"),
    "q24": ("S0", "R2(S0)", "R3(S0)", "R3 R2(S0)"),
    "q25": ("S0", "R2(S0)", "R1 R2(S0)", "R1 R3 R2(S0)"),
    "q26": ("T(S0)", "R2(S0)", "R3(S0)", "R1 R2(S0)"),
}

# where the auxiliary points are said to lie; side faces are indexed by the
# opposite corner (0: v1, 1: v2, 2: v3)
D11_LOCATIONS = {
    "q1": ("edge", "v1+", "v1-"), "q2": ("edge", "v1-", "v3-"), "q3": ("edge", "v1-", "v2-"),
    "q4": ("edge", "v1+", "v1-"), "q6": ("edge", "v1-", "v2-"), "q8": ("edge", "v2+", "v2-"),
    "q9": ("edge", "v2-", "v3-"), "q5": ("bottom",), "q7": ("side", 2),
    "q12": ("edge", "v1+", "v1-"), "q20": ("edge", "v1+", "v2+"), "q23": ("edge", "v3+", "v3-"),
    "q17": ("edge", "v2+", "v2-"), "q19": ("edge", "v2+", "v2-"),
    "q13": ("side", 1), "q14": ("side", 1), "q15": ("side", 1), "q22": ("side", 1),
    "q16": ("side", 0), "q18": ("side", 2), "q21": ("top",),
    "q24": ("interior",), "q25": ("interior",), "q26": ("interior",),
}

CORRECTIONS = {
    2: [("side pairing T R3", "target (v3+, v3+, v5+) recomputes to (v3+, v3-, v5+)")],
    7: [("side pairings", "table uses figure labels: w1- is w2-, w2+ is w3+"),
        ("cell P3", "vertex v4+ read as v4-")],
    11: [("point q22", "(-1.4+1.4i*sqrt11, 4sqrt11/5) read as (-0.14+0.14i*sqrt11, 4sqrt11/5)"),
         ("cell H1", "vertex v0+ read as v0-; base face (q2,q3,q6,q5,v0-) added"),
         ("cell P1", "star centre q10; faces (q16,q17,q19), (q15,q22,q24), (q15,q24,q16) added"),
         ("cell P2", "star centre q11; boundary rebuilt from the top and side faces at v2+, v3+"),
         ("cell P3", "face (q15,q24,q16) added to close the boundary")],
}
