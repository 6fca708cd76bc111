"""The stabiliser of infinity: relators, the prism fundamental domain, reduction and words."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .generators import lattice_basis, lattice_coords
from .heisenberg import CplxRQ, HeisPoint, heis_point
from .isometry import GroupElem, act_boundary, is_unitary, pi_star
from .qfield import KNum, RealQuad, check_d
from .words import Word, evaluate_word, parse_word, word


def relators(d: int) -> list[Word]:
    check_d(d)
    P = parse_word
    if d == 2:
        out = [P(f"R{j}^2") for j in (1, 2, 3)]
        out += [P(f"T R{j} T^-1 R{j}^-1") for j in (1, 2, 3)]
        out.append(P("T^2 R1 R3 R2 T^2 R1 R3 R2"))
        return out
    if d == 7:
        return [P("R1^2"), P("R3^2"), P("T R1 T^-1 R1^-1"), P("T R3 T^-1 R3^-1"),
                P("T R2^-2"), P("R1 R3 R2 R1 R3 R2")]
    return [P("R1^2"), P("T R1 T^-1 R1^-1"), P("T R2^-2"), P("T R3^-2"),
            P("T R2^-1 R3^-1 R1^-1 R2^-1 R3^-1 R1^-1")]


def generator_orders(d: int) -> dict:
    """Generators of finite order read off the single-letter relators, plus I0^2 = 1."""
    out = {"I0": 2}
    for w in relators(d):
        if len(w.letters) == 1:
            g, k = w.letters[0]
            out[g] = abs(k)
    return out


def check_relator(w: Word, d: int) -> bool:
    """True when w evaluates to the identity of PU(2,1)."""
    return evaluate_word(w, d).is_identity()


# --- the prism ---------------------------------------------------------------

@dataclass
class Prism:
    """Closed prism over a triangle, with bottom cap an affine graph over zeta.

    The triangle is o+e1, o+e1+e2, o+e2 in terms of the lattice basis and its
    corners carry bottom heights; the top cap is the bottom shifted by 2*sqrt(d)."""
    d: int
    origin: KNum
    corner_names: tuple  # names of the three vertical edges
    bottom_heights: tuple  # RealQuad heights of the base over the three corners
    vertices: dict = field(default_factory=dict)  # name -> HeisPoint
    edges: list = field(default_factory=list)
    faces: list = field(default_factory=list)  # ordered name cycles

    @property
    def height(self) -> RealQuad:
        return RealQuad(0, 2, self.d)

    def corner_zetas(self) -> tuple[CplxRQ, CplxRQ, CplxRQ]:
        e1, e2 = lattice_basis(self.d)
        o = self.origin
        return tuple(CplxRQ.from_knum(z) for z in (o + e1, o + e1 + e2, o + e2))

    def lattice_st(self, zeta: CplxRQ) -> tuple[RealQuad, RealQuad]:
        """Real coordinates (s, r) with zeta = origin + s*e1 + r*e2."""
        e1, e2 = lattice_basis(self.d)
        w = zeta - CplxRQ.from_knum(self.origin)
        e2c = CplxRQ.from_knum(e2)
        r = w.im / e2c.im
        s = (w.re - r * e2c.re) / e1.x
        return s, r

    def bary(self, zeta: CplxRQ) -> tuple[RealQuad, RealQuad, RealQuad]:
        s, r = self.lattice_st(zeta)
        return 1 - r, s + r - 1, 1 - s

    def bottom(self, zeta: CplxRQ) -> RealQuad:
        lam = self.bary(zeta)
        return sum((l * h for l, h in zip(lam, self.bottom_heights)), RealQuad(0, 0, self.d))

    def top(self, zeta: CplxRQ) -> RealQuad:
        return self.bottom(zeta) + self.height

    def contains(self, p: HeisPoint, strict: bool = False) -> bool:
        lam = self.bary(p.zeta)
        lo = p.t - self.bottom(p.zeta)
        hi = self.height - lo
        vals = [x.sign() for x in lam] + [lo.sign(), hi.sign()]
        return all(v > 0 for v in vals) if strict else all(v >= 0 for v in vals)

    def location(self, p: HeisPoint) -> dict:
        """Which closed pieces of the prism boundary contain p."""
        lam = self.bary(p.zeta)
        lo = p.t - self.bottom(p.zeta)
        hi = self.height - lo
        signs = [x.sign() for x in lam]
        inside = all(s >= 0 for s in signs) and lo.sign() >= 0 and hi.sign() >= 0
        # side faces: lam[k] == 0 is the face opposite corner k
        sides = [k for k in range(3) if signs[k] == 0]
        caps = (["bottom"] if lo.sign() == 0 else []) + (["top"] if hi.sign() == 0 else [])
        return {"inside": inside, "sides": sides, "caps": caps}

    def point(self, name: str) -> HeisPoint:
        return self.vertices[name]

    def find_vertex(self, p: HeisPoint) -> str | None:
        for name, q in self.vertices.items():
            if q == p:
                return name
        return None


def _mid(a: KNum, b: KNum) -> KNum:
    return (a + b) / 2


def prism(d: int) -> Prism:
    check_d(d)
    s = RealQuad(0, 1, d)  # sqrt(d)
    e1, e2 = lattice_basis(d)
    if d == 2:
        origin = KNum(-1, Fraction(-1, 2), d)
        names = ("v1", "v2", "v3")
        heights = (-s, -s, -s)
    else:
        origin = KNum(Fraction(-3, 4), Fraction(-1, 4), d)
        names = ("v1", "v2", "v4") if d == 7 else ("v1", "v2", "v3")
        heights = (-s, -s, -s) if d == 7 else (-s, -s / 2, s * 0)
    P = Prism(d, origin, names, heights)
    c = (origin + e1, origin + e1 + e2, origin + e2)
    zet = dict(zip(names, c))
    if d == 2:
        zet["v4"] = _mid(zet["v1"], zet["v2"])
        zet["v5"] = _mid(zet["v2"], zet["v3"])
        zet["v6"] = _mid(zet["v3"], zet["v1"])
    elif d == 7:
        zet["v3"] = _mid(zet["v2"], zet["v4"])
        zet["v5"] = _mid(zet["v4"], zet["v1"])
    else:
        zet["v0"] = _mid(zet["v1"], zet["v3"])
    for n in sorted(zet):
        z = CplxRQ.from_knum(zet[n])
        P.vertices[n + "+"] = HeisPoint(z, P.top(z))
        P.vertices[n + "-"] = HeisPoint(z, P.bottom(z))
    half = s / 2
    if d == 7:
        P.vertices["w1+"] = heis_point(zet["v1"], half, d)
        P.vertices["w2-"] = heis_point(zet["v2"], -half, d)
        P.vertices["w3+"] = heis_point(zet["v4"], half, d)
    elif d == 11:
        P.vertices["w1"] = heis_point(zet["v1"], s * 0, d)
        P.vertices["w2"] = heis_point(zet["v2"], half, d)
        P.vertices["w3"] = heis_point(zet["v3"], s, d)
    if d == 2:
        top = ["v1+", "v4+", "v2+", "v5+", "v3+", "v6+"]
        sides = [["v1+", "v4+", "v2+", "v2-", "v4-", "v1-"],
                 ["v2+", "v5+", "v3+", "v3-", "v5-", "v2-"],
                 ["v3+", "v6+", "v1+", "v1-", "v6-", "v3-"]]
    elif d == 7:
        top = ["v1+", "v2+", "v3+", "v4+", "v5+"]
        sides = [["v1+", "v2+", "w2-", "v2-", "v1-", "w1+"],
                 ["v2+", "v3+", "v4+", "w3+", "v4-", "v3-", "v2-", "w2-"],
                 ["v4+", "v5+", "v1+", "w1+", "v1-", "v5-", "v4-", "w3+"]]
    else:
        top = ["v1+", "v2+", "v3+", "v0+"]
        sides = [["v1+", "v2+", "w2", "v2-", "v1-", "w1"],
                 ["v2+", "v3+", "w3", "v3-", "v2-", "w2"],
                 ["v3+", "v0+", "v1+", "w1", "v1-", "v0-", "v3-", "w3"]]
    bottom = [n[:-1] + "-" for n in top]
    P.faces = [top, bottom] + sides
    seen = set()
    for f in P.faces:
        for a, b in zip(f, f[1:] + f[:1]):
            key = frozenset((a, b))
            if key not in seen:
                seen.add(key)
                P.edges.append((a, b))
    return P


# --- side pairings ------------------------------------------------------------

# (map word, source labels, target labels) as tabulated with the fundamental domain
SIDE_PAIRINGS = {
    2: [
        ("R1", ("v6+", "v1+", "v1-", "v6-"), ("v6+", "v3+", "v3-", "v6-")),
        ("R2", ("v1+", "v4+", "v4-"), ("v2-", "v4+", "v4-")),
        ("T R2", ("v1+", "v1-", "v4-"), ("v2+", "v2-", "v4+")),
        ("R3", ("v2+", "v5+", "v5-"), ("v3-", "v5+", "v5-")),
        ("T R3", ("v2+", "v2-", "v5-"), ("v3+", "v3+", "v5+")),
        ("T", ("v1-", "v4-", "v2-", "v5-", "v3-", "v6-"), ("v1+", "v4+", "v2+", "v5+", "v3+", "v6+")),
    ],
    7: [
        ("R1", ("v5+", "v1+", "v1-", "v5-"), ("v5+", "v4+", "v4-", "v5-")),
        ("R2", ("v1-", "v2-", "w1-", "w1+"), ("w1-", "w1+", "v1+", "v2+")),
        ("R3", ("v2+", "w1-", "v3-", "v3+"), ("w2+", "v4-", "v3-", "v3+")),
        ("T R3", ("w1-", "v2-", "v3-"), ("v4+", "w2+", "v3+")),
        ("T", ("v1-", "v2-", "v3-", "v4-", "v5-"), ("v1+", "v2+", "v3+", "v4+", "v5+")),
    ],
    11: [
        ("R1", ("v0+", "v1+", "w1", "v0-"), ("v0+", "w3", "v3-", "v0-")),
        ("T R1", ("w1", "v1-", "v0-"), ("v3+", "w3", "v0+")),
        ("R2", ("v1+", "w1", "v1-", "v2-"), ("v2+", "w2", "v2-", "v1+")),
        ("R3", ("v2+", "w2", "v2-", "v3-"), ("v3+", "w3", "v3-", "v2+")),
        ("T", ("v0-", "v1-", "v2-", "v3-"), ("v0+", "v1+", "v2+", "v3+")),
    ],
}

# The d = 7 table uses the labels of the figure, which differ from the named
# points: the figure's w1- is the point called w2- and its w2+ is w3+.
LABEL_ALIASES = {7: {"w1-": "w2-", "w2+": "w3+"}}


@dataclass
class PairingCheck:
    map: str
    source: tuple
    claimed: tuple
    computed: tuple  # labels of the recomputed images (None for a point off the vertex set)
    status: str  # "match", "typo" or "fail"
    faces_ok: bool

    @property
    def ok(self) -> bool:
        return self.status != "fail" and self.faces_ok

    def line(self) -> str:
        return (f"map={self.map} source=({','.join(self.source)}) claimed=({','.join(self.claimed)}) "
                f"computed=({','.join(str(c) for c in self.computed)}) status={self.status} "
                f"faces={'ok' if self.faces_ok else 'bad'} verdict={'pass' if self.ok else 'fail'}")


def _on_common_face(P: Prism, names) -> bool:
    s = set(names)
    return any(s <= set(f) for f in P.faces)


def verify_side_pairings(d: int) -> list[PairingCheck]:
    P = prism(d)
    alias = LABEL_ALIASES.get(d, {})
    out = []
    for wtxt, src, dst in SIDE_PAIRINGS[d]:
        M = evaluate_word(parse_word(wtxt), d)
        src_r = tuple(alias.get(n, n) for n in src)
        dst_r = tuple(alias.get(n, n) for n in dst)
        computed = tuple(P.find_vertex(act_boundary(M, P.point(n))) for n in src_r)
        if any(c is None for c in computed):
            status = "fail"
        elif computed == dst_r:
            status = "match"
        else:
            status = "typo"
        faces_ok = _on_common_face(P, src_r) and all(c is not None for c in computed) \
            and _on_common_face(P, computed)
        out.append(PairingCheck(wtxt, src, dst, computed, status, faces_ok))
    return out


# --- reduction into the prism and stabiliser words -------------------------------

class InternalError(RuntimeError):
    pass


def _translation_word(m: int, n: int, negate: bool) -> Word:
    """Word acting on the vertical projection as zeta -> (+-zeta) + m*e1 + n*e2."""
    w = word("R2", "R1") ** m + word("R3", "R1") ** n
    if negate:
        w = w + word("R1")
    return w


def _floor(x: RealQuad) -> int:
    return x.floor()


def prism_reduce(p: HeisPoint, d: int) -> tuple[Word, HeisPoint]:
    """A stabiliser word P with P(p) in the closed prism.

    Among equivalent positions in the triangle the lexicographically smallest
    (Re, Im) is chosen; vertically the representative closest to the base."""
    P = _cached_prism(d)
    e1, e2 = lattice_basis(d)
    best = None
    for negate in (False, True):
        z = -p.zeta if negate else p.zeta
        s, r = P.lattice_st(z)
        for m in {_floor(s), -_floor(-s) - 1}:
            for n in {_floor(r), -_floor(-r) - 1}:
                ss, rr = s - m, r - n
                if not (0 <= ss <= 1 and 0 <= rr <= 1 and ss + rr >= 1):
                    continue
                img = z - CplxRQ.from_knum(e1 * m + e2 * n)
                key = (img.re, img.im)
                if best is None or key[0] < best[0][0] or (key[0] == best[0][0] and key[1] < best[0][1]):
                    best = (key, m, n, negate)
    if best is None:
        raise InternalError("no lattice representative found")
    _, m, n, negate = best
    # zeta -> (+-zeta) - (m e1 + n e2)
    w = _translation_word(-m, -n, negate)
    q = act_boundary(evaluate_word(w, d), p)
    k = _floor((q.t - P.bottom(q.zeta)) / P.height)
    if k:
        w = word(("T", -k)) + w
        q = HeisPoint(q.zeta, q.t - P.height * k)
    if not P.contains(q):
        raise InternalError("reduced point left the prism")
    return w, q


_PRISMS: dict = {}


def _cached_prism(d: int) -> Prism:
    if d not in _PRISMS:
        _PRISMS[d] = prism(d)
    return _PRISMS[d]


def stab_decompose(M: GroupElem) -> Word:
    """Word in R1, R2, R3, T for an integral unitary matrix fixing infinity."""
    d = M.d
    if not M.fixes_infinity() or M[2, 1] or M[1, 0]:
        raise ValueError("matrix does not fix infinity")
    if not is_unitary(M) or not M.is_integral():
        raise ValueError("matrix is not an integral unitary matrix")
    (e, f), _ = pi_star(M)
    if e not in (1, -1):
        raise InternalError(f"unexpected rotation part {e}")
    m, n = lattice_coords(f)
    if m.denominator != 1 or n.denominator != 1:
        raise InternalError(f"translation part {f} is off the lattice")
    w = _translation_word(int(m), int(n), e == -1)
    K = M @ evaluate_word(w.inverse(), d)
    j = K[2, 2]
    c = K[0, 2] / j
    if not (K[0, 0] / j == 1 and K[1, 1] / j == 1 and not K[0, 1] and not K[1, 2] and not c.x):
        raise InternalError("residual is not a vertical translation")
    k = c.y
    if k.denominator != 1:
        raise InternalError("vertical translation is not a power of T")
    return word(("T", int(k))) + w
