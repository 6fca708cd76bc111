"""Generators I0, R1, R2, R3, T of the Euclidean Picard modular groups."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .isometry import GroupElem
from .qfield import KNum, check_d, omega

GEN_NAMES = ("I0", "R1", "R2", "R3", "T")


@dataclass(frozen=True)
class GenSet:
    d: int
    gens: dict

    def __getitem__(self, name: str) -> GroupElem:
        return self.gens[name]


@lru_cache(maxsize=None)
def generators(d: int) -> GenSet:
    check_d(d)
    s = KNum(0, 1, d)  # i*sqrt(d)
    I0 = GroupElem([[0, 0, 1], [0, -1, 0], [1, 0, 0]], d)
    R1 = GroupElem([[1, 0, 0], [0, -1, 0], [0, 0, 1]], d)
    T = GroupElem([[1, 0, s], [0, 1, 0], [0, 0, 1]], d)
    if d == 2:
        R2 = GroupElem([[1, 2, -2], [0, -1, 2], [0, 0, 1]], d)
        R3 = GroupElem([[1, -s, -1], [0, -1, s], [0, 0, 1]], d)
    else:
        w = omega(d)
        wb = w.conj()
        R2 = GroupElem([[1, 1, -wb], [0, -1, 1], [0, 0, 1]], d)
        if d == 7:
            R3 = GroupElem([[1, wb, -1], [0, -1, w], [0, 0, 1]], d)
        else:
            R3 = GroupElem([[1, wb, -1 - wb], [0, -1, w], [0, 0, 1]], d)
    return GenSet(d, {"I0": I0, "R1": R1, "R2": R2, "R3": R3, "T": T})


# translation lattice of the vertical projection of the stabiliser:
# R2R1 and R3R1 act as zeta -> zeta + e1 and zeta -> zeta + e2
def lattice_basis(d: int) -> tuple[KNum, KNum]:
    check_d(d)
    if d == 2:
        return KNum(2, 0, d), KNum(0, 1, d)
    return KNum(1, 0, d), omega(d)


def lattice_coords(z: KNum) -> tuple[Fraction, Fraction]:
    """(m, n) with z = m*e1 + n*e2."""
    if z.d == 2:
        return z.x / 2, z.y
    n = 2 * z.y
    return z.x - n / 2, n


def unit_sphere_element(S: GroupElem) -> GroupElem:
    """I0 S^-1 for S fixing infinity: |g| = 1, so r^4 = 4, and its sphere is centred at S(0)."""
    if not S.fixes_infinity():
        raise ValueError("S must fix infinity")
    return generators(S.d)["I0"] @ S.inverse()
