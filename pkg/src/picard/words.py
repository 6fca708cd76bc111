"""Words in the generators: parsing, printing, evaluation."""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .generators import GEN_NAMES, generators
from .isometry import GroupElem

INVOLUTIONS = ("I0", "R1")  # involutions for every d


@dataclass(frozen=True)
class Word:
    """A sequence of (generator, nonzero exponent), with adjacent equal generators merged."""
    letters: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", _normalize(self.letters))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other: Word) -> Word:
        return Word(self.letters + other.letters)

    def inverse(self) -> Word:
        return Word(tuple((g, _inv_exp(g, e)) for g, e in reversed(self.letters)))

    def __pow__(self, n: int) -> Word:
        if n < 0:
            return self.inverse() ** (-n)
        return Word(self.letters * n)

    def total_length(self) -> int:
        return sum(abs(e) for _, e in self.letters)

    def __str__(self):
        return format_word(self)


def _inv_exp(g: str, e: int) -> int:
    return e if g in INVOLUTIONS and e == 1 else -e


def _normalize(letters: Iterable) -> tuple:
    out: list = []
    for g, e in letters:
        if g not in GEN_NAMES:
            raise ValueError(f"unknown generator {g!r}")
        e = int(e)
        if out and out[-1][0] == g:
            e += out.pop()[1]
        if e:
            out.append((g, e))
    return tuple(out)


def word(*letters) -> Word:
    """word("T", ("R2", -1), "R1") convenience constructor."""
    return Word(tuple((x, 1) if isinstance(x, str) else x for x in letters))


def reduce_orders(w: Word, orders: dict) -> Word:
    """Reduce exponents of finite-order generators, orders = {gen: k} with gen^k = 1."""
    letters = w.letters
    while True:
        out = []
        for g, e in letters:
            k = orders.get(g)
            if k:
                e %= k
                if e > k // 2:
                    e -= k
            out.append((g, e))
        new = Word(tuple(out))
        if new.letters == letters:
            return new
        letters = new.letters


_TOKEN = re.compile(r"^(I0|R1|R2|R3|T)(?:\^([+-]?\d+))?$")


def parse_word(text: str) -> Word:
    """Whitespace-separated tokens such as "T^-1 R2 R1^2"; "" or "id" is the empty word."""
    toks = text.replace("*", " ").split()
    if toks in ([], ["id"], ["1"]):
        return Word()
    letters = []
    for tok in toks:
        m = _TOKEN.match(tok)
        if not m:
            raise ValueError(f"bad word token {tok!r}")
        letters.append((m.group(1), int(m.group(2)) if m.group(2) else 1))
    return Word(tuple(letters))


def format_word(w: Word) -> str:
    if not w.letters:
        return "id"
    return " ".join(g if e == 1 else f"{g}^{e}" for g, e in w.letters)


_POW_CACHE: dict = {}


def _gen_power(g: str, e: int, d: int) -> GroupElem:
    key = (g, e, d)
    M = _POW_CACHE.get(key)
    if M is None:
        M = generators(d)[g] ** e
        if len(_POW_CACHE) < 20000:
            _POW_CACHE[key] = M
    return M


def evaluate_word(w: Word, d: int) -> GroupElem:
    out = GroupElem.identity(d)
    for g, e in w.letters:
        out = out @ _gen_power(g, e, d)
    return out
