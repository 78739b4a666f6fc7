"""Comparing braids under finite Thurston-type orderings.

A normal ordering is given by an :class:`Arrangement`; a general one by an
arrangement together with a positive conjugating word ``P``.  Comparison
reduces to the codes of C-normal forms: both sides are lifted to positive
braids by a common central factor Delta^(2p), then their codes are compared
from the most significant position.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Union

from .alternating import Arrangement, _twisted
from .codes import Code, _cmp_left
from .errors import StrandMismatch
from .ordinals import Comparison
from .words import (
    BraidWord,
    PositiveBraidWord,
    _require_positive,
    _same_strands,
    delta_power_letters,
    equal,
    positive_lift,
)


class Sign(Enum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Normal:
    arrangement: Arrangement

    @property
    def strands(self) -> int:
        return self.arrangement.strands


@dataclass(frozen=True)
class Conjugated:
    """The ordering ``f < g  iff  f P <_N g P`` for the normal ordering ``<_N``."""

    arrangement: Arrangement
    conjugator: PositiveBraidWord

    def __post_init__(self):
        P = _require_positive(self.conjugator)
        if P.strands != self.arrangement.strands:
            raise StrandMismatch("conjugator and arrangement disagree on strands")
        object.__setattr__(self, "conjugator", P)

    @property
    def strands(self) -> int:
        return self.arrangement.strands


OrderingSpec = Union[Normal, Conjugated]


def dehornoy(n: int) -> Normal:
    return Normal(Arrangement.dehornoy(n))


def _spec(s: OrderingSpec | Arrangement) -> OrderingSpec:
    return Normal(s) if isinstance(s, Arrangement) else s


def _check(w: BraidWord, s: OrderingSpec) -> None:
    if w.strands != s.strands:
        raise StrandMismatch(f"word on {w.strands} strands, ordering on {s.strands}")


def _suffix(s: OrderingSpec) -> tuple[int, ...]:
    return s.conjugator.letters if isinstance(s, Conjugated) else ()


def cnormal(b: BraidWord, s: OrderingSpec | Arrangement) -> tuple[BraidWord, Code]:
    """C-normal form and code of a positive braid.

    For a conjugated ordering the word is the normal form of ``b P`` followed
    by the formal inverse of ``P``; the code is that of ``b P``.
    """
    s = _spec(s)
    b = _require_positive(b)
    _check(b, s)
    n = b.strands
    P = _suffix(s)
    letters, code = _twisted(n, s.arrangement.k, b.letters + P)
    if not P:
        return PositiveBraidWord(n, letters), code
    return BraidWord(n, letters + tuple(-e for e in reversed(P))), code


def code(b: BraidWord, s: OrderingSpec | Arrangement) -> Code:
    return cnormal(b, s)[1]


def _lift_pair(u: BraidWord, v: BraidWord) -> tuple[PositiveBraidWord, PositiveBraidWord]:
    pu, au = positive_lift(u)
    pv, av = positive_lift(v)
    p = max(au, av)
    n = u.strands
    lu = PositiveBraidWord(n, delta_power_letters(n, 2 * (p - au)) + pu.letters)
    lv = PositiveBraidWord(n, delta_power_letters(n, 2 * (p - av)) + pv.letters)
    return lu, lv


def compare(u: BraidWord, v: BraidWord, s: OrderingSpec | Arrangement) -> Comparison:
    """Three-way comparison of two braid words (inverse letters allowed)."""
    s = _spec(s)
    _same_strands(u, v)
    _check(u, s)
    lu, lv = _lift_pair(u, v)
    P = _suffix(s)
    if P:
        lu = PositiveBraidWord(lu.strands, lu.letters + P)
        lv = PositiveBraidWord(lv.strands, lv.letters + P)
    if equal(lu, lv):
        return Comparison.EQUAL
    k = s.arrangement.k
    cu = _twisted(lu.strands, k, lu.letters)[1]
    cv = _twisted(lv.strands, k, lv.letters)[1]
    got = _cmp_left(cu, cv)
    if got == 0:
        raise RuntimeError(f"distinct braids {u} and {v} received the same code")
    return Comparison.of(got)


def sign(u: BraidWord, s: OrderingSpec | Arrangement) -> Sign:
    """Is ``u`` above, at, or below the identity?"""
    got = compare(u, BraidWord(u.strands), s)
    return {Comparison.LESS: Sign.NEGATIVE, Comparison.EQUAL: Sign.ZERO, Comparison.GREATER: Sign.POSITIVE}[
        got
    ]
