"""Divisibility in parabolic submonoids of the positive braid monoid."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import IndexOutOfRange
from .words import (
    BraidWord,
    PositiveBraidWord,
    _Greedy,
    _require_positive,
    _same_strands,
    peel_right_divisor,
    right_quotient,
)


@dataclass(frozen=True)
class GeneratorSet:
    strands: int
    members: frozenset[int]

    def __init__(self, strands: int, members: Iterable[int]):
        members = frozenset(int(i) for i in members)
        for i in members:
            if not 1 <= i <= strands - 1:
                raise IndexOutOfRange(f"generator {i} not in 1..{strands - 1}")
        object.__setattr__(self, "strands", strands)
        object.__setattr__(self, "members", members)

    @property
    def mask(self) -> int:
        m = 0
        for i in self.members:
            m |= 1 << i
        return m

    def __contains__(self, i: int) -> bool:
        return i in self.members


def gens_mask(members: Iterable[int]) -> int:
    m = 0
    for i in members:
        m |= 1 << i
    return m


def right_divides_gen(b: BraidWord, i: int) -> bool:
    """Does sigma_i right-divide ``b``?

    Read off the first factor of the greedy form of the reversed word, i.e. the
    last factor of the right-weighted form of ``b``.
    """
    b = _require_positive(b)
    if not 1 <= i <= b.strands - 1:
        raise IndexOutOfRange(f"generator {i} not in 1..{b.strands - 1}")
    nf = _Greedy(b.strands, reversed(b.letters))
    return bool((nf.start_mask() >> i) & 1)


def right_divides_gen_by_quotient(b: BraidWord, i: int) -> bool:
    """Same question answered through :func:`right_quotient` (independent route)."""
    if not 1 <= i <= b.strands - 1:
        raise IndexOutOfRange(f"generator {i} not in 1..{b.strands - 1}")
    return right_quotient(b, PositiveBraidWord(b.strands, (i,))) is not None


def max_right_divisor(b: BraidWord, s: GeneratorSet | Iterable[int]) -> PositiveBraidWord:
    """The largest right divisor of ``b`` lying in the submonoid generated by ``s``.

    Generators of ``s`` that right-divide the remainder are peeled one at a
    time, smallest index first, so the returned word is reproducible.
    """
    b = _require_positive(b)
    if not isinstance(s, GeneratorSet):
        s = GeneratorSet(b.strands, s)
    _same_strands(b, BraidWord(s.strands))
    nf = _Greedy(b.strands, reversed(b.letters))
    return PositiveBraidWord(b.strands, tuple(peel_right_divisor(nf, s.mask)))


def split_right(b: BraidWord, s: GeneratorSet | Iterable[int]) -> tuple[PositiveBraidWord, PositiveBraidWord]:
    """Return ``(rest, divisor)`` with ``rest * divisor == b`` and ``divisor = b ^ B_s``."""
    b = _require_positive(b)
    if not isinstance(s, GeneratorSet):
        s = GeneratorSet(b.strands, s)
    nf = _Greedy(b.strands, reversed(b.letters))
    d = peel_right_divisor(nf, s.mask)
    rest = tuple(reversed(nf.letters()))
    return PositiveBraidWord(b.strands, rest), PositiveBraidWord(b.strands, tuple(d))
