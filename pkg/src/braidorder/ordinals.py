"""Ordinals below epsilon_0 in Cantor normal form.

Only what the code embedding needs is provided: construction, addition,
comparison and the ``w^(E)*c`` text format.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from enum import Enum


class Comparison(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    def __str__(self) -> str:
        return self.name

    @classmethod
    def of(cls, x: int) -> Comparison:
        return cls.LESS if x < 0 else cls.GREATER if x > 0 else cls.EQUAL


@functools.total_ordering
@dataclass(frozen=True)
class Ordinal:
    """``terms`` are (exponent, coefficient) pairs with strictly decreasing
    exponents and positive coefficients; the empty tuple is zero."""

    terms: tuple[tuple[Ordinal, int], ...] = ()

    def __post_init__(self):
        prev = None
        for exp, c in self.terms:
            if not isinstance(c, int) or c < 1:
                raise ValueError(f"coefficient {c!r} must be a positive integer")
            if prev is not None and _cmp(exp, prev) >= 0:
                raise ValueError("exponents must be strictly decreasing")
            prev = exp

    @classmethod
    def finite(cls, a: int) -> Ordinal:
        if a < 0:
            raise ValueError("ordinals are non-negative")
        return cls(((ZERO, a),)) if a else ZERO

    @classmethod
    def power(cls, exp: Ordinal, coeff: int = 1) -> Ordinal:
        """omega ** exp * coeff."""
        return cls(((exp, coeff),)) if coeff else ZERO

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_finite(self) -> bool:
        return all(e.is_zero for e, _ in self.terms)

    def __add__(self, other: Ordinal) -> Ordinal:
        if not other.terms:
            return self
        lead_exp, lead_c = other.terms[0]
        kept = []
        for exp, c in self.terms:
            s = _cmp(exp, lead_exp)
            if s > 0:
                kept.append((exp, c))
            elif s == 0:
                lead_c += c
                break
            else:
                break
        return Ordinal(tuple(kept) + ((lead_exp, lead_c),) + other.terms[1:])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __lt__(self, other: Ordinal) -> bool:
        return _cmp(self, other) < 0

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for exp, c in self.terms:
            if exp.is_zero:
                out.append(str(c))
            elif c == 1:
                out.append(f"w^({exp})")
            else:
                out.append(f"w^({exp})*{c}")
        return " + ".join(out)


ZERO = Ordinal()


def _cmp(x: Ordinal, y: Ordinal) -> int:
    for (ex, cx), (ey, cy) in zip(x.terms, y.terms):
        s = _cmp(ex, ey)
        if s:
            return s
        if cx != cy:
            return -1 if cx < cy else 1
    return (len(x.terms) > len(y.terms)) - (len(x.terms) < len(y.terms))


def ordinal_cmp(x: Ordinal, y: Ordinal) -> Comparison:
    return Comparison.of(_cmp(x, y))


def parse_ordinal(text: str) -> Ordinal:
    """Inverse of ``str(Ordinal)``."""
    pos, result = _parse_sum(text.replace(" ", ""), 0)
    if pos != len(text.replace(" ", "")):
        raise ValueError(f"trailing characters in ordinal {text!r}")
    return result


def _parse_sum(s: str, i: int) -> tuple[int, Ordinal]:
    total = ZERO
    while True:
        if s.startswith("w^(", i):
            i, exp = _parse_sum(s, i + 3)
            if i >= len(s) or s[i] != ")":
                raise ValueError("unbalanced parenthesis in ordinal")
            i += 1
            coeff = 1
            if i < len(s) and s[i] == "*":
                j = i + 1
                while j < len(s) and s[j].isdigit():
                    j += 1
                coeff = int(s[i + 1:j])
                i = j
            total = total + Ordinal.power(exp, coeff)
        else:
            j = i
            while j < len(s) and s[j].isdigit():
                j += 1
            if j == i:
                raise ValueError(f"bad ordinal syntax at {s[i:]!r}")
            total = total + Ordinal.finite(int(s[i:j]))
            i = j
        if i < len(s) and s[i] == "+":
            i += 1
            continue
        return i, total
