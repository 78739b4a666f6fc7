"""Codes of positive braid words and their comparison.

A code lives in a *context* ``(n, k)``: a strand count and an arrangement.
For two strands it is a :class:`Leaf` holding the exponent of sigma_1.  For
``n >= 3`` it is a :class:`Composite` whose entry at position ``p`` is itself a
code in a smaller context:

* ``p >= 1``: the Dehornoy context on ``n - 1`` strands;
* ``p == 0``: the context ``(n - 1, k0)``;
* ``p == -j``: the context of block ``j`` (its strand count and ``k_j``).

Entries are stored from the lowest position ``-(n-2)`` upwards.  Normal
codes drop zero entries above the highest non-zero position but always keep
every position from ``-(n-2)`` through ``0``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Mapping, Union

from .alternating import _bounds, _down, _flip, _k0, _kj, _up, Arrangement
from .errors import ContextMismatch, MembershipViolation, StrandMismatch
from .ordinals import Comparison, Ordinal, ZERO

Context = tuple[int, tuple[int, ...]]


@dataclass(frozen=True)
class Leaf:
    value: int

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("leaf code values are non-negative")

    strands = 2
    k = (1,)

    @property
    def context(self) -> Context:
        return (2, (1,))

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    def __str__(self) -> str:
        return f"({self.value})"

    def to_nested(self):
        return self.value


@dataclass(frozen=True)
class Composite:
    strands: int
    k: tuple[int, ...]
    entries: tuple[Code, ...]  # entries[i] sits at position i - (strands - 2)

    def __post_init__(self):
        n = self.strands
        if len(self.k) != n - 1 or n < 3:
            raise ContextMismatch(f"arrangement {self.k} does not fit {n} strands")
        if len(self.entries) < n - 1:
            raise ValueError("a composite code must cover positions -(n-2)..0")
        for i, c in enumerate(self.entries):
            want = sub_context(n, self.k, i - (n - 2))
            if c.context != want:
                raise ContextMismatch(
                    f"entry at position {i - (n - 2)} has context {c.context}, expected {want}"
                )
        if len(self.entries) > n - 1 and self.entries[-1].is_zero:
            raise ValueError("composite code is not normalized (zero top entry)")

    @classmethod
    def from_positions(cls, n: int, k: tuple[int, ...], entries: Mapping[int, Code]) -> Composite:
        """Build a normalized code; missing positions are zero."""
        k = tuple(k)
        top = max([0] + [p for p, c in entries.items() if not c.is_zero])
        low = -(n - 2)
        if min(entries, default=0) < low:
            raise ValueError(f"position below {low}")
        seq = []
        for p in range(low, top + 1):
            c = entries.get(p)
            seq.append(zero_code(*sub_context(n, k, p)) if c is None else c)
        return cls(n, k, tuple(seq))

    @property
    def context(self) -> Context:
        return (self.strands, self.k)

    @property
    def low(self) -> int:
        return -(self.strands - 2)

    @property
    def top(self) -> int:
        return len(self.entries) - 1 + self.low

    def position(self, p: int) -> Code:
        i = p - self.low
        if i < 0:
            raise IndexError(f"position {p} below {self.low}")
        if i >= len(self.entries):
            return zero_code(*sub_context(self.strands, self.k, p))
        return self.entries[i]

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.entries)

    def high_to_low(self) -> tuple[Code, ...]:
        return tuple(reversed(self.entries))

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        if self.strands == 3:
            body = ",".join(str(c.value) for c in self.high_to_low())
        else:
            body = ",".join(str(c) for c in self.high_to_low())
        return f"({body})"

    def to_nested(self):
        return [c.to_nested() for c in self.high_to_low()]


Code = Union[Leaf, Composite]


def sub_context(n: int, k: tuple[int, ...], p: int) -> Context:
    """Context of the entry at position ``p`` of a code in context ``(n, k)``."""
    if p >= 1:
        return (n - 1, tuple(range(1, n - 1)))
    if p == 0:
        return (n - 1, _k0(k))
    j = -p
    if j > n - 2:
        raise IndexError(f"position {p} below {-(n - 2)}")
    kj = _kj(k, j)
    return (len(kj) + 1, kj)


@functools.lru_cache(maxsize=None)
def zero_code(n: int, k: tuple[int, ...] | None = None) -> Code:
    if n == 2:
        return Leaf(0)
    k = tuple(range(1, n)) if k is None else tuple(k)
    return Composite.from_positions(n, k, {})


# -- text formats ---------------------------------------------------------------


def _nested(text: str):
    text = text.strip()
    pos = 0

    def item():
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos < len(text) and text[pos] == "(":
            pos += 1
            out = [item()]
            while True:
                while pos < len(text) and text[pos].isspace():
                    pos += 1
                if pos < len(text) and text[pos] == ",":
                    pos += 1
                    out.append(item())
                elif pos < len(text) and text[pos] == ")":
                    pos += 1
                    return out
                else:
                    raise ValueError(f"bad code syntax near {text[pos:]!r}")
        start = pos
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if start == pos:
            raise ValueError(f"bad code syntax near {text[pos:]!r}")
        return int(text[start:pos])

    got = item()
    if text[pos:].strip():
        raise ValueError(f"trailing text in code {text!r}")
    return got


def from_nested(obj, n: int, k: tuple[int, ...] | None = None) -> Code:
    """Build a code from nested lists (most significant entry first)."""
    k = tuple(range(1, n)) if k is None else tuple(k)
    if n == 2:
        while isinstance(obj, list):
            if len(obj) != 1:
                raise ValueError("a two-strand code is a single integer")
            obj = obj[0]
        return Leaf(int(obj))
    if not isinstance(obj, list):
        obj = [obj]
    entries = {}
    for i, sub in enumerate(reversed(obj)):
        p = i - (n - 2)
        entries[p] = from_nested(sub, *sub_context(n, k, p))
    return Composite.from_positions(n, k, entries)


def parse_code(text: str, n: int, k: tuple[int, ...] | Arrangement | None = None) -> Code:
    """Parse the parenthesized notation.  Entries are right-aligned: the last
    one sits at position ``-(n-2)``."""
    if isinstance(k, Arrangement):
        k = k.k
    return from_nested(_nested(text), n, k)


# -- comparisons ----------------------------------------------------------------


def _check(c: Code, d: Code) -> None:
    if c.context != d.context:
        raise ContextMismatch(f"codes from contexts {c.context} and {d.context}")


def _cmp_left(c: Code, d: Code) -> int:
    if isinstance(c, Leaf):
        return (c.value > d.value) - (c.value < d.value)
    for p in range(max(c.top, d.top), c.low - 1, -1):
        s = _cmp_left(c.position(p), d.position(p))
        if s:
            return s
    return 0


def _cmp_right(c: Code, d: Code) -> int:
    if isinstance(c, Leaf):
        return (c.value > d.value) - (c.value < d.value)
    for p in range(c.low, max(c.top, d.top) + 1):
        s = _cmp_right(c.position(p), d.position(p))
        if s:
            return s
    return 0


def cmp_left(c: Code, d: Code) -> Comparison:
    """Lexicographic comparison starting from the most significant position."""
    _check(c, d)
    return Comparison.of(_cmp_left(c, d))


def cmp_right(c: Code, d: Code) -> Comparison:
    """Lexicographic comparison starting from position ``-(n-2)``."""
    _check(c, d)
    return Comparison.of(_cmp_right(c, d))


# -- ordinal rank ---------------------------------------------------------------


def _shift_exponents(a: Ordinal, base: Ordinal) -> Ordinal:
    # omega^base * a, for a in Cantor normal form
    return Ordinal(tuple((base + e, c) for e, c in a.terms))


def code_to_ordinal(c: Code) -> Ordinal:
    """Rank of a code: position ``p`` contributes ``B^(p+n-2) * ord(C_p)`` with
    ``B = w^(w^(n-3))``.  Strictly monotone for :func:`cmp_left`."""
    if isinstance(c, Leaf):
        return Ordinal.finite(c.value)
    n = c.strands
    total = ZERO
    for p in range(c.top, c.low - 1, -1):
        sub = code_to_ordinal(c.position(p))
        e = p + n - 2
        if sub.is_zero:
            continue
        base = Ordinal.power(Ordinal.finite(n - 3), e)  # w^(n-3) * e
        total = total + _shift_exponents(sub, base)
    return total


# -- towers ---------------------------------------------------------------------


@dataclass(frozen=True)
class Tower:
    """A word together with a recursive subword decomposition.

    For two strands ``letters`` is the word itself.  Otherwise ``parts`` maps
    positions to sub-towers, each expressed in the coordinates of its own
    context (the flip power, shift, or block shift already applied), and
    ``letters`` is left empty.
    """

    strands: int
    parts: tuple[tuple[int, Tower], ...] = ()
    letters: tuple[int, ...] = ()

    def word(self, a: Arrangement | tuple[int, ...]) -> tuple[int, ...]:
        k = a.k if isinstance(a, Arrangement) else tuple(a)
        return _tower_word(self, k)

    def __str__(self) -> str:
        if self.strands == 2:
            return " ".join(map(str, self.letters))
        return "[" + " | ".join(f"{p}: {t}" for p, t in sorted(self.parts, reverse=True)) + "]"


def _piece_to_original(n: int, k: tuple[int, ...], p: int, letters: tuple[int, ...]) -> tuple[int, ...]:
    if p >= 1:
        return _flip(letters, n) if p % 2 == 0 else letters
    if p == 0:
        return _up(letters, 1)
    low, _ = _bounds(k, -p)
    return _up(letters, low - 1)


def _piece_to_local(n: int, k: tuple[int, ...], p: int, letters: tuple[int, ...]) -> tuple[int, ...]:
    if p >= 1:
        return _flip(letters, n) if p % 2 == 0 else tuple(letters)
    if p == 0:
        return _down(letters, 1)
    low, _ = _bounds(k, -p)
    return _down(letters, low - 1)


def _tower_word(t: Tower, k: tuple[int, ...]) -> tuple[int, ...]:
    if t.strands == 2:
        return t.letters
    out: tuple[int, ...] = ()
    for p, sub in sorted(t.parts, key=lambda x: -x[0]):
        ctx = sub_context(t.strands, k, p)
        out += _piece_to_original(t.strands, k, p, _tower_word(sub, ctx[1]))
    return out


def piece_generators(n: int, k: tuple[int, ...], p: int) -> frozenset[int]:
    """Generators allowed in the piece at position ``p`` (original coordinates)."""
    if p >= 1:
        return frozenset(range(1, n - 1)) if p % 2 else frozenset(range(2, n))
    if p == 0:
        return frozenset(range(2, n))
    low, high = _bounds(k, -p)
    return frozenset(range(low, high))


def code_from_tower(t: Tower, a: Arrangement | tuple[int, ...]) -> Code:
    """Code of a tower of subword decompositions."""
    k = a.k if isinstance(a, Arrangement) else tuple(a)
    if t.strands != len(k) + 1:
        raise StrandMismatch(f"tower on {t.strands} strands, arrangement on {len(k) + 1}")
    return _code(t, k)


def _code(t: Tower, k: tuple[int, ...]) -> Code:
    n = t.strands
    if n == 2:
        if t.parts or any(e != 1 for e in t.letters):
            raise MembershipViolation(f"two-strand piece {t.letters} is not a power of sigma_1")
        return Leaf(len(t.letters))
    if t.letters:
        raise MembershipViolation("towers on 3 or more strands carry their letters in parts")
    seen = set()
    entries = {}
    for p, sub in t.parts:
        if p in seen:
            raise MembershipViolation(f"position {p} used twice")
        seen.add(p)
        if p < -(n - 2):
            raise MembershipViolation(f"position {p} below {-(n - 2)}")
        ctx = sub_context(n, k, p)
        if sub.strands != ctx[0]:
            raise MembershipViolation(
                f"piece at position {p} lives on {sub.strands} strands, expected {ctx[0]}"
            )
        entries[p] = _code(sub, ctx[1])
    return Composite.from_positions(n, k, entries)


def tower_from_pieces(
    n: int,
    k: tuple[int, ...] | Arrangement,
    pieces: Mapping[int, tuple[int, ...]],
    sub=None,
) -> Tower:
    """Assemble a tower from pieces in original coordinates.

    ``sub(letters, n, k)`` chooses the sub-tower of each transformed piece;
    the default picks the one with the largest code under :func:`cmp_right`.
    """
    if isinstance(k, Arrangement):
        k = k.k
    k = tuple(k)
    if sub is None:
        from .oracle import max_tower

        sub = max_tower
    parts = []
    for p, letters in pieces.items():
        letters = tuple(letters)
        allowed = piece_generators(n, k, p)
        bad = [e for e in letters if e not in allowed]
        if bad:
            raise MembershipViolation(
                f"piece at position {p} uses sigma_{bad[0]}, allowed {sorted(allowed)}"
            )
        if not letters:
            continue
        ctx = sub_context(n, k, p)
        local = _piece_to_local(n, k, p, letters)
        parts.append((p, Tower(2, (), local) if ctx[0] == 2 else sub(local, *ctx)))
    return Tower(n, tuple(sorted(parts, key=lambda x: -x[0])))


def parse_bars(
    text: str,
    n: int,
    k: tuple[int, ...] | Arrangement | None = None,
    tail: str | None = None,
) -> Tower:
    """Tower from bar notation such as ``"1|3 2 3|2 2 1 1||3"``.

    Pieces are ``A_m | ... | A_0 | A_-1``; the last piece is the tail, which
    ``tail`` (e.g. ``"|3"`` for ``X_1 = e, X_2 = sigma_3``) splits into blocks.
    Without ``tail`` the tail goes entirely into the last block that accepts
    it, tried from ``X_{n-2}`` downwards; sub-towers are chosen maximal.
    """
    if isinstance(k, Arrangement):
        k = k.k
    k = tuple(range(1, n)) if k is None else tuple(k)
    chunks = [tuple(int(x) for x in c.split()) for c in text.split("|")]
    if len(chunks) < 2:
        raise ValueError("bar notation needs at least A_0 | A_-1")
    *top, last = chunks
    pieces: dict[int, tuple[int, ...]] = {}
    for i, letters in enumerate(reversed(top)):
        pieces[i] = letters
    if n == 2:
        raise ValueError("bar notation applies to 3 or more strands")
    if tail is None:
        if last:
            for j in range(n - 2, 0, -1):
                if set(last) <= piece_generators(n, k, -j):
                    pieces[-j] = last
                    break
            else:
                raise MembershipViolation(f"tail {last} fits no single block; pass tail=")
    else:
        blocks = [tuple(int(x) for x in c.split()) for c in tail.split("|")]
        if len(blocks) != n - 2:
            raise ValueError(f"tail needs {n - 2} blocks")
        if sum(blocks, ()) != last:
            raise ValueError("tail blocks do not spell the tail piece")
        for j, letters in enumerate(blocks, start=1):
            pieces[-j] = letters
    return tower_from_pieces(n, k, pieces)
