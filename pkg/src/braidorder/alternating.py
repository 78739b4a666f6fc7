"""Alternating (Phi) normal form and its tail-twisted variant.

Both are built by peeling maximal right divisors from the reversed greedy
form.  The tail-twisted form is parametrized by an :class:`Arrangement`, the
permutation ``k`` recording where each vertical arc of a normal curve diagram
sits between the punctures.

The Phi route and the tail-twisted route are kept as two separate recursions
so one can be checked against the other (for the trivial arrangement they
must agree letter for letter).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Sequence

from .errors import IndexOutOfRange, StrandMismatch, StrandTooSmall
from .garside import gens_mask
from .words import BraidWord, PositiveBraidWord, _Greedy, _require_positive, peel_right_divisor


@dataclass(frozen=True)
class Arrangement:
    """Normal curve diagram data: ``k[i-1]`` is the gap (between punctures
    ``k`` and ``k+1``) holding the i-th vertical arc."""

    k: tuple[int, ...]

    def __post_init__(self):
        k = tuple(int(x) for x in self.k)
        if not k or sorted(k) != list(range(1, len(k) + 1)):
            raise ValueError(f"{self.k} is not a permutation of 1..{len(k)}")
        object.__setattr__(self, "k", k)

    @property
    def strands(self) -> int:
        return len(self.k) + 1

    @classmethod
    def dehornoy(cls, n: int) -> Arrangement:
        if n < 2:
            raise StrandTooSmall("need at least 2 strands")
        return cls(tuple(range(1, n)))

    @classmethod
    def parse(cls, text: str) -> Arrangement:
        return cls(tuple(int(tok) for tok in text.replace(",", " ").split()))

    def __str__(self) -> str:
        return ",".join(map(str, self.k))

    def __getitem__(self, i: int) -> int:
        """1-based access, matching k(1), ..., k(n-1)."""
        return self.k[i - 1]


@dataclass(frozen=True)
class BlockBounds:
    j: int
    low: int
    high: int

    @property
    def generators(self) -> tuple[int, ...]:
        return tuple(range(self.low, self.high))

    @property
    def strands(self) -> int:
        return self.high - self.low + 1


def _bounds(k: tuple[int, ...], j: int) -> tuple[int, int]:
    n = len(k) + 1
    pivot = k[j]
    low = max([1] + [k[i] + 1 for i in range(j) if k[i] < pivot])
    high = min([n] + [k[i] for i in range(j) if k[i] > pivot])
    return low, high


def block_bounds(a: Arrangement, j: int) -> BlockBounds:
    """Bounds ``(m_j, M_j)`` of the block of punctures containing ``k(j+1)``
    once the gaps ``k(1), ..., k(j)`` are cut."""
    n = a.strands
    if not 1 <= j <= n - 2:
        raise IndexOutOfRange(f"block index {j} not in 1..{n - 2}")
    low, high = _bounds(a.k, j)
    return BlockBounds(j, low, high)


def _k0(k: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x - 1 for x in k if x > 1)


def _kj(k: tuple[int, ...], j: int) -> tuple[int, ...]:
    low, high = _bounds(k, j)
    return tuple(x - (low - 1) for x in k[j:] if low <= x <= high - 1)


def derive_k0(a: Arrangement) -> Arrangement:
    """Arrangement induced on <s2, ..., s_{n-1}> after the shift."""
    if a.strands < 3:
        raise StrandTooSmall("k0 needs at least 3 strands")
    return Arrangement(_k0(a.k))


def derive_kj(a: Arrangement, j: int) -> Arrangement:
    """Arrangement induced on block ``j`` after shifting it down to start at 1."""
    if not 1 <= j <= a.strands - 2:
        raise IndexOutOfRange(f"block index {j} not in 1..{a.strands - 2}")
    return Arrangement(_kj(a.k, j))


def _check_strands(b: BraidWord, a: Arrangement) -> None:
    if b.strands != a.strands:
        raise StrandMismatch(f"word on {b.strands} strands, arrangement on {a.strands}")


# -- letter-level transforms ----------------------------------------------------


def _flip(letters: Sequence[int], n: int) -> tuple[int, ...]:
    return tuple(n - e for e in letters)


def _down(letters: Sequence[int], d: int) -> tuple[int, ...]:
    return tuple(e - d for e in letters)


def _up(letters: Sequence[int], d: int) -> tuple[int, ...]:
    return tuple(e + d for e in letters)


def _upper(n: int) -> int:
    return gens_mask(range(2, n))


def _lower(n: int) -> int:
    return gens_mask(range(1, n - 1))


# -- alternate decomposition and Phi normal form -------------------------------


@dataclass(frozen=True)
class AlternateDecomposition:
    """Factors listed from the most significant (leftmost) down to beta_0.

    ``sides[i]`` is ``"J"`` for factors in <s1..s_{n-2}> and ``"I"`` for
    <s2..s_{n-1}>.
    """

    strands: int
    factors: tuple[PositiveBraidWord, ...]
    sides: tuple[str, ...]

    def __str__(self) -> str:
        return "".join(f"({f})" for f in self.factors)


def _alternate(n: int, letters: Sequence[int]) -> list[list[int]]:
    # beta_0, beta_1, ... as raw peeled words
    nf = _Greedy(n, reversed(letters))
    out = [peel_right_divisor(nf, _upper(n))]
    i = 1
    while nf:
        got = peel_right_divisor(nf, _lower(n) if i % 2 else _upper(n))
        if not got:
            raise RuntimeError("alternate decomposition made no progress")
        out.append(got)
        i += 1
    return out


def _phi_factor(n: int, i: int, piece: Sequence[int]) -> tuple[int, ...]:
    if not piece:
        return ()
    if i == 0:
        return _up(_phi(n - 1, _down(piece, 1)), 1)
    if i % 2:
        return _phi(n - 1, tuple(piece))
    return _flip(_phi(n - 1, _flip(piece, n)), n)


@functools.lru_cache(maxsize=200000)
def _phi(n: int, letters: tuple[int, ...]) -> tuple[int, ...]:
    if n == 2 or not letters:
        return letters
    out: list[int] = []
    parts = _alternate(n, letters)
    for i in range(len(parts) - 1, -1, -1):
        out.extend(_phi_factor(n, i, parts[i]))
    return tuple(out)


def alternate_decomposition(b: BraidWord) -> AlternateDecomposition:
    """Alternate decomposition b = beta_m ... beta_1 beta_0.

    beta_0 is the maximal right divisor in <s2..s_{n-1}>; odd-indexed factors
    live in <s1..s_{n-2}>, even-indexed ones in <s2..s_{n-1}>.  Each factor is
    returned in its own Phi normal form.  The empty braid has no factors.
    """
    b = _require_positive(b)
    n = b.strands
    if n < 3:
        raise StrandTooSmall("the alternate decomposition needs at least 3 strands")
    if not b.letters:
        return AlternateDecomposition(n, (), ())
    parts = _alternate(n, b.letters)
    factors = tuple(
        PositiveBraidWord(n, _phi_factor(n, i, parts[i])) for i in range(len(parts) - 1, -1, -1)
    )
    sides = tuple("J" if i % 2 else "I" for i in range(len(parts) - 1, -1, -1))
    return AlternateDecomposition(n, factors, sides)


def phi_normal_form(b: BraidWord) -> PositiveBraidWord:
    """Dehornoy's alternating normal form of a positive braid."""
    b = _require_positive(b)
    return PositiveBraidWord(b.strands, _phi(b.strands, b.letters))


# -- tail-twisted decomposition -------------------------------------------------


@dataclass(frozen=True)
class TailTwistDecomposition:
    main: PositiveBraidWord
    t0: PositiveBraidWord
    tails: tuple[PositiveBraidWord, ...]  # beta_T1, ..., beta_T(n-2)

    @property
    def tail(self) -> PositiveBraidWord:
        letters: tuple[int, ...] = ()
        for t in self.tails:
            letters += t.letters
        return PositiveBraidWord(self.main.strands, letters)


@dataclass(frozen=True)
class _Split:
    main: tuple[list[int], ...]  # beta_1, beta_2, ... (beta_0 of the main part is trivial)
    t0: list[int]
    tails: tuple[list[int], ...]  # beta_T1, ..., beta_T(n-2)


def _tail_split(n: int, k: tuple[int, ...], letters: Sequence[int]) -> _Split:
    nf = _Greedy(n, reversed(letters))
    tail = peel_right_divisor(nf, gens_mask(i for i in range(1, n) if i != k[0]))
    t0 = peel_right_divisor(nf, _upper(n))
    main: list[list[int]] = []
    i = 1
    while nf:
        got = peel_right_divisor(nf, _lower(n) if i % 2 else _upper(n))
        if not got:
            raise RuntimeError("tail-twisted decomposition made no progress")
        main.append(got)
        i += 1
    tnf = _Greedy(n, reversed(tail))
    blocks: list[list[int]] = [[] for _ in range(n - 2)]
    for j in range(n - 2, 0, -1):
        low, high = _bounds(k, j)
        blocks[j - 1] = peel_right_divisor(tnf, gens_mask(range(low, high)))
    if tnf:
        raise RuntimeError("tail blocks do not exhaust the tail")
    return _Split(tuple(main), t0, tuple(blocks))


def tail_twist_decomposition(b: BraidWord, a: Arrangement) -> TailTwistDecomposition:
    """Split ``b`` as main * T0 * T1 ... T(n-2).

    Components are given in their own tail-twisted normal forms (the main part
    in Phi normal form), so concatenating them yields
    :func:`tail_twisted_normal_form`.
    """
    b = _require_positive(b)
    _check_strands(b, a)
    n = b.strands
    if n == 2:
        e = PositiveBraidWord(2)
        return TailTwistDecomposition(b, e, ())
    word, _ = _twisted(n, a.k, b.letters)
    sp = _tail_split(n, a.k, b.letters)
    main_len = sum(len(x) for x in sp.main)
    t0_len = len(sp.t0)
    pos = 0
    main = PositiveBraidWord(n, word[pos:main_len])
    pos = main_len
    t0 = PositiveBraidWord(n, word[pos:pos + t0_len])
    pos += t0_len
    tails = []
    for blk in sp.tails:
        tails.append(PositiveBraidWord(n, word[pos:pos + len(blk)]))
        pos += len(blk)
    return TailTwistDecomposition(main, t0, tuple(tails))


def tail_twisted_normal_form(b: BraidWord, a: Arrangement) -> PositiveBraidWord:
    b = _require_positive(b)
    _check_strands(b, a)
    word, _ = _twisted(b.strands, a.k, b.letters)
    return PositiveBraidWord(b.strands, word)


@functools.lru_cache(maxsize=200000)
def _twisted(n: int, k: tuple[int, ...], letters: tuple[int, ...]):
    """Tail-twisted normal form together with the code of its induced tower."""
    from .codes import Composite, Leaf, zero_code

    if n == 2:
        return letters, Leaf(len(letters))
    if not letters:
        return (), zero_code(n, k)
    sp = _tail_split(n, k, letters)
    dehornoy = tuple(range(1, n - 1))
    entries: dict[int, object] = {}
    pieces: list[tuple[int, ...]] = []
    for p in range(len(sp.main), 0, -1):
        piece = sp.main[p - 1]
        if p % 2:
            w, c = _twisted(n - 1, dehornoy, tuple(piece))
        else:
            w, c = _twisted(n - 1, dehornoy, _flip(piece, n))
            w = _flip(w, n)
        pieces.append(w)
        entries[p] = c
    w, c = _twisted(n - 1, _k0(k), _down(sp.t0, 1))
    pieces.append(_up(w, 1))
    entries[0] = c
    for j in range(1, n - 1):
        low, _high = _bounds(k, j)
        kj = _kj(k, j)
        w, c = _twisted(len(kj) + 1, kj, _down(sp.tails[j - 1], low - 1))
        pieces.append(_up(w, low - 1))
        entries[-j] = c
    out: tuple[int, ...] = ()
    for piece in pieces:
        out += tuple(piece)
    return out, Composite.from_positions(n, k, entries)
