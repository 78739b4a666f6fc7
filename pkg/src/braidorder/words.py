"""Braid words, the positive monoid and its Garside normal form.

A braid word on ``n`` strands is a tuple of non-zero integers: ``+i`` stands
for the Artin generator sigma_i and ``-i`` for its inverse.  Words serialize as
whitespace-separated signed integers (``"1 -3 2"``) with the strand count
supplied separately.

Equality in the positive monoid is decided with the left-weighted (greedy)
normal form.  Simple elements are permutation braids; a factor is stored as a
pair of lists ``(arr, inv)`` with ``arr[pos]`` the strand sitting at position
``pos`` after the braid and ``inv`` its inverse (everything 0-based).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import LetterTooSmall, NotPositive, StrandMismatch, StrandTooSmall


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 2:
            raise StrandTooSmall(f"need at least 2 strands, got {self.strands}")
        letters = tuple(int(e) for e in self.letters)
        for e in letters:
            if not 1 <= abs(e) <= self.strands - 1:
                raise ValueError(f"letter {e} out of range for {self.strands} strands")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def parse(cls, text: str, strands: int) -> BraidWord:
        return cls(strands, tuple(int(tok) for tok in text.split()))

    def __str__(self) -> str:
        return " ".join(str(e) for e in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        _same_strands(self, other)
        cls = PositiveBraidWord if self.is_positive and other.is_positive else BraidWord
        return cls(self.strands, self.letters + other.letters)

    @property
    def is_positive(self) -> bool:
        return all(e > 0 for e in self.letters)

    def inverse(self) -> BraidWord:
        """Formal inverse: reverse the word and negate every letter."""
        return BraidWord(self.strands, tuple(-e for e in reversed(self.letters)))

    def positive(self) -> PositiveBraidWord:
        if isinstance(self, PositiveBraidWord):
            return self
        return PositiveBraidWord(self.strands, self.letters)


class PositiveBraidWord(BraidWord):
    def __post_init__(self):
        super().__post_init__()
        if not all(e > 0 for e in self.letters):
            raise NotPositive(f"word {self.letters} has inverse letters")


def word(text_or_letters: str | Iterable[int], strands: int) -> BraidWord:
    """Build a word from ``"1 -2 1"`` or a sequence of signed integers.

    The result is a :class:`PositiveBraidWord` whenever every letter is positive.
    """
    if isinstance(text_or_letters, str):
        letters = tuple(int(tok) for tok in text_or_letters.split())
    else:
        letters = tuple(text_or_letters)
    if all(e > 0 for e in letters):
        return PositiveBraidWord(strands, letters)
    return BraidWord(strands, letters)


def _same_strands(u: BraidWord, v: BraidWord) -> None:
    if u.strands != v.strands:
        raise StrandMismatch(f"{u.strands} strands vs {v.strands} strands")


def _require_positive(w: BraidWord) -> PositiveBraidWord:
    if not w.is_positive:
        raise NotPositive(f"word {w} has inverse letters")
    return w.positive()


# -- structural homomorphisms -------------------------------------------------


def flip(w: BraidWord) -> BraidWord:
    """Conjugation by Delta: sigma_i -> sigma_{n-i}, signs kept."""
    n = w.strands
    letters = tuple(n - e if e > 0 else -(n + e) for e in w.letters)
    return type(w)(n, letters)


def shift_down(w: BraidWord, d: int) -> BraidWord:
    """Apply the d-fold shift sigma_i -> sigma_{i-d} onto ``n - d`` strands."""
    if d < 0:
        raise ValueError("shift must be non-negative")
    if d == 0:
        return w
    for e in w.letters:
        if abs(e) <= d:
            raise LetterTooSmall(f"letter {e} has no image under a {d}-fold shift")
    letters = tuple(e - d if e > 0 else e + d for e in w.letters)
    return type(w)(w.strands - d, letters)


def shift_up(w: BraidWord, d: int, strands: int | None = None) -> BraidWord:
    """Inverse of :func:`shift_down`; embeds into ``strands`` (default ``n + d``)."""
    strands = w.strands + d if strands is None else strands
    letters = tuple(e + d if e > 0 else e - d for e in w.letters)
    return type(w)(strands, letters)


def delta_letters(n: int) -> tuple[int, ...]:
    out: list[int] = []
    for top in range(n - 1, 0, -1):
        out.extend(range(1, top + 1))
    return tuple(out)


def delta(n: int) -> PositiveBraidWord:
    """The Garside half twist (s1...s_{n-1})(s1...s_{n-2})...(s1)."""
    if n < 2:
        raise StrandTooSmall("delta needs at least 2 strands")
    return PositiveBraidWord(n, delta_letters(n))


# -- simple elements and the greedy normal form -------------------------------


def _identity(n: int) -> list[list[int]]:
    return [list(range(n)), list(range(n))]


def _finish_mask(arr: list[int]) -> int:
    m = 0
    for j in range(1, len(arr)):
        if arr[j - 1] > arr[j]:
            m |= 1 << j
    return m


def _start_mask(inv: list[int]) -> int:
    m = 0
    for j in range(1, len(inv)):
        if inv[j - 1] > inv[j]:
            m |= 1 << j
    return m


def _mul_right(f: list[list[int]], j: int) -> None:
    # f <- f * sigma_j ; caller guarantees the result stays simple
    arr, inv = f
    x, y = arr[j - 1], arr[j]
    arr[j - 1], arr[j] = y, x
    inv[y], inv[x] = j - 1, j


def _div_left(f: list[list[int]], j: int) -> None:
    # f <- sigma_j^{-1} * f ; caller guarantees sigma_j left-divides f
    arr, inv = f
    p, q = inv[j - 1], inv[j]
    inv[j - 1], inv[j] = q, p
    arr[q], arr[p] = j - 1, j


def _fix_pair(a: list[list[int]], b: list[list[int]]) -> bool:
    """Slide generators from the front of ``b`` to the back of ``a``.

    Afterwards the pair is left-weighted: every generator left-dividing ``b``
    already right-divides ``a``.
    """
    changed = False
    while True:
        s = _start_mask(b[1]) & ~_finish_mask(a[0])
        if not s:
            return changed
        j = (s & -s).bit_length() - 1
        _mul_right(a, j)
        _div_left(b, j)
        changed = True


def _factor_letters(f: list[list[int]]) -> list[int]:
    arr = list(f[0])
    out: list[int] = []
    while True:
        m = _finish_mask(arr)
        if not m:
            break
        j = (m & -m).bit_length() - 1
        arr[j - 1], arr[j] = arr[j], arr[j - 1]
        out.append(j)
    out.reverse()
    return out


class _Greedy:
    """Mutable left-weighted factorization used by every hot loop.

    Supports right multiplication by a generator and left division by a
    generator.  Both only break left-weightedness locally; a work list of
    pair indices restores it, and uniqueness of the left-weighted
    factorization makes the processing order irrelevant.
    """

    __slots__ = ("n", "factors")

    def __init__(self, n: int, letters: Iterable[int] = ()):
        self.n = n
        self.factors: list[list[list[int]]] = []
        for i in letters:
            self.mul_gen(i)

    def __bool__(self) -> bool:
        return bool(self.factors)

    def mul_gen(self, i: int) -> None:
        fs = self.factors
        if fs and not (_finish_mask(fs[-1][0]) >> i) & 1:
            _mul_right(fs[-1], i)
            self._settle([len(fs) - 2])
        else:
            f = _identity(self.n)
            _mul_right(f, i)
            fs.append(f)

    def start_mask(self) -> int:
        return _start_mask(self.factors[0][1]) if self.factors else 0

    def div_gen_left(self, i: int) -> None:
        fs = self.factors
        _div_left(fs[0], i)
        self._settle([0])

    def _settle(self, stack: list[int]) -> None:
        fs = self.factors
        while stack:
            j = stack.pop()
            if j < 0 or j + 1 >= len(fs):
                continue
            if _fix_pair(fs[j], fs[j + 1]):
                stack.append(j + 1)
                stack.append(j - 1)
        while fs and not _finish_mask(fs[-1][0]):
            fs.pop()

    def letters(self) -> list[int]:
        out: list[int] = []
        for f in self.factors:
            out.extend(_factor_letters(f))
        return out

    def tables(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(p + 1 for p in f[1]) for f in self.factors)


def peel_right_divisor(nf: _Greedy, mask: int) -> list[int]:
    """Peel the maximal right divisor inside the generators of ``mask``.

    ``nf`` holds the *reversed* braid, so right divisors of the braid are left
    divisors of ``nf``.  The smallest eligible generator is peeled first.
    Returns the divisor as a word (left to right) and mutates ``nf``.
    """
    peeled: list[int] = []
    while nf.factors:
        s = nf.start_mask() & mask
        if not s:
            break
        j = (s & -s).bit_length() - 1
        nf.div_gen_left(j)
        peeled.append(j)
    peeled.reverse()
    return peeled


@dataclass(frozen=True)
class PermutationFactor:
    """A permutation braid; ``table[s - 1]`` is the final position of strand ``s``."""

    table: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.table) != list(range(1, len(self.table) + 1)):
            raise ValueError(f"{self.table} is not a permutation")

    def word(self) -> PositiveBraidWord:
        n = len(self.table)
        inv = [p - 1 for p in self.table]
        arr = [0] * n
        for s, p in enumerate(inv):
            arr[p] = s
        return PositiveBraidWord(n, tuple(_factor_letters([arr, inv])))


@dataclass(frozen=True)
class GreedyNormalForm:
    strands: int
    factors: tuple[PermutationFactor, ...]

    def word(self) -> PositiveBraidWord:
        letters: list[int] = []
        for f in self.factors:
            letters.extend(f.word().letters)
        return PositiveBraidWord(self.strands, tuple(letters))


def greedy_normal_form(w: BraidWord) -> GreedyNormalForm:
    w = _require_positive(w)
    nf = _Greedy(w.strands, w.letters)
    return GreedyNormalForm(w.strands, tuple(PermutationFactor(t) for t in nf.tables()))


@functools.lru_cache(maxsize=65536)
def _nf_key(n: int, letters: tuple[int, ...]) -> tuple:
    return _Greedy(n, letters).tables()


def equal(u: BraidWord, v: BraidWord) -> bool:
    """True iff two positive words represent the same element of the monoid."""
    _same_strands(u, v)
    u, v = _require_positive(u), _require_positive(v)
    if len(u) != len(v):
        return False
    return _nf_key(u.strands, u.letters) == _nf_key(v.strands, v.letters)


# -- division -----------------------------------------------------------------


def _tau(f: list[list[int]]) -> list[list[int]]:
    n = len(f[0])
    arr = [n - 1 - f[0][n - 1 - p] for p in range(n)]
    inv = [0] * n
    for p, s in enumerate(arr):
        inv[s] = p
    return [arr, inv]


def _quotient_by_gen(n: int, letters: Sequence[int], i: int) -> list[int] | None:
    # b * sigma_i^{-1} = (b * s) * Delta^{-1} with s = sigma_i^{-1} Delta simple;
    # sigma_i right-divides b iff the greedy form of b*s starts with Delta.
    s_word = _quotient_simple_word(n, i)
    nf = _Greedy(n, letters)
    for j in s_word:
        nf.mul_gen(j)
    full = (1 << n) - 2
    if not nf.factors or _finish_mask(nf.factors[0][0]) != full:
        return None
    out: list[int] = []
    for f in nf.factors[1:]:
        out.extend(_factor_letters(_tau(f)))
    return out


@functools.lru_cache(maxsize=None)
def _quotient_simple_word(n: int, i: int) -> tuple[int, ...]:
    # word for sigma_i^{-1} Delta: Delta = sigma_i * (that word), found by
    # dividing a fresh Delta factor on the left
    f = _identity(n)
    for j in delta_letters(n):
        _mul_right(f, j)
    _div_left(f, i)
    return tuple(_factor_letters(f))


def right_quotient(b: BraidWord, d: BraidWord) -> PositiveBraidWord | None:
    """Return ``g`` with ``g d == b`` when ``d`` right-divides ``b``, else None."""
    _same_strands(b, d)
    b, d = _require_positive(b), _require_positive(d)
    cur: list[int] | None = list(b.letters)
    for i in reversed(d.letters):
        cur = _quotient_by_gen(b.strands, cur, i)
        if cur is None:
            return None
    return PositiveBraidWord(b.strands, tuple(cur))


@functools.lru_cache(maxsize=None)
def _delta_sq_over(n: int, i: int) -> tuple[int, ...]:
    d2 = delta_letters(n) * 2
    q = _quotient_by_gen(n, d2, i)
    assert q is not None
    return tuple(q)


def positive_lift(w: BraidWord) -> tuple[PositiveBraidWord, int]:
    """Return ``(P, p)`` with ``P == Delta^(2p) * w`` and ``p`` = number of inverse letters.

    Each sigma_i^{-1} is replaced by a positive word for Delta^2 sigma_i^{-1};
    Delta^2 is central so the powers collect at the front.
    """
    n = w.strands
    out: list[int] = []
    p = 0
    for e in w.letters:
        if e > 0:
            out.append(e)
        else:
            out.extend(_delta_sq_over(n, -e))
            p += 1
    return PositiveBraidWord(n, tuple(out)), p


def delta_power_letters(n: int, p: int) -> tuple[int, ...]:
    """Letters of Delta^p for p >= 0."""
    return delta_letters(n) * p
