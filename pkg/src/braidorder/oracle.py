"""Exhaustive reference computations for small braids.

Everything here is exponential on purpose and meant for cross-checking the
production algorithms.  Each search carries an explicit budget and raises
:class:`BudgetExceeded` instead of silently truncating.

The only shared machinery with the production path is the code data type;
normal forms here come from rewriting closures, never from Garside factors.
"""

from __future__ import annotations

import functools
import itertools
from collections import deque
from typing import Iterable, Iterator

from .alternating import Arrangement
from .codes import (
    Code,
    Leaf,
    Tower,
    _cmp_right,
    _piece_to_local,
    code_from_tower,
    piece_generators,
    sub_context,
    zero_code,
)
from .errors import BudgetExceeded, StrandMismatch
from .garside import GeneratorSet
from .words import BraidWord, PositiveBraidWord, _require_positive

DEFAULT_REPS_BUDGET = 200_000


# -- rewriting closure ------------------------------------------------------------


def _neighbours(w: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    for i in range(len(w) - 1):
        a, b = w[i], w[i + 1]
        if abs(a - b) >= 2:
            yield w[:i] + (b, a) + w[i + 2:]
    for i in range(len(w) - 2):
        a, b, c = w[i], w[i + 1], w[i + 2]
        if a == c and abs(a - b) == 1:
            yield w[:i] + (b, a, b) + w[i + 3:]


def _closure(letters: tuple[int, ...], budget: int) -> frozenset[tuple[int, ...]]:
    seen = {letters}
    todo = [letters]
    while todo:
        w = todo.pop()
        for v in _neighbours(w):
            if v not in seen:
                seen.add(v)
                if len(seen) > budget:
                    raise BudgetExceeded(f"more than {budget} representatives")
                todo.append(v)
    return frozenset(seen)


@functools.lru_cache(maxsize=100_000)
def _closure_cached(letters: tuple[int, ...], budget: int) -> frozenset[tuple[int, ...]]:
    return _closure(letters, budget)


def enumerate_reps(w: BraidWord, budget: int = DEFAULT_REPS_BUDGET) -> set[PositiveBraidWord]:
    """All positive words equal to ``w`` (closure under the braid relations)."""
    w = _require_positive(w)
    return {PositiveBraidWord(w.strands, r) for r in _closure_cached(w.letters, budget)}


def canonical(w: BraidWord, budget: int = DEFAULT_REPS_BUDGET) -> PositiveBraidWord:
    """Lexicographically least representative."""
    w = _require_positive(w)
    return PositiveBraidWord(w.strands, min(_closure_cached(w.letters, budget)))


def enumerate_positive_braids(n: int, length: int, budget: int = 2_000_000) -> list[PositiveBraidWord]:
    """One canonical (lexicographically least) word per positive braid of
    length at most ``length``, ordered by length then letters."""
    if (n - 1) ** length > budget:
        raise BudgetExceeded(f"{(n - 1) ** length} words of length {length} exceed {budget}")
    out = []
    for L in range(length + 1):
        seen: set[tuple[int, ...]] = set()
        for w in itertools.product(range(1, n), repeat=L):
            if w in seen:
                continue
            cls = _closure(w, budget)
            seen |= cls
            out.append(PositiveBraidWord(n, w))
    return out


# -- towers -----------------------------------------------------------------------


def _check_context(n: int, k: tuple[int, ...]) -> None:
    if len(k) != n - 1:
        raise StrandMismatch(f"arrangement {k} does not fit {n} strands")


@functools.lru_cache(maxsize=500_000)
def _best(n: int, k: tuple[int, ...], letters: tuple[int, ...]) -> tuple[Code, Tower]:
    # greedy from the least significant position: the code determines the
    # word, so distinct candidate pieces never tie
    if n == 2:
        return Leaf(len(letters)), Tower(2, (), letters)
    rest = letters
    parts = []
    p = -(n - 2)
    idle = 0
    while rest or p <= 0:
        allowed = piece_generators(n, k, p)
        longest = 0
        while longest < len(rest) and rest[len(rest) - 1 - longest] in allowed:
            longest += 1
        ctx = sub_context(n, k, p)
        best = None
        for size in range(longest + 1):
            piece = rest[len(rest) - size:]
            c, t = _best(ctx[0], ctx[1], _piece_to_local(n, k, p, piece))
            if best is None or _cmp_right(c, best[0]) > 0:
                best = (c, t, size)
        c, t, size = best
        if size:
            parts.append((p, t))
            rest = rest[: len(rest) - size]
            idle = 0
        elif p > 0:
            idle += 1
            if idle > 2:
                raise RuntimeError("tower search made no progress")
        p += 1
    tower = Tower(n, tuple(sorted(parts, key=lambda x: -x[0])))
    return code_from_tower(tower, k), tower


def max_tower(letters: Iterable[int], n: int, k: tuple[int, ...] | None = None) -> Tower:
    """Tower of the literal word ``letters`` with the largest code (right order)."""
    k = tuple(range(1, n)) if k is None else tuple(k)
    _check_context(n, k)
    return _best(n, k, tuple(letters))[1]


def max_tower_code(letters: Iterable[int], n: int, k: tuple[int, ...] | None = None) -> Code:
    k = tuple(range(1, n)) if k is None else tuple(k)
    _check_context(n, k)
    return _best(n, k, tuple(letters))[0]


def _towers(n: int, k: tuple[int, ...], letters: tuple[int, ...], p: int, top: int) -> Iterator[tuple]:
    # all decompositions of ``letters`` into pieces at positions p..top
    if not letters:
        yield ()
        return
    if p > top:
        return
    allowed = piece_generators(n, k, p)
    longest = 0
    while longest < len(letters) and letters[len(letters) - 1 - longest] in allowed:
        longest += 1
    ctx = sub_context(n, k, p)
    for size in range(longest + 1):
        rest = letters[: len(letters) - size]
        if size == 0:
            subs: Iterable = [None]
        else:
            subs = _all_towers(ctx[0], ctx[1], _piece_to_local(n, k, p, letters[len(letters) - size:]))
        subs = list(subs)
        for tail in _towers(n, k, rest, p + 1, top):
            for s in subs:
                yield (((p, s),) if s is not None else ()) + tail


def _all_towers(n: int, k: tuple[int, ...], letters: tuple[int, ...]) -> list[Tower]:
    if n == 2:
        return [Tower(2, (), letters)]
    out = []
    for parts in _towers(n, k, letters, -(n - 2), len(letters)):
        out.append(Tower(n, tuple(sorted(parts, key=lambda x: -x[0]))))
    return out


def enumerate_towers(w: BraidWord, a: Arrangement, budget: int = 200_000) -> set[Tower]:
    """Every tower of the literal word ``w`` with at most ``len(w)`` main factors."""
    w = _require_positive(w)
    if w.strands != a.strands:
        raise StrandMismatch("word and arrangement disagree on strands")
    if w.strands == 2:
        return {Tower(2, (), w.letters)}
    out = set()
    for parts in _towers(w.strands, a.k, w.letters, -(w.strands - 2), len(w.letters)):
        out.add(Tower(w.strands, tuple(sorted(parts, key=lambda x: -x[0]))))
        if len(out) > budget:
            raise BudgetExceeded(f"more than {budget} towers")
    return out


def brute_cnormal(
    b: BraidWord, a: Arrangement, budget: int = DEFAULT_REPS_BUDGET
) -> tuple[PositiveBraidWord, Code]:
    """C-normal form straight from the definition: the representative and
    tower whose code is largest for the right lexicographic order."""
    b = _require_positive(b)
    if b.strands != a.strands:
        raise StrandMismatch("word and arrangement disagree on strands")
    n = b.strands
    if not b.letters:
        return PositiveBraidWord(n), zero_code(n, a.k)
    best = None
    tie = False
    for rep in _closure_cached(b.letters, budget):
        c, _ = _best(n, a.k, rep)
        if best is None:
            best = (c, rep)
            continue
        s = _cmp_right(c, best[0])
        if s > 0:
            best, tie = (c, rep), False
        elif s == 0:
            tie = True
    if tie:
        raise AssertionError(f"two representatives of {b} share the maximal code")
    return PositiveBraidWord(n, best[1]), best[0]


# -- divisors ---------------------------------------------------------------------


def brute_max_right_divisor(
    b: BraidWord, s: GeneratorSet | Iterable[int], budget: int = DEFAULT_REPS_BUDGET
) -> PositiveBraidWord:
    """Largest right divisor of ``b`` in the submonoid generated by ``s``,
    found by scanning suffixes of every representative."""
    b = _require_positive(b)
    members = s.members if isinstance(s, GeneratorSet) else frozenset(s)
    reps = _closure_cached(b.letters, budget)
    divisors: set[tuple[int, ...]] = set()
    for r in reps:
        for size in range(len(r) + 1):
            suffix = r[len(r) - size:]
            if all(e in members for e in suffix):
                divisors.add(min(_closure_cached(suffix, budget)))
            else:
                break
    top = max(divisors, key=len)
    top_reps = _closure_cached(top, budget)
    for d in divisors:
        d_reps = _closure_cached(d, budget)
        if not any(t[len(t) - len(d):] in d_reps for t in top_reps):
            raise AssertionError(f"{d} does not right-divide the longest divisor {top}")
    return PositiveBraidWord(b.strands, top)


# -- sigma-positivity -------------------------------------------------------------


def _free_reduce(w: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for e in w:
        if out and out[-1] == -e:
            out.pop()
        else:
            out.append(e)
    return tuple(out)


def sigma_sign(w: Iterable[int]) -> int:
    """+1 if the word is sigma-positive, -1 if sigma-negative, 0 otherwise."""
    w = tuple(w)
    if not w:
        return 0
    low = min(abs(e) for e in w)
    signs = {e > 0 for e in w if abs(e) == low}
    if signs == {True}:
        return 1
    if signs == {False}:
        return -1
    return 0


def _group_moves(w: tuple[int, ...], n: int, cap: int) -> Iterator[tuple[int, ...]]:
    L = len(w)
    for i in range(L - 1):
        a, b = w[i], w[i + 1]
        if a == -b:
            yield w[:i] + w[i + 2:]
        elif abs(abs(a) - abs(b)) >= 2:
            yield w[:i] + (b, a) + w[i + 2:]
    for i in range(L - 2):
        a, b, c = w[i], w[i + 1], w[i + 2]
        if abs(abs(a) - abs(b)) != 1:
            continue
        if a == c and (a > 0) == (b > 0):
            # s_i s_j s_i = s_j s_i s_j and its inverse
            yield w[:i] + (b, a, b) + w[i + 3:]
        elif a == -c:
            # s_i s_j s_i^-1 = s_j^-1 s_i s_j, s_i^-1 s_j s_i = s_j s_i s_j^-1
            # and the inverses of both
            if (a > 0) == (b > 0):
                yield w[:i] + (-b, a, b) + w[i + 3:]
            else:
                yield w[:i] + (b, -a, -b) + w[i + 3:]
    if L + 2 <= cap:
        for i in range(L + 1):
            for g in range(1, n):
                yield w[:i] + (g, -g) + w[i:]
                yield w[:i] + (-g, g) + w[i:]


def sigma_positive_witness(
    w: BraidWord, budget: int = 4, max_states: int = 50_000
) -> BraidWord | None:
    """Breadth-first search for a sigma-positive word equal to ``w`` in B_n.

    Moves are free cancellation, insertion of a cancelling pair, commutation,
    and the braid relation in all its sign variants; words never exceed
    ``len(w) + budget`` letters.  ``None`` means nothing was found, which is
    not a proof of anything.  Hitting ``max_states`` raises BudgetExceeded.
    """
    n = w.strands
    start = tuple(w.letters)
    s = sigma_sign(start)
    if s > 0:
        return BraidWord(n, start)
    if s < 0 or not start:
        return None
    cap = len(start) + budget
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for nxt in _group_moves(cur, n, cap):
            if nxt in seen:
                continue
            if sigma_sign(nxt) > 0:
                return BraidWord(n, nxt)
            seen.add(nxt)
            if len(seen) > max_states:
                raise BudgetExceeded(f"more than {max_states} words explored")
            queue.append(nxt)
    return None
