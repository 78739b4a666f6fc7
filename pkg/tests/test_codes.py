from __future__ import annotations

import functools
import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidorder import (
    Arrangement,
    Comparison,
    Composite,
    ContextMismatch,
    Leaf,
    MembershipViolation,
    PositiveBraidWord,
    Tower,
    cmp_left,
    cmp_right,
    cnormal,
    code_from_tower,
    code_to_ordinal,
    ordinal_cmp,
    parse_bars,
    parse_code,
    tower_from_pieces,
    zero_code,
)
from braidorder.oracle import enumerate_towers, max_tower_code

from conftest import arrangements, census

LESS, EQUAL, GREATER = Comparison.LESS, Comparison.EQUAL, Comparison.GREATER


# -- text format


@pytest.mark.parametrize(
    "text, n, k",
    [
        ("(1,1,0,1)", 3, None),
        ("(1,1,1,0,0)", 3, None),
        ("((1,0,0),(3,1,0,0),(2),(2))", 4, (2, 1, 3)),
        ("((3,0,0),(2,1,0,0),(0),(1,0,0),(2))", 4, None),
        ("((1,0,0),(1,1,0,1),(2,2,0,0),(0),(0),(1))", 4, None),
        ("(0)", 4, None),
        ("(5)", 2, None),
    ],
)
def test_round_trip(text, n, k):
    assert str(parse_code(text, n, k)) == text


def test_normalization_strips_leading_zeros_only():
    assert str(parse_code("(0,0,1)", 3)) == "(0,1)"
    assert str(parse_code("(0,0,0,0)", 3)) == "(0)"
    assert parse_code("(0,0,1)", 3) == parse_code("(0,1)", 3)


def test_zero_code_shapes():
    assert zero_code(2) == Leaf(0)
    z = zero_code(4, (2, 1, 3))
    assert z.is_zero and str(z) == "(0)" and z.top == 0


def test_nested_contexts():
    c = parse_code("((1,0,0),(3,1,0,0),(2),(2))", 4, (2, 1, 3))
    assert c.position(-1) == Leaf(2)
    assert c.position(0).context == (3, (1, 2))
    assert c.to_nested() == [[1, 0, 0], [3, 1, 0, 0], 2, 2]


def test_unnormalized_composite_rejected():
    with pytest.raises(ValueError):
        Composite(3, (1, 2), (Leaf(1), Leaf(0), Leaf(0)))


# -- comparisons


def test_cmp_left_examples():
    assert cmp_left(parse_code("(1,1,0,1)", 3), parse_code("(1,1,1,0,0)", 3)) == LESS
    c = parse_code("(2,1,0,0)", 3)
    assert cmp_left(c, c) == EQUAL
    assert cmp_left(Leaf(2), parse_code("(2)", 2)) == EQUAL


def test_cmp_right_examples():
    assert cmp_right(parse_code("(1,1,1,0,0)", 3), parse_code("(1,1,0,1)", 3)) == LESS
    c = parse_code("(2,1,0,0)", 3)
    assert cmp_right(c, c) == EQUAL
    w = parse_code("((1,0,0),(1,1,0,1),(2,2,0,0),(0),(0),(1))", 4)
    w2 = parse_code("((3,0,0),(2,1,0,0),(0),(1,0,0),(2))", 4)
    assert cmp_right(w, w2) == LESS


def test_context_mismatch():
    with pytest.raises(ContextMismatch):
        cmp_left(parse_code("(1,0)", 3), parse_code("((1,0),(0))", 4))
    with pytest.raises(ContextMismatch):
        cmp_right(zero_code(4, (1, 2, 3)), zero_code(4, (2, 1, 3)))


@functools.lru_cache(maxsize=None)
def _codes(n, k):
    return [cnormal(b, Arrangement(k))[1] for b in census(n, 6 if n == 3 else 5)]


@pytest.mark.parametrize("n", [3, 4])
def test_orders_are_total(n):
    for a in arrangements(n):
        codes = _codes(n, a.k)
        for cmp in (cmp_left, cmp_right):
            key = functools.cmp_to_key(lambda x, y: cmp(x, y).value)
            ordered = sorted(codes, key=key)
            for x, y in zip(ordered, ordered[1:]):
                assert cmp(x, y) == LESS and cmp(y, x) == GREATER
            for x, y, z in itertools.islice(itertools.product(ordered[::3], repeat=3), 20000):
                if cmp(x, y) == LESS and cmp(y, z) == LESS:
                    assert cmp(x, z) == LESS


def _pad_top(c):
    # same code with an explicit zero entry above the top
    if isinstance(c, Leaf):
        return c
    d = dict((p, c.position(p)) for p in range(c.low, c.top + 1))
    d[c.top + 2] = zero_code(c.strands - 1)
    return Composite.from_positions(c.strands, c.k, d)


@given(st.sampled_from(_codes(4, (2, 1, 3))), st.sampled_from(_codes(4, (2, 1, 3))))
def test_padding_invariance(x, y):
    assert _pad_top(x) == x
    assert cmp_left(_pad_top(x), y) == cmp_left(x, y)
    assert cmp_right(x, _pad_top(y)) == cmp_right(x, y)


# -- ordinal rank


def test_ordinal_examples():
    assert str(code_to_ordinal(zero_code(3))) == "0"
    assert str(code_to_ordinal(parse_code("(0,0,1)", 3))) == "1"
    assert str(code_to_ordinal(parse_code("(1,1,0,1)", 3))) == "w^(3) + w^(2) + 1"


@pytest.mark.parametrize("n", [3, 4])
def test_ordinal_agrees_with_cmp_left(n):
    for a in arrangements(n):
        codes = _codes(n, a.k)
        ords = [code_to_ordinal(c) for c in codes]
        for (x, ox), (y, oy) in itertools.combinations(list(zip(codes, ords)), 2):
            assert ordinal_cmp(ox, oy) == cmp_left(x, y)


# -- towers


def test_tower_dehornoy3_example():
    t = parse_bars("1|2|1||", 3)
    assert str(code_from_tower(t, (1, 2))) == "(1,1,1,0,0)"
    assert t.word((1, 2)) == (1, 2, 1)
    assert str(code_from_tower(parse_bars("2|1||2", 3), (1, 2))) == "(1,1,0,1)"


def test_tower_dehornoy4_example():
    # A_2 written as sigma_2 sigma_3 sigma_2, the representative whose flip
    # carries the maximal sub-code (1,1,0,1)
    t = parse_bars("1|2 3 2|2 2 1 1||3", 4, tail="|3")
    assert str(code_from_tower(t, (1, 2, 3))) == "((1,0,0),(1,1,0,1),(2,2,0,0),(0),(0),(1))"
    # the literal sigma_3 sigma_2 sigma_3 gives the literal word's best sub-code
    t2 = parse_bars("1|3 2 3|2 2 1 1||3", 4, tail="|3")
    assert str(code_from_tower(t2, (1, 2, 3))) == "((1,0,0),(1,1,1,0,0),(2,2,0,0),(0),(0),(1))"


def test_tower_thurston4_example():
    a = Arrangement((2, 1, 3))
    t = parse_bars("1|3 3 3 2|1 1 3 3", 4, a, tail="1 1|3 3")
    assert str(code_from_tower(t, a)) == "((1,0,0),(3,1,0,0),(2),(2))"
    t = parse_bars("1|3 2 3 2 2|1 1 3", 4, a, tail="1 1|3")
    assert str(code_from_tower(t, a)) == "((1,0,0),(1,1,1,2,0,0),(2),(1))"


def test_membership_violations():
    with pytest.raises(MembershipViolation):
        tower_from_pieces(3, (1, 2), {1: (2,)})
    with pytest.raises(MembershipViolation):
        code_from_tower(Tower(3, ((1, Tower(3, ())),)), (1, 2))
    with pytest.raises(MembershipViolation):
        code_from_tower(Tower(2, (), (1, 2)), (1,))


@pytest.mark.parametrize("n, length", [(3, 6), (4, 4)])
def test_best_tower_matches_exhaustive_towers(n, length):
    # the greedy tower search agrees with a scan over every tower
    for a in arrangements(n):
        for w in itertools.product(range(1, n), repeat=length):
            w = PositiveBraidWord(n, w)
            towers = enumerate_towers(w, a)
            codes = [code_from_tower(t, a) for t in towers]
            best = functools.reduce(lambda x, y: y if cmp_right(y, x) == GREATER else x, codes)
            assert sum(1 for c in codes if c == best) == 1
            assert best == max_tower_code(w.letters, n, a.k)
            for t in towers:
                assert t.word(a) == w.letters
