from __future__ import annotations

from hypothesis import given
from hypothesis import strategies as st

from braidorder import Comparison, Ordinal, ordinal_cmp, parse_ordinal
from braidorder.ordinals import ZERO

W = Ordinal.power(Ordinal.finite(1))


def ordinals(depth=2):
    if depth == 0:
        return st.integers(0, 4).map(Ordinal.finite)
    term = st.tuples(ordinals(depth - 1), st.integers(1, 3)).map(lambda t: Ordinal.power(*t))
    return st.lists(term, max_size=3).map(lambda ts: sum(ts, ZERO))


def test_examples():
    assert ordinal_cmp(ZERO, ZERO) == Comparison.EQUAL
    assert ordinal_cmp(W, Ordinal.finite(5)) == Comparison.GREATER
    a = Ordinal.power(Ordinal.finite(3)) + Ordinal.power(Ordinal.finite(2))
    assert ordinal_cmp(a, a + Ordinal.finite(1)) == Comparison.LESS


def test_absorption():
    assert Ordinal.finite(1) + W == W
    assert W + Ordinal.finite(1) != W
    assert str(W + W) == "w^(1)*2"


def test_text_format():
    x = Ordinal.power(W, 3) + Ordinal.power(Ordinal.finite(2)) + Ordinal.finite(7)
    assert str(x) == "w^(w^(1))*3 + w^(2) + 7"
    assert parse_ordinal(str(x)) == x
    assert str(ZERO) == "0"


@given(ordinals(), ordinals(), ordinals())
def test_addition_laws(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert not (x + y < x)
    if y < z:
        assert x + y < x + z


@given(ordinals(), ordinals())
def test_comparison_is_total(x, y):
    got = ordinal_cmp(x, y)
    assert got == {-1: Comparison.GREATER, 0: Comparison.EQUAL, 1: Comparison.LESS}[ordinal_cmp(y, x).value]
    assert (got == Comparison.EQUAL) == (x == y)
    assert parse_ordinal(str(x)) == x
