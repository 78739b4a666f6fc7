from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidorder import (
    Arrangement,
    IndexOutOfRange,
    PositiveBraidWord,
    StrandMismatch,
    StrandTooSmall,
    alternate_decomposition,
    block_bounds,
    derive_k0,
    derive_kj,
    equal,
    phi_normal_form,
    tail_twist_decomposition,
    tail_twisted_normal_form,
)
from braidorder.oracle import enumerate_reps

from conftest import arrangements, census

W = PositiveBraidWord(4, (1, 3, 2, 3, 2, 2, 1, 1, 3))


def pw(text, n):
    return PositiveBraidWord(n, tuple(int(t) for t in text.split()))


def _arr_and_word(max_n=5, max_len=9):
    return st.integers(3, max_n).flatmap(
        lambda n: st.tuples(
            st.permutations(list(range(1, n))).map(lambda k: Arrangement(tuple(k))),
            st.lists(st.integers(1, n - 1), max_size=max_len).map(lambda xs: PositiveBraidWord(n, tuple(xs))),
        )
    )


# -- arrangements and blocks


def test_arrangement_validation_and_text():
    a = Arrangement.parse("2,1,3")
    assert a.k == (2, 1, 3) and a.strands == 4 and a[1] == 2 and str(a) == "2,1,3"
    with pytest.raises(ValueError):
        Arrangement((1, 1))


def test_block_bounds_examples():
    a = Arrangement((2, 1, 3))
    assert (block_bounds(a, 1).low, block_bounds(a, 1).high) == (1, 2)
    assert (block_bounds(a, 2).low, block_bounds(a, 2).high) == (3, 4)
    d = Arrangement((1, 2, 3))
    assert (block_bounds(d, 1).low, block_bounds(d, 1).high) == (2, 4)
    assert (block_bounds(d, 2).low, block_bounds(d, 2).high) == (3, 4)
    with pytest.raises(IndexOutOfRange):
        block_bounds(Arrangement((1,)), 1)


def test_derive_k0_examples():
    assert derive_k0(Arrangement((2, 1, 3))).k == (1, 2)
    assert derive_k0(Arrangement((1, 2, 3))).k == (1, 2)
    assert derive_k0(Arrangement((3, 2, 1))).k == (2, 1)
    with pytest.raises(StrandTooSmall):
        derive_k0(Arrangement((1,)))


def test_derive_kj_examples():
    assert derive_kj(Arrangement((2, 1, 3)), 1).k == (1,)
    assert derive_kj(Arrangement((1, 2, 3)), 1).k == (1, 2)
    assert derive_kj(Arrangement((1, 2, 3)), 2).k == (1,)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_block_invariants(n):
    for a in arrangements(n):
        for j in range(1, n - 1):
            bb = block_bounds(a, j)
            assert 1 <= bb.low < bb.high <= n
            assert bb.low <= a[j + 1] <= bb.high - 1
            kj = derive_kj(a, j)
            assert kj.strands == bb.strands


# -- alternate decomposition and Phi normal form


def test_alternate_decomposition_example():
    d = alternate_decomposition(W)
    assert str(d) == "(3 3 3)(2 2 1)(2 3 3)"
    assert d.sides == ("I", "J", "I")


def test_alternate_decomposition_trivial_cases():
    assert alternate_decomposition(PositiveBraidWord(4)).factors == ()
    d = alternate_decomposition(pw("1", 3))
    assert [f.letters for f in d.factors] == [(1,), ()]


def test_phi_normal_form_examples():
    assert phi_normal_form(W).letters == (3, 3, 3, 2, 2, 1, 2, 3, 3)
    assert phi_normal_form(pw("1 2 1", 3)).letters == (2, 1, 2)
    assert phi_normal_form(PositiveBraidWord(3)).letters == ()


@given(_arr_and_word())
def test_phi_normal_form_properties(aw):
    _, b = aw
    nf = phi_normal_form(b)
    assert equal(nf, b)
    assert phi_normal_form(nf) == nf
    d = alternate_decomposition(b)
    flat = tuple(e for f in d.factors for e in f.letters)
    assert equal(PositiveBraidWord(b.strands, flat), b)
    n = b.strands
    for f, side in zip(d.factors, d.sides):
        allowed = set(range(1, n - 1)) if side == "J" else set(range(2, n))
        assert set(f.letters) <= allowed


# -- tail-twisted form


def test_tail_twist_decomposition_example():
    t = tail_twist_decomposition(W, Arrangement((2, 1, 3)))
    assert t.main.letters == (1,)
    assert t.t0.letters == (3, 3, 3, 2)
    assert [x.letters for x in t.tails] == [(1, 1), (3, 3)]
    assert t.tail.letters == (1, 1, 3, 3)


def test_tail_twisted_examples():
    assert tail_twisted_normal_form(W, Arrangement((2, 1, 3))).letters == (1, 3, 3, 3, 2, 1, 1, 3, 3)
    assert tail_twisted_normal_form(PositiveBraidWord(4), Arrangement((3, 1, 2))).letters == ()
    with pytest.raises(StrandMismatch):
        tail_twisted_normal_form(W, Arrangement((1, 2)))


def test_empty_decomposition():
    t = tail_twist_decomposition(PositiveBraidWord(4), Arrangement((2, 1, 3)))
    assert t.main.letters == t.t0.letters == () and all(not x.letters for x in t.tails)


@pytest.mark.parametrize("n, length", [(3, 7), (4, 6)])
def test_dehornoy_t0_is_trivial(n, length):
    a = Arrangement.dehornoy(n)
    for b in census(n, length):
        assert tail_twist_decomposition(b, a).t0.letters == ()


@pytest.mark.parametrize("n, length", [(3, 7), (4, 6), (5, 5)])
def test_coincides_with_phi_for_trivial_arrangement(n, length):
    a = Arrangement.dehornoy(n)
    for b in census(n, length):
        assert tail_twisted_normal_form(b, a) == phi_normal_form(b)


@given(_arr_and_word())
def test_tail_twist_properties(aw):
    a, b = aw
    n = b.strands
    nf = tail_twisted_normal_form(b, a)
    assert equal(nf, b)
    assert tail_twisted_normal_form(nf, a) == nf
    t = tail_twist_decomposition(b, a)
    joined = t.main.letters + t.t0.letters + t.tail.letters
    assert joined == nf.letters
    assert set(t.t0.letters) <= set(range(2, n))
    if a[1] == 1:
        assert t.t0.letters == ()
    for j, x in enumerate(t.tails, start=1):
        bb = block_bounds(a, j)
        assert set(x.letters) <= set(bb.generators)


@pytest.mark.parametrize("n, length", [(3, 7), (4, 6)])
def test_representative_invariance(n, length):
    # exhaustive over every word of the given length
    for a in arrangements(n):
        done = set()
        for w in itertools.product(range(1, n), repeat=length):
            if w in done:
                continue
            reps = enumerate_reps(PositiveBraidWord(n, w))
            forms = {tail_twisted_normal_form(r, a) for r in reps}
            phis = {phi_normal_form(r) for r in reps}
            assert len(forms) == 1 and len(phis) == 1
            done |= {r.letters for r in reps}
