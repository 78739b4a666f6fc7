from __future__ import annotations

import pytest

from braidorder import (
    Arrangement,
    BraidWord,
    BudgetExceeded,
    PositiveBraidWord,
    equal,
    positive_lift,
)
from braidorder.codes import Tower
from braidorder.oracle import (
    brute_cnormal,
    brute_max_right_divisor,
    enumerate_positive_braids,
    enumerate_reps,
    enumerate_towers,
    sigma_positive_witness,
    sigma_sign,
)


def pw(text, n):
    return PositiveBraidWord(n, tuple(int(t) for t in text.split()))


def letters(ws):
    return {w.letters for w in ws}


def test_enumerate_reps_examples():
    assert letters(enumerate_reps(pw("1 2 1", 3))) == {(1, 2, 1), (2, 1, 2)}
    assert letters(enumerate_reps(pw("1 3", 4))) == {(1, 3), (3, 1)}
    assert letters(enumerate_reps(pw("1", 3))) == {(1,)}


def test_enumerate_reps_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_reps(pw("1 3 1 3 1 3 1 3", 4), budget=10)


def test_enumerate_positive_braids_examples():
    assert letters(enumerate_positive_braids(2, 3)) == {(), (1,), (1, 1), (1, 1, 1)}
    assert letters(enumerate_positive_braids(3, 2)) == {(), (1,), (2,), (1, 1), (1, 2), (2, 1), (2, 2)}
    assert letters(enumerate_positive_braids(3, 0)) == {()}
    with pytest.raises(BudgetExceeded):
        enumerate_positive_braids(5, 8, budget=1000)


def test_census_partitions_words():
    # the census sizes agree with the number of classes of words
    assert [sum(1 for b in enumerate_positive_braids(4, L) if len(b) == L) for L in range(5)] == [1, 3, 8, 19, 43]


def test_enumerate_towers_examples():
    a = Arrangement.dehornoy(3)
    towers = enumerate_towers(pw("2", 3), a)
    positions = {t.parts[0][0] for t in towers}
    assert {-1, 0} <= positions
    towers = enumerate_towers(pw("1", 3), a)
    assert {t.parts[0][0] for t in towers} == {1}
    assert enumerate_towers(PositiveBraidWord(3), a) == {Tower(3, ())}


def test_brute_cnormal_examples():
    d3 = Arrangement.dehornoy(3)
    w, c = brute_cnormal(pw("1 2 1", 3), d3)
    assert w.letters == (2, 1, 2) and str(c) == "(1,1,0,1)"
    _, c = brute_cnormal(pw("1 3 2 3 2 2 1 1 3", 4), Arrangement.dehornoy(4))
    assert str(c) == "((3,0,0),(2,1,0,0),(0),(1,0,0),(2))"
    w, c = brute_cnormal(PositiveBraidWord(3), d3)
    assert w.letters == () and c.is_zero


def test_brute_max_right_divisor_examples():
    assert brute_max_right_divisor(pw("1 3 2 3 2 2 1 1 3", 4), {2, 3}).letters in {
        r.letters for r in enumerate_reps(pw("2 3 3", 4))
    }
    assert brute_max_right_divisor(pw("1 2 1", 3), set()).letters == ()
    assert brute_max_right_divisor(pw("2 1", 3), {1}).letters == (1,)


def _same_braid(x: BraidWord, y: BraidWord) -> bool:
    px, p = positive_lift(x)
    py, q = positive_lift(y)
    from braidorder.words import delta_power_letters

    n = x.strands
    m = max(p, q)
    return equal(
        PositiveBraidWord(n, delta_power_letters(n, 2 * (m - p)) + px.letters),
        PositiveBraidWord(n, delta_power_letters(n, 2 * (m - q)) + py.letters),
    )


def test_sigma_positive_witness_examples():
    assert sigma_positive_witness(BraidWord(3, (1,))).letters == (1,)
    assert sigma_positive_witness(BraidWord(3, (-2, 1))).letters == (-2, 1)
    x = BraidWord(3, (-1, 2, 1))
    got = sigma_positive_witness(x, 2)
    assert got is not None and sigma_sign(got.letters) == 1 and _same_braid(got, x)


def test_sigma_witnesses_are_equivalent():
    import random

    rng = random.Random(4)
    found = 0
    for _ in range(150):
        n = rng.choice([3, 4])
        x = BraidWord(n, tuple(rng.choice([1, -1]) * rng.randint(1, n - 1) for _ in range(rng.randint(1, 6))))
        try:
            got = sigma_positive_witness(x, 2, max_states=5000)
        except BudgetExceeded:
            continue
        if got is not None:
            found += 1
            assert sigma_sign(got.letters) == 1
            assert _same_braid(got, x)
    assert found > 20


def test_sigma_witness_budget():
    x = BraidWord(4, (-1, 2, 3, -2, 1, 3, -1, -3, 2, 1, -2))
    with pytest.raises(BudgetExceeded):
        sigma_positive_witness(x, 4, max_states=50)
