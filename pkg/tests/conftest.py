from __future__ import annotations

import functools
import itertools

import pytest

from braidorder import Arrangement
from braidorder.oracle import enumerate_positive_braids


@functools.lru_cache(maxsize=None)
def census(n: int, length: int):
    return tuple(enumerate_positive_braids(n, length))


def arrangements(n: int):
    return [Arrangement(k) for k in itertools.permutations(range(1, n))]


@pytest.fixture(scope="session")
def census_b3():
    return census(3, 7)


@pytest.fixture(scope="session")
def census_b4():
    return census(4, 6)
