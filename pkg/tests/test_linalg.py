import random

import pytest
from hypothesis import given, strategies as st

from globalweyl.linalg import RationalMatrix, rank
from oracles import rank_naive


def test_examples():
    for d in range(1, 6):
        assert rank([[int(i == j) for j in range(d)] for i in range(d)]) == d
    assert rank([[0, 0], [0, 0]]) == 0
    assert rank([]) == 0


@given(st.integers(1, 7), st.integers(1, 7), st.data())
def test_matches_naive(r, c, data):
    dense = data.draw(st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c),
                               min_size=r, max_size=r))
    assert rank(dense) == rank_naive(dense)


@given(st.lists(st.lists(st.fractions(min_value=-2, max_value=2, max_denominator=5),
                         min_size=4, max_size=4), min_size=1, max_size=5))
def test_rational_entries(dense):
    assert rank(dense) == rank_naive(dense)


def test_low_rank_products():
    rng = random.Random(7)
    for _ in range(20):
        k = rng.randint(1, 4)
        a = [[rng.randint(-3, 3) for _ in range(k)] for _ in range(8)]
        b = [[rng.randint(-3, 3) for _ in range(9)] for _ in range(k)]
        prod = [[sum(a[i][t] * b[t][j] for t in range(k)) for j in range(9)] for i in range(8)]
        assert rank(prod) == rank_naive(prod) <= k


def test_sparse_rows_with_labels():
    m = RationalMatrix([{"x": 1, "y": 2}, {"y": 4, "x": 2}, {"z": 1}], ["x", "y", "z"])
    assert m.shape == (3, 3)
    assert rank(m) == 2
    with pytest.raises(ValueError):
        RationalMatrix([{"w": 1}], ["x"])
