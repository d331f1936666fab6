from itertools import permutations
from math import comb

import pytest
from hypothesis import given, strategies as st

from globalweyl.multiset import EMPTY, Multiset
from globalweyl.symtensor import (Tensor, distinct_permutations, enumerate_basis_tuples,
                                  is_symmetric, monomial_vector, standard_basis, sym_dim,
                                  symmetrize, tensor_from_json, tensor_to_json, v_vector,
                                  w_slots, w_vector)
from oracles import symmetrize_naive

ONE, T = 0, 1  # basis indices of trunc_poly(2)
c1, ct = Multiset({ONE: 1}), Multiset({T: 1})

slots = st.tuples(st.integers(1, 3), st.integers(0, 1))


def pure(*s):
    return Tensor.pure(list(s))


def test_symmetrize_examples():
    assert symmetrize(pure((1, ONE), (1, ONE))) == pure((1, ONE), (1, ONE)) * 2
    assert symmetrize(pure((1, ONE), (1, T))) == pure((1, ONE), (1, T)) + pure((1, T), (1, ONE))


@given(st.lists(slots, min_size=0, max_size=4), st.integers(-3, 3))
def test_symmetrize_matches_naive(key, c):
    t = Tensor.pure(key, c)
    assert symmetrize(t) == symmetrize_naive(t)


@given(st.lists(st.tuples(st.lists(slots, min_size=3, max_size=3), st.integers(-2, 2)), max_size=4))
def test_symmetrize_linear_combinations(terms):
    t = Tensor(3, {tuple(k): c for k, c in terms})
    assert symmetrize(t) == symmetrize_naive(t)
    assert is_symmetric(symmetrize(t))


def test_distinct_permutations():
    assert list(distinct_permutations([1, 1, 2])) == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]
    assert list(distinct_permutations([])) == [()]
    seq = [3, 1, 2, 1]
    assert sorted(set(permutations(seq))) == list(distinct_permutations(seq))


def test_w_vector_examples():
    assert w_vector((Multiset({ONE: 3}), EMPTY)) == pure((1, ONE), (1, ONE), (1, ONE))
    assert w_vector((c1 + ct, EMPTY)) == pure((1, ONE), (1, T))
    assert w_vector((ct, c1)) == pure((1, T), (2, ONE))
    with pytest.raises(ValueError):
        w_vector((ct, c1), m=3)


def test_v_vector_examples():
    assert v_vector((Multiset({ONE: 2}), EMPTY)) == pure((1, ONE), (1, ONE)) * 2
    assert v_vector((c1, ct)) == pure((1, ONE), (2, T)) + pure((2, T), (1, ONE))
    assert v_vector((EMPTY, ct)) == pure((2, T))


@pytest.mark.parametrize("parts", [(c1 + ct, ct), (Multiset({ONE: 2}), ct, c1), (EMPTY, ct * 3)])
def test_v_vector_independent_of_slot_order(parts):
    w = w_vector(parts)
    v = v_vector(parts)
    for perm in permutations(range(w.rank)):
        assert symmetrize(w.permute(perm)) == v


def test_monomial_vector_divides_v_by_factorials():
    parts = (Multiset({ONE: 2, T: 1}), Multiset({T: 2}))
    assert monomial_vector(parts) * (2 * 2) == v_vector(parts)


def test_is_symmetric():
    assert not is_symmetric(pure((1, ONE), (2, ONE)))
    assert is_symmetric(Tensor.scalar(3))
    assert is_symmetric(pure((2, T)))
    for parts in enumerate_basis_tuples(2, 2, 3):
        assert is_symmetric(v_vector(parts))


def test_sym_dim_examples():
    for n, d in [(2, 1), (3, 2), (4, 3)]:
        assert sym_dim(n, d, 0) == 1
    assert sym_dim(2, 2, 2) == 10
    assert sym_dim(3, 1, 2) == 6


@pytest.mark.parametrize("n,d,m", [(n, d, m) for n in (2, 3, 4) for d in (1, 2, 3) for m in range(4)])
def test_tuple_count_is_sym_dim(n, d, m):
    tuples = enumerate_basis_tuples(n, d, m)
    assert len(tuples) == sym_dim(n, d, m) == comb(n * d + m - 1, m)
    assert len(set(tuples)) == len(tuples)


def test_v_vectors_cover_distinct_orbits():
    # distinct tuples give v-vectors with disjoint supports
    seen = set()
    for parts in enumerate_basis_tuples(3, 2, 2):
        support = set(v_vector(parts).terms)
        assert not (support & seen)
        seen |= support


def test_w_slots_is_sorted():
    parts = (Multiset({T: 1, ONE: 2}), EMPTY, c1)
    key = w_slots(parts)
    assert list(key) == sorted(key)


def test_standard_basis_size():
    assert len(standard_basis(2, 2, 2)) == 16


@given(st.lists(st.tuples(st.lists(slots, min_size=2, max_size=2), st.integers(-5, 5)), max_size=5))
def test_json_round_trip(terms):
    t = Tensor(2, {tuple(k): c for k, c in terms})
    assert tensor_from_json(tensor_to_json(t)) == t


def test_tensor_arithmetic():
    t = pure((1, ONE))
    assert t - t == Tensor.zero(1)
    assert (t * 0) == Tensor.zero(1)
    assert t.tensor(pure((2, T))) == pure((1, ONE), (2, T))
    with pytest.raises(ValueError):
        t + pure((1, ONE), (1, ONE))
