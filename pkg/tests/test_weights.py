from math import comb

import pytest
from hypothesis import given, strategies as st

from borelschur.weights import (NotRowSemistandard, WeightError, canonical_index, dominates,
                                enumerate_weights, index_leq, row_stats, satisfies_cond,
                                semistandard_sets, shift_weight, weight_of)
import oracles


def test_weight_enumeration_examples():
    assert enumerate_weights(2, 2) == ((2, 0), (1, 1), (0, 2))
    assert enumerate_weights(1, 5) == ((5,),)
    assert len(enumerate_weights(3, 3)) == 10


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("r", [0, 1, 3, 5])
def test_weights_match_brute_force(n, r):
    got = enumerate_weights(n, r)
    assert list(got) == oracles.weights(n, r)
    assert len(got) == comb(n + r - 1, n - 1)


def test_dominance_examples():
    # dominates(a, b) reads a ⊴ b
    assert dominates((1, 1), (2, 0))
    assert not dominates((2, 0), (1, 1))
    a, b = (1, 0, 2), (0, 2, 1)
    assert not dominates(a, b) and not dominates(b, a)


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.lists(st.integers(0, 3), min_size=n, max_size=n),
    st.lists(st.integers(0, 3), min_size=n, max_size=n))))
def test_dominance_matches_prefix_sums(pair):
    a, b = pair
    if sum(a) != sum(b):
        return
    assert dominates(tuple(a), tuple(b)) == oracles.dominates(b, a)


def test_shift_examples():
    assert shift_weight((1, 1), 1, 1) == (2, 0)
    assert shift_weight((2, 3, 1), 2, 1) == (2, 4, 0)
    assert shift_weight((2, 3, 1), 1, 0) == (2, 3, 1)
    assert shift_weight((2, 3, 1), 2, 2) is None
    with pytest.raises(WeightError):
        shift_weight((1, 1), 2, 1)


def test_canonical_index():
    assert canonical_index((1, 1)) == (1, 2)
    assert canonical_index((2, 0, 1)) == (1, 1, 3)
    assert canonical_index((0, 3)) == (2, 2, 2)
    for lam in enumerate_weights(3, 4):
        assert weight_of(canonical_index(lam), 3) == lam


def test_semistandard_examples():
    I, J = semistandard_sets((1, 1))
    assert I == ((1, 1), (1, 2)) and J == ((1, 2), (2, 2))
    assert len(semistandard_sets((3, 1))[1]) == 4
    for lam in enumerate_weights(3, 3):
        assert (len(semistandard_sets(lam)[0]) == 1) == (lam == (3, 0, 0))


@pytest.mark.parametrize("n,r", [(2, 4), (3, 3), (3, 4)])
def test_weight_monotonicity(n, r):
    for lam in enumerate_weights(n, r):
        I, J = semistandard_sets(lam)
        for i in I:
            for j in J:
                if index_leq(i, j):
                    assert dominates(weight_of(j, n), weight_of(i, n))


@pytest.mark.parametrize("n,r", [(2, 4), (3, 4), (3, 6)])
def test_shifted_J_sets(n, r):
    # J(lam) = {j in J(lam(n-1, m)) : j >= l(lam)} for m <= lam_n
    for lam in enumerate_weights(n, r):
        if lam[-1] == 0:
            continue
        l = canonical_index(lam)
        J = set(semistandard_sets(lam)[1])
        for m in range(1, lam[-1] + 1):
            other = semistandard_sets(shift_weight(lam, n - 1, m))[1]
            assert J == {j for j in other if index_leq(l, j)}


def test_row_stats_examples():
    s = row_stats((3, 1), (1, 2, 2, 2), 2)
    assert (s.a, s.digits, s.m) == (2, (0, 1), 0)
    s = row_stats((1, 1), (2, 2), 3)
    assert (s.a, s.m) == (1, 0)
    s = row_stats((3, 1), (2, 2, 2, 2), 2)
    assert (s.a, s.digits, s.d, s.m) == (3, (1, 1), 0, None)
    with pytest.raises(NotRowSemistandard):
        row_stats((2, 1), (2, 1, 1), 2)


def test_cond():
    assert satisfies_cond((1, 1), 0)
    assert not satisfies_cond((1, 0), 0)
    # p = 2, lam_2 = 1: need lam_1 < 1
    assert satisfies_cond((0, 1), 2) and not satisfies_cond((1, 1), 2)
