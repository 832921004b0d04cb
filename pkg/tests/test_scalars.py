from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from borelschur.scalars import (DigitError, Field, FieldError, GF, binomial_exact, digit,
                                floor_log, lucas_divisible, p_adic_digits)
from oracles import pascal


@pytest.mark.parametrize("a,b,want", [(2, 1, 2), (0, 0, 1), (7, 3, 35), (3, 5, 0)])
def test_binomial_examples(a, b, want):
    assert binomial_exact(a, b) == want


@given(st.integers(0, 60), st.integers(0, 60))
def test_binomial_matches_pascal(a, b):
    assert binomial_exact(a, b) == pascal(a, b)


def test_lucas_examples():
    assert lucas_divisible(4, 2, 3)
    assert not lucas_divisible(3, 1, 2)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_lucas_agrees_with_binomial_up_to_200(p):
    for m in range(201):
        for q in range(201):
            assert lucas_divisible(m, q, p) == (binomial_exact(m, q) % p == 0)


@pytest.mark.parametrize("p,d", [(2, 0), (2, 1), (3, 0), (3, 1), (5, 1)])
def test_critical_count_makes_binomials_vanish(p, d):
    a = sum((p - 1) * p ** t for t in range(d + 1))
    for dp in range(d + 1):
        assert lucas_divisible(a + p ** dp, p ** dp, p)


def test_digits():
    assert p_adic_digits(5, 2) == [1, 0, 1]
    assert p_adic_digits(0, 3) == []
    for p in (2, 3, 5):
        for d in range(3):
            m = 2 * p ** (d + 1) - 1
            digs = p_adic_digits(m, p)
            assert digs == [p - 1] * (d + 1) + [1]
            assert sum(x * p ** k for k, x in enumerate(digs)) == m
    with pytest.raises(DigitError):
        p_adic_digits(-1, 2)
    assert digit(17, 2, 3) == 1
    assert floor_log(8, 2) == 3 and floor_log(7, 2) == 2


def test_field_validation():
    with pytest.raises(FieldError):
        Field(4)
    with pytest.raises(FieldError):
        Field(-3)
    assert Field(0) != GF(2)


def test_rational_arithmetic_is_exact():
    Q = Field(0)
    x = Q.div(Q(1), Q(3))
    assert isinstance(x, Fraction)
    assert Q.add(x, Q.mul(Q(2), x)) == 1


@given(st.sampled_from([2, 3, 5, 7, 11]), st.integers(1, 10 ** 6))
def test_prime_field_inverse(p, a):
    F = GF(p)
    if a % p == 0:
        with pytest.raises(ZeroDivisionError):
            F.inv(F(a))
    else:
        assert F.mul(F(a), F.inv(F(a))) == 1


def test_arrays_reduce_mod_p():
    F = GF(3)
    a = F.array([[4, -1], [6, 2]])
    assert a.tolist() == [[1, 2], [0, 2]]
    assert F.is_zero(F.subm(a, a))
    assert np.array_equal(F.matmul(F.eye(2), a), a)
