import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from borelschur import linalg
from borelschur.scalars import Field
import oracles

small = st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=5)


@settings(max_examples=120, deadline=None)
@given(small, st.sampled_from([0, 2, 3, 5]))
def test_rank_and_nullspace(rows, p):
    F = Field(p)
    a = F.array(rows)
    rk = linalg.rank(F, a)
    assert rk == oracles.rank(rows, p)
    N = linalg.nullspace(F, a)
    assert N.shape[1] == a.shape[1] - rk
    assert F.is_zero(F.matmul(a, N))
    if N.shape[1]:
        assert linalg.rank(F, N) == N.shape[1]


@settings(max_examples=60, deadline=None)
@given(small, st.sampled_from([0, 3, 7]))
def test_solve_consistency(rows, p):
    F = Field(p)
    a = F.array(rows)
    x0 = F.array([1, 2, 0, 1])
    b = F.matmul(a, x0.reshape(-1, 1))
    x = linalg.solve(F, a, b)
    assert x is not None
    assert np.array_equal(F.matmul(a, x), b)


def test_inconsistent_system():
    F = Field(0)
    a = F.array([[1, 1], [1, 1]])
    assert linalg.solve(F, a, F.array([1, 2])) is None


def test_inverse_and_spans():
    F = Field(5)
    a = F.array([[2, 1], [1, 1]])
    inv = linalg.inverse(F, a)
    assert np.array_equal(F.matmul(a, inv), F.eye(2))
    b = F.array([[1, 0], [0, 1], [1, 1]])
    assert linalg.in_span(F, b, F.array([2, 3, 0]))
    assert not linalg.in_span(F, b[:, :1], F.array([0, 1, 0]))
    assert linalg.same_span(F, b, F.matmul(b, a))


def test_intersection():
    F = Field(0)
    a = F.array([[1, 0], [0, 1], [0, 0]])
    b = F.array([[1, 0], [0, 0], [0, 1]])
    I = linalg.intersect(F, a, b)
    assert I.shape[1] == 1
    assert linalg.same_span(F, I, F.array([[1], [0], [0]]))


@pytest.mark.parametrize("p", [0, 2])
def test_empty_shapes(p):
    F = Field(p)
    assert linalg.rank(F, F.zeros(0, 3)) == 0
    assert linalg.nullspace(F, F.zeros(0, 3)).shape == (3, 3)
