"""Exact linear algebra over a `Field`, backed by python-flint.

All routines take and return numpy arrays in the field's representation
(see `Field`).  Subspaces are given by matrices whose columns span them.
"""

from __future__ import annotations

from fractions import Fraction

import flint
import numpy as np

from .scalars import Field


def _to_flint(F: Field, a):
    r, c = a.shape
    if F.char == 0:
        ents = []
        for x in a.flat:
            x = Fraction(x)
            ents.append(flint.fmpq(x.numerator, x.denominator))
        return flint.fmpq_mat(r, c, ents)
    return flint.nmod_mat(r, c, [int(x) for x in a.flat], F.char)


def _from_flint(F: Field, m, r, c):
    ents = m.entries()
    if F.char == 0:
        out = np.empty((r, c), dtype=object)
        out.flat[:] = [Fraction(int(x.p), int(x.q)) for x in ents]
        return out
    return np.array([int(x) for x in ents], dtype=np.int64).reshape(r, c)


def q_matmul(a, b):
    F = Field(0)
    r, k = a.shape
    k2, c = b.shape
    assert k == k2
    if r == 0 or c == 0 or k == 0:
        return F.zeros(r, c)
    return _from_flint(F, _to_flint(F, a) * _to_flint(F, b), r, c)


def rref(F: Field, a):
    """Reduced row echelon form and pivot columns."""
    a = np.asarray(a)
    r, c = a.shape
    if r == 0 or c == 0:
        return F.zeros(r, c), []
    R, rk = _to_flint(F, a).rref()
    R = _from_flint(F, R, r, c)
    pivots = []
    for i in range(rk):
        row = R[i]
        nz = np.nonzero(row != 0)[0]
        pivots.append(int(nz[0]))
    return R, pivots


def rank(F: Field, a) -> int:
    a = np.asarray(a)
    if a.size == 0:
        return 0
    return _to_flint(F, a).rank()


def nullspace(F: Field, a):
    """Basis of {x : a x = 0}, as columns."""
    a = np.asarray(a)
    r, c = a.shape
    if c == 0:
        return F.zeros(0, 0)
    if r == 0:
        return F.eye(c)
    R, piv = rref(F, a)
    free = [j for j in range(c) if j not in set(piv)]
    N = F.zeros(c, len(free))
    for k, f in enumerate(free):
        N[f, k] = F.one
        for i, pc in enumerate(piv):
            N[pc, k] = F.neg(R[i, f])
    return N


def column_basis(F: Field, a):
    """Independent columns of a spanning its column space (a subset of a's columns)."""
    a = np.asarray(a)
    if a.size == 0:
        return F.zeros(a.shape[0], 0)
    _, piv = rref(F, a)
    return a[:, piv]


def pivot_columns(F: Field, a) -> list[int]:
    a = np.asarray(a)
    if a.size == 0:
        return []
    return rref(F, a)[1]


def inverse(F: Field, a):
    n = a.shape[0]
    if n == 0:
        return F.zeros(0, 0)
    m = _to_flint(F, a)
    return _from_flint(F, m.inv(), n, n)


def solve(F: Field, a, b):
    """Some X with a X = b, or None when the system is inconsistent."""
    a = np.asarray(a)
    b = np.asarray(b)
    if b.ndim == 1:
        x = solve(F, a, b.reshape(-1, 1))
        return None if x is None else x[:, 0]
    r, c = a.shape
    k = b.shape[1]
    if r == 0:
        return F.zeros(c, k)
    aug = np.concatenate([a, b], axis=1) if c else b
    R, piv = rref(F, aug)
    if any(p >= c for p in piv):
        return None
    X = F.zeros(c, k)
    for i, pc in enumerate(piv):
        X[pc, :] = R[i, c:]
    return X


def in_span(F: Field, basis, v) -> bool:
    if basis.shape[1] == 0:
        return F.is_zero(v)
    return rank(F, np.concatenate([basis, v.reshape(-1, 1) if v.ndim == 1 else v], axis=1)) == rank(F, basis)


def same_span(F: Field, a, b) -> bool:
    ra, rb = rank(F, a), rank(F, b)
    if ra != rb:
        return False
    if a.shape[1] == 0 or b.shape[1] == 0:
        return ra == rb == 0
    return rank(F, np.concatenate([a, b], axis=1)) == ra


def span_sum(F: Field, *mats):
    mats = [m for m in mats if m.shape[1]]
    if not mats:
        return None
    return column_basis(F, np.concatenate(mats, axis=1))


def intersect(F: Field, a, b):
    """Basis of span(a) ∩ span(b)."""
    n = a.shape[0]
    if a.shape[1] == 0 or b.shape[1] == 0:
        return F.zeros(n, 0)
    a = column_basis(F, a)
    b = column_basis(F, b)
    N = nullspace(F, np.concatenate([a, F.subm(F.zeros(*b.shape), b)], axis=1))
    if N.shape[1] == 0:
        return F.zeros(n, 0)
    return column_basis(F, F.matmul(a, N[: a.shape[1]]))


def complement_columns(F: Field, sub, n: int) -> list[int]:
    """Indices of standard basis vectors completing span(sub) to F^n."""
    if n == 0:
        return []
    k = sub.shape[1]
    piv = pivot_columns(F, np.concatenate([sub, F.eye(n)], axis=1) if k else F.eye(n))
    return [p - k for p in piv if p >= k]


def left_inverse(F: Field, S):
    """L with L S = I, for S of full column rank."""
    n, k = S.shape
    if k == 0:
        return F.zeros(0, n)
    rows = pivot_columns(F, S.T)
    if len(rows) != k:
        raise ValueError("matrix does not have full column rank")
    inv = inverse(F, S[rows, :])
    L = F.zeros(k, n)
    L[:, rows] = inv
    return L


def kron(F: Field, a, b):
    out = np.kron(a, b)
    return out if F.char == 0 else out % F.char
