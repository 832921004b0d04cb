"""Exact scalars: the rationals and prime fields, plus the integer helpers
(binomials, p-adic digits, Lucas) used all over the package."""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np


class FieldError(ValueError):
    pass


class DigitError(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    for q in range(2, math.isqrt(p) + 1):
        if p % q == 0:
            return False
    return True


class Field:
    """Q (characteristic 0) or F_p.

    Elements are Fractions for Q and ints in [0, p) for F_p.  Matrices are
    numpy arrays: dtype object (holding Fractions) over Q, int64 over F_p.
    """

    def __init__(self, characteristic: int = 0):
        characteristic = int(characteristic)
        if characteristic != 0 and not _is_prime(characteristic):
            raise FieldError(f"characteristic must be 0 or a prime, got {characteristic}")
        if characteristic > 3037000493:
            # products of two residues must fit in int64
            raise FieldError("prime too large for machine-word arithmetic")
        self.char = characteristic

    # identity
    def __eq__(self, other):
        return isinstance(other, Field) and other.char == self.char

    def __hash__(self):
        return hash(("Field", self.char))

    def __repr__(self):
        return "QQ" if self.char == 0 else f"GF({self.char})"

    @property
    def is_finite(self):
        return self.char != 0

    @property
    def dtype(self):
        return object if self.char == 0 else np.int64

    @property
    def order(self):
        return None if self.char == 0 else self.char

    # elements
    def __call__(self, x):
        if self.char == 0:
            return Fraction(x)
        if isinstance(x, Fraction):
            return self.div(x.numerator, x.denominator)
        return int(x) % self.char

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def add(self, a, b):
        return a + b if self.char == 0 else (a + b) % self.char

    def sub(self, a, b):
        return a - b if self.char == 0 else (a - b) % self.char

    def neg(self, a):
        return -a if self.char == 0 else (-a) % self.char

    def mul(self, a, b):
        return a * b if self.char == 0 else (a * b) % self.char

    def inv(self, a):
        a = self(a)
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.char == 0:
            return 1 / a
        return pow(int(a), -1, self.char)

    def div(self, a, b):
        return self.mul(self(a), self.inv(b))

    def elements(self):
        if self.char == 0:
            raise FieldError("Q is infinite")
        return range(self.char)

    # matrices
    def array(self, data) -> np.ndarray:
        a = np.array(data, dtype=object)
        if a.ndim == 1 and a.size == 0:
            a = a.reshape(0, 0)
        if self.char == 0:
            out = np.empty(a.shape, dtype=object)
            out.flat[:] = [Fraction(x) for x in a.flat]
            return out
        return self.reduce(a)

    def reduce(self, a) -> np.ndarray:
        """Coerce an integer (or rational) array into this field."""
        a = np.asarray(a)
        if self.char == 0:
            if a.dtype == object:
                out = np.empty(a.shape, dtype=object)
                out.flat[:] = [Fraction(x) for x in a.flat]
                return out
            out = np.empty(a.shape, dtype=object)
            out.flat[:] = [Fraction(int(x)) for x in a.flat]
            return out
        if a.dtype == object:
            return np.array([self(x) for x in a.flat], dtype=np.int64).reshape(a.shape)
        return np.mod(a.astype(np.int64), self.char)

    def zeros(self, rows, cols=None):
        shape = (rows,) if cols is None else (rows, cols)
        if self.char == 0:
            out = np.empty(shape, dtype=object)
            out.fill(Fraction(0))
            return out
        return np.zeros(shape, dtype=np.int64)

    def eye(self, n):
        out = self.zeros(n, n)
        for k in range(n):
            out[k, k] = self.one
        return out

    def scale(self, c, a):
        c = self(c)
        if self.char == 0:
            return a * c
        return (a * c) % self.char

    def matmul(self, a, b):
        if self.char == 0:
            if a.shape[0] * a.shape[1] * b.shape[1] > 20000:
                from . import linalg
                return linalg.q_matmul(a, b)
            return a @ b if a.size and b.size else self.zeros(a.shape[0], b.shape[1])
        return (a @ b) % self.char

    def addm(self, a, b):
        return a + b if self.char == 0 else (a + b) % self.char

    def subm(self, a, b):
        return a - b if self.char == 0 else (a - b) % self.char

    def is_zero(self, a) -> bool:
        return not np.any(a != 0)


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)


def binomial_exact(n: int, k: int) -> int:
    if n < 0:
        raise ValueError("negative upper index")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def p_adic_digits(m: int, p: int) -> list[int]:
    """Digits of m in base p, least significant first; 0 gives []."""
    if p < 2:
        raise DigitError("base must be at least 2")
    if m < 0:
        raise DigitError("negative integer")
    out = []
    while m:
        m, d = divmod(m, p)
        out.append(d)
    return out


def digit(m: int, k: int, p: int) -> int:
    return (m // p**k) % p


def lucas_divisible(m: int, q: int, p: int) -> bool:
    """True iff p divides binom(m, q), read off the base-p digits."""
    if m < 0 or q < 0:
        raise DigitError("negative argument")
    while m or q:
        if q % p > m % p:
            return True
        m //= p
        q //= p
    return False


def floor_log(m: int, p: int) -> int:
    """Largest d with p**d <= m (m >= 1)."""
    if m < 1:
        raise DigitError("floor_log needs m >= 1")
    d = 0
    while p ** (d + 1) <= m:
        d += 1
    return d
