"""Compositions, multi-indices and the tableau bookkeeping around them.

A composition of r into n parts is a plain tuple of ints; a multi-index is a
tuple of entries in 1..n.  The tableau T^lambda has row nu made of positions
lambda_1 + ... + lambda_{nu-1} + 1, ..., lambda_1 + ... + lambda_nu.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .scalars import digit, floor_log, p_adic_digits


class WeightError(ValueError):
    pass


class DimensionMismatch(WeightError):
    pass


class NotRowSemistandard(WeightError):
    pass


def _check(lam):
    if any(x < 0 for x in lam):
        raise WeightError(f"negative part in {lam}")


@lru_cache(maxsize=None)
def enumerate_weights(n: int, r: int) -> tuple:
    """All compositions of r into n parts, lexicographically decreasing."""
    if n < 1 or r < 0:
        raise WeightError("need n >= 1 and r >= 0")

    def rec(k, rest):
        if k == 1:
            yield (rest,)
            return
        for first in range(rest, -1, -1):
            for tail in rec(k - 1, rest - first):
                yield (first,) + tail

    return tuple(rec(n, r))


def dominates(alpha, beta) -> bool:
    """alpha ⊴ beta: every prefix sum of alpha is at most that of beta."""
    if len(alpha) != len(beta) or sum(alpha) != sum(beta):
        raise DimensionMismatch(f"{alpha} and {beta} are not in the same Λ(n, r)")
    sa = sb = 0
    for a, b in zip(alpha, beta):
        sa += a
        sb += b
        if sa > sb:
            return False
    return True


def shift_weight(lam, nu: int, m: int):
    """lam(nu, m): move m from part nu+1 to part nu (1-based nu), or None.

    m = 0 gives lam itself."""
    n = len(lam)
    if not 1 <= nu < n:
        raise WeightError(f"nu={nu} out of range for n={n}")
    if m < 0 or lam[nu] < m:
        return None
    out = list(lam)
    out[nu - 1] += m
    out[nu] -= m
    return tuple(out)


def canonical_index(lam):
    """l(lambda) = (1^lambda_1, 2^lambda_2, ...)."""
    _check(lam)
    return tuple(v for v, c in enumerate(lam, start=1) for _ in range(c))


def weight_of(i, n: int):
    out = [0] * n
    for v in i:
        if not 1 <= v <= n:
            raise WeightError(f"entry {v} outside 1..{n}")
        out[v - 1] += 1
    return tuple(out)


def index_leq(i, j) -> bool:
    return len(i) == len(j) and all(a <= b for a, b in zip(i, j))


def rows(lam, i):
    """The rows of T^lambda_i."""
    if len(i) != sum(lam):
        raise DimensionMismatch("multi-index length differs from |lambda|")
    out, pos = [], 0
    for c in lam:
        out.append(tuple(i[pos:pos + c]))
        pos += c
    return out


def is_row_semistandard(lam, i) -> bool:
    return all(all(a <= b for a, b in zip(row, row[1:])) for row in rows(lam, i))


@lru_cache(maxsize=None)
def semistandard_sets(lam):
    """(I(lambda), J(lambda)).

    I: i <= l(lambda) with weakly increasing rows (row nu uses 1..nu).
    J: j >= l(lambda) with weakly increasing rows (row nu uses nu..n).
    """
    _check(lam)
    n = len(lam)
    I_rows = [list(itertools.combinations_with_replacement(range(1, nu + 1), c))
              for nu, c in enumerate(lam, start=1)]
    J_rows = [list(itertools.combinations_with_replacement(range(nu, n + 1), c))
              for nu, c in enumerate(lam, start=1)]
    I = tuple(sum(p, ()) for p in itertools.product(*I_rows))
    J = tuple(sum(p, ()) for p in itertools.product(*J_rows))
    return I, J


@dataclass(frozen=True)
class RowStats:
    a: int            # number of n's in row n-1
    digits: tuple     # base-p digits of a, least significant first (padded to d+1)
    d: int | None     # p^d <= lambda_n < p^(d+1)
    m: int | None     # least t <= d with a_t < p-1
    t2: int | None = None
    t3: int | None = None
    b: int | None = None


def row_stats(lam, j, p: int) -> RowStats:
    """Digit statistics of a row-semistandard j used by the kernel formulas.

    b is the digit prediction for the least d' with a nonzero product
    xi_{l(1,p^d'),l} xi_{l,j}; the resolutions module checks it against the
    actual products.
    """
    n = len(lam)
    if n < 2:
        raise WeightError("row statistics need n >= 2")
    if not is_row_semistandard(lam, j):
        raise NotRowSemistandard(f"{j} is not row-semistandard for {lam}")
    rws = rows(lam, j)
    a = sum(1 for v in rws[n - 2] if v == n)
    if p == 0:
        t2 = t3 = None
        if n >= 3:
            t2 = sum(1 for v in rws[0] if v == 2)
            t3 = sum(1 for v in rws[0] if v == 3)
        return RowStats(a=a, digits=(a,), d=None, m=None, t2=t2, t3=t3)
    d = floor_log(lam[-1], p) if lam[-1] else None
    digs = p_adic_digits(a, p)
    if d is not None:
        digs = digs + [0] * max(0, d + 1 - len(digs))
    m = None
    top = d if d is not None else len(digs)
    for t in range(top + 1):
        if digit(a, t, p) < p - 1:
            m = t
            break
    t2 = t3 = b = None
    if n >= 3:
        t2 = sum(1 for v in rws[0] if v == 2)
        t3 = sum(1 for v in rws[0] if v == 3)
        if d is not None:
            for t in range(d + 1):
                if digit(t2, t, p) != p - 1 or digit(t3, t, p) != p - 1:
                    b = t
                    break
            else:
                if digit(t2, d + 1, p) != p - 1:
                    b = d + 1
    return RowStats(a=a, digits=tuple(digs), d=d, m=m, t2=t2, t3=t3, b=b)


def satisfies_cond(lam, p: int) -> bool:
    """lambda_n != 0, and in characteristic p also lambda_{n-1} < p^(d+1) - 1
    where p^d <= lambda_n < p^(d+1)."""
    n = len(lam)
    if n < 2 or lam[-1] == 0:
        return False
    if p == 0:
        return True
    d = floor_log(lam[-1], p)
    return lam[n - 2] < p ** (d + 1) - 1
