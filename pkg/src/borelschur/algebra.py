"""The Borel-Schur algebra S(B+, n, r): basis, products, truncations.

A basis element xi_{i,j} (i <= j) is stored as the lexicographically sorted
tuple of its columns (i_rho, j_rho); two pairs give the same element exactly
when their column multisets agree.  Products are computed over the integers
by enumerating contingency tables (one per value of the shared middle index)
and reduced into the coefficient field afterwards.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from . import linalg
from .scalars import Field
from .weights import (canonical_index, dominates, enumerate_weights, index_leq,
                      shift_weight, weight_of)


class AlgebraError(ValueError):
    pass


class NotUpperTriangular(AlgebraError):
    pass


class DimensionBudgetExceeded(AlgebraError):
    pass


class NotACoideal(AlgebraError):
    pass


class StructureMismatch(AlgebraError):
    pass


class BasisElement(tuple):
    """Sorted tuple of columns (a, b) with a <= b."""

    __slots__ = ()

    @property
    def i(self):
        return tuple(c[0] for c in self)

    @property
    def j(self):
        return tuple(c[1] for c in self)

    def by_right(self):
        """(i, j) with j weakly increasing: the form xi_{i, l(mu)} for A xi_mu."""
        cols = sorted(self, key=lambda c: (c[1], c[0]))
        return tuple(c[0] for c in cols), tuple(c[1] for c in cols)

    def left_weight(self, n):
        return weight_of(self.i, n)

    def right_weight(self, n):
        return weight_of(self.j, n)

    def degree(self):
        return sum(b - a for a, b in self)

    def __repr__(self):
        i, j = self.i, self.j
        return f"xi[{''.join(map(str, i))},{''.join(map(str, j))}]"


def canonicalize_pair(i, j) -> BasisElement:
    i, j = tuple(i), tuple(j)
    if len(i) != len(j):
        raise AlgebraError("multi-indices of different length")
    if not index_leq(i, j):
        raise NotUpperTriangular(f"{i} is not <= {j}")
    return BasisElement(sorted(zip(i, j)))


def enumerate_basis(n: int, r: int) -> list:
    """All xi_{i,j} of S(B+, n, r), without repetition (multisets of columns)."""
    cols = [(a, b) for a in range(1, n + 1) for b in range(a, n + 1)]
    return [BasisElement(c) for c in itertools.combinations_with_replacement(cols, r)]


def basis_dimension(n: int, r: int) -> int:
    return math.comb(n * (n + 1) // 2 + r - 1, r)


def idempotent(lam) -> BasisElement:
    l = canonical_index(lam)
    return canonicalize_pair(l, l)


# --- products over Z ------------------------------------------------------

def _bounded_vectors(total, caps):
    if not caps:
        if total == 0:
            yield ()
        return
    first, rest = caps[0], caps[1:]
    room = sum(rest)
    for x in range(min(first, total), -1, -1):
        if total - x <= room:
            for tail in _bounded_vectors(total - x, rest):
                yield (x,) + tail


@lru_cache(maxsize=None)
def _tables(rowsums, colsums):
    """Nonnegative integer matrices with the given margins."""
    if not rowsums:
        return ((),) if not any(colsums) else ()
    out = []
    for row in _bounded_vectors(rowsums[0], colsums):
        rest = tuple(c - x for c, x in zip(colsums, row))
        for t in _tables(rowsums[1:], rest):
            out.append((row,) + t)
    return tuple(out)


@lru_cache(maxsize=1 << 18)
def multiply_int(x: BasisElement, y: BasisElement) -> dict:
    """Integer structure constants of xi_x * xi_y (a dict element -> int)."""
    left = defaultdict(Counter)   # middle value -> counts of left entries
    right = defaultdict(Counter)  # middle value -> counts of right entries
    for a, b in x:
        left[b][a] += 1
    for a, b in y:
        right[a][b] += 1
    if set(left) != set(right):
        return {}
    blocks = []
    for v in sorted(left):
        lv, rv = left[v], right[v]
        if sum(lv.values()) != sum(rv.values()):
            return {}
        rk, ck = sorted(lv), sorted(rv)
        tabs = _tables(tuple(lv[k] for k in rk), tuple(rv[k] for k in ck))
        blocks.append((rk, ck, tabs))
    out = defaultdict(int)
    for choice in itertools.product(*(b[2] for b in blocks)):
        total = Counter()
        denom = 1
        for (rk, ck, _), tab in zip(blocks, choice):
            for a, row in zip(rk, tab):
                for c, m in zip(ck, row):
                    if m:
                        total[(a, c)] += m
                        denom *= math.factorial(m)
        num = 1
        for m in total.values():
            num *= math.factorial(m)
        elem = BasisElement(sorted(total.elements()))
        out[elem] += num // denom
    return dict(out)


# --- algebras -------------------------------------------------------------

@dataclass
class Arrow:
    source: tuple
    target: tuple
    element: dict          # linear combination of basis elements
    label: tuple = ()

    def __repr__(self):
        return f"Arrow({self.source}->{self.target}, {self.label})"


class BorelSchurAlgebra:
    """S(B+, n, r) over a field (characteristic 0 or p)."""

    def __init__(self, n: int, r: int, field=0):
        if n < 1 or r < 0:
            raise AlgebraError("need n >= 1, r >= 0")
        self.n, self.r = n, r
        self.field = field if isinstance(field, Field) else Field(field)
        self.weights = enumerate_weights(n, r)

    def __repr__(self):
        return f"S(B+,{self.n},{self.r}) over {self.field!r}"

    @property
    def p(self):
        return self.field.char

    @cached_property
    def basis(self):
        return [x for x in enumerate_basis(self.n, self.r) if self.contains(x)]

    @cached_property
    def index(self):
        return {x: k for k, x in enumerate(self.basis)}

    @property
    def dim(self):
        return len(self.basis)

    def contains(self, x) -> bool:
        return True

    def lw(self, x):
        return weight_of(x.i, self.n)

    def rw(self, x):
        return weight_of(x.j, self.n)

    @cached_property
    def by_weights(self):
        """(left weight, right weight) -> basis elements."""
        out = defaultdict(list)
        for x in self.basis:
            out[(self.lw(x), self.rw(x))].append(x)
        return dict(out)

    def between(self, target, source):
        return self.by_weights.get((tuple(target), tuple(source)), [])

    def idempotent(self, lam):
        return idempotent(lam)

    def multiply(self, x, y) -> dict:
        F = self.field
        out = {}
        for z, c in multiply_int(x, y).items():
            c = F(c)
            if c != 0:
                out[z] = c
        return out

    def product(self, u: dict, v: dict) -> dict:
        """Product of two linear combinations."""
        F = self.field
        out = defaultdict(lambda: F.zero)
        for x, a in u.items():
            for y, b in v.items():
                ab = F.mul(a, b)
                for z, c in multiply_int(x, y).items():
                    out[z] = F.add(out[z], F.mul(ab, F(c)))
        return {z: c for z, c in out.items() if c != 0}

    def vector(self, lc: dict):
        vec = self.field.zeros(self.dim)
        for x, c in lc.items():
            vec[self.index[x]] = self.field(c)
        return vec

    def is_radical(self, x) -> bool:
        return x.degree() > 0

    def arrows(self):
        return presentation_arrows(self)

    def arrows_from(self, lam):
        return [a for a in self.arrows() if a.source == tuple(lam)]


def _arrow_shifts(A, lam):
    """(nu, m) with lam(nu, m) defined and m = 1 (char 0) or a power of p."""
    out = []
    for nu in range(1, A.n):
        top = lam[nu]
        if top < 1:
            continue
        if A.p == 0:
            out.append((nu, 1))
        else:
            m = 1
            while m <= top:
                out.append((nu, m))
                m *= A.p
    return out


def presentation_arrows(A: BorelSchurAlgebra):
    """Arrows lam -> lam(nu, m) carried by xi_{l(nu,m), l(lam)}."""
    if isinstance(A, CornerAlgebra):
        return A.arrows()
    cache = A.__dict__.setdefault("_arrows", None)
    if cache is not None:
        return cache
    out = []
    for lam in A.weights:
        l = canonical_index(lam)
        for nu, m in _arrow_shifts(A, lam):
            mu = shift_weight(lam, nu, m)
            x = canonicalize_pair(canonical_index(mu), l)
            out.append(Arrow(lam, mu, {x: A.field.one}, (nu, m)))
    A._arrows = out
    return out


def gabriel_arrows(A):
    """Arrows read off rad/rad^2 between each pair of weights.

    Returns Arrow objects whose elements are basis elements chosen greedily
    outside rad^2.
    """
    F = A.field
    W = list(A.weights)
    out = []
    for lam in W:
        for mu in W:
            if mu == lam or not dominates(lam, mu):
                continue
            cell = A.between(mu, lam)
            if not cell:
                continue
            pos = {x: k for k, x in enumerate(cell)}
            vecs = []
            for ka in W:
                if ka in (lam, mu) or not (dominates(lam, ka) and dominates(ka, mu)):
                    continue
                for u in A.between(mu, ka):
                    for v in A.between(ka, lam):
                        prod = A.multiply(u, v)
                        if prod:
                            vec = F.zeros(len(cell))
                            for z, c in prod.items():
                                vec[pos[z]] = c
                            vecs.append(vec)
            sq = np.stack(vecs, axis=1) if vecs else F.zeros(len(cell), 0)
            for k in linalg.complement_columns(F, linalg.column_basis(F, sq) if sq.shape[1] else sq, len(cell)):
                out.append(Arrow(lam, mu, {cell[k]: F.one}, ("rad", k)))
    return out


class CornerAlgebra(BorelSchurAlgebra):
    """e A e for e the sum of xi_alpha over a subset S of weights."""

    def __init__(self, parent: BorelSchurAlgebra, S):
        super().__init__(parent.n, parent.r, parent.field)
        S = {tuple(s) for s in S}
        bad = S - set(parent.weights)
        if bad:
            raise AlgebraError(f"weights {sorted(bad)} not in Λ({parent.n},{parent.r})")
        self.parent = parent
        self.weights = tuple(w for w in parent.weights if w in S)
        self._S = S

    def __repr__(self):
        return f"e{self.parent!r}e on {len(self.weights)} weights"

    def contains(self, x) -> bool:
        return self.lw(x) in self._S and self.rw(x) in self._S

    def arrows(self):
        if "_garrows" not in self.__dict__:
            self._garrows = gabriel_arrows(self)
        return self._garrows


def corner_algebra(A: BorelSchurAlgebra, S) -> CornerAlgebra:
    return CornerAlgebra(A, S)


def is_coideal(weights, S) -> bool:
    S = {tuple(s) for s in S}
    return all(mu in S for lam in S for mu in weights if dominates(lam, mu))


def truncate_idempotent(A: BorelSchurAlgebra, S) -> CornerAlgebra:
    """e A e for a dominance coideal S (so that A e = e A e)."""
    if not is_coideal(A.weights, S):
        raise NotACoideal("weight set is not upward closed under dominance")
    return CornerAlgebra(A, S)


def coideal_closure(weights, seeds):
    return {mu for lam in seeds for mu in weights if dominates(tuple(lam), mu)}


# --- the tensor-space oracle ----------------------------------------------

TENSOR_BUDGET = 10**6


@lru_cache(maxsize=None)
def _tensor_pattern(x: BasisElement, n: int):
    rows, cols = [], []
    for perm in set(itertools.permutations(x)):
        h = k = 0
        for a, b in perm:
            h = h * n + (a - 1)
            k = k * n + (b - 1)
        rows.append(h)
        cols.append(k)
    return np.array(rows), np.array(cols)


def tensor_matrix(x: BasisElement, n: int):
    """xi_{i,j} as a 0/1 operator on (K^n)^{tensor r}: E[h,k] = 1 iff (h,k) ~ (i,j)."""
    from scipy import sparse
    N = n ** len(x)
    if N > TENSOR_BUDGET:
        raise DimensionBudgetExceeded(f"tensor space of dimension {N}")
    rows, cols = _tensor_pattern(x, n)
    return sparse.csr_matrix((np.ones(len(rows), dtype=np.int64), (rows, cols)), shape=(N, N))


def _decode(idx, n, r):
    out = []
    for _ in range(r):
        idx, d = divmod(idx, n)
        out.append(d + 1)
    return tuple(reversed(out))


def tensor_oracle_multiply(x: BasisElement, y: BasisElement, n: int) -> dict:
    """Integer product of xi_x and xi_y computed as matrices on tensor space."""
    r = len(x)
    M = (tensor_matrix(x, n) @ tensor_matrix(y, n)).tocoo()
    out = {}
    for h, k, v in zip(M.row, M.col, M.data):
        if v == 0:
            continue
        elem = canonicalize_pair(_decode(int(h), n, r), _decode(int(k), n, r))
        if elem in out and out[elem] != int(v):
            raise AlgebraError("tensor product not constant on an orbit")
        out[elem] = int(v)
    return out


# --- structure -----------------------------------------------------------

@dataclass
class RadicalSplit:
    radical: list
    top: list
    nilpotency_bound: int
    checked_power: int | None = None


def radical_split(A: BorelSchurAlgebra, verify: bool = True) -> RadicalSplit:
    """rad A = span of xi_{i,j} with i != j; A / rad A = span of the idempotents.

    Radical elements have positive degree sum(j) - sum(i), degree is additive
    and bounded by r(n-1), so rad^(r(n-1)+1) = 0.  With verify=True the powers
    of the radical are computed until they vanish.
    """
    rad = [x for x in A.basis if x.degree() > 0]
    top = [x for x in A.basis if x.degree() == 0]
    bound = A.r * (A.n - 1) + 1
    checked = None
    if verify:
        F = A.field
        cur = [{x: F.one} for x in rad]
        k = 1
        while cur:
            k += 1
            if k > bound + 1:
                raise AlgebraError("radical is not nilpotent")
            vecs = []
            for u in cur:
                for v in rad:
                    pr = A.product(u, {v: F.one})
                    if pr:
                        vecs.append(A.vector(pr))
            if not vecs:
                break
            M = linalg.column_basis(F, np.stack(vecs, axis=1))
            cur = [{A.basis[t]: M[t, c] for t in np.nonzero(M[:, c] != 0)[0]}
                   for c in range(M.shape[1])]
        checked = k
    return RadicalSplit(rad, top, bound, checked)


def add_diagonal(x: BasisElement, delta) -> BasisElement:
    """Add delta_a copies of the column (a, a) for each a."""
    cols = list(x)
    for a, c in enumerate(delta, start=1):
        cols.extend([(a, a)] * c)
    return BasisElement(sorted(cols))


def induced_basis_map(A, B, vertex_map):
    """Basis bijection induced by a weight map that either pads with zeros
    (A.n < B.n) or translates every weight by a fixed vector (same n)."""
    images = {tuple(k): tuple(v) for k, v in vertex_map.items()}
    if A.n < B.n:
        for lam, mu in images.items():
            if mu != tuple(lam) + (0,) * (B.n - A.n):
                raise StructureMismatch("weight map is not zero padding")
        return {x: x for x in A.basis}
    if A.n == B.n:
        deltas = {tuple(m - l for l, m in zip(lam, mu)) for lam, mu in images.items()}
        if len(deltas) != 1:
            raise StructureMismatch("weight map is not a translation")
        (delta,) = deltas
        if any(d < 0 for d in delta):
            raise StructureMismatch("translation must be nonnegative")
        return {x: add_diagonal(x, delta) for x in A.basis}
    raise StructureMismatch("cannot induce a basis map into a smaller n")


def structure_iso_check(A, B, vertex_map=None, basis_map=None) -> bool:
    """True iff basis_map is a bijection A.basis -> B.basis transporting all
    structure constants exactly (in the common coefficient field)."""
    if A.field != B.field:
        raise StructureMismatch("different coefficient fields")
    if basis_map is None:
        if vertex_map is None:
            raise StructureMismatch("need a vertex map or a basis map")
        wanted = set(B.weights)
        got = {tuple(v) for v in vertex_map.values()}
        if len(got) != len(vertex_map) or got != wanted or set(map(tuple, vertex_map)) != set(A.weights):
            return False
        basis_map = induced_basis_map(A, B, vertex_map)
    imgs = set(basis_map.values())
    if len(imgs) != len(A.basis) or set(basis_map) != set(A.basis) or imgs != set(B.basis):
        return False
    for x in A.basis:
        for y in A.basis:
            lhs = {basis_map[z]: c for z, c in A.multiply(x, y).items()}
            rhs = B.multiply(basis_map[x], basis_map[y])
            if lhs != rhs:
                return False
    return True
