"""Brute-force reference implementations, written without the package.

They are deliberately slow and direct: orbit sums over permutations,
Gaussian elimination over Fraction, leading principal minors.
"""

from fractions import Fraction
from itertools import permutations, product
from math import comb


def orbit_key(i, j):
    """Canonical form of the simultaneous orbit of (i, j): the sorted column list."""
    return tuple(sorted(zip(i, j)))


def orbit(i, j):
    cols = list(zip(i, j))
    out = set()
    for perm in permutations(range(len(cols))):
        out.add((tuple(cols[k][0] for k in perm), tuple(cols[k][1] for k in perm)))
    return out


def schur_product(x, y):
    """xi_x xi_y in the Schur algebra from the defining orbit-count formula.

    x and y are (i, j) pairs; the result maps orbit keys to integers.
    Z_{p,q} = #{s : (p, s) ~ x, (s, q) ~ y}.
    """
    left = orbit(*x)
    right = {}
    for s, q in orbit(*y):
        right.setdefault(s, []).append(q)
    counts = {}
    for p, s in left:
        for q in right.get(s, ()):
            counts[(p, q)] = counts.get((p, q), 0) + 1
    out = {}
    for (p, q), c in counts.items():
        key = orbit_key(p, q)
        prev = out.setdefault(key, c)
        assert prev == c, "orbit sum not constant"
    return out


def weights(n, r):
    return sorted((w for w in product(range(r + 1), repeat=n) if sum(w) == r), reverse=True)


def dominates(a, b):
    """b is dominated by a (prefix sums of a are at least those of b)."""
    sa = sb = 0
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sa < sb:
            return False
    return True


def borel_basis_count(n, r):
    """Multisets of r columns (a, b) with a <= b."""
    t = n * (n + 1) // 2
    return comb(t + r - 1, r)


def pascal(n, k):
    row = [1]
    for _ in range(n):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    return row[k] if 0 <= k <= n else 0


def rank(rows, p=0):
    """Rank by plain elimination over Q (p = 0) or GF(p)."""
    M = [[Fraction(x) if p == 0 else int(x) % p for x in row] for row in rows]
    rk, ncols = 0, len(M[0]) if M else 0
    for c in range(ncols):
        piv = next((i for i in range(rk, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[rk], M[piv] = M[piv], M[rk]
        inv = 1 / M[rk][c] if p == 0 else pow(M[rk][c], -1, p)
        for i in range(len(M)):
            if i != rk and M[i][c] != 0:
                f = M[i][c] * inv
                M[i] = [a - f * b for a, b in zip(M[i], M[rk])]
                if p:
                    M[i] = [a % p for a in M[i]]
        rk += 1
    return rk


def positive_definite(matrix):
    """Sylvester's criterion with exact determinants."""
    n = len(matrix)
    for k in range(1, n + 1):
        if _det([row[:k] for row in matrix[:k]]) <= 0:
            return False
    return True


def _det(m):
    m = [[Fraction(x) for x in row] for row in m]
    n, d = len(m), Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            d = -d
        d *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return d


def cartan(n_vertices, edges):
    q = [[2 if i == j else 0 for j in range(n_vertices)] for i in range(n_vertices)]
    for s, t in edges:
        q[s][t] -= 1
        q[t][s] -= 1
    return q


def count_paths(n_vertices, arrows):
    """Number of paths (trivial ones included) in an acyclic quiver."""
    memo = {}

    def from_(v):
        if v not in memo:
            memo[v] = 1 + sum(from_(t) for s, t in arrows if s == v)
        return memo[v]

    return sum(from_(v) for v in range(n_vertices))
