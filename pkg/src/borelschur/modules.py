"""Finite-dimensional modules over Borel-Schur algebras (and their corners).

Matrices act on column vectors.  A left module satisfies
rho(x) rho(y) = rho(xy); a right module satisfies rho(y) rho(x) = rho(xy)
(v.x is rho(x) v).  Every module carries a weight-homogeneous basis:
weights[k] is the weight of basis vector k, and the idempotent xi_alpha acts
as the projection onto the alpha-weight space.  Subspaces that are
submodules are handled weight space by weight space, as dicts
weight -> matrix whose columns live in that weight block.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import linalg
from .algebra import tensor_matrix
from .scalars import Field


class ModuleError(ValueError):
    pass


class AlgebraMismatch(ModuleError):
    pass


class NotAModuleMap(ModuleError):
    pass


class InconclusiveError(ModuleError):
    pass


class Representation:
    def __init__(self, algebra, side, weights, action, labels=None, name=None):
        if side not in ("left", "right"):
            raise ModuleError("side must be 'left' or 'right'")
        self.algebra = algebra
        self.side = side
        self.weights = tuple(tuple(w) for w in weights)
        self.action = action
        self.labels = labels
        self.name = name

    def __repr__(self):
        nm = f" {self.name}" if self.name else ""
        return f"<{self.side} module{nm} dim={self.dim} over {self.algebra!r}>"

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def dim(self):
        return len(self.weights)

    @cached_property
    def blocks(self):
        out = {}
        for k, w in enumerate(self.weights):
            out.setdefault(w, []).append(k)
        return out

    def weight_dims(self):
        return {w: len(ix) for w, ix in self.blocks.items()}

    def block_indices(self, w):
        return self.blocks.get(tuple(w), [])

    def src_tgt(self, x):
        A = self.algebra
        if self.side == "left":
            return A.rw(x), A.lw(x)
        return A.lw(x), A.rw(x)

    def act(self, x):
        m = self.action.get(x)
        if m is None:
            return self.field.zeros(self.dim, self.dim)
        return m

    def act_lc(self, lc: dict):
        F = self.field
        out = F.zeros(self.dim, self.dim)
        for x, c in lc.items():
            m = self.action.get(x)
            if m is not None:
                out = F.addm(out, F.scale(c, m))
        return out

    def arrow_blocks(self, arrow):
        """(src weight, tgt weight, block matrix) of an arrow's action."""
        x = next(iter(arrow.element))
        s, t = self.src_tgt(x)
        mat = self.act_lc(arrow.element)
        si, ti = self.block_indices(s), self.block_indices(t)
        return s, t, mat[np.ix_(ti, si)] if si and ti else None

    def check(self, pairs=None, rng=None) -> bool:
        """Verify the module axioms on all pairs (or a random sample)."""
        A, F = self.algebra, self.field
        for w in A.weights:
            e = A.idempotent(w)
            P = F.zeros(self.dim, self.dim)
            for k in self.block_indices(w):
                P[k, k] = F.one
            if not np.array_equal(self.act(e) != 0, P != 0) or not F.is_zero(F.subm(self.act(e), P)):
                return False
        basis = A.basis
        if pairs is None:
            pairs = [(x, y) for x in basis for y in basis]
        elif isinstance(pairs, int):
            rng = rng or random.Random(0)
            pairs = [(rng.choice(basis), rng.choice(basis)) for _ in range(pairs)]
        for x, y in pairs:
            lhs = self.act_lc(A.multiply(x, y))
            if self.side == "left":
                rhs = F.matmul(self.act(x), self.act(y))
            else:
                rhs = F.matmul(self.act(y), self.act(x))
            if not F.is_zero(F.subm(lhs, rhs)):
                return False
        return True

    # --- subquotients ---
    def full_spaces(self):
        F = self.field
        return {w: F.eye(len(ix)) for w, ix in self.blocks.items()}

    def zero_spaces(self):
        F = self.field
        return {w: F.zeros(len(ix), 0) for w, ix in self.blocks.items()}

    def spaces_to_matrix(self, spaces):
        F = self.field
        cols = []
        for w, S in spaces.items():
            ix = self.block_indices(w)
            for c in range(S.shape[1]):
                v = F.zeros(self.dim)
                v[ix] = S[:, c]
                cols.append(v)
        if not cols:
            return F.zeros(self.dim, 0)
        return np.stack(cols, axis=1)

    def submodule(self, spaces, name=None):
        """The submodule with the given weight-graded basis, and its inclusion."""
        F = self.field
        spaces = {w: S for w, S in spaces.items() if S.shape[1]}
        order = [w for w in self.blocks if w in spaces]
        weights, offs = [], {}
        for w in order:
            offs[w] = len(weights)
            weights += [w] * spaces[w].shape[1]
        d = len(weights)
        left_inv = {w: linalg.left_inverse(F, spaces[w]) for w in order}
        action = {}
        for x, mat in self.action.items():
            s, t = self.src_tgt(x)
            if s not in spaces or t not in spaces:
                continue
            blk = mat[np.ix_(self.block_indices(t), self.block_indices(s))]
            img = F.matmul(blk, spaces[s])
            if F.is_zero(img):
                continue
            coords = F.matmul(left_inv[t], img)
            if not F.is_zero(F.subm(F.matmul(spaces[t], coords), img)):
                raise ModuleError("subspace is not a submodule")
            new = F.zeros(d, d)
            new[offs[t]:offs[t] + coords.shape[0], offs[s]:offs[s] + coords.shape[1]] = coords
            action[x] = new
        sub = Representation(self.algebra, self.side, weights, action, name=name)
        inc = F.zeros(self.dim, d)
        for w in order:
            ix = self.block_indices(w)
            inc[np.ix_(ix, range(offs[w], offs[w] + spaces[w].shape[1]))] = spaces[w]
        return sub, ModuleMap(sub, self, inc)

    def quotient(self, spaces, name=None):
        """M / N for a submodule N given by weight-graded spaces, with the projection."""
        F = self.field
        comp, proj_blocks = {}, {}
        for w, ix in self.blocks.items():
            S = spaces.get(w, F.zeros(len(ix), 0))
            if S.shape[1]:
                S = linalg.column_basis(F, S)
            cc = linalg.complement_columns(F, S, len(ix))
            C = F.eye(len(ix))[:, cc]
            full = np.concatenate([S, C], axis=1) if S.shape[1] else C
            inv = linalg.inverse(F, full) if full.shape[1] else F.zeros(0, 0)
            comp[w] = C
            proj_blocks[w] = inv[S.shape[1]:, :]
        order = [w for w in self.blocks if comp[w].shape[1]]
        weights, offs = [], {}
        for w in order:
            offs[w] = len(weights)
            weights += [w] * comp[w].shape[1]
        d = len(weights)
        action = {}
        for x, mat in self.action.items():
            s, t = self.src_tgt(x)
            if s not in offs or t not in offs:
                continue
            blk = mat[np.ix_(self.block_indices(t), self.block_indices(s))]
            coords = F.matmul(proj_blocks[t], F.matmul(blk, comp[s]))
            if F.is_zero(coords):
                continue
            new = F.zeros(d, d)
            new[offs[t]:offs[t] + coords.shape[0], offs[s]:offs[s] + coords.shape[1]] = coords
            action[x] = new
        Q = Representation(self.algebra, self.side, weights, action, name=name)
        proj = F.zeros(d, self.dim)
        for w in order:
            ix = self.block_indices(w)
            proj[np.ix_(range(offs[w], offs[w] + comp[w].shape[1]), ix)] = proj_blocks[w]
        return Q, ModuleMap(self, Q, proj)

    # --- radical and socle ---
    def radical_spaces(self):
        F = self.field
        cols = {w: [] for w in self.blocks}
        for a in self.algebra.arrows():
            s, t, blk = self.arrow_blocks(a)
            if blk is not None and not F.is_zero(blk):
                cols[t].append(blk)
        out = {}
        for w, ix in self.blocks.items():
            if cols[w]:
                out[w] = linalg.column_basis(F, np.concatenate(cols[w], axis=1))
            else:
                out[w] = F.zeros(len(ix), 0)
        return out

    def socle_spaces(self):
        F = self.field
        rows = {w: [] for w in self.blocks}
        for a in self.algebra.arrows():
            s, t, blk = self.arrow_blocks(a)
            if blk is not None and not F.is_zero(blk):
                rows[s].append(blk)
        out = {}
        for w, ix in self.blocks.items():
            if rows[w]:
                out[w] = linalg.nullspace(F, np.concatenate(rows[w], axis=0))
            else:
                out[w] = F.eye(len(ix))
        return out

    def cyclic_spaces(self, v):
        """Weight-graded basis of the submodule generated by a homogeneous vector."""
        F = self.field
        nz = [k for k in range(self.dim) if v[k] != 0]
        if not nz:
            return self.zero_spaces()
        w = self.weights[nz[0]]
        if any(self.weights[k] != w for k in nz):
            raise ModuleError("vector is not weight-homogeneous")
        cols = {u: [] for u in self.blocks}
        for x, mat in self.action.items():
            img = F.matmul(mat, v.reshape(-1, 1))
            if F.is_zero(img):
                continue
            _, t = self.src_tgt(x)
            cols[t].append(img[self.block_indices(t)])
        out = {}
        for u, ix in self.blocks.items():
            out[u] = linalg.column_basis(F, np.concatenate(cols[u], axis=1)) if cols[u] else F.zeros(len(ix), 0)
        return out


def spaces_dim(spaces):
    return sum(S.shape[1] for S in spaces.values())


def spaces_mult(spaces):
    return {w: S.shape[1] for w, S in spaces.items() if S.shape[1]}


@dataclass
class ModuleMap:
    source: Representation
    target: Representation
    matrix: np.ndarray

    def check(self) -> bool:
        M, N, F = self.source, self.target, self.source.field
        if M.algebra is not N.algebra or M.side != N.side:
            return False
        X = self.matrix
        for k, w in enumerate(M.weights):
            for i in np.nonzero(X[:, k] != 0)[0]:
                if N.weights[i] != w:
                    return False
        for x in set(M.action) | set(N.action):
            if not F.is_zero(F.subm(F.matmul(X, M.act(x)), F.matmul(N.act(x), X))):
                return False
        return True

    def rank(self):
        return linalg.rank(self.source.field, self.matrix)

    def compose(self, other: "ModuleMap") -> "ModuleMap":
        """self after other."""
        return ModuleMap(other.source, self.target,
                         self.source.field.matmul(self.matrix, other.matrix))

    def kernel_spaces(self):
        F = self.source.field
        out = {}
        for w, ix in self.source.blocks.items():
            jx = self.target.block_indices(w)
            if not jx:
                out[w] = F.eye(len(ix))
            else:
                out[w] = linalg.nullspace(F, self.matrix[np.ix_(jx, ix)])
        return out

    def image_spaces(self):
        F = self.source.field
        out = {}
        for w, jx in self.target.blocks.items():
            ix = self.source.block_indices(w)
            if not ix:
                out[w] = F.zeros(len(jx), 0)
            else:
                out[w] = linalg.column_basis(F, self.matrix[np.ix_(jx, ix)])
        return out


# --- constructions ----------------------------------------------------------

def _check_weight(A, lam):
    lam = tuple(lam)
    if lam not in A.weights:
        raise ModuleError(f"{lam} is not a weight of {A!r}")
    return lam


def simple_module(A, lam, side="left") -> Representation:
    lam = _check_weight(A, lam)
    F = A.field
    e = A.idempotent(lam)
    return Representation(A, side, [lam], {e: F.eye(1)}, name=f"K{lam}")


def _regular_piece(A, lam, side):
    """A xi_lam (left) or xi_lam A (right), on the basis elements it contains."""
    lam = _check_weight(A, lam)
    F = A.field
    if side == "left":
        elems = [x for x in A.basis if A.rw(x) == lam]
        wts = [A.lw(x) for x in elems]
    else:
        elems = [x for x in A.basis if A.lw(x) == lam]
        wts = [A.rw(x) for x in elems]
    pos = {x: k for k, x in enumerate(elems)}
    d = len(elems)
    wset = set(wts)
    action = {}
    for x in A.basis:
        if side == "left":
            if A.rw(x) not in wset:
                continue
        elif A.lw(x) not in wset:
            continue
        mat = None
        for z in elems:
            prod = A.multiply(x, z) if side == "left" else A.multiply(z, x)
            if not prod:
                continue
            if mat is None:
                mat = F.zeros(d, d)
            for y, c in prod.items():
                mat[pos[y], pos[z]] = c
        if mat is not None:
            action[x] = mat
    tag = f"A·xi{lam}" if side == "left" else f"xi{lam}·A"
    return Representation(A, side, wts, action, labels=elems, name=tag)


def projective_cover(A, lam) -> Representation:
    """P(lam) = A xi_lam, basis xi_{i, l(lam)}, i in I(lam)."""
    return _regular_piece(A, lam, "left")


def transpose_module(A, lam) -> Representation:
    """xi_lam A, basis xi_{l(lam), j}, j in J(lam)."""
    return _regular_piece(A, lam, "right")


def regular_module(A, side="left") -> Representation:
    return direct_sum(*[_regular_piece(A, w, side) for w in A.weights])


def dualize(M: Representation) -> Representation:
    side = "right" if M.side == "left" else "left"
    action = {x: m.T.copy() for x, m in M.action.items()}
    name = f"D({M.name})" if M.name else None
    return Representation(M.algebra, side, M.weights, action, labels=M.labels, name=name)


def direct_sum(*mods) -> Representation:
    if not mods:
        raise ModuleError("empty direct sum")
    A, side = mods[0].algebra, mods[0].side
    for M in mods:
        if M.algebra is not A or M.side != side:
            raise AlgebraMismatch("summands over different algebras or sides")
    F = A.field
    d = sum(M.dim for M in mods)
    weights = [w for M in mods for w in M.weights]
    keys = set().union(*[set(M.action) for M in mods])
    action = {}
    for x in keys:
        mat = F.zeros(d, d)
        off = 0
        for M in mods:
            if x in M.action:
                mat[off:off + M.dim, off:off + M.dim] = M.action[x]
            off += M.dim
        action[x] = mat
    labels = None
    if all(M.labels is not None for M in mods):
        labels = [(k, lab) for k, M in enumerate(mods) for lab in M.labels]
    return Representation(A, side, weights, action, labels=labels)


def tensor_space_module(A) -> Representation:
    """(K^n)^{tensor r} with xi_{i,j} acting through the tensor oracle."""
    F = A.field
    n, r = A.n, A.r
    N = n ** r
    from .algebra import _decode
    from .weights import weight_of
    weights = [weight_of(_decode(k, n, r), n) for k in range(N)]
    action = {x: F.reduce(tensor_matrix(x, n).toarray()) for x in A.basis}
    return Representation(A, "left", weights, action, name="tensor space")


def from_matrices(A, side, weights, action) -> Representation:
    F = A.field
    return Representation(A, side, weights, {x: F.array(m) for x, m in action.items()})


# --- Hom spaces -------------------------------------------------------------

def hom_basis(M: Representation, N: Representation):
    """Basis of Hom_A(M, N) as a list of dim N x dim M matrices.

    Unknowns are the weight blocks X_w : M_w -> N_w; the equations come from
    the arrows (idempotents are automatic for block-diagonal X).
    """
    if M.algebra is not N.algebra:
        raise AlgebraMismatch("modules over different algebras")
    if M.side != N.side:
        raise AlgebraMismatch("modules on different sides")
    F = M.field
    ws = [w for w in M.blocks if N.block_indices(w)]
    offs, nvar = {}, 0
    for w in ws:
        offs[w] = nvar
        nvar += len(N.block_indices(w)) * len(M.block_indices(w))
    if nvar == 0:
        return []
    rows = []
    for a in M.algebra.arrows():
        s, t, bm = M.arrow_blocks(a)
        _, _, bn = N.arrow_blocks(a)
        ms, mt = len(M.block_indices(s)), len(M.block_indices(t))
        ns, nt = len(N.block_indices(s)), len(N.block_indices(t))
        # X_t bm - bn X_s = 0, an (nt x ms) equation
        if nt == 0 or ms == 0:
            continue
        eq = F.zeros(nt * ms, nvar)
        if bm is not None and t in offs and not F.is_zero(bm):
            eq[:, offs[t]:offs[t] + nt * mt] = linalg.kron(F, bm.T, F.eye(nt))
        if bn is not None and s in offs and not F.is_zero(bn):
            blk = linalg.kron(F, F.eye(ms), bn)
            eq[:, offs[s]:offs[s] + ns * ms] = F.subm(eq[:, offs[s]:offs[s] + ns * ms], blk)
        if not F.is_zero(eq):
            rows.append(eq)
    if rows:
        K = linalg.nullspace(F, np.concatenate(rows, axis=0))
    else:
        K = F.eye(nvar)
    out = []
    for c in range(K.shape[1]):
        X = F.zeros(N.dim, M.dim)
        for w in ws:
            mi, ni = M.block_indices(w), N.block_indices(w)
            blk = K[offs[w]:offs[w] + len(ni) * len(mi), c].reshape(len(mi), len(ni)).T
            X[np.ix_(ni, mi)] = blk
        out.append(X)
    return out


def hom_dim(M, N) -> int:
    return len(hom_basis(M, N))


@dataclass
class SocleRadicalTop:
    socle: dict
    radical: dict
    socle_mult: dict
    top_mult: dict
    radical_dim: int


def socle_radical_top(M: Representation) -> SocleRadicalTop:
    soc = M.socle_spaces()
    rad = M.radical_spaces()
    top = {w: len(ix) - rad[w].shape[1] for w, ix in M.blocks.items()}
    return SocleRadicalTop(soc, rad, spaces_mult(soc),
                           {w: c for w, c in top.items() if c}, spaces_dim(rad))


def is_simple(M) -> bool:
    return M.dim == 1


def radical_submodule(P: Representation):
    return P.submodule(P.radical_spaces())


def ext1_dim(lam, M: Representation) -> int:
    """dim Ext^1(K_lam, M) = dim Hom(Omega, M) - dim xi_lam M + dim Hom(K_lam, M),
    with Omega = rad P(lam)."""
    A = M.algebra
    if M.side != "left":
        raise ModuleError("ext1_dim expects a left module")
    P = projective_cover(A, lam)
    Omega, _ = radical_submodule(P)
    soc = M.socle_spaces()
    lam = tuple(lam)
    hom_k = soc[lam].shape[1] if lam in soc else 0
    return hom_dim(Omega, M) - len(M.block_indices(lam)) + hom_k


# --- sequences ----------------------------------------------------------------

@dataclass
class SequenceReport:
    composable: bool
    gf_zero: bool
    f_injective: bool
    g_surjective: bool
    exact_middle: bool
    split: bool | None

    @property
    def short_exact(self):
        return self.composable and self.gf_zero and self.f_injective and self.g_surjective and self.exact_middle


def sequence_checks(f: ModuleMap, g: ModuleMap) -> SequenceReport:
    F = f.source.field
    composable = f.target is g.source and f.check() and g.check()
    gf = F.matmul(g.matrix, f.matrix)
    gf_zero = F.is_zero(gf)
    rf, rg = f.rank(), g.rank()
    f_inj = rf == f.source.dim
    g_surj = rg == g.target.dim
    exact_mid = gf_zero and rf == g.source.dim - rg
    split = None
    if composable and g_surj:
        split = splits(g)
    return SequenceReport(composable, gf_zero, f_inj, g_surj, exact_mid, split)


def splits(g: ModuleMap) -> bool:
    """Does the epimorphism g have a module section?"""
    F = g.source.field
    S = hom_basis(g.target, g.source)
    if not S:
        return g.target.dim == 0
    cols = [F.matmul(g.matrix, s).reshape(-1, order="F") for s in S]
    target = F.eye(g.target.dim).reshape(-1, order="F")
    return linalg.solve(F, np.stack(cols, axis=1), target) is not None


# --- endomorphisms, indecomposability, isomorphism -------------------------------

@dataclass
class IndecResult:
    indecomposable: bool | None
    method: str
    witness: object = None

    def __bool__(self):
        if self.indecomposable is None:
            raise InconclusiveError(self.method)
        return self.indecomposable


def _coords(F, basis_mats, X):
    B = np.stack([b.reshape(-1) for b in basis_mats], axis=1)
    return linalg.solve(F, B, X.reshape(-1))


def _idempotent_from_fitting(F, phi, dim):
    """If phi is neither nilpotent nor invertible, the projection onto the
    image of phi^dim along its kernel (an endomorphism idempotent)."""
    P = phi.copy()
    for _ in range(max(1, dim.bit_length())):
        P = F.matmul(P, P)
    rk = linalg.rank(F, P)
    if rk == 0 or rk == dim:
        return None
    im = linalg.column_basis(F, P)
    ker = linalg.nullspace(F, P)
    basis = np.concatenate([im, ker], axis=1)
    inv = linalg.inverse(F, basis)
    D = F.zeros(dim, dim)
    for k in range(im.shape[1]):
        D[k, k] = F.one
    return F.matmul(basis, F.matmul(D, inv))


def is_indecomposable(M: Representation, exhaustive_budget: int = 1 << 20,
                      trials: int = 40, seed: int = 0) -> IndecResult:
    """Decide indecomposability through End(M).

    N = {phi : phi(M) in rad M} + {phi : phi(soc M) = 0} is a nilpotent ideal
    of End(M).  dim End/N = 1 certifies End(M) local.  Otherwise look for a
    nontrivial idempotent (Fitting splittings of basis and random elements,
    an exhaustive scan of End/N over small prime fields, the trace-form
    radical of End/N in characteristic 0).
    """
    F = M.field
    if M.dim == 0:
        return IndecResult(False, "zero module")
    if M.dim == 1:
        return IndecResult(True, "one-dimensional")
    E = M.end_basis() if hasattr(M, "end_basis") else hom_basis(M, M)
    k = len(E)
    if k == 1:
        return IndecResult(True, "End(M) = K")
    rad = M.spaces_to_matrix(M.radical_spaces())
    soc = M.spaces_to_matrix(M.socle_spaces())
    # conditions as linear maps on coefficient vectors
    eqs_top, eqs_soc = [], []
    dim = M.dim
    if rad.shape[1] < dim:
        # phi(M) in rad M: project onto a complement of rad M and require zero
        cc = linalg.complement_columns(F, rad, dim)
        full = np.concatenate([rad, F.eye(dim)[:, cc]], axis=1)
        inv = linalg.inverse(F, full)[rad.shape[1]:, :]
        eqs_top = np.stack([F.matmul(inv, X).reshape(-1) for X in E], axis=1)
    if soc.shape[1]:
        eqs_soc = np.stack([F.matmul(X, soc).reshape(-1) for X in E], axis=1)
    Kt = linalg.nullspace(F, eqs_top) if len(eqs_top) else F.eye(k)
    Ks = linalg.nullspace(F, eqs_soc) if len(eqs_soc) else F.eye(k)
    Nsp = linalg.span_sum(F, Kt, Ks)
    ndim = 0 if Nsp is None else Nsp.shape[1]
    if k - ndim == 1:
        return IndecResult(True, "End/N is one-dimensional (local endomorphism ring)")
    Emats = E
    # Fitting splittings
    rng = random.Random(seed)
    cands = list(Emats)
    for _ in range(trials):
        coeffs = [F(rng.randrange(-3 if F.char == 0 else 0, 4 if F.char == 0 else F.char)) for _ in range(k)]
        X = F.zeros(dim, dim)
        for c, B in zip(coeffs, Emats):
            X = F.addm(X, F.scale(c, B))
        cands.append(X)
    for X in cands:
        e = _idempotent_from_fitting(F, X, dim)
        if e is not None:
            return IndecResult(False, "Fitting decomposition", e)
    # work in B = End / N
    cc = linalg.complement_columns(F, Nsp if Nsp is not None else F.zeros(k, 0), k)
    bdim = len(cc)
    Bmats = [Emats[c] for c in cc]
    # structure constants of B modulo N
    full = np.concatenate([Nsp, F.eye(k)[:, cc]], axis=1) if ndim else F.eye(k)[:, cc]
    full_inv = linalg.inverse(F, full)

    def reduce_mod_N(X):
        v = _coords(F, Emats, X)
        return F.matmul(full_inv, v.reshape(-1, 1))[ndim:, 0]

    mult = {}
    for a in range(bdim):
        for b in range(bdim):
            mult[a, b] = reduce_mod_N(F.matmul(Bmats[a], Bmats[b]))
    one = reduce_mod_N(F.eye(dim))

    def bmul(u, v):
        out = F.zeros(bdim)
        for a in range(bdim):
            if u[a] == 0:
                continue
            for b in range(bdim):
                if v[b] == 0:
                    continue
                out = F.addm(out, F.scale(F.mul(u[a], v[b]), mult[a, b]))
        return out

    if F.char != 0 and F.char ** bdim <= exhaustive_budget:
        import itertools
        for coeffs in itertools.product(range(F.char), repeat=bdim):
            u = np.array(coeffs, dtype=np.int64)
            if not np.any(u) or np.array_equal(u, one):
                continue
            if np.array_equal(bmul(u, u), u):
                X = F.zeros(dim, dim)
                for c, B in zip(u, Bmats):
                    X = F.addm(X, F.scale(c, B))
                e = _lift_idempotent(F, X)
                return IndecResult(False, "idempotent of End/N lifted", e)
        return IndecResult(True, "End/N has no nontrivial idempotent (exhaustive)")
    if F.char == 0:
        # Dickson: rad(B) = {u : tr(L_u L_v) = 0 for all v} in characteristic 0
        L = []
        for a in range(bdim):
            e_a = F.zeros(bdim)
            e_a[a] = F.one
            cols = [bmul(e_a, _unit(F, bdim, b)) for b in range(bdim)]
            L.append(np.stack(cols, axis=1))
        G = F.zeros(bdim, bdim)
        for a in range(bdim):
            for b in range(bdim):
                G[a, b] = np.trace(F.matmul(L[a], L[b]))
        rk = linalg.rank(F, G)
        if rk == 1:
            return IndecResult(True, "End/N modulo its trace radical is one-dimensional")
    return IndecResult(None, "inconclusive: End/N not resolved")


def _unit(F, n, k):
    v = F.zeros(n)
    v[k] = F.one
    return v


def _lift_idempotent(F, X, rounds=64):
    for _ in range(rounds):
        X2 = F.matmul(X, X)
        if F.is_zero(F.subm(X2, X)):
            return X
        X3 = F.matmul(X2, X)
        X = F.subm(F.scale(3, X2), F.scale(2, X3))
    raise ModuleError("idempotent lifting did not converge")


def is_isomorphic(M: Representation, N: Representation, trials: int = 30,
                  seed: int = 0, exhaustive_budget: int = 1 << 16) -> bool:
    """Decide M ≅ N: weight multiplicities, then an invertible homomorphism."""
    if M.algebra is not N.algebra or M.side != N.side:
        raise AlgebraMismatch("modules over different algebras or sides")
    if M.weight_dims() != N.weight_dims():
        return False
    if M.dim == 0:
        return True
    F = M.field
    H = hom_basis(M, N)
    if not H:
        return False
    rng = random.Random(seed)
    for X in H:
        if linalg.rank(F, X) == M.dim:
            return True
    for _ in range(trials):
        X = F.zeros(N.dim, M.dim)
        for B in H:
            c = rng.randrange(F.char) if F.char else rng.randrange(-50, 51)
            X = F.addm(X, F.scale(c, B))
        if linalg.rank(F, X) == M.dim:
            return True
    if F.char and F.char ** len(H) <= exhaustive_budget:
        import itertools
        for coeffs in itertools.product(range(F.char), repeat=len(H)):
            X = F.zeros(N.dim, M.dim)
            for c, B in zip(coeffs, H):
                if c:
                    X = F.addm(X, F.scale(c, B))
            if linalg.rank(F, X) == M.dim:
                return True
        return False
    # invariants that would have to agree
    a, b = socle_radical_top(M), socle_radical_top(N)
    if a.socle_mult != b.socle_mult or a.top_mult != b.top_mult:
        return False
    if hom_dim(N, M) != len(H) or hom_dim(M, M) != hom_dim(N, N):
        return False
    if F.char == 0:
        # over Q the determinant of a generic combination is a nonzero polynomial
        # when an isomorphism exists; many random trials all failing is strong
        # evidence but not a proof
        raise InconclusiveError("no isomorphism found by random search")
    raise InconclusiveError("no isomorphism found by random search")
