"""Bound quivers, their representations, and regular coverings.

Paths are written functionally, like products in the algebra: the path
(x1, ..., xk) applies xk first, so s(x_i) = t(x_{i+1}).  Relations are
dicts path -> integer coefficient.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .modules import is_indecomposable
from .scalars import Field


class QuiverError(ValueError):
    pass


class GroupActionMismatch(QuiverError):
    pass


@dataclass(frozen=True)
class QArrow:
    label: str
    source: object
    target: object


@dataclass(frozen=True)
class Path:
    source: object
    target: object
    arrows: tuple = ()

    def __len__(self):
        return len(self.arrows)

    def __repr__(self):
        return "".join(self.arrows) if self.arrows else f"e[{self.source}]"


class BoundQuiver:
    def __init__(self, vertices, arrows, relations=(), name=None):
        self.vertices = list(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverError("vertex labels must be unique")
        self.arrows = [a if isinstance(a, QArrow) else QArrow(*a) for a in arrows]
        self._by_label = {a.label: a for a in self.arrows}
        if len(self._by_label) != len(self.arrows):
            raise QuiverError("arrow labels must be unique")
        vs = set(self.vertices)
        for a in self.arrows:
            if a.source not in vs or a.target not in vs:
                raise QuiverError(f"arrow {a.label} leaves the vertex set")
        self.name = name
        self.relations = [self._as_relation(r) for r in relations]

    def __repr__(self):
        return f"BoundQuiver({self.name or ''}: {len(self.vertices)} vertices, {len(self.arrows)} arrows, {len(self.relations)} relations)"

    def arrow(self, label) -> QArrow:
        return self._by_label[label]

    def path(self, *labels) -> Path:
        """The path x1 x2 ... xk (xk first)."""
        if not labels:
            raise QuiverError("use trivial() for vertex paths")
        arr = [self.arrow(x) for x in labels]
        for x, y in zip(arr, arr[1:]):
            if x.source != y.target:
                raise QuiverError(f"{x.label}{y.label} is not a path")
        return Path(arr[-1].source, arr[0].target, tuple(labels))

    def trivial(self, v) -> Path:
        return Path(v, v, ())

    def _as_relation(self, rel):
        out = {}
        for key, c in dict(rel).items():
            p = key if isinstance(key, Path) else self.path(*key)
            out[p] = out.get(p, 0) + c
        ends = {(p.source, p.target) for p in out}
        if len(ends) != 1:
            raise QuiverError("a relation must be a combination of parallel paths")
        return {p: c for p, c in out.items() if c}

    def arrows_from(self, v):
        return [a for a in self.arrows if a.source == v]

    def arrows_to(self, v):
        return [a for a in self.arrows if a.target == v]

    def paths(self):
        """All paths, trivial ones included (the quiver must be acyclic)."""
        out = [self.trivial(v) for v in self.vertices]
        frontier = [Path(a.source, a.target, (a.label,)) for a in self.arrows]
        for _ in range(len(self.vertices) + 1):
            if not frontier:
                return out
            out.extend(frontier)
            nxt = []
            for p in frontier:
                for a in self.arrows_to(p.source):
                    nxt.append(Path(a.source, p.target, p.arrows + (a.label,)))
            frontier = nxt
        raise QuiverError("quiver has an oriented cycle")

    def compose(self, p: Path, q: Path):
        """p after q, or None."""
        if q.target != p.source:
            return None
        return Path(q.source, p.target, p.arrows + q.arrows)

    def underlying_edges(self):
        return [(a.source, a.target) for a in self.arrows]

    def subquiver(self, vertices, drop_arrows=(), name=None):
        vs = list(vertices)
        S = set(vs)
        arrs = [a for a in self.arrows if a.source in S and a.target in S and a.label not in set(drop_arrows)]
        return BoundQuiver(vs, arrs, name=name)

    # --- quotient path algebra ---
    def ideal_span(self, F: Field, paths=None):
        """Matrix whose columns span the two-sided ideal of the relations,
        in the basis `paths` (all paths by default)."""
        F = F if isinstance(F, Field) else Field(F)
        paths = paths or self.paths()
        pos = {p: k for k, p in enumerate(paths)}
        cols = []
        for rel in self.relations:
            any_p = next(iter(rel))
            for u in paths:
                if u.source != any_p.target:
                    continue
                for v in paths:
                    if v.target != any_p.source:
                        continue
                    vec = F.zeros(len(paths))
                    for p, c in rel.items():
                        vec[pos[self.compose(u, self.compose(p, v))]] = F(c)
                    cols.append(vec)
        if not cols:
            return F.zeros(len(paths), 0)
        return linalg.column_basis(F, np.stack(cols, axis=1))

    def algebra_dim(self, F: Field) -> int:
        F = F if isinstance(F, Field) else Field(F)
        paths = self.paths()
        return len(paths) - self.ideal_span(F, paths).shape[1]

    # --- export ---
    def to_json(self):
        return {
            "name": self.name,
            "vertices": [str(v) for v in self.vertices],
            "arrows": [{"label": a.label, "source": str(a.source), "target": str(a.target)} for a in self.arrows],
            "relations": [{repr(p): c for p, c in sorted(rel.items(), key=lambda t: repr(t[0]))}
                          for rel in self.relations],
        }

    def to_dot(self):
        lines = [f'digraph "{self.name or "Q"}" {{']
        for v in self.vertices:
            lines.append(f'  "{v}";')
        for a in self.arrows:
            lines.append(f'  "{a.source}" -> "{a.target}" [label="{a.label}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def zero_relation(*labels):
    return {tuple(labels): 1}


def commutativity(lhs, rhs):
    return {tuple(lhs): 1, tuple(rhs): -1}


# --- representations ------------------------------------------------------------

class QuiverRep:
    """dims[v] = dim V_v; maps[label] is a dim V_t x dim V_s matrix."""

    def __init__(self, quiver: BoundQuiver, field, dims, maps=None, name=None):
        self.quiver = quiver
        self.field = field if isinstance(field, Field) else Field(field)
        self.dims = {v: int(dims.get(v, 0)) for v in quiver.vertices}
        F = self.field
        self.maps = {}
        for a in quiver.arrows:
            m = (maps or {}).get(a.label)
            shape = (self.dims[a.target], self.dims[a.source])
            if m is None:
                self.maps[a.label] = F.zeros(*shape)
            else:
                m = F.array(np.asarray(m).reshape(shape))
                self.maps[a.label] = m
        self.name = name
        off = 0
        self.blocks = {}
        for v in quiver.vertices:
            self.blocks[v] = list(range(off, off + self.dims[v]))
            off += self.dims[v]

    def __repr__(self):
        return f"QuiverRep({self.name or ''} dims={ {v: d for v, d in self.dims.items() if d} })"

    @property
    def dim(self):
        return sum(self.dims.values())

    def dimension_vector(self):
        return {v: d for v, d in self.dims.items() if d}

    def block_indices(self, v):
        return self.blocks.get(v, [])

    def evaluate(self, path: Path):
        F = self.field
        out = F.eye(self.dims[path.source])
        for label in reversed(path.arrows):
            out = F.matmul(self.maps[label], out)
        return out

    def relation_residuals(self, relations=None):
        F = self.field
        out = []
        for rel in (self.quiver.relations if relations is None else relations):
            p0 = next(iter(rel))
            acc = F.zeros(self.dims[p0.target], self.dims[p0.source])
            for p, c in rel.items():
                acc = F.addm(acc, F.scale(c, self.evaluate(p)))
            out.append(acc)
        return out

    def satisfies_relations(self, relations=None) -> bool:
        return all(self.field.is_zero(r) for r in self.relation_residuals(relations))

    # interface shared with module representations (used by is_indecomposable)
    def spaces_to_matrix(self, spaces):
        F = self.field
        cols = []
        for v, S in spaces.items():
            ix = self.blocks[v]
            for c in range(S.shape[1]):
                vec = F.zeros(self.dim)
                vec[ix] = S[:, c]
                cols.append(vec)
        return np.stack(cols, axis=1) if cols else F.zeros(self.dim, 0)

    def radical_spaces(self):
        F = self.field
        out = {}
        for v in self.quiver.vertices:
            imgs = [self.maps[a.label] for a in self.quiver.arrows_to(v) if self.dims[a.source]]
            imgs = [m for m in imgs if m.size]
            if imgs and self.dims[v]:
                out[v] = linalg.column_basis(F, np.concatenate(imgs, axis=1))
            else:
                out[v] = F.zeros(self.dims[v], 0)
        return out

    def socle_spaces(self):
        F = self.field
        out = {}
        for v in self.quiver.vertices:
            outs = [self.maps[a.label] for a in self.quiver.arrows_from(v) if self.dims[a.target]]
            if outs and self.dims[v]:
                out[v] = linalg.nullspace(F, np.concatenate(outs, axis=0))
            else:
                out[v] = F.eye(self.dims[v])
        return out

    def hom_basis(self, other: "QuiverRep"):
        """Basis of Hom(self, other) as (dim other x dim self) matrices."""
        F = self.field
        Q = self.quiver
        offs, nvar = {}, 0
        for v in Q.vertices:
            offs[v] = nvar
            nvar += self.dims[v] * other.dims[v]
        if nvar == 0:
            return []
        rows = []
        for a in Q.arrows:
            s, t = a.source, a.target
            ms, nt = self.dims[s], other.dims[t]
            if ms == 0 or nt == 0:
                continue
            eq = F.zeros(nt * ms, nvar)
            # X_t V(a) - W(a) X_s = 0, vectorised column by column
            if self.dims[t]:
                eq[:, offs[t]:offs[t] + nt * self.dims[t]] = linalg.kron(F, self.maps[a.label].T, F.eye(nt))
            if other.dims[s]:
                blk = linalg.kron(F, F.eye(ms), other.maps[a.label])
                sl = slice(offs[s], offs[s] + other.dims[s] * ms)
                eq[:, sl] = F.subm(eq[:, sl], blk)
            rows.append(eq)
        K = linalg.nullspace(F, np.concatenate(rows, axis=0)) if rows else F.eye(nvar)
        out = []
        for c in range(K.shape[1]):
            X = F.zeros(other.dim, self.dim)
            for v in Q.vertices:
                m, n = self.dims[v], other.dims[v]
                if m and n:
                    blk = K[offs[v]:offs[v] + m * n, c].reshape(m, n).T
                    X[np.ix_(other.blocks[v], self.blocks[v])] = blk
            out.append(X)
        return out

    def end_basis(self):
        return self.hom_basis(self)

    def is_indecomposable(self):
        return is_indecomposable(self)


def thin_rep(quiver, field, support, zero_arrows=(), name=None):
    """Representation with K at the support vertices and identity maps on
    every arrow inside the support (except zero_arrows)."""
    S = set(support)
    dims = {v: 1 for v in S}
    maps = {a.label: [[1]] for a in quiver.arrows
            if a.source in S and a.target in S and a.label not in set(zero_arrows)}
    return QuiverRep(quiver, field, dims, maps, name=name)


# --- regular coverings --------------------------------------------------------

@dataclass
class CoveringData:
    """A Z/2-covering given by the sheet swap ' <-> '' on labels."""

    cover: BoundQuiver
    quotient: BoundQuiver
    vertex_proj: dict
    arrow_proj: dict
    sigma_vertices: dict
    sigma_arrows: dict
    base_points: dict                 # quotient vertex -> ordered fibre
    notes: list = field(default_factory=list)

    def check(self):
        """Free action, compatible projection, unique lifting of arrows."""
        sv, sa = self.sigma_vertices, self.sigma_arrows
        C, Qb = self.cover, self.quotient
        for v in C.vertices:
            if sv[v] == v or sv[sv[v]] != v:
                raise GroupActionMismatch(f"action not free/involutive at {v}")
            if self.vertex_proj[sv[v]] != self.vertex_proj[v]:
                raise GroupActionMismatch("projection not invariant")
        for a in C.arrows:
            b = C.arrow(sa[a.label])
            if b.label == a.label or sa[b.label] != a.label:
                raise GroupActionMismatch(f"action not free on arrow {a.label}")
            if b.source != sv[a.source] or b.target != sv[a.target]:
                raise GroupActionMismatch(f"action does not commute with {a.label}")
            q = Qb.arrow(self.arrow_proj[a.label])
            if (self.vertex_proj[a.source], self.vertex_proj[a.target]) != (q.source, q.target):
                raise GroupActionMismatch(f"projection of {a.label} is not an arrow")
        for q in Qb.arrows:
            for x in self.base_points[q.source]:
                lifts = [a for a in C.arrows_from(x) if self.arrow_proj[a.label] == q.label]
                if len(lifts) != 1:
                    raise GroupActionMismatch(f"{q.label} has {len(lifts)} lifts at {x}")
        if set(self.vertex_proj.values()) != set(Qb.vertices):
            raise GroupActionMismatch("projection is not onto")
        return True

    def lift(self, path: Path, start):
        """Unique lift of a quotient path starting at the cover vertex `start`."""
        C = self.cover
        cur = start
        labels = []
        for lab in reversed(path.arrows):
            a = next(a for a in C.arrows_from(cur) if self.arrow_proj[a.label] == lab)
            labels.append(a.label)
            cur = a.target
        if not labels:
            return C.trivial(start)
        return C.path(*reversed(labels))

    def lifted_relations(self):
        """Each quotient relation lifted at every start vertex; when parallel
        paths of a relation lift to different endpoints, each endpoint class
        becomes its own relation."""
        out = []
        for rel in self.quotient.relations:
            src = next(iter(rel)).source
            for x in self.base_points[src]:
                groups = defaultdict(dict)
                for p, c in rel.items():
                    lp = self.lift(p, x)
                    groups[lp.target][lp] = c
                out.extend(groups.values())
        return out

    def sigma_rep(self, V: QuiverRep) -> QuiverRep:
        """sigma_* V: (sigma_* V)_x = V_{sigma x}."""
        dims = {v: V.dims[self.sigma_vertices[v]] for v in self.cover.vertices}
        maps = {a.label: V.maps[self.sigma_arrows[a.label]] for a in self.cover.arrows}
        return QuiverRep(self.cover, V.field, dims, maps)


def pushdown(C: CoveringData, V: QuiverRep) -> QuiverRep:
    """phi_* V: fibres stacked in base-point order, each arrow lift placed
    in the (target sheet, source sheet) block."""
    if V.quiver is not C.cover:
        raise GroupActionMismatch("representation is not on the covering quiver")
    F = V.field
    Qb = C.quotient
    dims, offs = {}, {}
    for q in Qb.vertices:
        o = 0
        for x in C.base_points[q]:
            offs[x] = o
            o += V.dims[x]
        dims[q] = o
    maps = {}
    for q in Qb.arrows:
        M = F.zeros(dims[q.target], dims[q.source])
        for a in C.cover.arrows:
            if C.arrow_proj[a.label] != q.label:
                continue
            s, t = a.source, a.target
            if V.dims[s] and V.dims[t]:
                M[offs[t]:offs[t] + V.dims[t], offs[s]:offs[s] + V.dims[s]] = V.maps[a.label]
        maps[q.label] = M
    return QuiverRep(Qb, F, dims, maps, name=f"push({V.name})" if V.name else None)


def covering_from_sheets(quotient: BoundQuiver, swaps, name=None, notes=()):
    """Build the double cover whose lifts preserve the sheet except for the
    arrows in `swaps`.  Vertex v lifts to v' and v''; the lift of arrow a
    starting at s' is a', at s'' is a''."""
    vs, vproj, sv = [], {}, {}
    base = {}
    for v in quotient.vertices:
        a, b = f"{v}'", f"{v}''"
        vs += [a, b]
        vproj[a] = vproj[b] = v
        sv[a], sv[b] = b, a
        base[v] = [a, b]
    arrows, aproj, sa = [], {}, {}
    for q in quotient.arrows:
        for sh, other in (("'", "''"), ("''", "'")):
            tsh = other if q.label in swaps else sh
            lab = f"{q.label}{sh}"
            arrows.append(QArrow(lab, f"{q.source}{sh}", f"{q.target}{tsh}"))
            aproj[lab] = q.label
            sa[lab] = f"{q.label}{other}"
    cover = BoundQuiver(vs, arrows, name=name)
    C = CoveringData(cover, quotient, vproj, aproj, sv, sa, base, list(notes))
    cover.relations = C.lifted_relations()
    return C


def pushdown_report(C: CoveringData, V: QuiverRep) -> dict:
    """Push V down and check it.  Indecomposability of phi_* V is only
    asserted when sigma_* V is visibly non-isomorphic to V (different
    dimension vectors); otherwise that entry is None."""
    W = pushdown(C, V)
    moved = V.dimension_vector() != C.sigma_rep(V).dimension_vector()
    return {
        "rep": V.name,
        "lifted_relations": V.satisfies_relations(C.lifted_relations()),
        "not_fixed": moved,
        "indecomposable": V.is_indecomposable().indecomposable,
        "pushdown_relations": W.satisfies_relations(),
        "pushdown_indecomposable": W.is_indecomposable().indecomposable if moved else None,
        "dim_conserved": W.dim == V.dim,
    }
