"""Stored bound quivers and coverings for the n = 2 representation-type cases.

Vertex i stands for the weight (r - i, i).  Arrow a_i : i+1 -> i shifts one
unit, b_i : i+p -> i shifts p units and g : 4 -> 0 (p = 2, r = 4) shifts p^2.
Paths are functional: ("a0", "b1") means b1 first, then a0.

Orientation choices for the covers (which lift of an arrow changes sheet
is a convention; these are the ones used throughout):
  * cover of quiver265: every lift keeps its sheet except a3, whose lifts
    are 4'' -> 3' and 4' -> 3''.  The full subquiver on 3' and 0''..6'' is
    then Ri32 for p = 5.
  * cover of quiver253: only a2 changes sheet (3'' -> 2', 3' -> 2'').
  * cover of quiver242: a1 and b2 change sheet (2'' -> 1', 2' -> 1'' and
    4'' -> 2', 4' -> 2'').
  * in case (c) the p-shift arrows 2 -> 0 and 3 -> 1 are b0 and b1, so the
    excluded subwords are b0 a2 and a0 b1.
"""

from __future__ import annotations

from .quivers import (BoundQuiver, QuiverError, QuiverRep, commutativity, covering_from_sheets,
                      thin_rep, zero_relation)


def _alpha_arrows(r):
    return [(f"a{i}", i + 1, i) for i in range(r)]


def linear_quiver(r):
    """A_{r+1}, linear orientation r -> r-1 -> ... -> 0."""
    return BoundQuiver(range(r + 1), _alpha_arrows(r), name=f"A{r + 1}")


def quiver_case_b(p):
    """S(B+,2,p): the alpha chain plus b0 : p -> 0, product of all alphas zero."""
    arrows = _alpha_arrows(p) + [("b0", p, 0)]
    rel = zero_relation(*[f"a{i}" for i in range(p)])
    return BoundQuiver(range(p + 1), arrows, [rel], name=f"caseb_p{p}")


def quiver_case_c():
    """S(B+,2,3), p = 2."""
    arrows = _alpha_arrows(3) + [("b0", 2, 0), ("b1", 3, 1)]
    rels = [zero_relation("a0", "a1"), zero_relation("a1", "a2"),
            commutativity(("a0", "b1"), ("b0", "a2"))]
    return BoundQuiver(range(4), arrows, rels, name="casec")


def ri32(p):
    """Ringel's quiver 32 with vertices 0,1,2,3,p-2,p-1,p,p+1 and one
    commuting square p+1 -> 1 -> 0 = p+1 -> p -> 0."""
    if p < 7:
        raise QuiverError("Ri32 needs p >= 7 (vertices would collide)")
    arrows = [("a2", 3, 2), ("a1", 2, 1), ("a0", 1, 0),
              ("u", p + 1, p), ("v", p, p - 1), ("w", p - 1, p - 2),
              ("b1", p + 1, 1), ("b0", p, 0)]
    vertices = [0, 1, 2, 3, p - 2, p - 1, p, p + 1]
    rels = [commutativity(("a0", "b1"), ("b0", "u"))]
    return BoundQuiver(vertices, arrows, rels, name=f"Ri32_p{p}")


def quiver265():
    arrows = _alpha_arrows(6) + [("b0", 5, 0), ("b1", 6, 1)]
    rels = [zero_relation("a0", "a1", "a2", "a3", "a4"),
            zero_relation("a1", "a2", "a3", "a4", "a5"),
            commutativity(("a0", "b1"), ("b0", "a5"))]
    return BoundQuiver(range(7), arrows, rels, name="quiver265")


def quiver253():
    arrows = _alpha_arrows(5) + [("b0", 3, 0), ("b1", 4, 1), ("b2", 5, 2)]
    rels = [zero_relation("a0", "a1", "a2"), zero_relation("a1", "a2", "a3"),
            zero_relation("a2", "a3", "a4"),
            commutativity(("a0", "b1"), ("b0", "a3")),
            commutativity(("a1", "b2"), ("b1", "a4"))]
    return BoundQuiver(range(6), arrows, rels, name="quiver253")


def quiver242():
    arrows = _alpha_arrows(4) + [("b0", 2, 0), ("b1", 3, 1), ("b2", 4, 2), ("g", 4, 0)]
    rels = [zero_relation("a0", "a1"), zero_relation("a1", "a2"), zero_relation("a2", "a3"),
            commutativity(("a0", "b1"), ("b0", "a2")),
            commutativity(("a1", "b2"), ("b1", "a3")),
            zero_relation("b0", "b2")]
    return BoundQuiver(range(5), arrows, rels, name="quiver242")


STORED = {(2, 6, 5): quiver265, (2, 5, 3): quiver253, (2, 4, 2): quiver242}


# --- coverings -------------------------------------------------------------------

def cover265():
    return covering_from_sheets(quiver265(), {"a3"}, name="cover265",
                                notes=["a3 lifts to 4'' -> 3' and 4' -> 3''"])


def cover253():
    return covering_from_sheets(quiver253(), {"a2"}, name="cover253",
                                notes=["a2 lifts to 3'' -> 2' and 3' -> 2''"])


def cover242():
    return covering_from_sheets(quiver242(), {"a1", "b2"}, name="cover242",
                                notes=["a1 lifts to 2'' -> 1', 2' -> 1''",
                                       "b2 lifts to 4'' -> 2', 4' -> 2''"])


def covering_fixtures():
    return {"cover265": cover265(), "cover253": cover253(), "cover242": cover242()}


# subquivers singled out in the infinite-type arguments
# cover vertex -> Ri32 vertex, with P standing for p
RI32_IN_COVER265 = {"0''": "0", "1''": "1", "2''": "2", "3''": "3",
                    "3'": "P-2", "4''": "P-1", "5''": "P", "6''": "P+1"}
DTILDE5_IN_COVER242 = {
    "vertices": ["2''", "0''", "1''", "4''", "3''", "2'"],
    # arrows kept: b0'' : 2''->0'', a0'' : 1''->0'', g'' : 4''->0'',
    # b2'' : 4''->2', a3'' : 4''->3''
    "arrows": ["b0''", "a0''", "g''", "b2''", "a3''"],
}


def cover_reps(name, C):
    """Hand-enumerated representations of the cover satisfying the lifted
    relations, with dimension vectors that are not sigma-symmetric."""
    Q = C.cover
    F = {"cover265": 5, "cover253": 3, "cover242": 2}[name]
    reps = []
    if name == "cover265":
        for supp in (["4''", "3'"], ["5''", "4''", "3'"], ["6''", "5''", "4''", "3'"],
                     ["3''", "2''", "1''", "0''"], ["6''", "5''", "1''", "0''"],
                     ["6''", "5''", "4''", "3'", "1''", "0''", "2''", "3''"]):
            reps.append(thin_rep(Q, F, supp, name="thin " + ",".join(supp)))
        dims = {"3''": 1, "2''": 1, "1''": 2, "0''": 1, "6''": 1, "5''": 1}
        maps = {"a2''": [[1]], "a1''": [[1], [0]], "b1''": [[0], [1]],
                "a0''": [[1, 1]], "a5''": [[1]], "b0''": [[1]]}
        reps.append(QuiverRep(Q, F, dims, maps, name="root with V_1''=K^2"))
    elif name == "cover253":
        for supp in (["5'", "4'", "3'"], ["3''", "2'"], ["4''", "3''", "1''", "0''"],
                     ["2''", "1''", "0''"], ["4''", "3''", "2'"], ["5'", "4'", "3'", "2'"],
                     ["5'", "2'", "3''"]):
            reps.append(thin_rep(Q, F, supp, zero_arrows=("a2'",), name="thin " + ",".join(supp)))
        dims = {"2''": 1, "1''": 2, "0''": 1, "4''": 1, "3''": 1}
        maps = {"a1''": [[1], [0]], "b1''": [[0], [1]], "a0''": [[1, 1]],
                "a3''": [[1]], "b0''": [[1]]}
        reps.append(QuiverRep(Q, F, dims, maps, name="three lines in V_1''"))
    elif name == "cover242":
        for supp in (["4''", "2'"], ["4''", "3''"], ["4''", "0''", "1''"],
                     ["2''", "0''"], ["2''", "0''", "4''", "3''"], ["2''", "0''", "1''", "4''", "3''", "2'"]):
            reps.append(thin_rep(Q, F, supp, zero_arrows=("b1''", "a2''", "a1'"),
                                 name="thin " + ",".join(supp)))
        dims = {"2''": 1, "1''": 1, "0''": 2, "4''": 1, "2'": 1, "3''": 1}
        maps = {"b0''": [[1], [0]], "a0''": [[0], [1]], "g''": [[1], [1]],
                "b2''": [[1]], "a3''": [[1]]}
        reps.append(QuiverRep(Q, F, dims, maps, name="D5~ root, three lines in V_0''"))
    else:
        raise KeyError(name)
    return reps
