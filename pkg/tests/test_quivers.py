import pytest

from borelschur import fixtures
from borelschur.quivers import (BoundQuiver, GroupActionMismatch, QuiverError, QuiverRep,
                                commutativity, covering_from_sheets, pushdown, pushdown_report,
                                thin_rep, zero_relation)
import oracles


def test_paths_are_functional():
    Q = fixtures.linear_quiver(3)
    p = Q.path("a0", "a1")
    assert (p.source, p.target) == (2, 0)
    with pytest.raises(QuiverError):
        Q.path("a1", "a0")
    q = Q.compose(Q.path("a0"), Q.path("a1", "a2"))
    assert q == Q.path("a0", "a1", "a2")
    assert Q.compose(Q.path("a2"), Q.path("a0")) is None


def test_construction_errors():
    with pytest.raises(QuiverError):
        BoundQuiver([0, 0], [])
    with pytest.raises(QuiverError):
        BoundQuiver([0, 1], [("a", 1, 2)])
    with pytest.raises(QuiverError):
        BoundQuiver([0, 1, 2], [("a", 1, 0), ("b", 2, 1), ("c", 2, 0)],
                    [{("a",): 1, ("b",): -1}])


@pytest.mark.parametrize("make", [fixtures.quiver265, fixtures.quiver253, fixtures.quiver242,
                                  fixtures.quiver_case_c, lambda: fixtures.ri32(7)])
def test_path_counts(make):
    Q = make()
    idx = {v: k for k, v in enumerate(Q.vertices)}
    arrows = [(idx[a.source], idx[a.target]) for a in Q.arrows]
    assert len(Q.paths()) == oracles.count_paths(len(Q.vertices), arrows)


@pytest.mark.parametrize("make,dim", [
    (lambda: fixtures.quiver_case_b(3), oracles.borel_basis_count(2, 3)),
    (fixtures.quiver_case_c, oracles.borel_basis_count(2, 3)),
    (fixtures.quiver265, oracles.borel_basis_count(2, 6)),
    (fixtures.quiver253, oracles.borel_basis_count(2, 5)),
    (fixtures.quiver242, oracles.borel_basis_count(2, 4)),
    (lambda: fixtures.ri32(7), 23),
])
def test_bound_algebra_dimensions(make, dim):
    # each stored quiver presents an algebra of the right size; Ri32 presents
    # a quotient of the 36-dimensional corner algebra by a 13-dimensional ideal
    assert make().algebra_dim(0) == dim


def test_representation_relations():
    Q = fixtures.quiver_case_c()
    V = thin_rep(Q, 2, [0, 1, 2])
    assert not V.satisfies_relations()      # a0 a1 = 0 fails on the thin path
    W = thin_rep(Q, 2, [0, 1, 2], zero_arrows=("a1",))
    assert W.satisfies_relations()
    assert W.is_indecomposable().indecomposable


def test_hom_and_endomorphisms():
    Q = fixtures.linear_quiver(2)
    S0 = thin_rep(Q, 0, [0])
    P2 = thin_rep(Q, 0, [0, 1, 2])
    assert len(S0.hom_basis(P2)) == 1
    assert len(P2.hom_basis(S0)) == 0
    assert len(P2.end_basis()) == 1
    split = QuiverRep(Q, 0, {0: 2}, name="K^2 at 0")
    assert not split.is_indecomposable().indecomposable


def test_kronecker_rep():
    Q = BoundQuiver([0, 1], [("x", 1, 0), ("y", 1, 0)])
    V = QuiverRep(Q, 3, {0: 1, 1: 1}, {"x": [[1]], "y": [[2]]})
    assert V.is_indecomposable().indecomposable


@pytest.mark.parametrize("name", ["cover265", "cover253", "cover242"])
def test_covers_are_free_and_lift_uniquely(name):
    C = fixtures.covering_fixtures()[name]
    assert C.check()
    assert len(C.cover.vertices) == 2 * len(C.quotient.vertices)
    assert len(C.cover.arrows) == 2 * len(C.quotient.arrows)


def test_broken_action_rejected():
    C = fixtures.cover242()
    C.sigma_vertices["0'"] = "0'"
    with pytest.raises(GroupActionMismatch):
        C.check()


def test_ri32_inside_cover265():
    # full subquiver of the cover on eight vertices, matched with Ri32 (p = 7 labels)
    C = fixtures.cover265()
    emb = fixtures.RI32_IN_COVER265
    sub = C.cover.subquiver(emb)
    role = {v: eval(t, {"P": 7}) for v, t in emb.items()}
    got = sorted((role[a.source], role[a.target]) for a in sub.arrows)
    target = fixtures.ri32(7)
    assert got == sorted((a.source, a.target) for a in target.arrows)
    # the lifted commutativity square lives inside the subquiver
    squares = [r for r in C.lifted_relations() if len(r) == 2
               and all(set(p.arrows) <= {a.label for a in sub.arrows} for p in r)]
    assert len(squares) == 1


def test_ri32_needs_large_p():
    with pytest.raises(QuiverError):
        fixtures.ri32(5)


def test_dtilde5_inside_cover242():
    from borelschur.reptype import classify_graph
    C = fixtures.cover242()
    d = fixtures.DTILDE5_IN_COVER242
    arrows = [C.cover.arrow(lab) for lab in d["arrows"]]
    edges = [(a.source, a.target) for a in arrows]
    assert {v for e in edges for v in e} == set(d["vertices"])
    (comp,) = classify_graph(d["vertices"], edges)
    assert comp["type"] == "D~5"


def test_simple_pushes_to_simple():
    C = fixtures.cover253()
    V = thin_rep(C.cover, 3, ["2''"])
    W = pushdown(C, V)
    assert W.dimension_vector() == {2: 1}
    assert all(not m.any() for m in W.maps.values())


@pytest.mark.parametrize("name", ["cover265", "cover253", "cover242"])
def test_pushdown_fixtures(name):
    C = fixtures.covering_fixtures()[name]
    reps = fixtures.cover_reps(name, C)
    assert len(reps) >= 5
    for V in reps:
        rep = pushdown_report(C, V)
        assert all(v for k, v in rep.items() if k != "rep"), rep


def test_symmetric_input_is_reported_neutral():
    C = fixtures.cover242()
    V = thin_rep(C.cover, 2, ["0'", "0''"])
    rep = pushdown_report(C, V)
    assert rep["not_fixed"] is False
    assert rep["pushdown_indecomposable"] is None


def test_relations_helpers():
    assert zero_relation("a", "b") == {("a", "b"): 1}
    assert commutativity(("a",), ("b",)) == {("a",): 1, ("b",): -1}
    Q = fixtures.quiver_case_c()
    assert len(Q.to_json()["relations"]) == 3
    assert Q.to_dot().startswith('digraph "casec"')


def test_lifted_relations_split_when_endpoints_differ():
    # a commutativity square whose two sides end on different sheets
    Q = BoundQuiver([0, 1, 2, 3], [("a", 1, 0), ("b", 3, 1), ("c", 2, 0), ("d", 3, 2)],
                    [commutativity(("a", "b"), ("c", "d"))])
    C = covering_from_sheets(Q, {"a"})
    assert C.check()
    rels = C.lifted_relations()
    assert len(rels) == 4 and all(len(r) == 1 for r in rels)
