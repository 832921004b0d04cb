import pytest

from borelschur import linalg
from borelschur.algebra import BorelSchurAlgebra, CornerAlgebra
from borelschur.ar import (ProjectiveSimple, RegimeNotCovered, ar_sequence, closed_form_kernel,
                           find_uniserial, middle_term_analysis, minimal_presentation,
                           p1t_matrix, regime_of, replaced_basis, socle_expectation,
                           socle_report, socle_table_tsv, split_test_sequence,
                           truncation_functors, verify_ar)
from borelschur.modules import is_indecomposable, sequence_checks
from borelschur.weights import row_stats, semistandard_sets


def test_presentations():
    A = BorelSchurAlgebra(2, 2, 0)
    mp = minimal_presentation((1, 1), A)
    assert [a.target for a in mp.arrows] == [(2, 0)]
    A = BorelSchurAlgebra(2, 3, 2)
    mp = minimal_presentation((0, 3), A)
    assert sorted(a.target for a in mp.arrows) == [(1, 2), (2, 1)]
    with pytest.raises(ProjectiveSimple):
        ar_sequence((3, 0), A)


def test_kernel_example_31_p2():
    A = BorelSchurAlgebra(2, 4, 2)
    tp = p1t_matrix((3, 1), A, build_modules=False)
    assert tp.kernel_dim == 2
    cf = closed_form_kernel((3, 1), A)
    J = semistandard_sets((3, 1))[1]
    support = sorted(row_stats((3, 1), J[k], 2).a for k in range(len(J)) if cf[k].any())
    assert support == [1, 3]
    assert linalg.same_span(A.field, tp.kernel, cf)


def test_kernel_zero_under_cond():
    A = BorelSchurAlgebra(2, 2, 0)
    assert p1t_matrix((1, 1), A).kernel_dim == 0


@pytest.mark.parametrize("lam1", [8, 9])
@pytest.mark.parametrize("lam3", [1, 2])
def test_nonzero_kernel_family(lam1, lam3):
    lam = (lam1, 5, lam3)
    A = BorelSchurAlgebra(3, sum(lam), 3)
    assert p1t_matrix(lam, A, build_modules=False).kernel_dim >= 1
    assert regime_of(lam, A) == "iv"


def test_regimes():
    assert regime_of((1, 1), BorelSchurAlgebra(2, 2, 0)) == "i"
    assert regime_of((0, 0, 3), BorelSchurAlgebra(3, 3, 2)) == "ii"
    assert regime_of((2, 1), BorelSchurAlgebra(2, 3, 2)) == "iii"
    assert regime_of((1, 3, 1), BorelSchurAlgebra(3, 5, 2)) == "iv"
    with pytest.raises(RegimeNotCovered):
        regime_of((1, 2, 0), BorelSchurAlgebra(3, 3, 0))
    with pytest.raises(RegimeNotCovered):
        regime_of((1, 2, 1), BorelSchurAlgebra(3, 4, 2))


# weights whose replaced basis was certified (full rank, spans the image)
REPLACED = [((a, 3, 1), 2) for a in range(6)] + [((a, 5, 1), 3) for a in range(5)] + \
    [((0, 5, 2), 3), ((1, 5, 2), 3), ((0, 7, 2), 2), ((1, 7, 3), 2), ((3, 7, 2), 2)]


@pytest.mark.parametrize("lam,p", REPLACED)
def test_replaced_bases(lam, p):
    A = BorelSchurAlgebra(3, sum(lam), p)
    tp = replaced_basis(lam, A, p1t_matrix(lam, A, build_modules=False))
    assert tp.regime == "iv"
    assert linalg.rank(A.field, tp.basis_matrix) == tp.basis_matrix.shape[0]


def test_replaced_basis_of_11():
    A = BorelSchurAlgebra(2, 2, 0)
    tp = replaced_basis((1, 1), A)
    assert len(tp.replacements) == 2
    assert tp.basis_matrix.shape == (3, 3)


def test_almost_split_11():
    A = BorelSchurAlgebra(2, 2, 0)
    rep = verify_ar(ar_sequence((1, 1), A))
    assert rep.passed and rep.ext1_dim == 1
    assert (rep.dim_U, rep.dim_E) == (1, 2)
    assert rep.tau_socle == {(2, 0): 1}
    d = rep.as_dict()
    assert d["dimU"] == 1 and d["dimE"] == 2 and all(v for k, v in d["verified"].items() if k != "ext1_dim")


@pytest.mark.parametrize("lam,n,r,p,dims,regime", [
    ((2, 1), 2, 3, 2, (2, 3), "iii"),
    ((0, 3), 2, 3, 0, (1, 2), "i"),
    ((0, 0, 3), 3, 3, 2, (4, 5), "ii"),
    ((1, 2, 0), 3, 3, 0, (3, 4), None),
    ((1, 3, 1), 3, 5, 2, None, "iv"),
])
def test_almost_split_examples(lam, n, r, p, dims, regime):
    rep = verify_ar(ar_sequence(lam, BorelSchurAlgebra(n, r, p)))
    assert rep.passed
    assert rep.regime == regime
    if dims:
        assert (rep.dim_U, rep.dim_E) == dims
    if regime is not None:
        assert rep.tau_matches_kernel and rep.middle_matches_closed_form


@pytest.mark.parametrize("r", [2, 3, 4, 5])
def test_char0_n2_translates_are_simple(r):
    # hereditary of type A: tau K_lam is the simple one step up
    A = BorelSchurAlgebra(2, r, 0)
    for a, b in A.weights:
        if b == 0:
            continue
        seq = ar_sequence((a, b), A)
        assert seq.U.dim == 1
        assert seq.U.weights == ((a + 1, b - 1),)
        assert is_indecomposable(seq.E).indecomposable


def test_injective_simple_case():
    A = BorelSchurAlgebra(3, 3, 0)
    seq = ar_sequence((0, 0, 3), A)
    assert seq.Dp1t.rank() == seq.Dp1t.target.dim


def test_scaled_theta_gives_isomorphic_middle():
    A = BorelSchurAlgebra(2, 3, 3)
    rep = verify_ar(ar_sequence((1, 2), A, theta_scale=2))
    assert rep.passed and rep.middle_matches_closed_form


def test_split_control_fails_nonsplit():
    f, g = split_test_sequence((2, 1), BorelSchurAlgebra(2, 3, 2))
    assert sequence_checks(f, g).split is True


def test_middle_terms():
    A = BorelSchurAlgebra(3, 3, 0)
    m = middle_term_analysis((1, 1, 1), A)
    assert not m.p1_indecomposable and len(m.summands) == 2
    m = middle_term_analysis((2, 0, 1), A)
    assert m.p1_indecomposable and m.socle_simple and m.E_indecomposable
    m = middle_term_analysis((0, 2), BorelSchurAlgebra(2, 2, 3))
    assert m.p1_indecomposable and m.socle_simple


def test_socle_tables():
    rows = socle_report(2, 4, 2)
    assert {r.lam: r.multiplicity for r in rows if r.multiplicity} == {(4, 0): 5, (3, 1): 2}
    assert all(r.verdict == "ok" for r in rows)
    rows = socle_report(2, 4, 0)
    assert {r.lam for r in rows if r.multiplicity} == {(4, 0)}
    tsv = socle_table_tsv(rows)
    assert tsv.splitlines()[0] == "lambda\tmultiplicity\tverdict"
    assert tsv.splitlines()[1] == "4,0\t5\tok"


def test_socle_family_instance():
    (row,) = socle_report(3, 14, 3, weights=[(8, 5, 1)])
    assert row.multiplicity == 2 and row.verdict == "ok"


def test_socle_expectations():
    assert socle_expectation((3, 1), 2)[:2] == ("iff", True)
    assert socle_expectation((2, 2), 2)[:2] == ("iff", False)
    assert socle_expectation((1, 2), 2)[:2] == ("iff", False)
    assert socle_expectation((1, 1, 1), 0)[0] == "necessary"
    assert socle_expectation((8, 5, 1), 3)[:2] == ("positive", True)


@pytest.mark.parametrize("p", [0, 3])
def test_truncation_example(p):
    A = BorelSchurAlgebra(3, 3, p)
    T = truncation_functors(A, [w for w in A.weights if w[2] == 0])
    iso, small, big = T.ariff_check((1, 2, 0))
    assert not iso
    assert (small.dim, big.dim) == (1, 3)
    assert T.FG_is_identity(small)
    v, sub = find_uniserial(big, (2, 0, 1), (2, 1, 0))
    assert sub.dim == 2


def test_identity_coideal():
    A = BorelSchurAlgebra(2, 3, 2)
    T = truncation_functors(A, A.weights)
    for lam in A.weights:
        if lam == (3, 0):
            continue
        assert T.ariff_check(lam)[0]


def test_corner_algebras_have_no_closed_form():
    A = BorelSchurAlgebra(2, 3, 0)
    B = CornerAlgebra(A, [(3, 0), (2, 1)])
    with pytest.raises(RegimeNotCovered):
        regime_of((2, 1), B)
