import pytest

from borelschur.algebra import BorelSchurAlgebra
from borelschur.ar import ar_sequence, split_test_sequence
from borelschur.modules import (ModuleMap, direct_sum, dualize, ext1_dim, hom_basis, hom_dim,
                                is_indecomposable, is_isomorphic, projective_cover,
                                radical_submodule, regular_module, sequence_checks,
                                simple_module, socle_radical_top, tensor_space_module)
from borelschur.weights import semistandard_sets


@pytest.mark.parametrize("n,r,p", [(2, 3, 0), (2, 3, 2), (3, 2, 3)])
def test_projective_covers(n, r, p):
    A = BorelSchurAlgebra(n, r, p)
    total = 0
    for lam in A.weights:
        P = projective_cover(A, lam)
        assert P.check()
        assert P.dim == len(semistandard_sets(lam)[0])
        top = socle_radical_top(P).top_mult
        assert top == {lam: 1}
        total += P.dim
    assert total == A.dim == regular_module(A).dim


def test_simple_homs():
    A = BorelSchurAlgebra(2, 3, 0)
    for lam in A.weights:
        for mu in A.weights:
            assert hom_dim(simple_module(A, lam), simple_module(A, mu)) == (lam == mu)


def test_projective_of_11_is_uniserial():
    A = BorelSchurAlgebra(2, 2, 0)
    P = projective_cover(A, (1, 1))
    info = socle_radical_top(P)
    assert info.socle_mult == {(2, 0): 1}
    assert is_indecomposable(P).indecomposable


def test_indecomposability_with_witness():
    A = BorelSchurAlgebra(2, 2, 2)
    S = simple_module(A, (1, 1))
    assert is_indecomposable(S).indecomposable
    res = is_indecomposable(direct_sum(S, simple_module(A, (2, 0))))
    assert res.indecomposable is False
    assert res.witness is not None


def test_ext1_example():
    A = BorelSchurAlgebra(2, 2, 0)
    assert ext1_dim((1, 1), simple_module(A, (2, 0))) == 1
    assert ext1_dim((1, 1), simple_module(A, (0, 2))) == 0
    assert ext1_dim((0, 2), simple_module(A, (2, 0))) == 0


def test_radical_of_projective():
    A = BorelSchurAlgebra(2, 3, 2)
    P = projective_cover(A, (0, 3))
    R, inc = radical_submodule(P)
    assert R.dim == P.dim - 1
    assert inc.check()


def test_sequences():
    A = BorelSchurAlgebra(2, 2, 0)
    seq = ar_sequence((1, 1), A)
    rep = sequence_checks(seq.f, seq.g)
    assert rep.short_exact and rep.split is False
    f, g = split_test_sequence((1, 1), A)
    rep = sequence_checks(f, g)
    assert rep.short_exact and rep.split is True
    zero_f = ModuleMap(seq.U, seq.E, seq.E.field.zeros(seq.E.dim, seq.U.dim))
    zero_g = ModuleMap(seq.E, seq.K, seq.E.field.zeros(seq.K.dim, seq.E.dim))
    assert not sequence_checks(zero_f, zero_g).short_exact


def test_middle_term_of_11():
    A = BorelSchurAlgebra(2, 2, 0)
    seq = ar_sequence((1, 1), A)
    assert seq.E.dim == 2
    assert is_indecomposable(seq.E).indecomposable
    assert socle_radical_top(seq.E).socle_mult == {(2, 0): 1}


def test_isomorphism_checks():
    A = BorelSchurAlgebra(2, 3, 3)
    P = projective_cover(A, (1, 2))
    assert is_isomorphic(P, projective_cover(A, (1, 2)))
    assert not is_isomorphic(P, projective_cover(A, (2, 1)))
    D = dualize(dualize(P))
    assert is_isomorphic(D, P)


def test_tensor_space_module_is_a_module():
    A = BorelSchurAlgebra(2, 2, 0)
    V = tensor_space_module(A)
    assert V.dim == 4 and V.check()
    assert len(hom_basis(simple_module(A, (2, 0)), V)) >= 1
