"""Almost split sequences ending in each non-projective simple of
S(B+,2,3) over GF(2) and S(B+,3,2) over GF(3)."""

from borelschur import BorelSchurAlgebra, ar_sequence, verify_ar

for n, r, p in [(2, 3, 2), (3, 2, 3)]:
    A = BorelSchurAlgebra(n, r, p)
    print(A)
    for lam in A.weights:
        if not A.arrows_from(lam):
            print(f"  K{lam}: projective")
            continue
        rep = verify_ar(ar_sequence(lam, A))
        print(f"  K{lam}: dim tau = {rep.dim_U}, dim E = {rep.dim_E}, "
              f"regime {rep.regime}, verified {rep.passed}")
