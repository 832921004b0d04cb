"""Multiplication table of S(B+,2,2) over Q and GF(2), checked against the
tensor-space action."""

from borelschur import BorelSchurAlgebra, tensor_oracle_multiply


def show(A):
    print(A)
    for x in A.basis:
        for y in A.basis:
            z = A.multiply(x, y)
            if z:
                terms = " + ".join(f"{c}*{w}" for w, c in z.items())
                print(f"  {x} . {y} = {terms}")
            want = {w: c % A.p if A.p else c for w, c in tensor_oracle_multiply(x, y, A.n).items()}
            want = {w: c for w, c in want.items() if c}
            assert {w: int(c) for w, c in z.items()} == want


if __name__ == "__main__":
    show(BorelSchurAlgebra(2, 2, 0))
    show(BorelSchurAlgebra(2, 2, 2))
