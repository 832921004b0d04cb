"""Borel-Schur algebras S(B+, n, r): products, modules, almost split
sequences and representation type."""

from .scalars import Field, QQ, GF
from .weights import enumerate_weights, dominates, semistandard_sets
from .algebra import (BorelSchurAlgebra, CornerAlgebra, BasisElement, canonicalize_pair,
                      enumerate_basis, truncate_idempotent, tensor_oracle_multiply,
                      structure_iso_check)
from .modules import (Representation, ModuleMap, simple_module, projective_cover,
                      is_indecomposable, is_isomorphic, hom_basis)
from .ar import (minimal_presentation, p1t_matrix, replaced_basis, ar_sequence,
                 verify_ar, middle_term_analysis, socle_report, truncation_functors)

__all__ = [
    "Field", "QQ", "GF", "enumerate_weights", "dominates", "semistandard_sets",
    "BorelSchurAlgebra", "CornerAlgebra", "BasisElement", "canonicalize_pair",
    "enumerate_basis", "truncate_idempotent", "tensor_oracle_multiply", "structure_iso_check",
    "Representation", "ModuleMap", "simple_module", "projective_cover", "is_indecomposable",
    "is_isomorphic", "hom_basis", "minimal_presentation", "p1t_matrix", "replaced_basis",
    "ar_sequence", "verify_ar", "middle_term_analysis", "socle_report", "truncation_functors",
]

__version__ = "0.1.0"
