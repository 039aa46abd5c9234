"""Exact-arithmetic toolkit for weight enumerators of linear codes over
GF(q) and the identities relating a code's distribution to its dual's."""

from .codes import (DEFAULT_ENUM_CAP, EnumerationCapError, LinearCode,
                    WeightDistribution, dual_code, enumerate_codewords,
                    enumerator_poly, make_code, weight_distribution)
from .gf import BUILTIN_MODULI, FieldElement, FiniteField, make_field
from .identities import (ANCHORS, DERIVATIVE_FORMS, IdentityReport, ReportRow,
                         XYTermSum, check_derivative_forms, check_eq3,
                         check_eq4, check_eq5, derivative_samples, krawtchouk,
                         lemma1_expand, lemma2_reconstruct, macwilliams_image,
                         transform_eq1, transform_eq2)
from .linalg import (MatrixGF, dual_generator, identity_matrix, mat_mul,
                     nullspace_basis, rank, rref, same_row_space, transpose)
from .poly import HomoPoly, SparsePoly, mixed_partial

__version__ = "0.1.0"

__all__ = [
    "ANCHORS", "BUILTIN_MODULI", "DEFAULT_ENUM_CAP", "DERIVATIVE_FORMS",
    "EnumerationCapError", "FieldElement", "FiniteField", "HomoPoly",
    "IdentityReport", "LinearCode", "MatrixGF", "ReportRow", "SparsePoly",
    "WeightDistribution", "XYTermSum", "check_derivative_forms", "check_eq3",
    "check_eq4", "check_eq5", "derivative_samples", "dual_code",
    "dual_generator", "enumerate_codewords", "enumerator_poly",
    "identity_matrix", "krawtchouk", "lemma1_expand", "lemma2_reconstruct",
    "macwilliams_image", "make_code", "make_field", "mat_mul",
    "mixed_partial", "nullspace_basis", "rank", "rref", "same_row_space",
    "transform_eq1", "transform_eq2", "transpose", "weight_distribution",
]
