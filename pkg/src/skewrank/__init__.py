"""Certified recognition of {0, 1, -1} matrices whose principal submatrices all have even rank."""

from .errors import SkewRankError
from .evenrank import EvenRankVerdict, OddWitness, check_all_principal_even, verify_witness
from .field import Q, FieldSpec, Scalar, from_integer, parse_field
from .kernels import BACKEND
from .lemma import LemmaParams, build_lemma_matrix, lemma_matrix, lemma_parity_predicate
from .matrix import (
    Matrix,
    guttman_check,
    is_skew_symmetric,
    permute_simultaneous,
    principal_submatrix,
    rank,
    scale_col,
    scale_row,
    schur_complement,
)
from .recognizer import (
    SignCertificate,
    ScalingCertificate,
    apply_certificate,
    recognize_general_scaling,
    recognize_sign,
)

__all__ = [
    "BACKEND",
    "EvenRankVerdict",
    "FieldSpec",
    "LemmaParams",
    "Matrix",
    "OddWitness",
    "Q",
    "Scalar",
    "ScalingCertificate",
    "SignCertificate",
    "SkewRankError",
    "apply_certificate",
    "build_lemma_matrix",
    "check_all_principal_even",
    "from_integer",
    "guttman_check",
    "is_skew_symmetric",
    "lemma_matrix",
    "lemma_parity_predicate",
    "parse_field",
    "permute_simultaneous",
    "principal_submatrix",
    "rank",
    "recognize_general_scaling",
    "recognize_sign",
    "scale_col",
    "scale_row",
    "schur_complement",
    "verify_witness",
]
