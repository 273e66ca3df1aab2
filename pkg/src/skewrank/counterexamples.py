"""Executable counterexamples and the GF(3) special case.

* :func:`remark1_matrix` -- a 4x4 banded matrix with a corner entry outside
  ``{0, 1, -1}`` whose principal submatrices all have even rank although no
  nonzero row/column scaling makes it skew-symmetric.
* :func:`remark2_matrix` -- a {0, 1, -1} matrix showing that signs must be
  fixed only after reordering.
* :func:`gf3_corollary_check` -- over GF(3) every matrix has entries in
  ``{0, 1, -1}``, so the sign recognizer and the even-rank oracle must agree
  on all inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidParams
from .evenrank import check_all_principal_even
from .field import Q, FieldSpec, Scalar
from .lemma import lemma_matrix
from .matrix import Matrix, principal_submatrix
from .recognizer import SignCertificate, recognize_general_scaling, recognize_sign

REMARK2_ROWS = ((0, 0, -1, 0), (0, 0, 0, -1), (1, 0, 0, 1), (0, 1, 1, 0))

# column 1 and row 3 multiplied by -1
REMARK2_CERTIFICATE = SignCertificate(row_signs=(1, 1, -1, 1), col_signs=(-1, 1, 1, 1))


@dataclass(frozen=True)
class Remark1Report:
    field: FieldSpec
    a: Scalar
    b: Scalar
    all_principal_even: bool
    whole_scalable: bool
    strict_submatrices_scalable: bool

    @property
    def is_counterexample(self) -> bool:
        return self.all_principal_even and not self.whole_scalable and self.strict_submatrices_scalable

    def to_dict(self):
        return {
            "field": str(self.field),
            "a": str(self.a),
            "b": str(self.b),
            "all_principal_even": self.all_principal_even,
            "whole_scalable": self.whole_scalable,
            "strict_submatrices_scalable": self.strict_submatrices_scalable,
        }


def remark1_matrix(field: FieldSpec, a, b) -> Matrix:
    """The 4x4 lemma matrix with ``c = 1`` and arbitrary nonzero ``a``, ``b``."""
    try:
        return lemma_matrix(4, a, b, 1, field)
    except InvalidParams as exc:
        raise InvalidParams(f"remark 1 matrix: {exc}") from None


def remark1_validate(field: FieldSpec, a, b) -> Remark1Report:
    m = remark1_matrix(field, a, b)
    all_even = check_all_principal_even(m).all_even
    whole = recognize_general_scaling(m).accepted
    strict = all(
        recognize_general_scaling(principal_submatrix(m, idx)).accepted
        for k in range(1, 4)
        for idx in combinations(range(1, 5), k)
    )
    return Remark1Report(field, Scalar(a, field), Scalar(b, field), all_even, whole, strict)


def remark1_parity_rule(field: FieldSpec, a, b) -> bool:
    """Closed-form evenness of the full Remark 1 matrix's rank.

    Even iff ``a = 1 = -b`` or (``a != 1`` and ``-b != 1``).
    """
    a, b = Scalar(a, field), Scalar(b, field)
    one = Scalar(1, field)
    return (a == one and -b == one) or (a != one and -b != one)


def remark2_matrix(field: FieldSpec = Q) -> Matrix:
    return Matrix(REMARK2_ROWS, field)


def gf3_corollary_check(m: Matrix) -> bool:
    """True iff the sign recognizer and the even-rank oracle agree on ``m``."""
    if m.field != FieldSpec.gf(3):
        raise InvalidParams(f"expected a matrix over GF(3), got {m.field}")
    return recognize_sign(m).accepted == check_all_principal_even(m).all_even
