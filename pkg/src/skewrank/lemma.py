"""The banded lemma family and its rank-parity law.

A lemma matrix of size ``n >= 3`` has ``-c``/``c`` at (1,2)/(2,1), ``-1`` on
the second superdiagonal, ``1`` on the second subdiagonal, ``b``/``a`` at
(n-1,n)/(n,n-1) and zeros elsewhere.  With ``a, b, c`` in ``{1, -1}`` its rank
is even exactly when ``a == -b``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParams, StructureViolation
from .field import Q, FieldSpec, Scalar
from .matrix import Matrix, schur_complement


@dataclass(frozen=True)
class LemmaParams:
    """Size and corner parameters.  ``a, b, c`` may be any nonzero scalars."""

    n: int
    a: Scalar
    b: Scalar
    c: Scalar

    def __init__(self, n: int, a, b, c, field: FieldSpec = Q):
        if not isinstance(n, int) or n < 3:
            raise InvalidParams(f"lemma matrices need n >= 3, got {n!r}")
        vals = []
        for name, x in (("a", a), ("b", b), ("c", c)):
            try:
                s = x if isinstance(x, Scalar) else Scalar(x, field)
            except (TypeError, ValueError) as exc:
                raise InvalidParams(f"{name}: {exc}") from None
            if s.field != field:
                raise InvalidParams(f"{name} lives in {s.field}, expected {field}")
            if s.is_zero():
                raise InvalidParams(f"{name} must be nonzero")
            vals.append(s)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "a", vals[0])
        object.__setattr__(self, "b", vals[1])
        object.__setattr__(self, "c", vals[2])

    @property
    def field(self) -> FieldSpec:
        return self.a.field


def build_lemma_matrix(p: LemmaParams) -> Matrix:
    n, f = p.n, p.field
    rows = [[f.zero] * n for _ in range(n)]
    rows[0][1] = f.neg(p.c.value)
    rows[1][0] = p.c.value
    for i in range(n - 2):
        rows[i][i + 2] = f.minus_one
        rows[i + 2][i] = f.one
    rows[n - 2][n - 1] = p.b.value
    rows[n - 1][n - 2] = p.a.value
    return Matrix._raw(rows, f, n)


def lemma_matrix(n: int, a, b, c, field: FieldSpec = Q) -> Matrix:
    """Shorthand for ``build_lemma_matrix(LemmaParams(n, a, b, c, field))``."""
    return build_lemma_matrix(LemmaParams(n, a, b, c, field))


def _is_sign(s: Scalar) -> bool:
    return s.value == s.field.one or s.value == s.field.minus_one


def lemma_parity_predicate(p: LemmaParams) -> bool:
    """Predicted evenness of the lemma matrix's rank: ``a == -b``.

    Only meaningful for ``a, b, c`` in ``{1, -1}``; other values raise.
    """
    if not all(_is_sign(s) for s in (p.a, p.b, p.c)):
        raise InvalidParams("the parity law needs a, b, c in {1, -1}")
    return p.a == -p.b


def _read_params(m: Matrix) -> LemmaParams | None:
    """Recover the parameters of a lemma-family matrix, or None."""
    n = m.nrows
    if n < 3 or not m.is_square:
        return None
    f = m.field
    try:
        p = LemmaParams(n, Scalar(m.rows[n - 1][n - 2], f), Scalar(m.rows[n - 2][n - 1], f),
                        Scalar(m.rows[1][0], f), f)
    except InvalidParams:
        return None
    return p if build_lemma_matrix(p) == m else None


def schur_reduce_step(m: Matrix) -> Matrix:
    """Schur complement on the leading 2x2 block, checked to be a lemma matrix again.

    The result has size ``n - 2``, the same ``a`` and ``b``, and ``c' = -1/c``.
    """
    p = _read_params(m)
    if p is None or p.n < 5:
        raise InvalidParams("schur_reduce_step needs a lemma-family matrix with n >= 5")
    s = schur_complement(m, (1, 2))
    expected = LemmaParams(p.n - 2, p.a, p.b, -p.c.inverse(), p.field)
    if s != build_lemma_matrix(expected):
        raise StructureViolation(f"Schur complement left the lemma family:\n{s}")
    return s
