"""Dense exact matrices and the handful of operations the proofs rely on.

All index arguments are 1-based.  Matrices are immutable; every operation
returns a new matrix.
"""

from __future__ import annotations

from math import lcm
from typing import Iterable, NamedTuple, Sequence

from . import kernels
from .errors import (
    DimensionMismatch,
    FieldMismatch,
    IndexOutOfRange,
    InvalidPermutation,
    SingularBlock,
    ZeroScalar,
)
from .field import Q, FieldSpec, Scalar


class Matrix:
    """An ``nrows x ncols`` matrix of canonical field values."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable], field: FieldSpec = Q, ncols: int | None = None):
        data = tuple(tuple(field.coerce(x) for x in row) for row in rows)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        if any(len(row) != ncols for row in data):
            raise DimensionMismatch("rows have unequal lengths")
        self.field = field
        self.rows = data
        self.nrows = len(data)
        self.ncols = ncols

    @classmethod
    def _raw(cls, rows, field: FieldSpec, ncols: int | None = None) -> "Matrix":
        # trusted constructor: entries are already canonical
        m = cls.__new__(cls)
        m.field = field
        m.rows = tuple(tuple(r) for r in rows)
        m.nrows = len(m.rows)
        m.ncols = ncols if ncols is not None else (len(m.rows[0]) if m.rows else 0)
        return m

    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None, field: FieldSpec = Q) -> "Matrix":
        ncols = nrows if ncols is None else ncols
        return cls._raw([[field.zero] * ncols for _ in range(nrows)], field, ncols)

    @classmethod
    def identity(cls, n: int, field: FieldSpec = Q) -> "Matrix":
        return cls._raw(
            [[field.one if i == j else field.zero for j in range(n)] for i in range(n)], field, n
        )

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def entry(self, i: int, j: int) -> Scalar:
        """Entry in row ``i``, column ``j`` (1-based)."""
        if not (1 <= i <= self.nrows and 1 <= j <= self.ncols):
            raise IndexOutOfRange(f"({i}, {j}) outside a {self.nrows}x{self.ncols} matrix")
        return Scalar(self.rows[i - 1][j - 1], self.field)

    def tolist(self) -> list[list]:
        """Entries as nested lists, using the representative closest to zero."""
        c = self.field.centered
        return [[c(x) for x in row] for row in self.rows]

    def with_field(self, field: FieldSpec) -> "Matrix":
        """Re-embed centered entries into another field."""
        return Matrix(self.tolist(), field, self.ncols)

    def transpose(self) -> "Matrix":
        return Matrix._raw(list(zip(*self.rows)) if self.rows else [], self.field, self.nrows)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.field, self.shape, self.rows))

    def __repr__(self):
        return f"Matrix({self.tolist()!r}, {self.field!r})"

    def __str__(self):
        if not self.rows:
            return "[]"
        cells = [[self.field.format(x) for x in row] for row in self.rows]
        width = max(len(c) for row in cells for c in row)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


def check_index_set(indices: Iterable[int], n: int) -> tuple[int, ...]:
    """Validate a strictly increasing set of 1-based indices within ``[1, n]``."""
    idx = tuple(indices)
    for i in idx:
        if not isinstance(i, int) or not 1 <= i <= n:
            raise IndexOutOfRange(f"index {i!r} outside [1, {n}]")
    if any(a >= b for a, b in zip(idx, idx[1:])):
        raise ValueError(f"indices must be strictly increasing: {idx}")
    return idx


def _require_square(m: Matrix):
    if not m.is_square:
        raise DimensionMismatch(f"expected a square matrix, got {m.nrows}x{m.ncols}")


def kernel_grid(m: Matrix) -> tuple[list[list[int]], int]:
    """Integer rows plus modulus (0 for the rationals) for the rank kernels.

    Rational rows are scaled by the lcm of their denominators, which leaves
    the rank of every submatrix unchanged.
    """
    f = m.field
    if f.p is not None:
        return [list(r) for r in m.rows], f.p
    grid = []
    for row in m.rows:
        d = lcm(*(x.denominator for x in row)) if row else 1
        grid.append([int(x * d) for x in row])
    return grid, 0


def rank(m: Matrix) -> int:
    """Exact rank by Gaussian elimination over the matrix's field."""
    if m.nrows == 0 or m.ncols == 0:
        return 0
    grid, p = kernel_grid(m)
    return kernels.rank(grid, p)


def principal_submatrix(m: Matrix, indices: Iterable[int]) -> Matrix:
    _require_square(m)
    idx = [i - 1 for i in check_index_set(indices, m.nrows)]
    rows = m.rows
    return Matrix._raw([[rows[i][j] for j in idx] for i in idx], m.field, len(idx))


def _inverse(rows: list[list], f: FieldSpec) -> list[list]:
    """Gauss-Jordan inverse of a square raw block; raises SingularBlock."""
    k = len(rows)
    a = [list(r) + [f.one if i == j else f.zero for j in range(k)] for i, r in enumerate(rows)]
    for c in range(k):
        piv = next((i for i in range(c, k) if a[i][c] != 0), None)
        if piv is None:
            raise SingularBlock("principal block is not invertible")
        a[c], a[piv] = a[piv], a[c]
        inv = f.inv(a[c][c])
        a[c] = [f.mul(inv, x) for x in a[c]]
        for i in range(k):
            g = a[i][c]
            if i != c and g != 0:
                a[i] = [f.sub(x, f.mul(g, y)) for x, y in zip(a[i], a[c])]
    return [row[k:] for row in a]


def _matmul(x: list[list], y: list[list], f: FieldSpec, inner: int, ncols: int) -> list[list]:
    out = []
    for row in x:
        acc = [f.zero] * ncols
        for t in range(inner):
            a = row[t]
            if a != 0:
                yt = y[t]
                acc = [f.add(s, f.mul(a, b)) for s, b in zip(acc, yt)]
        out.append(acc)
    return out


def schur_complement(m: Matrix, indices: Iterable[int]) -> Matrix:
    """Schur complement of ``m`` on the (invertible) principal block at ``indices``.

    The block is moved to the leading position by a simultaneous permutation;
    the remaining rows/columns keep their relative order.
    """
    _require_square(m)
    n = m.nrows
    block = [i - 1 for i in check_index_set(indices, n)]
    rest = [i for i in range(n) if i not in set(block)]
    f, rows = m.field, m.rows
    a1 = [[rows[i][j] for j in block] for i in block]
    a2 = [[rows[i][j] for j in rest] for i in block]
    a3 = [[rows[i][j] for j in block] for i in rest]
    a4 = [[rows[i][j] for j in rest] for i in rest]
    k, r = len(block), len(rest)
    inv = _inverse(a1, f) if k else []
    prod = _matmul(_matmul(a3, inv, f, k, k), a2, f, k, r)
    return Matrix._raw(
        [[f.sub(x, y) for x, y in zip(r4, rp)] for r4, rp in zip(a4, prod)], f, r
    )


class GuttmanResult(NamedTuple):
    rank_matrix: int
    rank_block: int
    rank_schur: int
    holds: bool


def guttman_check(m: Matrix, indices: Iterable[int]) -> GuttmanResult:
    """Compare ``rank(m)`` with ``rank(block) + rank(schur complement)``."""
    idx = check_index_set(indices, m.nrows)
    s = schur_complement(m, idx)
    rm, rb, rs = rank(m), rank(principal_submatrix(m, idx)), rank(s)
    return GuttmanResult(rm, rb, rs, rm == rb + rs)


def _scalar(m: Matrix, s) -> object:
    if isinstance(s, Scalar) and s.field != m.field:
        raise FieldMismatch(f"scalar over {s.field} applied to matrix over {m.field}")
    v = m.field.coerce(s)
    if v == 0:
        raise ZeroScalar("scaling by zero")
    return v


def scale_row(m: Matrix, i: int, s) -> Matrix:
    if not 1 <= i <= m.nrows:
        raise IndexOutOfRange(f"row {i} outside [1, {m.nrows}]")
    v, f = _scalar(m, s), m.field
    rows = list(m.rows)
    rows[i - 1] = [f.mul(v, x) for x in rows[i - 1]]
    return Matrix._raw(rows, f, m.ncols)


def scale_col(m: Matrix, j: int, s) -> Matrix:
    if not 1 <= j <= m.ncols:
        raise IndexOutOfRange(f"column {j} outside [1, {m.ncols}]")
    v, f = _scalar(m, s), m.field
    rows = []
    for row in m.rows:
        row = list(row)
        row[j - 1] = f.mul(v, row[j - 1])
        rows.append(row)
    return Matrix._raw(rows, f, m.ncols)


def scale(m: Matrix, row_scalars: Sequence, col_scalars: Sequence) -> Matrix:
    """``diag(row_scalars) @ m @ diag(col_scalars)``."""
    if len(row_scalars) != m.nrows or len(col_scalars) != m.ncols:
        raise DimensionMismatch("scalar vectors do not match the matrix shape")
    f = m.field
    d = [_scalar(m, s) for s in row_scalars]
    e = [_scalar(m, s) for s in col_scalars]
    return Matrix._raw(
        [[f.mul(f.mul(di, x), ej) for x, ej in zip(row, e)] for di, row in zip(d, m.rows)],
        f,
        m.ncols,
    )


def check_permutation(perm: Sequence[int], n: int) -> tuple[int, ...]:
    perm = tuple(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise InvalidPermutation(f"{perm} is not a permutation of 1..{n}")
    return perm


def permute_simultaneous(m: Matrix, perm: Sequence[int]) -> Matrix:
    """Matrix with ``result[i][j] = m[perm[i]][perm[j]]`` (1-based)."""
    _require_square(m)
    p = [x - 1 for x in check_permutation(perm, m.nrows)]
    rows = m.rows
    return Matrix._raw([[rows[i][j] for j in p] for i in p], m.field, m.nrows)


def is_skew_symmetric(m: Matrix) -> bool:
    """``m^T == -m`` with an explicitly zero diagonal."""
    _require_square(m)
    f, rows, n = m.field, m.rows, m.nrows
    for i in range(n):
        if rows[i][i] != 0:
            return False
        for j in range(i + 1, n):
            if rows[i][j] != f.neg(rows[j][i]):
                return False
    return True

