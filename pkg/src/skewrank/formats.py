"""Plain-text matrix and certificate files.

Matrix file::

    # comment
    field gf 5        # or: field q
    size 4
    0 -1 -1 0
    ...

Certificate file: two lines of ``n`` entries, row scalars then column scalars.
"""

from __future__ import annotations

from pathlib import Path

from .errors import DivisionByZero, FieldMismatch, ParseError
from .field import FieldSpec, parse_field
from .matrix import Matrix


def _lines(text: str):
    """(line number, tokens with their columns) for every non-blank line."""
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0]
        tokens = []
        col = 0
        for tok in line.split():
            col = line.index(tok, col)
            tokens.append((tok, col + 1))
            col += len(tok)
        if tokens:
            yield lineno, tokens


def _parse_entry(field: FieldSpec, tok: str, lineno: int, col: int):
    try:
        return field.parse(tok)
    except (FieldMismatch, DivisionByZero, ValueError) as exc:
        raise ParseError(str(exc), lineno, col) from None


def parse_matrix(text: str) -> Matrix:
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty matrix file")
    lineno, toks = lines[0]
    if toks[0][0] != "field" or len(toks) < 2:
        raise ParseError("expected 'field q' or 'field gf <p>'", lineno, toks[0][1])
    try:
        field = parse_field(" ".join(t for t, _ in toks[1:]))
    except ParseError as exc:
        raise ParseError(str(exc), lineno, toks[1][1]) from None
    if len(lines) < 2:
        raise ParseError("missing 'size <n>' line")
    lineno, toks = lines[1]
    if len(toks) != 2 or toks[0][0] != "size" or not toks[1][0].isdigit():
        raise ParseError("expected 'size <n>'", lineno, toks[0][1])
    n = int(toks[1][0])
    body = lines[2:]
    if len(body) != n:
        where = body[n][0] if len(body) > n else None
        raise ParseError(f"expected {n} matrix rows, found {len(body)}", where)
    rows = []
    for lineno, toks in body:
        if len(toks) != n:
            raise ParseError(f"expected {n} entries, found {len(toks)}", lineno, toks[0][1])
        rows.append([_parse_entry(field, t, lineno, c) for t, c in toks])
    return Matrix._raw(rows, field, n)


def format_matrix(m: Matrix) -> str:
    out = [f"field {m.field}", f"size {m.nrows}"]
    out += [" ".join(m.field.format(x) for x in row) for row in m.rows]
    return "\n".join(out) + "\n"


def read_matrix(path) -> Matrix:
    return parse_matrix(Path(path).read_text())


def write_matrix(m: Matrix, path) -> None:
    Path(path).write_text(format_matrix(m))


def parse_certificate(text: str, field: FieldSpec, n: int) -> tuple[list, list]:
    """Row and column scalars (raw field values) from a certificate file."""
    lines = list(_lines(text))
    if len(lines) != 2:
        raise ParseError(f"certificate needs exactly 2 lines, found {len(lines)}")
    vectors = []
    for lineno, toks in lines:
        if len(toks) != n:
            raise ParseError(f"expected {n} entries, found {len(toks)}", lineno, toks[0][1])
        vectors.append([_parse_entry(field, t, lineno, c) for t, c in toks])
    return vectors[0], vectors[1]


def format_certificate(row_scalars, col_scalars) -> str:
    return " ".join(map(str, row_scalars)) + "\n" + " ".join(map(str, col_scalars)) + "\n"


def write_certificate(path, row_scalars, col_scalars) -> None:
    Path(path).write_text(format_certificate(row_scalars, col_scalars))
