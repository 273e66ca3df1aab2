from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from skewrank.errors import ParseError
from skewrank.field import Q
from skewrank.formats import (
    format_certificate,
    format_matrix,
    parse_certificate,
    parse_matrix,
    read_matrix,
    write_matrix,
)
from skewrank.matrix import Matrix

from conftest import GF2, GF3, GF5

SPEC_EXAMPLE = """\
# comment lines start with '#'
field gf 5        # or: field q
size 4
0 -1 -1 0
1 0 0 -1
1 0 0 2
0 1 2 0
"""


def test_parse_example():
    m = parse_matrix(SPEC_EXAMPLE)
    assert m.field == GF5
    assert m.rows[0] == (0, 4, 4, 0)
    assert m.rows[2][3] == 2


def test_remark2_fixture(tmp_path):
    path = tmp_path / "remark2.mat"
    path.write_text("field q\nsize 4\n0 0 -1 0\n0 0 0 -1\n1 0 0 1\n0 1 1 0\n")
    m = read_matrix(path)
    assert m.field == Q and m.shape == (4, 4)
    assert m.tolist()[2] == [1, 0, 0, 1]


def test_reduction_mod_p():
    assert parse_matrix("field gf 3\nsize 1\n3\n").rows == ((0,),)


def test_fractions():
    m = parse_matrix("field q\nsize 2\n1/2 -3/4\n0 5\n")
    assert m.rows[0] == (Fraction(1, 2), Fraction(-3, 4))


@pytest.mark.parametrize("text,line", [
    ("field gf 5\nsize 1\n1/2\n", 3),
    ("field gf 6\nsize 1\n1\n", 1),
    ("field q\nsize 2\n1 2\n3\n", 4),
    ("field q\nsize 2\n1 2\n", None),
    ("field q\nsize x\n", 2),
    ("size 2\n", 1),
    ("field q\nsize 1\nabc\n", 3),
    ("field q\nsize 1\n1/0\n", 3),
    ("", None),
])
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as exc:
        parse_matrix(text)
    assert exc.value.line == line


def test_parse_error_column():
    with pytest.raises(ParseError) as exc:
        parse_matrix("field gf 5\nsize 2\n0 1/2\n1 0\n")
    assert (exc.value.line, exc.value.column) == (3, 3)


def test_empty_matrix_round_trip():
    m = Matrix([], GF3)
    assert parse_matrix(format_matrix(m)) == m


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 6), st.sampled_from([Q, GF2, GF3, GF5]), st.randoms(use_true_random=False))
def test_round_trip(n, f, rng):
    if f.p is None:
        rows = [[Fraction(rng.randint(-30, 30), rng.randint(1, 9)) for _ in range(n)] for _ in range(n)]
    else:
        rows = [[rng.randint(-30, 30) for _ in range(n)] for _ in range(n)]
    m = Matrix(rows, f)
    assert parse_matrix(format_matrix(m)) == m


def test_file_round_trip(tmp_path):
    m = Matrix([[0, Fraction(1, 3)], [-7, 0]])
    write_matrix(m, tmp_path / "m.mat")
    assert read_matrix(tmp_path / "m.mat") == m


def test_certificate_format():
    text = format_certificate([1, -1, 1], [-1, 1, 1])
    assert text == "1 -1 1\n-1 1 1\n"
    rows, cols = parse_certificate(text, GF5, 3)
    assert rows == [1, 4, 1] and cols == [4, 1, 1]
    with pytest.raises(ParseError):
        parse_certificate("1 1\n", Q, 2)
    with pytest.raises(ParseError):
        parse_certificate("1 1\n1\n", Q, 2)
