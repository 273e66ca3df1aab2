import pytest

from skewrank.field import Q, FieldSpec

GF2, GF3, GF5, GF7 = (FieldSpec.gf(p) for p in (2, 3, 5, 7))

ACCEPTANCE_LINES = []


@pytest.fixture(params=[Q, GF3, GF5], ids=["Q", "GF3", "GF5"])
def field(request):
    return request.param


@pytest.fixture(params=[Q, GF2, GF3, GF5, GF7], ids=["Q", "GF2", "GF3", "GF5", "GF7"])
def any_field(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
