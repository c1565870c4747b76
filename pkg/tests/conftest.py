import numpy as np
import pytest
from hypothesis import strategies as st

from bipcospec.matrix import ZMatrix

V_FIG_ROWS = [[1, 0], [1, 0], [0, 1], [0, 1]]
B_FIG_ROWS = [[1, 1, 0], [1, 0, 1], [1, 0, 0]]


@pytest.fixture
def v_fig():
    return ZMatrix.from_rows(V_FIG_ROWS)


@pytest.fixture
def b_fig():
    return ZMatrix.from_rows(B_FIG_ROWS)


def random_valid(rng, rows, cols, density=0.5):
    """0/1 matrix with no zero row or column.

    Empty lines get one random entry instead of a full redraw, so thin
    shapes at low density stay cheap.
    """
    rows, cols = int(rows), int(cols)
    a = rng.random((rows, cols)) < density
    for i in np.flatnonzero(~a.any(axis=1)):
        a[i, rng.integers(cols)] = True
    for j in np.flatnonzero(~a.any(axis=0)):
        a[rng.integers(rows), j] = True
    return ZMatrix.from_rows(a.astype(int).tolist())


@st.composite
def binary_matrices(draw, max_rows=4, max_cols=4, min_rows=1, min_cols=1):
    r = draw(st.integers(min_rows, max_rows))
    c = draw(st.integers(min_cols, max_cols))
    bits = draw(st.lists(st.integers(0, 1), min_size=r * c, max_size=r * c))
    return ZMatrix(r, c, tuple(bits))


@st.composite
def valid_binary_matrices(draw, max_rows=4, max_cols=4):
    """0/1 matrices without zero rows or columns."""
    a = draw(binary_matrices(max_rows, max_cols))
    rows = a.tolist()
    for i, row in enumerate(rows):
        if not any(row):
            row[i % a.cols] = 1
    for j in range(a.cols):
        if not any(r[j] for r in rows):
            rows[j % a.rows][j] = 1
    return ZMatrix.from_rows(rows)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


# one summary line per acceptance criterion
_criteria = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        name = report.nodeid.split("::")[-1]
        key = name.split("[")[0]
        prev = _criteria.get(key, "PASS")
        _criteria[key] = "FAIL" if report.outcome == "failed" or prev == "FAIL" else "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_criteria):
        terminalreporter.write_line(f"{_criteria[key]}  {key}")
