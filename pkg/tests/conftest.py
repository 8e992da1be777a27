import os
import sys

import numpy as np
import pytest
from hypothesis import settings, strategies as st

from oscspline.bb import BernsteinPiece, Interval
from oscspline.space import RefinedPartition

settings.register_profile("default", max_examples=60, deadline=None)
settings.register_profile("thorough", max_examples=600, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

coef = st.floats(-1.0, 1.0, allow_nan=False, allow_infinity=False)


@st.composite
def intervals(draw):
    a = draw(st.floats(-2.0, 2.0))
    length = draw(st.floats(0.25, 3.0))
    return Interval(a, a + length)


@st.composite
def pieces(draw, min_degree=1, max_degree=6):
    d = draw(st.integers(min_degree, max_degree))
    ords = draw(st.lists(coef, min_size=d + 1, max_size=d + 1))
    return BernsteinPiece(draw(intervals()), tuple(ords))


@st.composite
def partitions(draw, max_n=4, phis=(2, 3, 4), skew=0.2):
    """Random refined partitions: jittered vertices, splits at the midpoint +- skew."""
    n = draw(st.integers(1, max_n))
    widths = draw(st.lists(st.floats(0.5, 1.5), min_size=n, max_size=n))
    v = np.concatenate([[0.0], np.cumsum(widths)])
    shifts = draw(st.lists(st.floats(-skew, skew), min_size=n, max_size=n))
    z = [v[i] + (0.5 + shifts[i]) * (v[i + 1] - v[i]) for i in range(n)]
    phi = draw(st.lists(st.sampled_from(phis), min_size=n + 1, max_size=n + 1))
    return RefinedPartition(tuple(v), tuple(z), tuple(phi))


def random_partition(rng, n, phis=(2, 3, 4), skew=0.2):
    v = np.concatenate([[0.0], np.cumsum(rng.uniform(0.5, 1.5, n))])
    z = [v[i] + (0.5 + rng.uniform(-skew, skew)) * (v[i + 1] - v[i]) for i in range(n)]
    return RefinedPartition(tuple(v), tuple(z), tuple(int(p) for p in rng.choice(phis, n + 1)))


def power_eval(coeffs, x, j=0):
    """j-th derivative of sum c_m x^m, evaluated directly (independent of the Bernstein code)."""
    total = 0.0
    for m, c in enumerate(coeffs):
        if m >= j:
            fall = 1
            for r in range(j):
                fall *= m - r
            total += c * fall * x ** (m - j)
    return total


def constraint_rank_dimension(part: RefinedPartition) -> int:
    """Dimension of the space as the null space of the smoothness constraints.

    Unknowns are all piece ordinates; each constraint equates one-sided
    derivatives, assembled from unit Bernstein pieces.
    """
    degs = [part.piece_degree(k) for k in range(2 * part.n)]
    offsets = np.concatenate([[0], np.cumsum([d + 1 for d in degs])])
    rows = []

    def deriv_row(k, x, j):
        row = np.zeros(offsets[-1])
        for m in range(degs[k] + 1):
            unit = [0.0] * (degs[k] + 1)
            unit[m] = 1.0
            row[offsets[k] + m] = BernsteinPiece(part.piece_interval(k), unit).eval_derivative(x, j)
        return row

    for i in range(1, part.n):
        for j in range(part.phi[i]):
            rows.append(deriv_row(2 * i - 1, part.vertices[i], j) - deriv_row(2 * i, part.vertices[i], j))
    for i in range(part.n):
        for j in range(2):
            rows.append(deriv_row(2 * i, part.splits[i], j) - deriv_row(2 * i + 1, part.splits[i], j))
    rank = np.linalg.matrix_rank(np.array(rows)) if rows else 0
    return offsets[-1] - rank


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
