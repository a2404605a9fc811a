import io
import math

import numpy as np
import pytest
from scipy import stats

from zetalab import stochastic as st
from zetalab.errors import DomainError

GRID = st.PathGrid.uniform(1.5, 0.01)


def test_peak():
    assert st.peak(0.0) == 1.0
    assert st.peak(0.5) == 0.5
    assert st.peak(2.0) == 0.0
    with pytest.raises(DomainError):
        st.peak(-0.1)


def test_grid_validation():
    with pytest.raises(DomainError):
        st.PathGrid(np.array([0.1, 0.2]))
    with pytest.raises(DomainError):
        st.PathGrid(np.array([0.0, 0.2, 0.2]))
    assert GRID.resolution <= 0.01 + 1e-15


def test_path_starts_at_zero_and_is_deterministic():
    a = st.sample_path(GRID, 3)
    b = st.sample_path(GRID, 3)
    assert a.values[0] == 0.0
    assert np.array_equal(a.values, b.values)
    assert not np.array_equal(a.values, st.sample_path(GRID, 4).values)


def test_rows_do_not_depend_on_count():
    few = st.sample_paths(GRID, 10, 9)
    many = st.sample_paths(GRID, st.CHUNK_PATHS + 5, 9)
    assert np.array_equal(few, many[:10])


def test_brownian_moments():
    rows = st.sample_paths(GRID, 100_000, 1)
    j1, j05, j15 = (int(round(t / 0.01)) for t in (1.0, 0.5, 1.5))
    b1 = rows[:, j1]
    assert abs(b1.mean()) < 3 * b1.std() / math.sqrt(b1.size)
    prod = rows[:, j05] * rows[:, j15]
    assert abs(prod.mean() - 0.5) < 3 * prod.std() / math.sqrt(prod.size)
    assert stats.kstest(b1, "norm").pvalue > 0.01


def test_csv_dump():
    path = st.sample_path(st.PathGrid.uniform(0.05, 0.01), 0)
    buf = io.StringIO()
    path.write_csv(buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "t,value"
    assert len(lines) == path.values.size + 1
    t, v = lines[3].split(",")
    assert float(v) == path.values[2]


def test_girsanov_log_density():
    grid = st.PathGrid(np.array([0.0, 0.5, 1.0, 1.5]))
    path = st.BrownianPath(grid, np.array([0.0, 0.1, 0.3, 0.2]), 0)
    assert st.girsanov_log_density(path, 1) == pytest.approx(-0.2)
    grid2 = st.PathGrid(np.array([0.0, 1.0, 1.2, 1.5]))
    path2 = st.BrownianPath(grid2, np.array([0.0, 0.4, 0.1, 0.2]), 0)
    assert st.girsanov_log_density(path2, 2) == 0.0
    with pytest.raises(DomainError):
        st.girsanov_log_density(path, 3)


def test_girsanov_reweighting():
    check = st.girsanov_check(lambda t, rows: st._rows_at(t, rows, 0.5), 20_000, 2)
    assert check.z_score < 3.0


def test_segment_of():
    assert st.segment_of(0.0) == 1
    assert st.segment_of(0.999) == 1
    assert st.segment_of(1.0) == 2
    assert st.segment_of(2.5) == 3


def test_segment_grid():
    g = st.segment_grid(3)
    assert g[0] == 0.0 and g[1] == pytest.approx(math.sqrt(2)) and g[-1] == pytest.approx(math.sqrt(3))
    assert np.max(np.diff(g[1:])) <= st.RESOLUTION + 1e-15


def test_segment_weights():
    w = st.SEGMENT_WEIGHTS
    assert w.size == st.N_MAX
    assert math.fsum(w) == 1.0
    assert w[0] == 0.5


def test_wr_moment_values():
    n = 1 << 15
    for t in (1.5, 2.0, 3.0):
        assert st.wr_moment(t, n, 0).within(0.0)
    half = st.wr_moment(0.5, n, 0)
    assert half.within(st.wr_moment_closed_form(0.5))
    assert st.wr_moment_closed_form(0.5) == pytest.approx(0.5 * math.exp(-math.pi / 4) * 0.5)
    start = st.wr_moment(0.0, n, 0)
    assert start.within(0.5)
    assert not start.within(1.0)
    assert st.wr_moment_closed_form(0.0, "unit") == 1.0


def test_parallel_equals_serial():
    a = st.wr_moment(0.5, 3 * st.CHUNK_PATHS, 5, workers=1)
    b = st.wr_moment(0.5, 3 * st.CHUNK_PATHS, 5, workers=3)
    assert a == b


def test_sample_wr_paths():
    draws = st.sample_wr_paths(4, 0)
    assert len(draws) == 4
    for n, path in draws:
        assert path.values[0] == 0.0
        assert path.grid.times[-1] == pytest.approx(math.sqrt(n))


def test_b_s_stabilises_and_matches_quadrature():
    est = st.b_s_estimate(0.25, 2048, seed=1)
    assert not est.divergence_flag
    assert abs(est.mean - st.b_s_exact(0.25)) < 4 * est.std_error
    assert len(est.diagnostics) == len(st.DIAGNOSTIC_X_MAX)


def test_b_s_upper_bound():
    est = st.b_s_estimate(0.4, 2048, seed=1)
    assert est.mean <= st.b_s_upper_bound(0.4)
    assert st.b_s_upper_bound(0.5) == math.inf


def test_b_s_domain():
    with pytest.raises(DomainError):
        st.b_s_estimate(0.0, 10)
    with pytest.raises(DomainError):
        st.b_s_estimate(0.3, 10, x_max=0.5)
