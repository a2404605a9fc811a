import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import stats
from scipy.integrate import quad

from zetalab.errors import DomainError
from zetalab.levy import (SAMPLE_CHUNK, Divergent, hill_tail_index, levy_cdf, levy_density,
                          levy_fractional_moment, levy_moment_mc, levy_sample)


def test_density_normalised():
    total, err = quad(levy_density, 0, np.inf, epsabs=1e-13, limit=200)
    assert abs(total - 1.0) < 1e-10


@pytest.mark.parametrize("y0", [0.5, 1.0, 3.0])
def test_density_mode(y0):
    xs = np.linspace(0.01 * y0**2, y0**2, 200_001)
    assert xs[np.argmax(levy_density(xs, y0))] == pytest.approx(y0**2 / 3, rel=1e-4)


def test_density_at_one():
    assert levy_density(1.0) == pytest.approx(math.exp(-0.5) / math.sqrt(2 * math.pi), rel=1e-15)
    assert levy_density(1.0) == pytest.approx(0.24197, abs=1e-5)


def test_domain():
    for bad in (lambda: levy_density(0.0), lambda: levy_cdf(-1.0), lambda: levy_density(1.0, 0.0),
                lambda: levy_fractional_moment(0.0), lambda: levy_sample(-1.0, 3)):
        with pytest.raises(DomainError):
            bad()


def test_cdf_limits_and_value():
    assert levy_cdf(1e30) == pytest.approx(1.0, abs=1e-12)
    assert levy_cdf(1e-3) < 1e-100
    assert levy_cdf(4.0, 2.0) == pytest.approx(0.31731, abs=1e-5)


@pytest.mark.parametrize("x", [0.1, 1.0, 10.0])
def test_cdf_matches_density(x):
    total, _ = quad(levy_density, 0, x, epsabs=1e-13, epsrel=1e-13)
    assert abs(total - levy_cdf(x)) < 1e-9


def test_samples_positive_and_ks():
    draws = levy_sample(1.0, 100_000, 0)
    assert np.all(draws > 0)
    assert stats.kstest(draws, levy_cdf).pvalue > 0.01


def test_sample_scaling():
    a = levy_sample(2.0, 50_000, 1)
    b = levy_sample(1.0, 50_000, 2)
    assert stats.ks_2samp(a / 4.0, b).pvalue > 0.01


def test_sample_prefix_consistent():
    long = levy_sample(1.0, SAMPLE_CHUNK + 10, 3)
    assert np.array_equal(levy_sample(1.0, 100, 3), long[:100])


def test_moment_limits():
    assert levy_fractional_moment(1e-12) == pytest.approx(1.0, abs=1e-10)
    assert levy_fractional_moment(0.25) == pytest.approx(1.72008, abs=1e-5)
    assert isinstance(levy_fractional_moment(0.5), Divergent)
    assert isinstance(levy_fractional_moment(2.0), Divergent)


@pytest.mark.parametrize("u", [0.1, 0.2, 0.3, 0.4])
@pytest.mark.parametrize("y0", [0.5, 1.0, 2.0])
def test_moment_quadrature(u, y0):
    f = lambda x: x**u * levy_density(x, y0)  # noqa: E731
    total = quad(f, 0, y0**2, epsabs=0, epsrel=1e-12, limit=400)[0]
    total += quad(f, y0**2, np.inf, epsabs=0, epsrel=1e-12, limit=400)[0]
    assert total == pytest.approx(levy_fractional_moment(u, y0), rel=1e-8)


@settings(max_examples=30, deadline=None)
@given(st.floats(0.01, 0.49), st.floats(0.1, 10))
def test_moment_scaling(u, y0):
    assert levy_fractional_moment(u, y0) == pytest.approx(y0 ** (2 * u) * levy_fractional_moment(u), rel=1e-13)


def test_mc_scaling_within_error():
    a = levy_moment_mc(0.2, 2.0, 100_000, 4)
    assert a.within(levy_fractional_moment(0.2, 2.0))


def test_mc_quarter():
    est = levy_moment_mc(0.25, 1.0, 1_000_000, 0)
    assert est.within(1.72008)
    assert not est.divergence_flag


def test_mc_deterministic():
    assert levy_moment_mc(0.25, 1.0, 10_000, 5) == levy_moment_mc(0.25, 1.0, 10_000, 5)


def test_mc_flags_divergence():
    est = levy_moment_mc(0.6, 1.0, 100_000, 42)
    assert est.divergence_flag
    labels = [row[0] for row in est.diagnostics]
    assert labels[:4] == ["n=100000", "n=200000", "n=400000", "n=800000"]


def test_hill_index_of_pareto():
    rng = np.random.default_rng(0)
    x = rng.pareto(1.5, 200_000) + 1.0
    alpha, se = hill_tail_index(x)
    assert abs(alpha - 1.5) < 4 * se
