import math

import numpy as np
import pytest

from zetalab import (Gaussian, im_decomposition, mellin, mellin_of_theta, muntz_residual,
                     tail_integral, zeta_reference, zeta_via_theta_quotient)
from zetalab.continuation import POLE_FACTOR, muntz_sides
from zetalab.errors import OutOfStripError, PoleError

G = Gaussian()


def test_tail_integral_symmetry():
    s = 0.3 + 4j
    assert abs(tail_integral(G, s).value - tail_integral(G, 1 - s).value) < 1e-10


def test_tail_integral_symmetry_grid():
    rng = np.random.default_rng(5)
    for sigma, t in zip(rng.uniform(-1, 2, 10), rng.uniform(-10, 10, 10)):
        s = complex(sigma, t)
        assert abs(tail_integral(G, s).value - tail_integral(G, 1 - s).value) < 1e-9


def test_tail_integral_at_two():
    # the pole term is c(0)/(2 s(s-1)) = 1/4 at s = 2
    expected = mellin(G, 2.0).value * math.pi**2 / 6 - 0.25
    assert abs(tail_integral(G, 2.0).value - expected) < 1e-10


def test_tail_integral_real_for_real_s():
    assert abs(complex(tail_integral(G, 0.5).value).imag) < 1e-12


@pytest.mark.parametrize("s", [1.5, 0.5 + 3j])
def test_muntz_gaussian(s):
    assert muntz_residual(G, s).value < 1e-8


def test_muntz_cylinder(cylinder):
    assert muntz_residual(cylinder, 1.2).value < 1e-6


def test_muntz_printed_constant_misses_by_half_pole():
    s = 1.5
    r = muntz_residual(G, s, pole_factor=1.0).value
    assert r == pytest.approx(abs(0.5 / (s * (s - 1))), rel=1e-8)
    assert POLE_FACTOR == 0.5


def test_muntz_errors():
    with pytest.raises(PoleError):
        muntz_sides(G, 1.0)
    with pytest.raises(OutOfStripError):
        muntz_sides(G, 2.5)


def test_quotient_basel():
    r = zeta_via_theta_quotient(2.0)
    assert abs(r.value - math.pi**2 / 6) <= max(r.err_bound, 1e-12)


def test_quotient_half():
    assert abs(zeta_via_theta_quotient(0.5).value - -1.4603545) < 1e-6


def test_quotient_off_axis():
    s = 0.25 + 5j
    r = zeta_via_theta_quotient(s)
    assert abs(r.value - zeta_reference(s)) < 1e-9


def test_quotient_poles():
    for s in (0.0, 1.0, 1.0005):
        with pytest.raises(PoleError):
            zeta_via_theta_quotient(s)


@pytest.mark.parametrize("s", [1.2, 1.5 + 2j, 1.8 - 1j, 1.1 + 0.3j, 1.6 + 5j])
def test_mellin_of_theta(s):
    lhs = mellin(G, s).value * zeta_reference(s)
    assert abs(mellin_of_theta(G, s).value - lhs) < 1e-8


def test_mellin_of_theta_strip():
    with pytest.raises(OutOfStripError):
        mellin_of_theta(G, 0.5)


def test_im_decomposition_real_axis():
    d = im_decomposition(G, 0.7)
    assert d.direct == 0.0 or abs(d.direct) < 1e-15
    assert d.trivial_term_paper == 0.0 and d.oscillatory_paper == 0.0
    assert abs(d.oscillatory_derived) < 1e-15


def test_im_decomposition_critical_line():
    d = im_decomposition(G, 0.5 + 2j)
    assert d.trivial_term_paper == 0.0 and d.trivial_term_derived == 0.0


def test_im_decomposition_derived_matches():
    d = im_decomposition(G, 0.75 + 2j)
    assert d.derived_residual < 1e-7
    assert d.paper_residual > 1e-3
    assert d.err_bound >= 0.0
