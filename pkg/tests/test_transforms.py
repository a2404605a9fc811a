import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetalab import (Dilated, ExpDecay, Gaussian, Indicator01, PeakTimesGaussian, SampledEven,
                     Scaled, Sum, Triangle, fourier_cosine, fourier_image, fox_residual, fox_solve,
                     gamma, make_poisson_element, mellin, psf_residual, s2_norm, theta_transform,
                     unitary_cosine)
from zetalab.errors import DomainError, OutOfStripError, PoleError
from zetalab.transforms import psf_sides

G = Gaussian()
UNITARY_GAUSS = Dilated(1.0 / math.sqrt(2.0 * math.pi), G)  # exp(-x**2 / 2)


def test_s2_norms():
    assert s2_norm(G) == pytest.approx(1 / (math.pi * math.e), rel=1e-8)
    assert s2_norm(Triangle()) == pytest.approx(4 / 27, rel=1e-8)
    assert s2_norm(Scaled(3.0, G)) == pytest.approx(3 / (math.pi * math.e), rel=1e-8)


@settings(max_examples=20, deadline=None)
@given(st.floats(-5, 5).filter(lambda a: abs(a) > 1e-3))
def test_s2_norm_homogeneity(alpha):
    assert s2_norm(Scaled(alpha, G)) == pytest.approx(abs(alpha) * s2_norm(G), rel=1e-8)


@pytest.mark.parametrize("x", [0.0, 0.5, 1.0])
def test_gaussian_self_dual(x):
    assert abs(fourier_cosine(G, x).value - G(x)) < 1e-10


@pytest.mark.parametrize("x", [0.3, 1.0, 2.5])
def test_triangle_fejer(x):
    expected = (math.sin(math.pi * x) / (math.pi * x)) ** 2
    r = fourier_cosine(Triangle(), x)
    assert abs(r.value - expected) <= r.err_bound + 1e-12


@pytest.mark.parametrize("f", [ExpDecay(), Triangle(), PeakTimesGaussian(), G])
def test_involution(f):
    image = fourier_image(f)
    for x in (0.2, 0.7, 1.5):
        r = fourier_cosine(image, x)
        assert abs(r.value - f(x)) < 1e-8


def test_exp_decay_image_closed_form():
    image = fourier_image(ExpDecay())
    for y in (0.0, 0.4, 2.0):
        assert image(y) == pytest.approx(2 / (1 + 4 * math.pi**2 * y * y), rel=1e-10)


def test_theta_values():
    r1 = theta_transform(G, 1.0, 1e-10)
    assert abs(r1.value - 0.0432174) < 1e-7
    r2 = theta_transform(G, 2.0, 1e-12)
    assert abs(r2.value - 3.4873e-6) < 1e-9
    assert r2.err_bound <= 1e-12


@pytest.mark.parametrize("c", [G, Triangle(), ExpDecay(), PeakTimesGaussian()])
def test_theta_tail_bound(c):
    bound = s2_norm(c) * math.pi**2 / 6
    for x in np.linspace(1.0, 10.0, 19):
        assert x * x * abs(theta_transform(c, x).value) <= bound * (1 + 1e-9)


def test_mellin_indicator():
    s = 0.5 + 1j
    r = mellin(Indicator01(), s)
    assert abs(r.value - 1 / s) <= r.err_bound + 1e-12


def test_mellin_exp_is_gamma():
    for s in (0.5, 1.5 + 2j):
        r = mellin(ExpDecay(), s)
        assert abs(r.value - complex(gamma(s))) <= r.err_bound + 1e-12


def test_mellin_gaussian_closed_form_adjudication():
    s = 1.2 + 0.7j
    r = mellin(G, s)
    derived = 0.5 * math.pi ** (-s / 2) * complex(gamma(s / 2))
    printed = math.pi ** ((1 - s) / 2) * complex(gamma((s + 1) / 2))
    assert abs(r.value - derived) <= r.err_bound + 1e-12
    assert abs(r.value - printed) > 1e-2


def test_mellin_strip():
    with pytest.raises(OutOfStripError):
        mellin(fourier_image(Triangle()), 2.5)
    with pytest.raises(OutOfStripError):
        mellin(G, -0.1)


@pytest.mark.parametrize("s", [0.6 + 1j, 1.4 - 0.5j])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_mellin_substitution(s, n):
    c = PeakTimesGaussian()
    lhs = mellin(c, s).value / n**s
    assert abs(mellin(Dilated(float(n), c), s).value - lhs) < 1e-9


def test_mellin_linearity():
    s = 0.7 + 0.4j
    combo = Sum(Scaled(2.0, G), Scaled(-0.5, Triangle()))
    expected = 2 * mellin(G, s).value - 0.5 * mellin(Triangle(), s).value
    assert abs(mellin(combo, s).value - expected) < 1e-9


def test_psf_symmetric_point_exact():
    assert psf_residual(G, 1.0) == 0.0


@pytest.mark.parametrize("x", [0.3, 0.5, 1.0, 2.0, 3.0])
def test_psf_gaussian(x):
    assert psf_residual(G, x) < 1e-10


def test_psf_cylinder(cylinder):
    assert psf_residual(cylinder, 2.0) < 1e-8


def test_psf_unnormalised_general_form():
    c = make_poisson_element(Triangle())
    sides = psf_sides(c, 0.7)
    assert sides.residual <= sides.err_bound + 1e-10


def test_poisson_element_of_half_gaussian():
    c = make_poisson_element(Scaled(0.5, G))
    for x in (0.0, 0.3, 1.7):
        assert c(x) == pytest.approx(G(x), rel=1e-12, abs=1e-15)


@pytest.mark.parametrize("x", [0.3, 1.0, 2.0])
def test_poisson_element_fixed(cylinder, x):
    assert abs(fourier_cosine(cylinder, x).value - cylinder(x)) < 1e-8


def test_poisson_normalisation(cylinder):
    assert cylinder(0.0) == pytest.approx(1.0, rel=1e-12)


def test_poisson_zero_at_origin():
    f = Sum(Scaled(1.0, G), Scaled(-1.0, G))
    with pytest.raises(DomainError):
        make_poisson_element(f, normalize=True)


def test_fox_zero_lambda():
    f = Triangle()
    assert fox_solve(f, 0.0) is f


def test_fox_self_dual():
    lam = 0.3
    phi = fox_solve(UNITARY_GAUSS, lam)
    for x in (0.0, 0.8, 2.0):
        assert phi(x) == pytest.approx(UNITARY_GAUSS(x) / (1 - lam), rel=1e-9)


def test_unitary_gaussian_fixed_point():
    for x in (0.0, 1.0, 2.5):
        assert abs(unitary_cosine(UNITARY_GAUSS, x).value - UNITARY_GAUSS(x)) < 1e-10


@pytest.mark.parametrize("lam", [0.3, -math.sqrt(math.pi / 2)])
@pytest.mark.parametrize("x", [0.1, 1.0, 3.0])
def test_fox_residual(lam, x):
    f = Triangle()
    phi = fox_solve(f, lam)
    assert abs(fox_residual(f, lam, phi, x).value) < 1e-8


def test_fox_unit_lambda():
    with pytest.raises(PoleError):
        fox_solve(G, 1.0)


def test_sampled_even():
    grid = np.linspace(0.0, 2.0, 41)
    c = SampledEven(grid, np.exp(-grid))
    assert c(-1.0) == c(1.0)
    assert c(2.5) == 0.0
    assert s2_norm(c) <= c.decay_certificate + 1e-12
    with pytest.raises(DomainError):
        SampledEven(grid[::-1], grid)


def test_indicator_image_rejected():
    with pytest.raises(DomainError):
        fourier_image(Indicator01())
