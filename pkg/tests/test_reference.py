import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetalab.errors import OutOfStripError, PoleError
from zetalab.numerics import integrate_adaptive
from zetalab.reference import (completed_zeta, gamma, trivial_zeta, zeta_euler_maclaurin,
                               zeta_reference)

BASEL = math.pi**2 / 6




def test_gamma_half():
    assert gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)


def test_gamma_factorial():
    assert gamma(5.0) == pytest.approx(24.0, rel=1e-14)


def test_gamma_quarter_against_quadrature():
    r = integrate_adaptive(lambda x: x**-0.75 * np.exp(-x), 0.0, 1.0, left_exponent=-0.75)
    r2 = integrate_adaptive(lambda x: x**-0.75 * np.exp(-x), 1.0, np.inf, decay=2.0)
    oracle = r.value + r2.value
    assert abs(gamma(0.25) - 3.625609908) < 1e-8
    assert abs(gamma(0.25) - oracle) < 1e-9


def test_gamma_reflection_region():
    assert complex(gamma(-0.5 + 0.3j)) == pytest.approx(complex(mp.gamma(mp.mpc(-0.5, 0.3))), rel=1e-12)


@pytest.mark.parametrize("s", [0.0, -1.0, -7.0])
def test_gamma_poles(s):
    with pytest.raises(PoleError):
        gamma(s)


@settings(max_examples=50, deadline=None)
@given(st.complex_numbers(max_magnitude=20, allow_nan=False, allow_infinity=False))
def test_gamma_recurrence(s):
    if abs(s - round(s.real)) < 1e-3 and round(s.real) <= 0 or abs(s) < 1e-3:
        return
    if abs(s + 1 - round(s.real + 1)) < 1e-3 and round(s.real + 1) <= 0:
        return
    lhs, rhs = complex(gamma(s + 1)), s * complex(gamma(s))
    assert abs(lhs - rhs) <= 1e-10 * abs(lhs)


@settings(max_examples=30, deadline=None)
@given(st.complex_numbers(max_magnitude=60, allow_nan=False, allow_infinity=False))
def test_gamma_vs_mpmath(s):
    if abs(s) > 60 or s.real < 0.5:
        return
    ref = complex(mp.gamma(mp.mpc(s.real, s.imag)))
    assert abs(complex(gamma(s)) - ref) <= 1e-12 * abs(ref)


def test_zeta_basel():
    assert abs(zeta_reference(2.0) - BASEL) < 1e-12


def test_zeta_three():
    assert abs(zeta_reference(3.0) - 1.2020569032) < 1e-9
    assert abs(zeta_euler_maclaurin(3.0).value - 1.2020569031595942) < 1e-13


def test_zeta_first_zero():
    assert abs(zeta_reference(complex(0.5, 14.134725))) < 1e-4


@pytest.mark.parametrize("s", [0.3 + 40j, 0.9 - 50j, 25.0, 0.01 + 1j, 1.0 + 9.0647j])
def test_zeta_vs_mpmath(s):
    ref = complex(mp.zeta(mp.mpc(s.real, s.imag)))
    assert abs(complex(zeta_reference(s)) - ref) <= 1e-10 * abs(ref)


def test_zeta_spurious_point():
    k = 3
    s = complex(1.0, 2 * math.pi * k / math.log(2))
    with mp.workdps(30):
        ref = complex(mp.zeta(mp.mpc(s.real, s.imag)))
    assert abs(complex(zeta_reference(s)) - ref) <= 1e-10 * abs(ref)


def test_zeta_errors():
    with pytest.raises(PoleError):
        zeta_reference(1.0)
    with pytest.raises(OutOfStripError):
        zeta_reference(-0.5)


def test_completed_zeta_symmetry_point():
    s = 0.3 + 2j
    a, b = complex(completed_zeta(s)), complex(completed_zeta(1 - s))
    assert abs(a - b) <= 1e-8 * abs(a)


def test_completed_zeta_real_on_critical_line():
    assert abs(complex(completed_zeta(0.5 + 5j)).imag) < 1e-9


def test_completed_zeta_two():
    assert completed_zeta(2.0) == pytest.approx(math.pi / 6, rel=1e-12)


def test_completed_zeta_poles():
    for s in (0.0, 1.0):
        with pytest.raises(PoleError):
            completed_zeta(s)


def test_functional_equation_grid():
    rng = np.random.default_rng(11)
    for sigma, t in zip(rng.uniform(0.05, 0.95, 20), rng.uniform(-20, 20, 20)):
        s = complex(sigma, t)
        a, b = complex(completed_zeta(s)), complex(completed_zeta(1 - s))
        assert abs(a - b) < 1e-8


def test_trivial_zeta():
    assert trivial_zeta(0.5 + 7j) == 0.0
    assert trivial_zeta(3.0) == 0.0
    assert trivial_zeta(1 + 2j) == 2.0
