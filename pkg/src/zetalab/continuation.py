"""Continuation of zeta through theta integrals of self-dual test functions.

For ``c`` fixed by the cosine transform,

    M(c)(s) zeta(s) = c(0) / (2 s (s-1)) + I(s),
    I(s) = int_1^inf (x**-s + x**(s-1)) theta(c)(x) dx,

where ``I`` is entire. The factor 1/2 comes from the ``c(0)/2`` terms of
Poisson summation for ``theta(c)(x) = sum_{n >= 1} c(n x)``; callers may pass
another ``pole_factor`` to test alternative normalisations. With ``c = G``
this yields zeta without any series for zeta itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import zeta as hurwitz_zeta

from ._asymptotic import _kappa, periodic_power_integral, power_trig_tail
from .errors import DomainError, OutOfStripError, PoleError, ToleranceNotMet
from .functions import Dilated, Gaussian, TestFunction
from .numerics import DEFAULT_TOL, QuadratureResult, integrate_adaptive
from .reference import trivial_zeta, zeta_reference_result
from .transforms import mellin, theta_values

POLE_GUARD = 1e-3
POLE_FACTOR = 0.5
_TWO_PI = 2.0 * math.pi
_EPS = np.finfo(float).eps


def _guard_pole(s: complex) -> None:
    if abs(s - 1.0) < POLE_GUARD:
        raise PoleError(f"|s - 1| = {abs(s - 1.0):.3g} is inside the pole guard {POLE_GUARD:g}")


def _kinks(c: TestFunction, lo: float, hi: float) -> list[float]:
    """Points in ``(lo, hi)`` where ``theta(c)`` may fail to be smooth."""
    pts = set()
    exp = c.expansion()
    if exp is not None:
        for phi in exp.frequencies:
            k = math.floor(lo * phi) + 1
            while k / phi < hi:
                pts.add(k / phi)
                k += 1
    for b in c.breakpoints:
        n = 1
        while b / n > lo:
            if b / n < hi:
                pts.add(b / n)
            n += 1
    return sorted(pts)


def _rapid_tail(c: TestFunction, exponent: float, X: float) -> float:
    """Bound on ``int_X^inf x**exponent theta(|c|)(x) dx`` for rapidly decaying ``c``, X >= 1."""
    sig = max(exponent, 0.0) + 1.0
    total = 0.0
    for n in range(1, 100_000):
        term = n**-sig * c.moment_tail_bound(sig, n * X)
        total += term
        if term <= 1e-30 or term <= 1e-17 * total:
            break
    return total


def _theta_expansion_integral(c: TestFunction, a: complex, X: float) -> tuple[complex, float]:
    """``int_X^inf x**a theta(c)(x) dx`` from the expansion of ``c`` (``X >= start``)."""
    exp = c.expansion()
    total = 0.0j
    err = 0.0
    for phi, j, cc, ss in exp.terms:
        b = a - j
        if phi == 0.0:
            if cc:
                total += cc * float(hurwitz_zeta(j, 1)) * (-(X ** (b + 1)) / (b + 1))
            continue
        coef = cc if j % 2 == 0 else ss
        other = ss if j % 2 == 0 else cc
        if other:
            raise DomainError("expansion term without a closed-form lattice sum")
        if coef:
            val, bound = periodic_power_integral(b, j, phi, X)
            total += coef * _kappa(j) * val
            err += abs(coef * _kappa(j)) * bound
    J = exp.rem_power
    err += exp.rem_coef * float(hurwitz_zeta(J, 1)) * X ** (a.real - J + 1) / (J - a.real - 1)
    return total, err + 64 * _EPS * abs(total)


def tail_integral(c: TestFunction, s: complex, tol: float = DEFAULT_TOL) -> QuadratureResult:
    """``int_1^inf (x**-s + x**(s-1)) theta(c)(x) dx``.

    For rapidly decaying ``c`` the range is cut where the tail bound falls
    below ``tol``. For power-law ``c`` the integral past the expansion
    cutoff is done in closed form, which needs ``-1 < Re(s) < 2``.
    """
    s = complex(s)
    _guard_pole(s)
    sigma = s.real

    def integrand(x):
        return (x ** (-s) + x ** (s - 1.0)) * theta_values(c, x, 1e-3 * tol)

    exp = c.expansion()
    if exp is None:
        if not c.rapid:
            raise DomainError("tail_integral needs a rapidly decaying c or one with an expansion")
        m = max(-sigma, sigma - 1.0)
        hi = 2.0 * (c.support if math.isfinite(c.support) else 16.0)
        return integrate_adaptive(integrand, 1.0, math.inf, tol, breakpoints=_kinks(c, 1.0, hi),
                                  tail_bound=lambda X: 2.0 * _rapid_tail(c, m, X))
    if not -1.0 < sigma < 2.0:
        raise OutOfStripError("closed-form theta tail needs -1 < Re(s) < 2")
    X0 = max(exp.start, 2.0)
    lo_part, lo_err = _theta_expansion_integral(c, -s, X0)
    hi_part, hi_err = _theta_expansion_integral(c, s - 1.0, X0)
    budget = max(0.5 * tol, tol - lo_err - hi_err)
    head = integrate_adaptive(integrand, 1.0, X0, budget, breakpoints=_kinks(c, 1.0, X0))
    return QuadratureResult(head.value + lo_part + hi_part, head.err_bound + lo_err + hi_err,
                            head.evaluations)


@dataclass(frozen=True)
class MuntzSides:
    """Both sides of ``M(c)(s) zeta(s) = pole_factor c(0)/(s(s-1)) + I(s)``."""

    s: complex
    lhs: QuadratureResult
    rhs: QuadratureResult

    @property
    def residual(self) -> QuadratureResult:
        return QuadratureResult(abs(self.lhs.value - self.rhs.value),
                                self.lhs.err_bound + self.rhs.err_bound)


def muntz_sides(c: TestFunction, s: complex, tol: float = DEFAULT_TOL,
                pole_factor: float = POLE_FACTOR) -> MuntzSides:
    s = complex(s)
    _guard_pole(s)
    if not 0.0 < s.real < 2.0:
        raise OutOfStripError("the identity is checked for 0 < Re(s) < 2")
    m = mellin(c, s, tol)
    z = zeta_reference_result(s)
    lhs_val = m.value * complex(z.value)
    lhs = QuadratureResult(lhs_val, abs(z.value) * m.err_bound + abs(m.value) * z.err_bound
                           + 4 * _EPS * abs(lhs_val))
    tail = tail_integral(c, s, tol)
    pole = pole_factor * c(0.0) / (s * (s - 1.0))
    rhs = QuadratureResult(pole + tail.value, tail.err_bound + 4 * _EPS * abs(pole))
    return MuntzSides(s, lhs, rhs)


def muntz_residual(c: TestFunction, s: complex, tol: float = DEFAULT_TOL,
                   pole_factor: float = POLE_FACTOR) -> QuadratureResult:
    """``|M(c)(s) zeta(s) - pole_factor c(0)/(s(s-1)) - I(s)|`` with the combined bound.

    ``zeta`` comes from :func:`~zetalab.reference.zeta_reference`.
    """
    return muntz_sides(c, s, tol, pole_factor).residual


def zeta_via_theta_quotient(s: complex, tol: float = DEFAULT_TOL,
                            pole_factor: float = POLE_FACTOR) -> QuadratureResult:
    """``zeta(s) = (pole_factor/(s(s-1)) + I_G(s)) / M(G)(s)``, everything by quadrature.

    Valid for ``Re(s) > 0`` (where ``M(G)`` converges), ``s != 1``.
    """
    s = complex(s)
    if s == 0.0:
        raise PoleError("s = 0")
    _guard_pole(s)
    G = Gaussian()
    m = mellin(G, s, 1e-2 * tol)
    tail = tail_integral(G, s, 1e-2 * tol)
    num = pole_factor / (s * (s - 1.0)) + tail.value
    value = num / m.value
    err = (tail.err_bound + abs(value) * m.err_bound) / abs(m.value) + 4 * _EPS * abs(value)
    return QuadratureResult(value, err, m.evaluations + tail.evaluations)


def mellin_of_theta(c: TestFunction, s: complex, n_terms: int = 8,
                    tol: float = DEFAULT_TOL) -> QuadratureResult:
    """``M(theta(c))(s)`` for ``1 < Re(s) < 2`` as a term-wise sum of Mellin transforms.

    The first ``n_terms`` terms ``M(c(n .))(s)`` are separate quadratures of the
    dilated functions; the remaining terms use ``M(c(n .)) = M(c) n**-s`` and
    the Dirichlet tail ``zeta(s) - sum_{n <= N} n**-s``.
    """
    s = complex(s)
    if not 1.0 < s.real < 2.0:
        raise OutOfStripError("term-wise theta Mellin transform needs 1 < Re(s) < 2")
    head = QuadratureResult(0.0j, 0.0)
    for n in range(1, n_terms + 1):
        head = head + mellin(Dilated(float(n), c), s, tol / n_terms)
    z = zeta_reference_result(s)
    partial = sum(n ** (-s) for n in range(1, n_terms + 1))
    rest = complex(z.value) - partial
    m = mellin(c, s, tol)
    tail_val = m.value * rest
    tail_err = abs(rest) * m.err_bound + abs(m.value) * (z.err_bound + 8 * _EPS * n_terms)
    return QuadratureResult(head.value + tail_val, head.err_bound + tail_err, head.evaluations)


@dataclass(frozen=True)
class ImDecomposition:
    """Pieces of ``Im(M(c)(s) zeta(s))``.

    ``trivial_term_derived`` is ``Im(c(0)/(2 s(s-1))) = -c(0) zt(s)/(2|s(s-1)|**2)``
    with ``zt(s) = Im(s)(2 Re(s) - 1)``; ``trivial_term_paper`` is
    ``+c(0) zt(s)/|s(s-1)|**2``. ``oscillatory_derived`` uses
    the phase ``sin(Im(s) ln x)``, ``oscillatory_paper`` the phase
    ``sin(Im(s) x)``.
    """

    direct: float
    trivial_term_paper: float
    trivial_term_derived: float
    oscillatory_paper: float
    oscillatory_derived: float
    err_bound: float

    @property
    def derived_residual(self) -> float:
        return abs(self.direct - self.trivial_term_derived - self.oscillatory_derived)

    @property
    def paper_residual(self) -> float:
        return abs(self.direct - self.trivial_term_paper - self.oscillatory_paper)


def _paper_oscillatory(c: TestFunction, s: complex, tol: float) -> QuadratureResult:
    """``int_1^inf (x**(Re s - 1) - x**-Re s) theta(c)(x) sin(Im(s) x) dx``."""
    sigma, t = s.real, s.imag
    if t == 0.0:
        return QuadratureResult(0.0, 0.0)

    def integrand(x):
        return (x ** (sigma - 1.0) - x ** (-sigma)) * theta_values(c, x, 1e-3 * tol) * np.sin(t * x)

    exp = c.expansion()
    if exp is None:
        m = max(-sigma, sigma - 1.0)
        return integrate_adaptive(integrand, 1.0, math.inf, tol, breakpoints=_kinks(c, 1.0, 32.0),
                                  tail_bound=lambda X: 2.0 * _rapid_tail(c, m, X))
    # beyond X0: theta(c)(x) = sum_j x**-j sum_n n**-j (cc cos + ss sin)(2 pi n phi x)
    need = 4.0 * (abs(s) + 12.0)
    X0 = max(exp.start, 2.0)
    betas = [abs(_TWO_PI * n * phi + sg * t) for phi in exp.frequencies for n in range(1, 64)
             for sg in (1.0, -1.0)]
    gap = min([b for b in betas if b > 0.0] + [abs(t)])
    X0 = max(X0, need / gap)
    if X0 > 1e4:
        raise ToleranceNotMet("sin(Im(s) x) phase is too close to a lattice frequency")
    tail = 0.0
    err = 0.0
    for a in (complex(sigma - 1.0), complex(-sigma)):
        sign = 1.0 if a.real == sigma - 1.0 else -1.0
        v, e = _sin_weighted_expansion(exp, a, t, X0)
        tail += sign * v
        err += e
    head = integrate_adaptive(integrand, 1.0, X0, max(0.5 * tol, tol - err),
                              breakpoints=_kinks(c, 1.0, X0))
    return QuadratureResult(head.value + tail, head.err_bound + err, head.evaluations)


def _sin_weighted_expansion(exp, a: complex, t: float, X: float, n_max: int = 4000):
    """``int_X^inf x**a sin(t x) sum_n model(n x) dx`` term by term in ``n``."""
    total = 0.0
    err = 0.0
    for phi, j, cc, ss in exp.terms:
        b = a - j
        if phi == 0.0:
            if cc:
                p, e = power_trig_tail(b, t, X)
                total += cc * float(hurwitz_zeta(j, 1)) * p.imag
                err += abs(cc) * float(hurwitz_zeta(j, 1)) * e
            continue
        for n in range(1, n_max + 1):
            w = _TWO_PI * n * phi
            pp, ep = power_trig_tail(b, w + t, X)
            pm, em = power_trig_tail(b, w - t, X)
            # cos(w x) sin(t x) = (sin((w+t)x) - sin((w-t)x)) / 2
            # sin(w x) sin(t x) = (cos((w-t)x) - cos((w+t)x)) / 2
            val = cc * 0.5 * (pp.imag - pm.imag) + ss * 0.5 * (pm.real - pp.real)
            total += val * n**-j
            err += (abs(cc) + abs(ss)) * (ep + em) * n**-j
        # remaining n: |int| <= 2 X**(Re b) / |w - t| per term
        rest = 2.0 * (abs(cc) + abs(ss)) * X**b.real / (_TWO_PI * phi * n_max - abs(t))
        err += rest * float(hurwitz_zeta(j, n_max + 1))
    J = exp.rem_power
    err += exp.rem_coef * float(hurwitz_zeta(J, 1)) * X ** (a.real - J + 1) / (J - a.real - 1)
    return total, err


def im_decomposition(c: TestFunction, s: complex, tol: float = DEFAULT_TOL) -> ImDecomposition:
    """All candidate pieces of ``Im(M(c)(s) zeta(s))`` for ``0 < Re(s) < 2``."""
    s = complex(s)
    _guard_pole(s)
    if not 0.0 < s.real < 2.0:
        raise OutOfStripError("the decomposition is defined for 0 < Re(s) < 2")
    m = mellin(c, s, tol)
    z = zeta_reference_result(s)
    direct = (m.value * complex(z.value)).imag
    d_err = abs(z.value) * m.err_bound + abs(m.value) * z.err_bound
    c0 = c(0.0)
    trivial = c0 * trivial_zeta(s) / abs(s * (s - 1.0)) ** 2
    osc = tail_integral(c, s, tol)
    paper = _paper_oscillatory(c, s, tol)
    return ImDecomposition(
        direct=float(direct),
        trivial_term_paper=float(trivial),
        trivial_term_derived=float(-POLE_FACTOR * trivial),
        oscillatory_paper=float(paper.value),
        oscillatory_derived=float(osc.value.imag),
        err_bound=float(d_err + osc.err_bound + paper.err_bound),
    )
