"""Transforms of even test functions: cosine, theta and Mellin.

Two cosine conventions are used:

* ``fourier_cosine``: ``fhat(x) = 2 int_0^inf cos(2 pi x y) f(y) dy``
  (Gaussian ``exp(-pi x**2)`` is self-dual).
* ``unitary_cosine``: ``Uf(x) = sqrt(2/pi) int_0^inf cos(x t) f(t) dt``
  (``exp(-x**2/2)`` is self-dual), related by ``Uf(x) = fhat(x/2pi)/sqrt(2pi)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.optimize import minimize_scalar
from scipy.special import zeta as hurwitz_zeta

from ._asymptotic import Expansion, lattice_tail, power_trig_tail, trig_power_integral
from .errors import DomainError, OutOfStripError, PoleError, ToleranceNotMet
from .functions import (
    Dilated,
    Scaled,
    Sum,
    TestFunction,
    fourier_image,
    unitary_image,
)
from .numerics import DEFAULT_TOL, QuadratureResult, integrate_adaptive

_TWO_PI = 2.0 * math.pi
_EPS = np.finfo(float).eps
_MAX_TERMS = 10_000_000


def s2_norm(c: TestFunction) -> float:
    """``max_x |x**2 c(x)|``, located on a dense grid and refined by Brent's method.

    For functions decaying like ``y**-2`` the supremum may only be approached
    as ``y -> inf``; the limiting oscillation is then included.
    """
    weighted = lambda y: np.abs(y * y * c(y))  # noqa: E731
    exp = c.expansion()
    if math.isfinite(c.support):
        grid = np.linspace(0.0, c.support, 20001)
    else:
        X = 8.0
        if exp is None:
            while X * X * c.tail_sup(X) > 1e-14:
                X *= 2.0
            grid = np.linspace(0.0, X, 40001)
        else:
            X = max(64.0, 4.0 * exp.start)
            grid = np.concatenate([np.linspace(0.0, X, 40001), np.geomspace(X, 1e4 * X, 20001)[1:]])
    grid = np.unique(np.concatenate([grid, [b for b in c.breakpoints if b <= grid[-1]]]))
    vals = weighted(grid)
    best = float(np.max(vals))
    interior = np.flatnonzero((vals[1:-1] >= vals[:-2]) & (vals[1:-1] >= vals[2:])) + 1
    for i in interior[np.argsort(vals[interior])[::-1][:8]]:
        res = minimize_scalar(lambda y: -float(weighted(y)), bounds=(grid[i - 1], grid[i + 1]),
                              method="bounded", options={"xatol": 1e-12})
        best = max(best, -float(res.fun))
    if vals[-1] == np.max(vals):
        best = max(best, float(vals[-1]))
    if exp is not None:
        best = max(best, _limit_sup(exp))
    return best


def _limit_sup(exp: Expansion) -> float:
    """``limsup y**2 |f(y)|`` from the ``y**-2`` terms of an expansion."""
    lead = [(p, c, s) for p, j, c, s in exp.terms if j == 2]
    if any(j < 2 and (c or s) for p, j, c, s in exp.terms):
        raise DomainError("function decays slower than y**-2")
    if not lead:
        return 0.0
    freqs = [p for p, _, _ in lead if p > 0.0]
    period = 1.0 / min(freqs) if freqs else 1.0
    y = np.linspace(0.0, 64.0 * period, 200001)
    h = sum(c * np.cos(_TWO_PI * p * y) + s * np.sin(_TWO_PI * p * y) for p, c, s in lead)
    return float(np.max(np.abs(h)))


# -- cosine transforms ---------------------------------------------------------

def fourier_cosine(f: TestFunction, x: float, tol: float = DEFAULT_TOL) -> QuadratureResult:
    """``2 int_0^inf cos(2 pi x y) f(y) dy`` by adaptive quadrature.

    Sums, multiples and dilations are split linearly. Power-law tails are
    integrated in closed form beyond the expansion cutoff.
    """
    if x < 0.0:
        raise DomainError("fourier_cosine needs x >= 0")
    if isinstance(f, Sum):
        return fourier_cosine(f.left, x, 0.5 * tol) + fourier_cosine(f.right, x, 0.5 * tol)
    if isinstance(f, Scaled):
        if f.alpha == 0.0:
            return QuadratureResult(0.0, 0.0)
        return fourier_cosine(f.of, x, tol / abs(f.alpha)).scaled(f.alpha)
    if isinstance(f, Dilated):
        a = f.factor
        return fourier_cosine(f.of, x / a, tol * a).scaled(1.0 / a)

    def kernel(y):
        return 2.0 * np.cos(_TWO_PI * x * y) * f(y)

    if math.isfinite(f.support):
        return integrate_adaptive(kernel, 0.0, f.support, tol, breakpoints=f.breakpoints)
    exp = f.expansion()
    if exp is None:
        return integrate_adaptive(kernel, 0.0, math.inf, tol,
                                  breakpoints=f.breakpoints, tail_bound=lambda X: 2.0 * f.tail_bound(X))
    Y = exp.start
    rem = 2.0 * exp.rem_coef * Y ** (1 - exp.rem_power) / (exp.rem_power - 1)
    head = integrate_adaptive(kernel, 0.0, Y, max(0.5 * tol, tol - rem),
                              breakpoints=[b for b in f.breakpoints if b < Y])
    tail = 0.0
    for phi, j, c, s in exp.terms:
        bp, bm = _TWO_PI * (x + phi), _TWO_PI * (x - phi)
        if c:
            tail += c * (trig_power_integral(bp, j, Y)[0] + trig_power_integral(bm, j, Y)[0])
        if s:
            tail += s * (_sin_integral(bp, j, Y) - _sin_integral(bm, j, Y))
    return QuadratureResult(head.value + tail, head.err_bound + rem + 64 * _EPS * abs(tail),
                            head.evaluations)


def _sin_integral(beta: float, j: int, Y: float) -> float:
    return 0.0 if beta == 0.0 else trig_power_integral(beta, j, Y)[1]


def unitary_cosine(f: TestFunction, x: float, tol: float = DEFAULT_TOL) -> QuadratureResult:
    """``sqrt(2/pi) int_0^inf cos(x t) f(t) dt`` via :func:`fourier_cosine`."""
    root = math.sqrt(_TWO_PI)
    return fourier_cosine(f, x / _TWO_PI, tol * root).scaled(1.0 / root)


# -- theta ---------------------------------------------------------------------

def theta_transform(c: TestFunction, x: float, tol: float = DEFAULT_TOL) -> QuadratureResult:
    """``sum_{n >= 1} c(n x)`` with the number of terms chosen from a tail bound.

    Rapidly decaying functions are summed until their own tail bound drops
    below ``tol``; power-law functions are summed directly up to the
    expansion cutoff and the rest is added in closed form.
    """
    if not x > 0.0:
        raise DomainError("theta_transform needs x > 0")
    return _theta_cached(c, float(x), float(tol))


@lru_cache(maxsize=1 << 16)
def _theta_cached(c: TestFunction, x: float, tol: float) -> QuadratureResult:
    if math.isfinite(c.support):
        N = math.floor(c.support / x)
        return _direct_sum(c, x, N, 0.0)
    exp = c.expansion()
    if exp is None:
        N = max(1, math.ceil(1.0 / x))
        while c.theta_tail_bound(x, N) > tol:
            N *= 2
            if N > _MAX_TERMS:
                raise ToleranceNotMet(f"theta tail at x={x:g} needs more than {_MAX_TERMS} terms")
        return _direct_sum(c, x, N, c.theta_tail_bound(x, N))
    N0 = max(0, math.ceil(exp.start / x) - 1)
    head = _direct_sum(c, x, N0, 0.0)
    tail = 0.0
    for phi, j, cc, ss in exp.terms:
        part = 0.0
        if cc:
            part += cc * lattice_tail("cos", j, phi * x, N0)
        if ss:
            part += ss * lattice_tail("sin", j, phi * x, N0)
        tail += part * x**-j
    J = exp.rem_power
    rem = exp.rem_coef * x**-J * float(hurwitz_zeta(J, N0 + 1))
    return QuadratureResult(head.value + tail, head.err_bound + rem + 64 * _EPS * abs(tail))


def _direct_sum(c: TestFunction, x: float, N: int, tail: float) -> QuadratureResult:
    if N <= 0:
        return QuadratureResult(0.0, tail)
    vals = c(x * np.arange(1, N + 1, dtype=float))
    total = math.fsum(vals)
    rounding = 4 * _EPS * math.fsum(np.abs(vals))
    return QuadratureResult(total, tail + rounding, N)


def theta_values(c: TestFunction, xs, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Vectorised :func:`theta_transform` values (error bounds dropped)."""
    xs = np.asarray(xs, dtype=float)
    flat = [theta_transform(c, v, tol).value for v in xs.ravel().tolist()]
    return np.asarray(flat, dtype=float).reshape(xs.shape)


# -- Mellin --------------------------------------------------------------------

def mellin(c: TestFunction, s: complex, tol: float = DEFAULT_TOL) -> QuadratureResult:
    """``int_0^inf x**(s-1) c(x) dx``, split at 1.

    On ``[0, 1]`` the substitution ``x = e^{-v}`` turns the endpoint
    singularity and the ``Im(s) ln x`` phase into a damped linear phase.
    The strip is ``0 < Re(s) < c.mellin_upper`` (2 for ``y**-2`` decay).

    Raises
    ------
    OutOfStripError
        Outside the strip.
    """
    s = complex(s)
    sigma = s.real
    if not 0.0 < sigma < c.mellin_upper:
        upper = c.mellin_upper
        raise OutOfStripError(f"Mellin transform needs 0 < Re(s) < {upper:g}, got Re(s) = {sigma:g}")
    return _mellin_lower(c, s, 0.5 * tol) + _mellin_upper(c, s, 0.5 * tol)


def _mellin_lower(c: TestFunction, s: complex, tol: float) -> QuadratureResult:
    sigma = s.real
    probe = np.linspace(0.0, 1.0, 257)
    sup = 1.1 * float(np.max(np.abs(c(probe)))) + 1e-300
    V = max(1.0, math.log(4.0 * sup / (sigma * tol)) / sigma)
    cut = sup * math.exp(-sigma * V) / sigma

    def integrand(v):
        return np.exp(-s * v) * c(np.exp(-v))

    bps = [-math.log(b) for b in c.breakpoints if 0.0 < b < 1.0]
    res = integrate_adaptive(integrand, 0.0, V, tol - cut, breakpoints=bps)
    return QuadratureResult(res.value, res.err_bound + cut, res.evaluations)


def _mellin_upper(c: TestFunction, s: complex, tol: float) -> QuadratureResult:
    sigma = s.real
    if c.support <= 1.0:
        return QuadratureResult(0.0, 0.0)

    def integrand(x):
        return x ** (s - 1.0) * c(x)

    if math.isfinite(c.support):
        return integrate_adaptive(integrand, 1.0, c.support, tol, breakpoints=c.breakpoints)
    exp = c.expansion()
    if exp is None:
        return integrate_adaptive(integrand, 1.0, math.inf, tol, breakpoints=c.breakpoints,
                                  tail_bound=lambda X: c.moment_tail_bound(sigma, X))
    Y = exp.start
    J = exp.rem_power
    rem = exp.rem_coef * Y ** (sigma - J) / (J - sigma)
    head = integrate_adaptive(integrand, 1.0, Y, max(0.5 * tol, tol - rem),
                              breakpoints=[b for b in c.breakpoints if 1.0 < b < Y])
    tail = 0.0j
    tail_err = 0.0
    for phi, j, cc, ss in exp.terms:
        a = s - 1.0 - j
        beta = _TWO_PI * phi
        if beta == 0.0:
            p0, e0 = power_trig_tail(a, 0.0, Y)
            tail += cc * p0
            tail_err += abs(cc) * e0
            continue
        pp, ep = power_trig_tail(a, beta, Y)
        pm, em = power_trig_tail(a, -beta, Y)
        tail += cc * 0.5 * (pp + pm) + ss * (pp - pm) / 2j
        tail_err += (abs(cc) + abs(ss)) * (ep + em)
    return QuadratureResult(head.value + tail, head.err_bound + rem + tail_err + 64 * _EPS * abs(tail),
                            head.evaluations)


# -- Poisson summation, cylinder and the Fox equation ---------------------------

@dataclass(frozen=True)
class PSFSides:
    """Both sides of ``theta(1/x)/x + c(0)/(2x) = c(0)/2 + theta(x)``."""

    x: float
    lhs: QuadratureResult
    rhs: QuadratureResult

    @property
    def residual(self) -> float:
        return abs(self.lhs.value - self.rhs.value)

    @property
    def err_bound(self) -> float:
        return self.lhs.err_bound + self.rhs.err_bound


def psf_sides(c: TestFunction, x: float, tol: float = DEFAULT_TOL) -> PSFSides:
    """Evaluate both sides of the Poisson summation identity for a self-dual ``c``.

    The value ``c(0)`` replaces the normalisation 1 so unnormalised cylinder
    elements can be checked as well.
    """
    if not x > 0.0:
        raise DomainError("psf needs x > 0")
    c0 = c(0.0)
    inner = theta_transform(c, 1.0 / x, 0.5 * tol * x)
    lhs = QuadratureResult(inner.value / x + c0 / (2.0 * x), inner.err_bound / x)
    outer = theta_transform(c, x, 0.5 * tol)
    rhs = QuadratureResult(c0 / 2.0 + outer.value, outer.err_bound)
    return PSFSides(x, lhs, rhs)


def psf_residual(c: TestFunction, x: float, tol: float = DEFAULT_TOL) -> float:
    """``|lhs - rhs|`` of the Poisson summation identity at ``x``."""
    return psf_sides(c, x, tol).residual


def make_poisson_element(f: TestFunction, normalize: bool = False) -> TestFunction:
    """``c = f + fhat``, a fixed point of :func:`fourier_cosine`.

    With ``normalize=True`` the result is rescaled so that ``c(0) = 1``.

    Raises
    ------
    DomainError
        If normalisation is requested and ``c(0) = 0``.
    """
    c = Sum(f, fourier_image(f))
    if not normalize:
        return c
    c0 = c(0.0)
    if c0 == 0.0:
        raise DomainError("c(0) = 0, cannot normalise to c(0) = 1")
    return Scaled(1.0 / c0, c)


def fox_solve(f: TestFunction, lam: float) -> TestFunction:
    """Solve ``f = phi - lam * U phi`` for ``phi`` with the unitary cosine kernel.

    Since ``U`` is an involution on even functions,
    ``phi = (f + lam * U f) / (1 - lam**2)``.

    Raises
    ------
    PoleError
        For ``lam = +1`` or ``-1``.
    """
    if abs(lam) == 1.0:
        raise PoleError("the Fox equation is singular at lambda = +-1")
    if lam == 0.0:
        return f
    d = 1.0 - lam * lam
    return Sum(Scaled(1.0 / d, f), Scaled(lam / d, unitary_image(f)))


def fox_residual(f: TestFunction, lam: float, phi: TestFunction, x: float,
                 tol: float = 1e-11) -> QuadratureResult:
    """``f(x) - (phi(x) - lam * U phi(x))`` with ``U phi`` computed by quadrature."""
    u = unitary_cosine(phi, x, tol / max(abs(lam), 1e-300))
    value = f(x) - (phi(x) - lam * u.value)
    return QuadratureResult(value, abs(lam) * u.err_bound + 8 * _EPS * (abs(f(x)) + abs(phi(x))),
                            u.evaluations)


__all__ = [
    "PSFSides",
    "fourier_cosine",
    "fox_residual",
    "fox_solve",
    "make_poisson_element",
    "mellin",
    "psf_residual",
    "psf_sides",
    "s2_norm",
    "theta_transform",
    "theta_values",
    "unitary_cosine",
]
