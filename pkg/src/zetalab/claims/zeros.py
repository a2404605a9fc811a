"""Critical-line zero scan and the Chebyshev sum inequality."""

from __future__ import annotations

import math

import numpy as np
from scipy.optimize import brentq

from ..errors import DomainError
from ..reference import completed_zeta, zeta_reference

ZERO_XTOL = 1e-6
T_MAX = 50.0


def hardy_real(t: float) -> float:
    """``zeta*(1/2 + i t)``, real up to rounding."""
    return complex(completed_zeta(complex(0.5, t))).real


def critical_zero_scan(t_lo: float, t_hi: float, step: float) -> list[float]:
    """Ordinates in ``[t_lo, t_hi]`` where ``zeta*(1/2 + i t)`` changes sign.

    The grid ``t_lo, t_lo + step, ...`` is scanned for sign changes, and each
    bracket is refined by Brent's method to ``1e-6``. Zeros closer together
    than ``step`` can cancel in pairs and are then missed.
    """
    if not (0.0 <= t_lo < t_hi <= T_MAX):
        raise DomainError(f"need 0 <= t_lo < t_hi <= {T_MAX:g}")
    if not step > 0.0:
        raise DomainError("step must be positive")
    n = max(1, math.ceil((t_hi - t_lo) / step))
    grid = np.linspace(t_lo, t_hi, n + 1)
    values = [hardy_real(t) for t in grid]
    zeros = []
    for a, b, fa, fb in zip(grid[:-1], grid[1:], values[:-1], values[1:]):
        if fa == 0.0:
            zeros.append(float(a))
        elif fa * fb < 0.0:
            zeros.append(float(brentq(hardy_real, a, b, xtol=ZERO_XTOL, rtol=4 * np.finfo(float).eps)))
    if values[-1] == 0.0:
        zeros.append(float(grid[-1]))
    return zeros


def offline_minimum(sigmas, t_lo: float, t_hi: float, step: float) -> tuple[float, complex]:
    """Smallest ``|zeta(s)|`` over the grid ``sigma + i t`` and where it occurs.

    ``zeta`` rather than ``zeta*`` is used because the Gamma factor decays
    like ``exp(-pi t / 4)`` and would swamp the minimum.
    """
    best, where = math.inf, complex(math.nan)
    for sigma in sigmas:
        if sigma == 0.5:
            raise DomainError("the off-line grid must avoid Re(s) = 1/2")
        for t in np.arange(t_lo, t_hi + 0.5 * step, step):
            s = complex(sigma, t)
            value = abs(complex(zeta_reference(s)))
            if value < best:
                best, where = value, s
    return best, where


def chebyshev_sum_check(a, b) -> tuple[bool, float]:
    """Test ``mean(a b) >= mean(a) mean(b)`` and return it with the gap.

    The gap is computed as ``sum_{i,j} (a_i - a_j)(b_i - b_j) / (2 N**2)``.
    The sign of each floating-point difference is exact, so the sign of every
    term is exact as well. Similarly ordered sequences therefore never report
    a spurious negative gap.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.ndim != 1 or b.ndim != 1:
        raise DomainError("a and b must be one-dimensional")
    if a.size != b.size:
        raise DomainError(f"length mismatch: {a.size} != {b.size}")
    if a.size == 0:
        raise DomainError("need at least one element")
    if np.any(~(a > 0.0)) or np.any(~(b > 0.0)):
        raise DomainError("entries must be positive")
    n = a.size
    products = np.subtract.outer(a, a) * np.subtract.outer(b, b)
    gap = math.fsum(products.ravel()) / (2.0 * n * n)
    return gap >= 0.0, gap
