"""Trusted evaluators of the gamma function, zeta and the completed zeta.

These are the oracles every other module is judged against, so they avoid
the machinery under test: gamma is a fixed Lanczos approximation and zeta is
the alternating eta series summed with convergence acceleration, falling back
to Euler-Maclaurin summation near the removable singularities of the eta
representation.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from ._asymptotic import bernoulli_number
from .errors import OutOfStripError, PoleError
from .numerics import Number, QuadratureResult, accelerate_alternating

# Lanczos coefficients for g = 7, n = 9 (Godfrey's set). Relative accuracy is
# about 1e-15 for Re(s) >= 1/2. ``oracles/lanczos_coefficients.py`` rebuilds
# them by interpolating the exact Lanczos sum at s = 1..9 in 50-digit
# arithmetic.
LANCZOS_G = 7.0
LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

_SQRT_2PI = math.sqrt(2.0 * math.pi)
_LN2 = math.log(2.0)


def _is_real(s) -> bool:
    return not isinstance(s, complex) and not np.iscomplexobj(s)


def _out(s, value: complex) -> Number:
    return value.real if _is_real(s) else value


def gamma(s: Number) -> Number:
    """Gamma function via the Lanczos approximation and reflection.

    Accurate to about 13 significant digits for ``|s| <= 100``. Real input
    gives a real result.
    """
    z = complex(s)
    if z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real):
        raise PoleError(f"gamma has a pole at {z.real:g}")
    if z.real < 0.5:
        value = math.pi / (cmath.sin(math.pi * z) * gamma(1.0 - z))
        return _out(s, complex(value))
    z -= 1.0
    acc = LANCZOS_COEFFS[0]
    for i in range(1, len(LANCZOS_COEFFS)):
        acc += LANCZOS_COEFFS[i] / (z + i)
    t = z + LANCZOS_G + 0.5
    value = _SQRT_2PI * cmath.exp((z + 0.5) * cmath.log(t) - t) * acc
    return _out(s, value)


_B2J = [bernoulli_number(2 * j) for j in range(32)]


def zeta_euler_maclaurin(s: Number, n_direct: int | None = None, n_corr: int = 20) -> QuadratureResult:
    """Zeta by direct summation with an Euler-Maclaurin tail correction.

    Valid for any ``s != 1``; the remainder estimate is the first omitted
    correction term.
    """
    z = complex(s)
    if z == 1.0:
        raise PoleError("zeta has a pole at s = 1")
    if n_direct is None:
        n_direct = max(20, int(abs(z)) + 10)
    N = n_direct
    k = np.arange(1, N, dtype=float)
    head = complex(np.sum(k ** (-z)))
    tail = N ** (1.0 - z) / (z - 1.0) + 0.5 * N ** (-z)
    rising = z  # s (s+1) ... (s+2j-2)
    term = 0.0
    for j in range(1, n_corr + 1):
        term = _B2J[j] / math.factorial(2 * j) * rising * N ** (-z - 2 * j + 1)
        tail += term
        rising *= (z + 2 * j - 1) * (z + 2 * j)
    nxt = _B2J[n_corr + 1] / math.factorial(2 * n_corr + 2) * rising * N ** (-z - 2 * n_corr - 1)
    value = complex(head + tail)
    err = abs(nxt) + 1e-15 * (abs(value) + float(np.sum(k ** (-z.real))))
    return QuadratureResult(_out(s, value), float(err), N)


def _near_spurious(z: complex) -> bool:
    """True within 1e-3 of a zero of 1 - 2^(1-s) other than s = 1."""
    k = round(z.imag * _LN2 / (2.0 * math.pi))
    if k == 0:
        return False
    return abs(z - complex(1.0, 2.0 * math.pi * k / _LN2)) < 1e-3


def zeta_reference_result(s: Number) -> QuadratureResult:
    """Zeta with an error estimate; see :func:`zeta_reference`."""
    z = complex(s)
    if z == 1.0:
        raise PoleError("zeta has a pole at s = 1")
    if z.real <= 0.0:
        raise OutOfStripError("the eta representation needs Re(s) > 0")
    if _near_spurious(z):
        return zeta_euler_maclaurin(s)
    eta = accelerate_alternating(lambda k: (-1.0) ** k * (k + 1.0) ** (-z), 5e-13, max_terms=256)
    factor = 1.0 - 2.0 ** (1.0 - z)
    value = complex(eta.value) / factor
    err = (eta.err_bound + 1e-16 * abs(eta.value)) / abs(factor)
    return QuadratureResult(_out(s, value), float(err), eta.evaluations)


def zeta_reference(s: Number) -> Number:
    """Riemann zeta for ``Re(s) > 0``, ``s != 1``.

    Uses the alternating eta series ``sum (-1)^(n-1) n^(-s)`` divided by
    ``1 - 2^(1-s)``. About 13 significant digits for ``0 < Re(s) <= 40``
    and ``|Im(s)| <= 50``.

    Raises
    ------
    PoleError
        At ``s = 1``.
    OutOfStripError
        For ``Re(s) <= 0``.
    """
    return zeta_reference_result(s).value


def completed_zeta(s: Number) -> Number:
    """``pi^(-s/2) Gamma(s/2) zeta(s)``, extended to Re(s) <= 0 by ``s -> 1 - s``."""
    z = complex(s)
    if z == 0.0 or z == 1.0:
        raise PoleError("the completed zeta has poles at 0 and 1")
    if z.real <= 0.0:
        return _out(s, complex(completed_zeta(1.0 - z)))
    value = cmath.exp(-0.5 * z * math.log(math.pi)) * complex(gamma(0.5 * z)) * complex(zeta_reference(z))
    return _out(s, value)


def trivial_zeta(s: Number) -> float:
    """``Im(s) (2 Re(s) - 1)``; vanishes on the critical line and the real axis."""
    z = complex(s)
    return z.imag * (2.0 * z.real - 1.0)
