"""The 1/2-stable Levy law: density, distribution function, sampler and moments.

With parameter ``y0 > 0`` the law is that of ``y0**2 / Z**2`` for a standard
normal ``Z``. Fractional moments ``E[L**u]`` are finite exactly for
``u < 1/2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import erfc, gamma

from .errors import DomainError
from .numerics import MomentEstimate, check_seed, mean_and_error, rng_for

SAMPLE_CHUNK = 1 << 18
_SQRT_2PI = math.sqrt(2.0 * math.pi)


@dataclass(frozen=True)
class Divergent:
    """Typed outcome for a moment that is infinite."""

    u: float
    reason: str = "E[L**u] is infinite for u >= 1/2"


def _check(y0: float) -> None:
    if not y0 > 0.0:
        raise DomainError("y0 must be positive")


def levy_density(x, y0: float = 1.0):
    """``y0 exp(-y0**2 / (2x)) / (sqrt(2 pi) x**1.5)`` for ``x > 0``."""
    _check(y0)
    arr = np.asarray(x, dtype=float)
    if np.any(arr <= 0.0):
        raise DomainError("the Levy density is defined for x > 0")
    out = y0 * np.exp(-0.5 * y0 * y0 / arr) / (_SQRT_2PI * arr**1.5)
    return float(out) if out.ndim == 0 else out


def levy_cdf(x, y0: float = 1.0):
    """``P(L <= x) = erfc(y0 / sqrt(2x))``."""
    _check(y0)
    arr = np.asarray(x, dtype=float)
    if np.any(arr <= 0.0):
        raise DomainError("the Levy distribution function is defined for x > 0")
    out = erfc(y0 / np.sqrt(2.0 * arr))
    return float(out) if out.ndim == 0 else out


def levy_sample(y0: float, n: int, seed: int = 0) -> np.ndarray:
    """``n`` i.i.d. draws ``y0**2 / Z**2``.

    Draw ``i`` comes from chunk ``i // SAMPLE_CHUNK``, so a longer sample
    extends a shorter one with the same seed.
    """
    _check(y0)
    check_seed(seed)
    blocks = []
    for chunk, start in enumerate(range(0, n, SAMPLE_CHUNK)):
        z = rng_for(seed, chunk).standard_normal(min(SAMPLE_CHUNK, n - start))
        blocks.append(y0 * y0 / (z * z))
    return np.concatenate(blocks) if blocks else np.zeros(0)


def levy_fractional_moment(u: float, y0: float = 1.0) -> float | Divergent:
    """``E[L**u] = y0**(2u) 2**-u Gamma(1/2 - u) / sqrt(pi)`` for ``0 < u < 1/2``."""
    _check(y0)
    if not u > 0.0:
        raise DomainError("u must be positive")
    if u >= 0.5:
        return Divergent(float(u))
    return float(y0 ** (2.0 * u) * 2.0 ** (-u) * gamma(0.5 - u) / math.sqrt(math.pi))


def hill_tail_index(samples: np.ndarray, k: int | None = None) -> tuple[float, float]:
    """Hill estimate of the tail index with its asymptotic standard error.

    Uses the ``k`` largest order statistics (default ``sqrt(n)``).
    """
    x = np.asarray(samples, dtype=float)
    n = x.size
    k = int(math.sqrt(n)) if k is None else int(k)
    if not 1 <= k < n:
        raise DomainError("need 1 <= k < n order statistics")
    top = np.sort(np.partition(x, n - k - 1)[n - k - 1:])
    logs = np.log(top)
    gamma_hat = math.fsum(logs[1:] - logs[0]) / k
    alpha = 1.0 / gamma_hat
    return alpha, alpha / math.sqrt(k)


def levy_moment_mc(u: float, y0: float, n: int, seed: int = 0) -> MomentEstimate:
    """Sample mean of ``L**u`` over ``n`` draws with a divergence diagnostic.

    The diagnostic draws ``8n`` samples and records the running estimates at
    ``n, 2n, 4n, 8n``. Sample means of heavy-tailed variables do not grow
    reliably, so the flag comes from the Hill tail index ``alpha`` of ``L``
    on all ``8n`` draws. ``E[L**u]`` is infinite iff ``u >= alpha``, and the
    flag is raised when ``u >= alpha_hat - 3 SE``.
    """
    _check(y0)
    if not u > 0.0:
        raise DomainError("u must be positive")
    draws = levy_sample(y0, 8 * n, seed)
    powered = draws**u
    rows = []
    for m in (n, 2 * n, 4 * n, 8 * n):
        mean, se = mean_and_error(powered[:m])
        rows.append((f"n={m}", m, mean, se))
    alpha, alpha_se = hill_tail_index(draws)
    rows.append(("hill_alpha", 8 * n, alpha, alpha_se))
    flag = u >= alpha - 3.0 * alpha_se
    return MomentEstimate(rows[0][2], rows[0][3], n, bool(flag), tuple(rows))
