"""Extended-precision series for zeta and 1/zeta, each with an honest convergence status.

Every function returns a :class:`SeriesValue`. For a convergent series,
``err_bound`` is a remainder bound plus a rounding allowance. For a series
whose terms do not decay fast enough to converge, ``converges`` is
``False`` and ``err_bound`` covers rounding only, since the partial sum
then approximates nothing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import mpmath as mp

from ..errors import DomainError

MASLANKA_VARIANTS = {
    # name: (alternating sign in A_k, offset in (2j + offset), prefactor 1/(orient (s-1)))
    "printed": (False, -1, -1),
    "sign": (True, -1, -1),
    "literature": (True, 1, 1),
}


@dataclass(frozen=True)
class SeriesValue:
    value: complex
    err_bound: float
    converges: bool
    terms: int
    tail_exponent: float = math.nan
    note: str = ""


def _c(z) -> complex:
    return complex(mp.mpc(z))


def refinement_series(s: complex, bits: int, scale: int = 1) -> SeriesValue:
    """``scale * sum_n (-pi)**n s(s-1) / (2 n! (s+2n)(s+2n+1))``.

    Terms beyond the first ``|s|`` indices decrease in modulus faster than a
    geometric series with ratio 1/2, which gives the remainder bound.
    """
    s = complex(s)
    if any(s + k == 0 for k in range(0, 2 * int(abs(s)) + 4)):
        raise DomainError("s must avoid the poles s = -k")
    with mp.workprec(bits + 32):
        z = mp.mpc(s.real, s.imag)
        pref = z * (z - 1) / 2
        total, power, n = mp.mpc(0), mp.mpf(1), 0
        eps = mp.mpf(2) ** (-bits)
        while True:
            term = pref * power / ((z + 2 * n) * (z + 2 * n + 1))
            total += term
            n += 1
            power *= -mp.pi / n
            nxt = abs(pref * power / ((z + 2 * n) * (z + 2 * n + 1)))
            if n > 2 * math.pi + abs(s) and nxt < eps * max(abs(total), 1):
                break
        value = scale * total
        err = scale * (2 * nxt + 4 * n * eps * max(abs(total), 1))
    return SeriesValue(_c(value), float(err), True, n)


def imzeta_inner(n: int, s: complex) -> mp.mpf:
    """``sum_j (-pi n**2)**j / j! (4j+1) / |(2j+s)(2j+1-s)|**2``.

    The terms grow like ``(pi n**2)**j / j!`` before they decay, so the sum is
    carried at ``ceil(1.45 pi n**2 + 64)`` bits; the cancellation loses at most
    ``pi n**2 / ln 2`` of them.
    """
    bits = math.ceil(1.45 * math.pi * n * n + 64)
    with mp.workprec(bits):
        z = mp.mpc(s.real, s.imag)
        x = mp.pi * n * n
        total, power, j = mp.mpf(0), mp.mpf(1), 0
        floor = mp.mpf(2) ** -80
        while True:
            term = power * (4 * j + 1) / abs((2 * j + z) * (2 * j + 1 - z)) ** 2
            total += term
            if j > 2 * x + 20 and abs(term) < floor:
                break
            j += 1
            power *= -x / j
        return +total


def imzeta_star_series(s: complex, n_max: int) -> SeriesValue:
    """Partial sum ``n <= n_max`` of ``Im(s)(1 - 2 Re(s)) sum_n inner(n)``.

    The inner sums decay only like ``n**-Re(s)``. Each inner sum equals
    ``sum_r a_r x**-r gamma(r, x)`` with ``x = pi n**2``, where ``r`` runs
    over the partial-fraction roots ``s/2``, ``(1-s)/2`` and their
    conjugates. So the outer series diverges for ``Re(s) < 1``.
    """
    s = complex(s)
    if not 0.0 < s.real < 0.5:
        raise DomainError("the double series is stated for 0 < Re(s) < 1/2")
    inner = [imzeta_inner(n, s) for n in range(n_max + 1)]
    factor = s.imag * (1.0 - 2.0 * s.real)
    with mp.workprec(128):
        value = factor * mp.fsum(inner)
    probes = (n_max, 2 * n_max, 4 * n_max)
    decay = [float(abs(imzeta_inner(n, s))) * n**s.real for n in probes]
    note = ("|inner(n)| n**Re(s) at n = " + ", ".join(map(str, probes)) + ": "
            + ", ".join(f"{d:.3g}" for d in decay) + "; no faster decay, so the outer series diverges")
    return SeriesValue(complex(float(value)), 1e-30 * max(1.0, abs(float(value))), False,
                       n_max + 1, note=note)


@lru_cache(maxsize=None)
def _maslanka_coefficients(variant: str, K: int, bits: int) -> tuple:
    alternate, offset, _ = MASLANKA_VARIANTS[variant]
    with mp.workprec(bits):
        z = [mp.zeta(2 * j + 2) for j in range(K + 1)]
        out = []
        row = [mp.mpf(1)]
        for k in range(K + 1):
            if k:
                row = [mp.mpf(1)] + [row[j - 1] + row[j] for j in range(1, k)] + [mp.mpf(1)]
            out.append(mp.fsum((-1) ** (j if alternate else 0) * row[j] * (2 * j + offset) * z[j]
                               for j in range(k + 1)))
        return tuple(out)


def maslanka_series(s: complex, K: int, bits: int, variant: str = "printed") -> SeriesValue:
    """``sum_{k <= K} A_k (1 - s/2)_k / k!`` over the prefactor of ``variant``.

    Cancellation inside ``A_k`` costs about ``k`` bits, so the work precision
    is ``K + bits``. Convergence is judged from the observed decay
    ``|t_K / t_{K/2}| ~ 2**-p`` of the terms. If ``p > 1``, the remainder is
    estimated by ``|t_K| K / (p - 1)``. Otherwise the series is reported as
    divergent.
    """
    if variant not in MASLANKA_VARIANTS:
        raise DomainError(f"unknown variant {variant!r}")
    s = complex(s)
    if s == 1.0:
        raise DomainError("s = 1 is a pole")
    orient = MASLANKA_VARIANTS[variant][2]
    work = K + bits
    coeffs = _maslanka_coefficients(variant, K, work)
    with mp.workprec(work):
        z = mp.mpc(s.real, s.imag)
        poch, total, terms = mp.mpf(1), mp.mpc(0), []
        for k in range(K + 1):
            terms.append(coeffs[k] * poch)
            total += terms[-1]
            poch *= (k + 1 - z / 2) / (k + 1)
        value = total / (orient * (z - 1))
        last, mid = abs(terms[K]), abs(terms[K // 2])
    if mid == 0 or last == 0:
        p = math.inf
    else:
        p = -float(mp.log(last / mid, 2))
    rounding = 2.0 ** (-bits) * max(1.0, abs(_c(value)))
    if p > 1.0:
        tail = float(last) * K / (p - 1.0) / abs(s - 1.0) if math.isfinite(p) else 0.0
        return SeriesValue(_c(value), tail + rounding, True, K + 1, p)
    trend = "grow" if p < 0 else f"decay like k**-{p:.3f}"
    return SeriesValue(_c(value), rounding, False, K + 1, p,
                       note=f"{variant}: terms {trend}; the series diverges")
