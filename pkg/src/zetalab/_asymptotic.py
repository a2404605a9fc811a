"""Closed forms for sums and integrals of power-law times trigonometric tails.

Fourier images of compactly supported pieces decay like ``y**-2`` with an
oscillating factor, so lattice sums and infinite integrals over them converge
too slowly for brute force. Past a cutoff such images are replaced by finite
expansions ``sum_j y**-j (a cos(2 pi phi y) + b sin(2 pi phi y))`` whose sums
and integrals are available in closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import mpmath
import numpy as np
from scipy.special import comb, sici
from scipy.special import zeta as hurwitz_zeta

from .errors import ZetaLabError


@lru_cache(maxsize=None)
def _bernoulli_coeffs(k: int) -> np.ndarray:
    """Coefficients of B_k(t) in increasing powers of t."""
    return np.array([comb(k, i, exact=True) * bernoulli_number(k - i) for i in range(k + 1)])


@lru_cache(maxsize=None)
def bernoulli_number(k: int) -> float:
    """Exact Bernoulli number rounded once to float (``B_1 = -1/2``)."""
    p, q = mpmath.bernfrac(k)
    return int(p) / int(q)


def bernoulli_poly(k: int, t) -> np.ndarray:
    return np.polynomial.polynomial.polyval(t, _bernoulli_coeffs(k))


def periodic_bernoulli(k: int, t) -> np.ndarray:
    """``B_k(t mod 1)``; the jump of the sawtooth ``k = 1`` is set to 0 at integers."""
    frac = np.mod(t, 1.0)
    out = bernoulli_poly(k, frac)
    if k == 1:
        out = np.where(frac == 0.0, 0.0, out)
    return out


def periodic_bernoulli_sup(k: int) -> float:
    if k == 0:
        return 1.0
    if k == 1:
        return 0.5
    return 2.0 * math.factorial(k) * float(hurwitz_zeta(k, 1)) / (2.0 * math.pi) ** k


def _kappa(j: int) -> float:
    # sum_{n>=1} cos(2 pi n t)/n^j (j even) or sin(2 pi n t)/n^j (j odd) = kappa_j B_j({t})
    return (-1) ** (j // 2 + 1) * (2.0 * math.pi) ** j / (2.0 * math.factorial(j))


def lattice_tail(kind: str, j: int, theta: float, n0: int) -> float:
    """``sum_{n > n0} trig(2 pi n theta) / n**j`` for ``trig`` in {cos, sin}.

    Supported: cosine with even ``j`` (or any ``j >= 2`` when ``theta`` is an
    integer) and sine with odd ``j``.
    """
    frac = theta % 1.0
    if kind == "sin" and frac == 0.0:
        return 0.0
    if kind == "cos" and frac == 0.0:
        if j < 2:
            raise ZetaLabError("divergent lattice sum")
        return float(hurwitz_zeta(j, n0 + 1))
    if (kind == "cos") != (j % 2 == 0):
        raise ZetaLabError(f"no closed form for {kind} with power {j}")
    full = _kappa(j) * float(bernoulli_poly(j, frac))
    if n0 == 0:
        return full
    n = np.arange(1, n0 + 1, dtype=float)
    trig = np.cos if kind == "cos" else np.sin
    return full - math.fsum(trig(2.0 * math.pi * n * frac) / n**j)


def trig_power_integral(beta: float, j: int, Y: float) -> tuple[float, float]:
    """``(int_Y^inf cos(beta y) y**-j dy, int_Y^inf sin(beta y) y**-j dy)`` for ``Y > 0``."""
    if beta == 0.0:
        if j < 2:
            raise ZetaLabError("divergent power integral")
        return Y ** (1 - j) / (j - 1), 0.0
    sign = 1.0 if beta > 0 else -1.0
    b = abs(beta)
    si, ci = sici(b * Y)
    e = complex(-ci, 0.5 * math.pi - si)  # int_Y^inf e^{i b y}/y dy
    phase = complex(math.cos(b * Y), math.sin(b * Y))
    for m in range(2, j + 1):
        e = (Y ** (1 - m) * phase + 1j * b * e) / (m - 1)
    return e.real, sign * e.imag


def power_trig_tail(a: complex, beta: float, Y: float, tol: float = 1e-17) -> tuple[complex, float]:
    """``int_Y^inf y**a e^{i beta y} dy`` for ``Re(a) < -1`` with a remainder bound.

    Uses repeated integration by parts, which converges quickly when
    ``beta * Y`` is large compared with ``|a|``.
    """
    if a.real >= -1.0:
        raise ZetaLabError("power tail not integrable")
    if beta == 0.0:
        return -(Y ** (a + 1)) / (a + 1), 0.0
    phase = complex(math.cos(beta * Y), math.sin(beta * Y))
    ib = 1j * beta
    total = 0.0j
    ratio = 1.0 + 0.0j
    for k in range(60):
        total += ratio * (-(Y ** (a - k)) * phase / ib)
        ratio *= -(a - k) / ib
        rest = abs(ratio) * Y ** (a.real - k) / (k - a.real)
        if rest <= tol * max(abs(total), 1e-300) or rest < 1e-300:
            return total, rest
    return total, rest


def periodic_power_integral(a: complex, k: int, L: float, X: float,
                            tol: float = 1e-17) -> tuple[complex, float]:
    """``int_X^inf x**a B_k({L x}) dx`` for ``Re(a) < -1``, ``k >= 1``, with a bound.

    Integration by parts against the periodic antiderivatives
    ``B_{k+1}({L x}) / ((k+1) L)``.
    """
    total = 0.0j
    coef = 1.0 + 0.0j
    aa, kk = a, k
    for _ in range(40):
        total += coef * (-(X**aa) * float(periodic_bernoulli(kk + 1, L * X)) / ((kk + 1) * L))
        coef *= -aa / ((kk + 1) * L)
        aa, kk = aa - 1, kk + 1
        if aa.real < -1.0:
            rest = abs(coef) * periodic_bernoulli_sup(kk) * X ** (aa.real + 1) / (-aa.real - 1)
            if rest <= tol * max(abs(total), 1e-300) or rest < 1e-300:
                return total, rest
    return total, rest


@dataclass(frozen=True)
class Expansion:
    """``f(y) = sum y**-j (c cos(2 pi phi y) + s sin(2 pi phi y)) + R(y)`` for ``y >= start``.

    ``terms`` holds ``(phi, j, c, s)``; ``|R(y)| <= rem_coef * y**-rem_power``.
    """

    terms: tuple[tuple[float, int, float, float], ...]
    rem_coef: float
    rem_power: int
    start: float = field(default=1.0)

    def __call__(self, y):
        y = np.asarray(y, dtype=float)
        out = np.zeros_like(y)
        for phi, j, c, s in self.terms:
            w = 2.0 * math.pi * phi * y
            out = out + y**-j * (c * np.cos(w) + s * np.sin(w))
        return out

    def remainder(self, y) -> float:
        return self.rem_coef * np.asarray(y, dtype=float) ** -self.rem_power

    def scaled(self, alpha: float) -> "Expansion":
        terms = tuple((p, j, alpha * c, alpha * s) for p, j, c, s in self.terms)
        return Expansion(terms, abs(alpha) * self.rem_coef, self.rem_power, self.start)

    def dilated(self, a: float) -> "Expansion":
        """Expansion of ``y -> f(a y)``."""
        terms = tuple((p * a, j, c * a**-j, s * a**-j) for p, j, c, s in self.terms)
        return Expansion(terms, self.rem_coef * a**-self.rem_power, self.rem_power, self.start / a)

    def plus(self, other: "Expansion") -> "Expansion":
        merged: dict[tuple[float, int], list[float]] = {}
        for p, j, c, s in self.terms + other.terms:
            slot = merged.setdefault((p, j), [0.0, 0.0])
            slot[0] += c
            slot[1] += s
        terms = tuple((p, j, c, s) for (p, j), (c, s) in sorted(merged.items()))
        start = max(self.start, other.start)
        power = min(self.rem_power, other.rem_power)
        coef = sum(e.rem_coef * start ** (power - e.rem_power) for e in (self, other))
        return Expansion(terms, coef, power, start)

    def with_rapid(self, extra: float, start: float) -> "Expansion":
        """Absorb a rapidly decaying part bounded by ``extra * y**-2`` beyond ``start``."""
        start = max(start, self.start)
        if extra == 0.0:
            return Expansion(self.terms, self.rem_coef, self.rem_power, start)
        power = min(self.rem_power, 2)
        coef = self.rem_coef * start ** (power - self.rem_power) + extra
        return Expansion(self.terms, coef, power, start)

    @property
    def frequencies(self) -> tuple[float, ...]:
        return tuple(sorted({p for p, *_ in self.terms if p != 0.0}))
