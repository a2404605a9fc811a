"""Adaptive quadrature, alternating-series acceleration and seeded random streams.

All routines are pure functions of their inputs. Integrands are expected to be
vectorised: they receive a 1-d float array and return an array of the same
length (real or complex).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence, Union

import numpy as np

from .errors import NoConvergence, NonIntegrableSingularity, NumericalError, ToleranceNotMet

Number = Union[float, complex]

DEFAULT_TOL = 1e-10

# Gauss-Kronrod 7/15 abscissae and weights on [-1, 1].
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

_NODES = np.concatenate([-_XGK[:7], [0.0], _XGK[6::-1]])
_KRONROD = np.concatenate([_WGK[:7], [_WGK[7]], _WGK[6::-1]])
_GAUSS = np.zeros(15)
_GAUSS[[1, 3, 5]] = _WG[:3]
_GAUSS[7] = _WG[3]
_GAUSS[[13, 11, 9]] = _WG[:3]

_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class QuadratureResult:
    """A numerical value together with an error bound.

    ``err_bound`` combines the adaptive rule-pair estimate with any analytic
    truncation bound (tails of infinite ranges, series remainders).
    """

    value: Number
    err_bound: float
    evaluations: int = 0

    def __post_init__(self):
        if not np.isfinite(self.value):
            raise NumericalError(f"non-finite value {self.value!r}")
        if not (self.err_bound >= 0.0):
            raise NumericalError(f"invalid error bound {self.err_bound!r}")

    def __add__(self, other: "QuadratureResult") -> "QuadratureResult":
        return QuadratureResult(self.value + other.value, self.err_bound + other.err_bound,
                                self.evaluations + other.evaluations)

    def scaled(self, factor: Number) -> "QuadratureResult":
        return QuadratureResult(self.value * factor, self.err_bound * abs(factor), self.evaluations)


def _rule(fun, lo: np.ndarray, hi: np.ndarray):
    center = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    x = center[:, None] + half[:, None] * _NODES[None, :]
    fx = np.asarray(fun(x.ravel())).reshape(x.shape)
    if not np.all(np.isfinite(fx)):
        bad = ~np.all(np.isfinite(fx), axis=1)
        return None, bad
    kron = half * (fx @ _KRONROD)
    gauss = half * (fx @ _GAUSS)
    resabs = np.abs(half) * (np.abs(fx) @ _KRONROD)
    err = np.abs(kron - gauss) + 50.0 * _EPS * resabs
    return (kron, err), None


def _fsum(values: list) -> Number:
    if any(isinstance(v, complex) for v in values):
        return complex(math.fsum(v.real for v in values), math.fsum(v.imag for v in values))
    return math.fsum(values)


def _adaptive(fun, edges: np.ndarray, tol: float, rtol: float, max_evals: int,
              ends: tuple[float, float]):
    lo, hi = edges[:-1].astype(float), edges[1:].astype(float)
    done_val = []
    done_err = 0.0
    evals = 0
    while True:
        out, bad = _rule(fun, lo, hi)
        evals += 15 * lo.size
        if out is None:
            touches = (np.isclose(lo[bad], ends[0], rtol=0, atol=1e-300)
                       | np.isclose(hi[bad], ends[1], rtol=0, atol=1e-300))
            if np.any(touches):
                raise NonIntegrableSingularity("integrand is infinite at an endpoint")
            raise NumericalError("integrand produced a non-finite value inside the interval")
        val, err = out
        total_val = _fsum(done_val + val.tolist())
        total_err = float(np.sum(err)) + done_err
        target = max(tol, rtol * abs(total_val))
        if total_err <= target:
            return total_val, total_err, evals
        if evals >= max_evals:
            raise ToleranceNotMet(
                f"quadrature budget exhausted: error {total_err:.3g} > target {target:.3g}")
        # split the largest-error intervals that account for half the excess
        order = np.argsort(err)[::-1]
        csum = np.cumsum(err[order])
        need = 0.5 * (total_err - done_err)
        nsplit = int(np.searchsorted(csum, need)) + 1
        split = np.zeros(lo.size, dtype=bool)
        split[order[:nsplit]] = True
        # anything tiny relative to its share is frozen
        share = target / max(lo.size, 1)
        freeze = (~split) & (err <= 0.1 * share)
        if np.any(freeze):
            done_val.extend(val[freeze].tolist())
            done_err += float(np.sum(err[freeze]))
        keep = (~split) & (~freeze)
        slo, shi = lo[split], hi[split]
        width = shi - slo
        scale = np.maximum(1.0, np.maximum(np.abs(slo), np.abs(shi)))
        if np.any(width < 64 * _EPS * scale):
            narrow = width < 64 * _EPS * scale
            at_end = (slo[narrow] == ends[0]) | (shi[narrow] == ends[1])
            if np.any(at_end):
                raise NonIntegrableSingularity(
                    "error does not shrink near an endpoint; singularity stronger than declared")
            raise ToleranceNotMet(f"interval too narrow to split; error {total_err:.3g}")
        mid = 0.5 * (slo + shi)
        lo = np.concatenate([lo[keep], slo, mid])
        hi = np.concatenate([hi[keep], mid, shi])


def integrate_adaptive(f: Callable[[np.ndarray], np.ndarray], a: float, b: float,
                       tol: float = DEFAULT_TOL, *, rtol: float = 0.0,
                       breakpoints: Sequence[float] = (), decay: float | None = None,
                       tail_bound: Callable[[float], float] | None = None,
                       left_exponent: float | None = None,
                       max_evaluations: int = 2_000_000) -> QuadratureResult:
    """Integrate ``f`` over ``[a, b]`` by adaptive Gauss-Kronrod bisection.

    Parameters
    ----------
    f : callable
        Vectorised integrand, real or complex valued.
    a, b : float
        Limits; ``b`` may be ``numpy.inf``.
    tol : float
        Absolute error target for the returned ``err_bound``.
    rtol : float
        Optional relative target; the looser of the two is used.
    breakpoints : sequence of float
        Interior points where ``f`` is not smooth.
    decay : float, optional
        Certificate ``C`` with ``|f(x)| <= C / x**2`` for ``x >= max(a, 1)``.
        Required (or ``tail_bound``) when ``b`` is infinite.
    tail_bound : callable, optional
        ``X -> bound on int_X^inf |f|``; overrides ``decay``.
    left_exponent : float, optional
        Declared behaviour ``f(x) ~ (x - a)**alpha`` at the left endpoint.
        Must exceed -1. A power substitution removes the singularity.

    Returns
    -------
    QuadratureResult

    Raises
    ------
    ToleranceNotMet
        If the evaluation budget runs out.
    NonIntegrableSingularity
        If the integrand blows up at an endpoint beyond the declared class.
    """
    if not (b > a):
        raise ValueError("integrate_adaptive requires b > a")
    if left_exponent is not None and left_exponent <= -1.0:
        raise NonIntegrableSingularity(f"(x - a)^{left_exponent} is not integrable at a")

    tail_err = 0.0
    if math.isinf(b):
        if tail_bound is None:
            if decay is None:
                raise ValueError("an infinite range needs a decay certificate or tail_bound")
            c = float(decay)
            tail_bound = lambda X: c / X  # noqa: E731
        X = max(a + 1.0, 1.0, max(breakpoints, default=a) + 1.0)
        while tail_bound(X) > 0.25 * tol:
            X *= 2.0
            if X > 1e300:
                raise ToleranceNotMet("tail bound never falls below tolerance")
        tail_err = float(tail_bound(X))
        offsets = [0.0]
        step = 1.0
        while a + step < X:
            offsets.append(step)
            step *= 2.0
        edges = sorted(set([a + o for o in offsets] + [X] + [p for p in breakpoints if a < p < X]))
        upper = X
    else:
        edges = sorted(set([a, b] + [p for p in breakpoints if a < p < b]))
        upper = b
    edges = np.asarray(edges, dtype=float)
    fin_tol = tol - tail_err

    value: Number = 0.0
    err = 0.0
    evals = 0
    if left_exponent is not None and left_exponent < 0.0:
        h = edges[1] - edges[0]
        m = 1.0 / (1.0 + left_exponent)

        def g(u, _a=edges[0], _h=h, _m=m):
            return f(_a + _h * u**_m) * (_h * _m * u ** (_m - 1.0))

        v1, e1, n1 = _adaptive(g, np.array([0.0, 0.5, 1.0]), 0.5 * fin_tol, rtol, max_evaluations,
                               (0.0, 1.0))
        value, err, evals = v1, e1, n1
        edges = edges[1:]
        fin_tol *= 0.5
    if edges.size > 1:
        v2, e2, n2 = _adaptive(f, edges, fin_tol, rtol, max_evaluations, (a, upper))
        value, err, evals = value + v2, err + e2, evals + n2
    return QuadratureResult(value, err + tail_err, evals)


def _cvz(a: np.ndarray) -> Number:
    """Cohen-Villegas-Zagier acceleration of sum_k (-1)^k a_k using len(a) terms."""
    n = a.size
    d = (3.0 + math.sqrt(8.0)) ** n
    d = 0.5 * (d + 1.0 / d)
    b = -1.0
    c = -d
    s = 0.0 * a[0]
    for k in range(n):
        c = b - c
        s = s + c * a[k]
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0))
    return s / d


def accelerate_alternating(terms: Sequence[Number] | Callable[[np.ndarray], np.ndarray],
                           tol: float = DEFAULT_TOL, *, max_terms: int = 256) -> QuadratureResult:
    """Sum an alternating series ``t_0 + t_1 + ...`` with convergence acceleration.

    ``terms`` is either a sequence of the signed terms or a vectorised callable
    ``k -> t_k`` (``k`` starting at 0). The magnitudes should eventually
    decrease; the error estimate is the difference between transforms using
    ``n`` and ``n/2`` terms.
    """
    if callable(terms):
        available = max_terms
        fetch = lambda n: np.asarray(terms(np.arange(n)))  # noqa: E731
    else:
        arr = np.asarray(terms)
        available = min(arr.size, max_terms)
        fetch = lambda n: arr[:n]  # noqa: E731
    if available < 4:
        raise NoConvergence("need at least four terms")
    signs = None
    prev = None
    n = 4
    while n <= available:
        t = fetch(n)
        if signs is None or signs.size != n:
            signs = np.where(np.arange(n) % 2 == 0, 1.0, -1.0)
        cur = _cvz(signs * t)
        if prev is not None:
            diff = abs(cur - prev)
            if diff <= tol:
                cur = cur.item() if isinstance(cur, np.generic) else cur
                return QuadratureResult(cur, float(diff + 16 * _EPS * abs(cur)), n)
        prev = cur
        n *= 2
    raise NoConvergence(f"alternating transform did not settle below {tol:g} with {available} terms")


SEED_MAX = 2**64


def check_seed(seed: int) -> int:
    seed = int(seed)
    if not 0 <= seed < SEED_MAX:
        raise ValueError("seed must be an unsigned 64-bit integer")
    return seed


def rng_for(seed: int, chunk: int = 0) -> np.random.Generator:
    """Generator for one chunk of work; chunk streams are seeded with ``seed XOR chunk``."""
    return np.random.Generator(np.random.PCG64(check_seed(seed) ^ int(chunk)))


def compensated_sum(values) -> float:
    return math.fsum(values)


@dataclass(frozen=True)
class MomentEstimate:
    """Monte Carlo mean with its standard error.

    ``diagnostics`` holds ``(label, n_samples, mean, std_error)`` rows from
    the divergence diagnostic, when one was run.
    """

    mean: float
    std_error: float
    n_samples: int
    divergence_flag: bool = False
    diagnostics: tuple = field(default=())

    def within(self, target: float, k: float = 3.0) -> bool:
        """True if ``|mean - target| <= k * std_error``."""
        return abs(self.mean - target) <= k * self.std_error


def mean_and_error(values: np.ndarray) -> tuple[float, float]:
    """Sample mean and standard error with exactly rounded sums."""
    values = np.asarray(values, dtype=float).ravel()
    n = values.size
    mean = math.fsum(values) / n
    if n < 2:
        return mean, 0.0
    var = math.fsum((values - mean) ** 2) / (n - 1)
    return mean, math.sqrt(var / n)
