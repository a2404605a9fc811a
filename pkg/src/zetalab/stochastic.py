"""Brownian paths, the peak-shifted process and the Wiener-Riemann measure.

The Wiener-Riemann measure ``r`` is realised generatively. A segment index
``n`` is drawn with weight ``2**-n``, a Brownian path ``B`` is simulated on
``[sqrt(n-1), sqrt(n)]`` and the random test function is

    c(x) = G(x) (B_{sqrt(x)} + p(x)),    n - 1 <= x < n,

and zero elsewhere, with ``G(x) = exp(-pi x**2)`` and ``p`` the peak function.

Monte Carlo work is split into fixed-size chunks. Chunk ``k`` draws from a
generator seeded with ``seed XOR k`` and the reduction is an exactly rounded
sum, so results do not depend on the number of workers.
"""

from __future__ import annotations

import csv
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.special import erf

from .errors import DomainError
from .levy import levy_fractional_moment
from .numerics import MomentEstimate, check_seed, integrate_adaptive, mean_and_error, rng_for

N_MAX = 30
RESOLUTION = 1e-3
CHUNK_PATHS = 8192
# Diagnostic stages use disjoint chunk ranges so their samples are independent.
_STAGE_STRIDE = 1 << 32


def _weights() -> np.ndarray:
    w = 0.5 ** np.arange(1, N_MAX + 1, dtype=float)
    w[-1] *= 2.0  # mass of n > N_MAX (2**-30) moved onto N_MAX
    return w


SEGMENT_WEIGHTS = _weights()


def peak(t):
    """``p(t) = max(0, 1 - t)`` for ``t >= 0``."""
    arr = np.asarray(t, dtype=float)
    if np.any(arr < 0.0):
        raise DomainError("peak is defined for t >= 0")
    out = np.clip(1.0 - arr, 0.0, None)
    return float(out) if out.ndim == 0 else out


def _gauss(x):
    return np.exp(-math.pi * np.asarray(x, dtype=float) ** 2)


@dataclass(frozen=True, eq=False)
class PathGrid:
    """Strictly increasing sample times starting at 0."""

    times: np.ndarray

    def __post_init__(self):
        t = np.array(self.times, dtype=float)
        if t.ndim != 1 or t.size < 2:
            raise DomainError("a path grid needs at least two times")
        if t[0] != 0.0 or np.any(np.diff(t) <= 0.0):
            raise DomainError("grid times must start at 0 and increase strictly")
        t.setflags(write=False)
        object.__setattr__(self, "times", t)

    @classmethod
    def uniform(cls, t_end: float, resolution: float = RESOLUTION) -> "PathGrid":
        steps = max(1, math.ceil(t_end / resolution - 1e-9))
        return cls(np.linspace(0.0, t_end, steps + 1))

    @property
    def resolution(self) -> float:
        return float(np.max(np.diff(self.times)))


@dataclass(frozen=True, eq=False)
class BrownianPath:
    grid: PathGrid
    values: np.ndarray
    seed: int

    def at(self, t: float) -> float:
        """Linear interpolation of the path at time ``t``."""
        times = self.grid.times
        if not times[0] <= t <= times[-1]:
            raise DomainError(f"time {t} outside the path grid")
        return float(np.interp(t, times, self.values))

    def write_csv(self, file) -> None:
        """Write ``t,value`` rows at full precision to a path or open text file."""
        if hasattr(file, "write"):
            _write_rows(file, self.grid.times, self.values)
        else:
            with open(file, "w", newline="") as fh:
                _write_rows(fh, self.grid.times, self.values)


def _write_rows(fh, times, values) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["t", "value"])
    for t, v in zip(times, values):
        writer.writerow([repr(float(t)), repr(float(v))])


def _brownian_rows(rng: np.random.Generator, times: np.ndarray, rows: int) -> np.ndarray:
    steps = np.sqrt(np.diff(times))
    out = np.zeros((rows, times.size))
    np.cumsum(rng.standard_normal((rows, steps.size)) * steps, axis=1, out=out[:, 1:])
    return out


def sample_paths(grid: PathGrid, n_paths: int, seed: int = 0) -> np.ndarray:
    """``n_paths`` Brownian paths on ``grid`` as rows of an array.

    Row ``i`` depends only on ``(grid, seed, i)``, not on ``n_paths``.
    """
    check_seed(seed)
    blocks = []
    for chunk, start in enumerate(range(0, n_paths, CHUNK_PATHS)):
        rows = min(CHUNK_PATHS, n_paths - start)
        blocks.append(_brownian_rows(rng_for(seed, chunk), grid.times, rows))
    return np.vstack(blocks) if blocks else np.zeros((0, grid.times.size))


def sample_path(grid: PathGrid, seed: int = 0) -> BrownianPath:
    """One Brownian path from independent Gaussian increments."""
    return BrownianPath(grid, sample_paths(grid, 1, seed)[0], check_seed(seed))


# ---------------------------------------------------------------- Girsanov

def girsanov_log_density(path: BrownianPath, n: int) -> float:
    """Log density of the peak-shifted segment law against Wiener measure.

    On ``[sqrt(n-1), sqrt(n)]`` the drift ``-p`` has derivative ``1`` for
    ``n = 1`` and ``0`` afterwards, so the density is
    ``exp(c(1) - c(0) - 1/2)`` for ``n = 1`` and ``1`` for ``n >= 2``.
    """
    if n < 1 or int(n) != n:
        raise DomainError("segment index must be a positive integer")
    lo, hi = math.sqrt(n - 1), math.sqrt(n)
    times = path.grid.times
    if times[0] > lo or times[-1] < hi - 1e-12:
        raise DomainError(f"path grid does not cover [{lo:g}, {hi:g}]")
    if n >= 2:
        return 0.0
    return -0.5 + (path.at(1.0) - path.at(0.0))


@dataclass(frozen=True)
class GirsanovCheck:
    """Expectation under the shifted law against the reweighted Wiener expectation."""

    shifted: MomentEstimate
    reweighted: MomentEstimate

    @property
    def z_score(self) -> float:
        se = math.hypot(self.shifted.std_error, self.reweighted.std_error)
        return abs(self.shifted.mean - self.reweighted.mean) / se


def girsanov_check(functional: Callable[[np.ndarray, np.ndarray], np.ndarray],
                   n_paths: int, seed: int = 0) -> GirsanovCheck:
    """Compare ``E[F(B + t)]`` with ``E[F(B) exp(B_1 - 1/2)]`` on ``[0, 1]``.

    The shifted measure ``X -> w(X + p)`` is the law of ``B - p``; removing
    the constant ``p(0)`` leaves the Cameron-Martin drift ``p(0) - p(t) = t``.
    ``functional(times, rows)`` maps path rows to one value per row.
    """
    grid = PathGrid.uniform(1.0)
    rows = sample_paths(grid, n_paths, seed)
    drift = 1.0 - peak(grid.times)
    shifted = functional(grid.times, rows + drift)
    log_w = -0.5 + rows[:, -1] - rows[:, 0]
    reweighted = functional(grid.times, rows) * np.exp(log_w)
    return GirsanovCheck(MomentEstimate(*mean_and_error(shifted), n_paths),
                         MomentEstimate(*mean_and_error(reweighted), n_paths))


# ----------------------------------------------------- Wiener-Riemann measure

def segment_of(x: float) -> int:
    """Segment index ``n`` with ``n - 1 <= x < n``."""
    if x < 0.0:
        raise DomainError("negative argument")
    return int(math.floor(x)) + 1


def segment_grid(n: int, resolution: float = RESOLUTION) -> np.ndarray:
    """Times ``0, sqrt(n-1), ..., sqrt(n)``; steps inside the segment are at most ``resolution``."""
    lo, hi = math.sqrt(n - 1), math.sqrt(n)
    steps = max(1, math.ceil((hi - lo) / resolution - 1e-9))
    seg = np.linspace(lo, hi, steps + 1)
    return seg if n == 1 else np.concatenate([[0.0], seg])


def _draw_segments(rng: np.random.Generator, m: int) -> np.ndarray:
    return rng.choice(np.arange(1, N_MAX + 1), size=m, p=SEGMENT_WEIGHTS)


def _wr_chunk(seed: int, chunk: int, m: int, per_path) -> np.ndarray:
    """Evaluate ``per_path(n, times, rows)`` on ``m`` draws from ``r``."""
    rng = rng_for(seed, chunk)
    ns = _draw_segments(rng, m)
    out = np.empty(m)
    for n in np.unique(ns):
        idx = np.flatnonzero(ns == n)
        times = segment_grid(int(n))
        rows = _brownian_rows(rng, times, idx.size)
        out[idx] = per_path(int(n), times, rows)
    return out


def _wr_samples(per_path, n_paths: int, seed: int, workers: int = 1,
                chunk_offset: int = 0) -> np.ndarray:
    check_seed(seed)
    jobs = [(seed, chunk_offset + k, min(CHUNK_PATHS, n_paths - start))
            for k, start in enumerate(range(0, n_paths, CHUNK_PATHS))]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda job: _wr_chunk(*job, per_path), jobs))
    else:
        parts = [_wr_chunk(*job, per_path) for job in jobs]
    return np.concatenate(parts)


def sample_wr_paths(count: int, seed: int = 0) -> list[tuple[int, BrownianPath]]:
    """The first ``count`` draws from ``r`` as ``(segment, Brownian path)`` pairs."""
    if count > CHUNK_PATHS:
        raise DomainError(f"at most {CHUNK_PATHS} paths can be dumped")
    rng = rng_for(seed, 0)
    ns = _draw_segments(rng, CHUNK_PATHS)
    paths: list = [None] * count
    for n in np.unique(ns):
        idx = np.flatnonzero(ns == n)
        times = segment_grid(int(n))
        rows = _brownian_rows(rng, times, idx.size)
        grid = PathGrid(times)
        for j, i in enumerate(idx):
            if i < count:
                paths[i] = (int(n), BrownianPath(grid, rows[j], seed))
    return paths


def _rows_at(times: np.ndarray, rows: np.ndarray, tau: float) -> np.ndarray:
    j = int(np.clip(np.searchsorted(times, tau, side="right") - 1, 0, times.size - 2))
    w = (tau - times[j]) / (times[j + 1] - times[j])
    return (1.0 - w) * rows[:, j] + w * rows[:, j + 1]


def wr_moment(t: float, n_paths: int, seed: int = 0, workers: int = 1) -> MomentEstimate:
    """Monte Carlo estimate of ``int c(t) dr(c)`` under the measure as defined.

    Only draws whose segment contains ``t`` contribute, so the target is
    ``2**-n G(t) E[B_{sqrt t} + p(t)] = 2**-n G(t) p(t)``. At ``t = 0`` this is
    ``1/2``, not the normalised value ``1``; see :func:`wr_moment_closed_form`.
    """
    if t < 0.0:
        raise DomainError("t must be non-negative")
    target = segment_of(t)
    g, pt, tau = float(_gauss(t)), peak(t), math.sqrt(t)

    def per_path(n, times, rows):
        if n != target:
            return np.zeros(rows.shape[0])
        return g * (_rows_at(times, rows, tau) + pt)

    values = _wr_samples(per_path, n_paths, seed, workers)
    return MomentEstimate(*mean_and_error(values), n_paths)


def wr_moment_closed_form(t: float, normalization: str = "printed") -> float:
    """``2**-n G(t) p(t)``; ``normalization="unit"`` doubles it so that ``t = 0`` gives 1."""
    n = segment_of(t)
    if n > N_MAX:
        return 0.0
    value = SEGMENT_WEIGHTS[n - 1] * float(_gauss(t)) * peak(t)
    if normalization == "unit":
        return 2.0 * value
    if normalization != "printed":
        raise DomainError(f"unknown normalization {normalization!r}")
    return value


# ------------------------------------------------------------------- b_s

def _power_weights(times: np.ndarray, a: float, end: float) -> np.ndarray:
    """Weights ``w`` with ``sum w_i h(t_i) = int_{t_0}^{end} t**a h(t) dt`` for piecewise-linear ``h``."""
    w = np.zeros(times.size)
    for i in range(times.size - 1):
        lo, hi = times[i], min(times[i + 1], end)
        if hi <= lo:
            break
        m0 = (hi ** (a + 1) - lo ** (a + 1)) / (a + 1)
        m1 = (hi ** (a + 2) - lo ** (a + 2)) / (a + 2)
        d = times[i + 1] - times[i]
        w[i] += (times[i + 1] * m0 - m1) / d
        w[i + 1] += (m1 - lo * m0) / d
    return w


def _b_s_per_path(u: float, x_max: float):
    end = math.sqrt(x_max)
    cache: dict[int, tuple[int, np.ndarray]] = {}

    def per_path(n, times, rows):
        if n - 1 >= x_max:
            return np.zeros(rows.shape[0])
        if n not in cache:
            first = 0 if n == 1 else 1
            seg = times[first:]
            cache[n] = (first, 2.0 * _power_weights(seg, 2.0 * u - 1.0, end))
        first, w = cache[n]
        seg = times[first:]
        x = seg * seg
        c = _gauss(x) * (rows[:, first:] + peak(x))
        return np.abs(c) @ w

    return per_path


def _b_s_stage(u, n_paths, x_max, seed, workers, stage) -> MomentEstimate:
    values = _wr_samples(_b_s_per_path(u, x_max), n_paths, seed, workers,
                         chunk_offset=stage * _STAGE_STRIDE)
    return MomentEstimate(*mean_and_error(values), n_paths)


DIAGNOSTIC_X_MAX = (10.0, 1e2, 1e3, 1e4)


def b_s_estimate(u: float, n_paths: int, x_max: float = 1e4, seed: int = 0,
                 workers: int = 1) -> MomentEstimate:
    """Monte Carlo estimate of ``int_0^x_max x**(u-1) (int |c(x)| dr(c)) dx``.

    The divergence diagnostic re-estimates the integral at ``x_max`` in
    ``DIAGNOSTIC_X_MAX`` with sample sizes ``n_paths * 2**k`` on independent
    streams. The flag is set when every stage exceeds the previous one by
    more than two combined standard errors, i.e. the estimates never settle.
    """
    if u <= 0.0:
        raise DomainError("u must be positive")
    if x_max < 1.0:
        raise DomainError("x_max must be at least 1")
    main = _b_s_stage(u, n_paths, x_max, seed, workers, 0)
    stages = [_b_s_stage(u, n_paths * 2**k, xm, seed, workers, k + 1)
              for k, xm in enumerate(DIAGNOSTIC_X_MAX)]
    growing = all(b.mean - a.mean > 2.0 * math.hypot(a.std_error, b.std_error)
                  for a, b in zip(stages, stages[1:]))
    rows = tuple((f"x_max={xm:g}", e.n_samples, e.mean, e.std_error)
                 for xm, e in zip(DIAGNOSTIC_X_MAX, stages))
    return MomentEstimate(main.mean, main.std_error, main.n_samples, growing, rows)


def _abs_normal_mean(m, sd):
    """``E|m + sd Z|`` for a standard normal ``Z``."""
    z = m / sd
    return sd * math.sqrt(2.0 / math.pi) * np.exp(-0.5 * z * z) + m * erf(z / math.sqrt(2.0))


def b_s_exact(u: float, x_max: float = math.inf, tol: float = 1e-10) -> float:
    """The Monte Carlo target of :func:`b_s_estimate` by quadrature.

    Uses ``B_{sqrt x} ~ N(0, sqrt x)``, so ``E|B_{sqrt x} + p(x)|`` is a
    folded-normal mean.
    """
    total = 0.0
    for n in range(1, N_MAX + 1):
        lo, hi = n - 1.0, min(float(n), x_max)
        if hi <= lo:
            break

        def f(x):
            x = np.asarray(x, dtype=float)
            return x ** (u - 1.0) * _gauss(x) * _abs_normal_mean(peak(x), x**0.25)

        left = u - 1.0 if n == 1 else None
        total += SEGMENT_WEIGHTS[n - 1] * integrate_adaptive(f, lo, hi, tol, left_exponent=left).value
    return total


def b_s_upper_bound(u: float, y0: float = 1.0) -> float:
    """Analytic upper bound through the 1/2-stable moment, finite for ``u < 1/2``.

    ``int_0^1 x**(u-1) G p dx + E[L**u] (2 max(x**2 G)/y0**2 + 2 max(x G))``,
    where ``L`` is 1/2-stable Levy with parameter ``y0``.
    """
    moment = levy_fractional_moment(u, y0)
    if not isinstance(moment, float):
        return math.inf
    head = integrate_adaptive(lambda x: x ** (u - 1.0) * _gauss(x) * (1.0 - x), 0.0, 1.0,
                              1e-12, left_exponent=u - 1.0).value
    max_x2g = 1.0 / (math.pi * math.e)
    max_xg = math.exp(-0.5) / math.sqrt(2.0 * math.pi)
    return head + moment * (2.0 * max_x2g / y0**2 + 2.0 * max_xg)
