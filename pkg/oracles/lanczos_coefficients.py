"""Regenerate the Lanczos coefficients embedded in ``zetalab.reference``.

The partial-fraction sum ``p0 + sum_i p_i / (z + i)`` is fitted so that it
reproduces ``Gamma(z + 1) e^t / (sqrt(2 pi) t^(z + 1/2))`` with
``t = z + g + 1/2`` exactly at ``z = 0, 1, ..., n - 1``, in 50-digit
arithmetic. With g = 7 and n = 9 this recovers the embedded set to the
accuracy it is quoted at.

Run ``python3 oracles/lanczos_coefficients.py``.
"""

import mpmath as mp

from zetalab.reference import LANCZOS_COEFFS, LANCZOS_G


def lanczos_coefficients(g, n, dps=50):
    mp.mp.dps = dps
    g = mp.mpf(g)
    rows, rhs = [], []
    for z in range(n):
        t = z + g + mp.mpf(1) / 2
        rhs.append(mp.gamma(z + 1) * mp.exp(t) / (mp.sqrt(2 * mp.pi) * t ** (z + mp.mpf(1) / 2)))
        rows.append([mp.mpf(1)] + [mp.mpf(1) / (z + i) for i in range(1, n)])
    return [float(c) for c in mp.lu_solve(mp.matrix(rows), mp.matrix(rhs))]


if __name__ == "__main__":
    fresh = lanczos_coefficients(LANCZOS_G, len(LANCZOS_COEFFS))
    for new, old in zip(fresh, LANCZOS_COEFFS):
        print(f"{new!r:>26}  embedded {old!r:>26}  rel diff {abs(new - old) / abs(old):.1e}")
