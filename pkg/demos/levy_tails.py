"""Fractional moments of the 1/2-stable Levy law.

For ``u < 1/2`` the Monte Carlo mean of ``L**u`` approaches the closed form.
At ``u = 0.4`` the variance of ``L**u`` is already infinite, so the quoted
standard error understates the spread. For ``u >= 1/2`` the moment itself is
infinite, and the Hill tail index of the sample sits near ``1/2``.
"""

from zetalab import levy_fractional_moment, levy_moment_mc

N = 200_000


def main():
    for u in (0.1, 0.25, 0.4, 0.5, 0.6):
        est = levy_moment_mc(u, 1.0, N, seed=1)
        exact = levy_fractional_moment(u)
        exact_text = f"{exact:.4f}" if isinstance(exact, float) else "inf"
        print(f"u={u:<4} mc={est.mean:10.4f} +- {est.std_error:.4f}  exact={exact_text:>7}  "
              f"divergent={est.divergence_flag}")
        for label, _, mean, se in est.diagnostics:
            print(f"    {label:>12} {mean:12.4f} +- {se:.4f}")


if __name__ == "__main__":
    main()
