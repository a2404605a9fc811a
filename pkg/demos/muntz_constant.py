"""Which pole term makes the Muntz identity hold?

Evaluates ``M(c)(s) zeta(s) - k c(0)/(s(s-1)) - I(s)`` for ``k = 1`` and
``k = 1/2``, for the Gaussian and for a non-Gaussian Poisson-cylinder element.
The residual under ``k = 1`` equals ``|1/(2 s(s-1))|`` to quadrature accuracy.
"""

from zetalab import Gaussian, PeakTimesGaussian, make_poisson_element, muntz_residual

POINTS = (1.5, 0.5 + 3j, 0.3 + 1j, 1.7 - 2j)


def main():
    elements = {"gaussian": Gaussian(),
                "cylinder": make_poisson_element(PeakTimesGaussian(), normalize=True)}
    print(f"{'element':>9} {'s':>12} {'k=1':>11} {'k=1/2':>11} {'|1/(2s(s-1))|':>14}")
    for name, c in elements.items():
        for s in POINTS:
            full = muntz_residual(c, s, pole_factor=1.0).value
            half = muntz_residual(c, s).value
            print(f"{name:>9} {str(s):>12} {full:11.3e} {half:11.3e} "
                  f"{abs(1 / (2 * s * (s - 1))):14.3e}")


if __name__ == "__main__":
    main()
