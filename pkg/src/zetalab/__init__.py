"""Numerical laboratory for theta, Mellin and zeta identities and the Wiener-Riemann measure."""

from .continuation import (POLE_FACTOR, im_decomposition, mellin_of_theta, muntz_residual,
                           muntz_sides, tail_integral, zeta_via_theta_quotient)
from .errors import (DomainError, NoConvergence, NonIntegrableSingularity, NumericalError,
                     OutOfStripError, ParseError, PoleError, ToleranceNotMet, ZetaLabError)
from .functions import (Dilated, ExpDecay, FourierImage, Gaussian, Indicator01, PeakTimesGaussian,
                        SampledEven, Scaled, Sum, TestFunction, Triangle, fourier_image,
                        unitary_image)
from .levy import (Divergent, hill_tail_index, levy_cdf, levy_density, levy_fractional_moment,
                   levy_moment_mc, levy_sample)
from .numerics import (DEFAULT_TOL, MomentEstimate, QuadratureResult, accelerate_alternating,
                       compensated_sum, integrate_adaptive, rng_for)
from .reference import completed_zeta, gamma, trivial_zeta, zeta_euler_maclaurin, zeta_reference
from .stochastic import (BrownianPath, PathGrid, b_s_estimate, b_s_exact, b_s_upper_bound,
                         girsanov_check, girsanov_log_density, peak, sample_path, sample_paths,
                         sample_wr_paths, wr_moment, wr_moment_closed_form)
from .transforms import (fourier_cosine, fox_residual, fox_solve, make_poisson_element, mellin,
                         psf_residual, psf_sides, s2_norm, theta_transform, unitary_cosine)

__version__ = "0.1.0"
