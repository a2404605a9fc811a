import pytest

from zetalab import Gaussian, PeakTimesGaussian, make_poisson_element


@pytest.fixture(scope="session")
def gauss():
    return Gaussian()


@pytest.fixture(scope="session")
def cylinder():
    return make_poisson_element(PeakTimesGaussian(), normalize=True)
