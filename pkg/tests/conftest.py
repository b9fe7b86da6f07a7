import numpy as np
import pytest

from nclandau import LandauConfig, NCParams


@pytest.fixture
def preset():
    """q = mu = c = hbar = 1, B = 2, so omega_L = 1."""
    return LandauConfig.natural()


@pytest.fixture
def space_params():
    return NCParams.space(1.0)


@pytest.fixture
def phase_params():
    return NCParams.phase(1.0, 0.8)


def param_grid(n_theta=10, n_alpha=10, hbar=1.0):
    """(theta, alpha) grid: theta log-spaced, alpha linear, as NCParams."""
    thetas = np.logspace(-2, 1, n_theta)
    alphas = np.linspace(0.5, 1.0, n_alpha)
    return [
        NCParams.phase(float(t), float(a), hbar) for t in thetas for a in alphas
    ]
