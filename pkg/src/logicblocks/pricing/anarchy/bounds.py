import numpy as np
from numpy.typing import ArrayLike

from logicblocks.pricing.exceptions import MuOutOfRangeError
from logicblocks.pricing.types import Vector


def _check_mu(mu: float) -> float:
    mu = float(mu)
    if not 0.0 <= mu < 1.0:
        raise MuOutOfRangeError(mu)
    return mu


def spectral_poa(lambdas: ArrayLike) -> Vector:
    """`g(λ) = 4(1 − λ)/(2 − λ)²`, the price of anarchy along an
    eigendirection of the normalised interaction matrix with eigenvalue
    `λ`. Increasing on `(-1, 0]`, decreasing on `[0, 1)`, `g(0) = 1`.
    """
    values = np.asarray(lambdas, dtype=np.float64)
    return 4.0 * (1.0 - values) / (2.0 - values) ** 2


def mu_bound(mu: float) -> float:
    """Worst-case price of anarchy guaranteed by dominance parameter `mu`.

    Raises:
        MuOutOfRangeError: `mu` outside `[0, 1)`.
    """
    mu = _check_mu(mu)
    return 4.0 * (1.0 - mu) / (2.0 - mu) ** 2


def alpha(mu: float) -> float:
    mu = _check_mu(mu)
    return (2.0 - mu) / (1.0 - mu)


def beta(mu: float) -> float:
    mu = _check_mu(mu)
    return (2.0 + mu) / (1.0 + mu)


def y_eigenvalue_interval(mu: float) -> tuple[float, float]:
    """Interval holding every eigenvalue of `Y` when dominance is `mu`."""
    mu = _check_mu(mu)
    return (1.0 - mu) / (2.0 - mu), (1.0 + mu) / (2.0 + mu)
