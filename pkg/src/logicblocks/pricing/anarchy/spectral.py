from dataclasses import dataclass

import numpy as np
from structlog.typing import FilteringBoundLogger

from logicblocks.pricing.demand import DemandSystem
from logicblocks.pricing.linalg import eig_sym, symmetrise
from logicblocks.pricing.types import (
    DEFAULT_TOLERANCES,
    Matrix,
    Tolerances,
    Vector,
    frozen,
)

from .bounds import spectral_poa
from .logger import default_logger


@dataclass(frozen=True, eq=False)
class NormalizedInteraction:
    """Dimensionless coupling `M_norm = D^{-1/2} B_off D^{-1/2}`.

    `lambda_norm` is ascending; `eigenvectors` holds the matching
    orthonormal columns. `mu_spectral` is the largest eigenvalue in
    absolute value and never exceeds the row-sum dominance parameter.
    """

    m_norm: Matrix
    mu_spectral: float
    lambda_norm: Vector
    eigenvectors: Matrix

    @property
    def theta(self) -> Vector:
        """Spectrum of `Y` recovered as `(1 - λ)/(2 - λ)`."""
        return (1.0 - self.lambda_norm) / (2.0 - self.lambda_norm)


@dataclass(frozen=True, eq=False)
class ExactPoaMin:
    value: float
    worst_intercept: Vector
    eigenvalue: float


def normalized_interaction(
    s: DemandSystem, *, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> NormalizedInteraction:
    d = -np.diag(s.b)
    root = np.sqrt(d)
    m_norm = symmetrise(s.b / np.outer(root, root))
    np.fill_diagonal(m_norm, 0.0)

    eigen = eig_sym(m_norm, tolerances=tolerances)
    mu_spectral = max(abs(eigen.largest), abs(eigen.smallest))

    return NormalizedInteraction(
        m_norm=frozen(m_norm),
        mu_spectral=float(mu_spectral),
        lambda_norm=eigen.eigenvalues,
        eigenvectors=eigen.eigenvectors,
    )


def exact_poa_min(
    s: DemandSystem,
    *,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
    logger: FilteringBoundLogger = default_logger,
) -> ExactPoaMin:
    """Worst-case price of anarchy from the spectrum of `M_norm`.

    Minimises `g(λ)` over the actual eigenvalues rather than evaluating
    `g(μ_spectral)`, so negative-dominated spectra are handled too. The
    worst intercept is `D^{1/2}v` for the minimising eigenvector `v`.
    """
    interaction = normalized_interaction(s, tolerances=tolerances)
    values = spectral_poa(interaction.lambda_norm)
    index = int(np.argmin(values))

    d = -np.diag(s.b)
    worst_intercept = np.sqrt(d) * interaction.eigenvectors[:, index]

    result = ExactPoaMin(
        value=float(values[index]),
        worst_intercept=frozen(worst_intercept),
        eigenvalue=float(interaction.lambda_norm[index]),
    )

    logger.debug(
        "pricing.anarchy.exact-minimum",
        n=s.n,
        value=result.value,
        eigenvalue=result.eigenvalue,
    )

    return result
