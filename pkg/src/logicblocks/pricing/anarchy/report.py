from collections.abc import Mapping
from dataclasses import dataclass
from typing import Any

import numpy as np
from structlog.typing import FilteringBoundLogger

from logicblocks.pricing.demand import DemandSystem, dominance_profile
from logicblocks.pricing.equilibrium import equilibrium_pair
from logicblocks.pricing.exceptions import (
    ResidualExceedsToleranceError,
    ZeroInterceptError,
)
from logicblocks.pricing.linalg import eig_sym
from logicblocks.pricing.types import (
    DEFAULT_TOLERANCES,
    Tolerances,
    Vector,
    VectorLike,
    as_vector,
    vector_to_list,
)

from .bounds import alpha, beta, mu_bound
from .logger import default_logger
from .matrices import PoaMatrices, build_poa_matrices
from .spectral import exact_poa_min, normalized_interaction


def poa_of_intercept(
    s: DemandSystem,
    *,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
    logger: FilteringBoundLogger = default_logger,
) -> float:
    """`R(p^NE) / R(p*)` for the system's own intercept.

    Raises:
        ZeroInterceptError: every intercept is zero.
    """
    if not np.any(s.a):
        raise ZeroInterceptError()
    return equilibrium_pair(s, tolerances=tolerances, logger=logger).poa


def poa_extremes(
    pm: PoaMatrices, *, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> tuple[float, float]:
    """Infimum and supremum of the price of anarchy over all `a ≠ 0`."""
    eigen = eig_sym(pm.m, tolerances=tolerances)
    return eigen.smallest, eigen.largest


@dataclass(frozen=True, eq=False)
class PoaReport:
    poa_of_a: float | None
    poa_min: float
    poa_max: float
    mu: float
    mu_bound: float
    mu_spectral: float
    exact_poa_min: float
    worst_intercept: Vector
    lambda_norm: Vector
    alpha_mu: float
    beta_mu: float
    revenue_loss: float | None
    spectral_formula_value: float
    spectral_formula_agrees: bool

    def serialise(self) -> Mapping[str, Any]:
        return {
            "poa_of_a": self.poa_of_a,
            "poa_min": self.poa_min,
            "poa_max": self.poa_max,
            "mu": self.mu,
            "mu_bound": self.mu_bound,
            "mu_spectral": self.mu_spectral,
            "exact_poa_min": self.exact_poa_min,
            "worst_intercept": vector_to_list(self.worst_intercept),
            "lambda_norm": vector_to_list(self.lambda_norm),
            "alpha_mu": self.alpha_mu,
            "beta_mu": self.beta_mu,
            "revenue_loss": self.revenue_loss,
            "spectral_formula_value": self.spectral_formula_value,
            "spectral_formula_agrees": self.spectral_formula_agrees,
        }


def _check(quantity: str, residual: float, limit: float) -> None:
    if not residual <= limit:
        raise ResidualExceedsToleranceError(quantity, residual, limit)


def analyse(
    s: DemandSystem,
    intercept: VectorLike | None = None,
    *,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
    logger: FilteringBoundLogger = default_logger,
) -> PoaReport:
    """Assemble the full price-of-anarchy report of a system.

    With `intercept` given it replaces the system's own intercept for
    `poa_of_a` and must be non-zero. Without it the system's intercept
    is used, and `poa_of_a` is left empty when that intercept is zero.
    """
    if intercept is not None:
        a = as_vector(intercept)
        if not np.any(a):
            raise ZeroInterceptError()
        s = s.with_intercept(a)

    log = logger.bind(n=s.n)

    mu = dominance_profile(s).mu
    pm = build_poa_matrices(s, tolerances=tolerances, logger=log)
    poa_min, poa_max = poa_extremes(pm, tolerances=tolerances)
    interaction = normalized_interaction(s, tolerances=tolerances)
    exact = exact_poa_min(s, tolerances=tolerances, logger=log)

    poa_of_a = (
        poa_of_intercept(s, tolerances=tolerances, logger=log)
        if np.any(s.a)
        else None
    )

    bound = mu_bound(mu)
    tol = tolerances.poa
    _check("exact minimum against λ_min(M)", abs(exact.value - poa_min), tol)
    _check("μ-bound below λ_min(M)", bound - poa_min, tol)
    if poa_of_a is not None:
        _check(
            "price of anarchy inside [λ_min(M), λ_max(M)]",
            max(poa_min - poa_of_a, poa_of_a - poa_max),
            tol,
        )

    spectral_formula_value = mu_bound(interaction.mu_spectral)
    spectral_formula_agrees = (
        abs(spectral_formula_value - exact.value) <= tol
    )
    if not spectral_formula_agrees:
        log.info(
            "pricing.anarchy.spectral-formula-disagrees",
            spectral_formula_value=spectral_formula_value,
            exact_poa_min=exact.value,
        )

    report = PoaReport(
        poa_of_a=poa_of_a,
        poa_min=poa_min,
        poa_max=poa_max,
        mu=mu,
        mu_bound=bound,
        mu_spectral=interaction.mu_spectral,
        exact_poa_min=exact.value,
        worst_intercept=exact.worst_intercept,
        lambda_norm=interaction.lambda_norm,
        alpha_mu=alpha(mu),
        beta_mu=beta(mu),
        revenue_loss=None if poa_of_a is None else 1.0 - poa_of_a,
        spectral_formula_value=spectral_formula_value,
        spectral_formula_agrees=spectral_formula_agrees,
    )

    log.info(
        "pricing.anarchy.analysed",
        mu=mu,
        poa_min=poa_min,
        poa_of_a=poa_of_a,
    )

    return report
