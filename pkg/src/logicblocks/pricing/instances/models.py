from collections.abc import Mapping
from dataclasses import dataclass
from typing import Any

import numpy as np
from structlog.typing import FilteringBoundLogger

from logicblocks.pricing.demand import DemandSystem, build_demand_system

from .logger import default_logger
from .specs import StarSpec, SymmetricModelSpec


@dataclass(frozen=True)
class SymmetricReference:
    """Closed-form equilibrium values of the exchangeable model."""

    p_star_scalar: float
    r_star: float
    p_ne_scalar: float
    r_ne: float
    poa: float
    mu: float
    eig_b_simple: float
    eig_b_repeated: float

    def serialise(self) -> Mapping[str, Any]:
        return {
            "p_star_scalar": self.p_star_scalar,
            "r_star": self.r_star,
            "p_ne_scalar": self.p_ne_scalar,
            "r_ne": self.r_ne,
            "poa": self.poa,
            "mu": self.mu,
            "eig_b_simple": self.eig_b_simple,
            "eig_b_repeated": self.eig_b_repeated,
        }


def symmetric_reference(spec: SymmetricModelSpec) -> SymmetricReference:
    n, a, mu = spec.n, spec.a_scalar, spec.mu
    return SymmetricReference(
        p_star_scalar=a / (2.0 * (1.0 - mu)),
        r_star=n * a * a / (4.0 * (1.0 - mu)),
        p_ne_scalar=a / (2.0 - mu),
        r_ne=n * a * a / (2.0 - mu) ** 2,
        poa=4.0 * (1.0 - mu) / (2.0 - mu) ** 2,
        mu=mu,
        eig_b_simple=-1.0 + mu,
        eig_b_repeated=-1.0 - spec.rho,
    )


def make_symmetric(
    spec: SymmetricModelSpec,
    *,
    logger: FilteringBoundLogger = default_logger,
) -> tuple[DemandSystem, SymmetricReference]:
    b = np.full((spec.n, spec.n), spec.rho)
    np.fill_diagonal(b, -1.0)
    a = np.full(spec.n, spec.a_scalar)

    system = build_demand_system(a, b, logger=logger)
    reference = symmetric_reference(spec)

    logger.debug(
        "pricing.instances.symmetric-generated",
        n=spec.n,
        rho=spec.rho,
        mu=spec.mu,
    )

    return system, reference


def make_star(
    spec: StarSpec,
    *,
    logger: FilteringBoundLogger = default_logger,
) -> DemandSystem:
    b = -np.eye(spec.n)
    b[0, 1:] = spec.rho
    b[1:, 0] = spec.rho
    a = np.full(spec.n, spec.a_scalar)

    logger.debug("pricing.instances.star-generated", n=spec.n, rho=spec.rho)

    return build_demand_system(a, b, logger=logger)
