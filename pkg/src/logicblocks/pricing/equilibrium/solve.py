from collections.abc import Mapping
from dataclasses import dataclass
from typing import Any

import numpy as np
from structlog.typing import FilteringBoundLogger

from logicblocks.pricing.demand import DemandSystem
from logicblocks.pricing.exceptions import (
    ResidualExceedsToleranceError,
    ZeroInterceptError,
)
from logicblocks.pricing.linalg import solve_spd
from logicblocks.pricing.types import DEFAULT_TOLERANCES, Tolerances, Vector

from .logger import default_logger
from .prices import PriceVector, build_ane, total_revenue


@dataclass(frozen=True)
class EquilibriumPair:
    p_star: PriceVector
    p_ne: PriceVector
    r_star: float
    r_ne: float

    @property
    def poa(self) -> float:
        """`R(p^NE) / R(p*)`, undefined when every intercept is zero."""
        if self.r_star == 0.0:
            raise ZeroInterceptError()
        return self.r_ne / self.r_star

    def serialise(self) -> Mapping[str, Any]:
        return {
            "p_star": self.p_star.serialise(),
            "p_ne": self.p_ne.serialise(),
            "r_star": self.r_star,
            "r_ne": self.r_ne,
        }


def _first_order_scale(s: DemandSystem, p: Vector) -> float:
    return float(
        np.linalg.norm(s.b, np.inf) * np.max(np.abs(p))
        + np.max(np.abs(s.a))
    )


def _revenue_scale(*terms: float) -> float:
    return max(1.0, *(abs(term) for term in terms))


def _check(quantity: str, residual: float, limit: float) -> None:
    if not residual <= limit:
        raise ResidualExceedsToleranceError(quantity, residual, limit)


def centralized_optimum(
    s: DemandSystem,
    *,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
    logger: FilteringBoundLogger = default_logger,
) -> tuple[PriceVector, float]:
    """Revenue-maximising prices `p* = -½B⁻¹a` and `R(p*)`.

    Solved as `(2H) p* = a` with `H = -B` symmetric positive definite.
    """
    h = -s.b
    p_star = solve_spd(2.0 * h, s.a, tolerances=tolerances)
    revenue = total_revenue(s, p_star)
    half_value = 0.5 * float(s.a @ p_star)

    _check(
        "stationarity",
        float(np.max(np.abs(s.a + 2.0 * s.b @ p_star))),
        tolerances.residual * 2.0 * _first_order_scale(s, p_star),
    )
    _check(
        "centralised revenue",
        abs(revenue - half_value),
        tolerances.residual
        * _revenue_scale(revenue, float(np.abs(s.a) @ np.abs(p_star))),
    )

    logger.debug(
        "pricing.equilibrium.centralised-solved", n=s.n, revenue=revenue
    )

    return PriceVector(p_star), revenue


def nash_equilibrium(
    s: DemandSystem,
    *,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
    logger: FilteringBoundLogger = default_logger,
) -> tuple[PriceVector, float]:
    """Unique pure-strategy equilibrium `p^NE = -(A^NE)⁻¹a` and its revenue.

    Solved as `G p^NE = a` with `G = -A^NE` symmetric positive definite.
    At equilibrium every product's demand equals `d_i p_i`, so the
    revenue also equals `Σ d_i p_i²`; both forms are checked.
    """
    ane = build_ane(s)
    p_ne = solve_spd(-ane, s.a, tolerances=tolerances)
    revenue = total_revenue(s, p_ne)

    _check(
        "first-order condition",
        float(np.max(np.abs(ane @ p_ne + s.a))),
        tolerances.residual * 2.0 * _first_order_scale(s, p_ne),
    )
    d = -np.diag(s.b)
    own_revenue = float(d @ (p_ne * p_ne))
    _check(
        "equilibrium revenue",
        abs(revenue - own_revenue),
        tolerances.residual
        * _revenue_scale(revenue, float(np.abs(s.a) @ np.abs(p_ne))),
    )

    logger.debug("pricing.equilibrium.nash-solved", n=s.n, revenue=revenue)

    return PriceVector(p_ne), revenue


def equilibrium_pair(
    s: DemandSystem,
    *,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
    logger: FilteringBoundLogger = default_logger,
) -> EquilibriumPair:
    p_star, r_star = centralized_optimum(
        s, tolerances=tolerances, logger=logger
    )
    p_ne, r_ne = nash_equilibrium(s, tolerances=tolerances, logger=logger)

    _check(
        "revenue ordering",
        r_ne - r_star,
        tolerances.residual * _revenue_scale(r_star),
    )

    return EquilibriumPair(p_star=p_star, p_ne=p_ne, r_star=r_star, r_ne=r_ne)
