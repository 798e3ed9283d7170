from collections.abc import Mapping
from dataclasses import dataclass
from enum import StrEnum
from typing import Any

from structlog.typing import FilteringBoundLogger

from logicblocks.pricing.equilibrium import PriceVector


class OracleQuantity(StrEnum):
    CENTRALIZED_REVENUE = "centralized_revenue"
    NASH_PRICES = "nash_prices"
    POA_MIN_SAMPLED = "poa_min_sampled"


@dataclass(frozen=True)
class OracleResult:
    quantity: OracleQuantity
    value: float | PriceVector
    discrepancy: float
    tolerance: float
    passed: bool

    def serialise(self) -> Mapping[str, Any]:
        return {
            "quantity": self.quantity.value,
            "value": (
                self.value.serialise()
                if isinstance(self.value, PriceVector)
                else self.value
            ),
            "discrepancy": self.discrepancy,
            "tolerance": self.tolerance,
            "passed": self.passed,
        }


def log_result(result: OracleResult, logger: FilteringBoundLogger) -> None:
    if result.passed:
        logger.info(
            "pricing.verification.oracle-passed",
            quantity=result.quantity.value,
            discrepancy=result.discrepancy,
        )
    else:
        logger.warning(
            "pricing.verification.oracle-failed",
            quantity=result.quantity.value,
            discrepancy=result.discrepancy,
            tolerance=result.tolerance,
        )
