from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from datetime import datetime
from importlib.metadata import PackageNotFoundError, version
from typing import Any

from logicblocks.pricing.anarchy import PoaReport
from logicblocks.pricing.demand import (
    DemandSystem,
    DominanceProfile,
    InteractionSummary,
)
from logicblocks.pricing.equilibrium import EquilibriumPair
from logicblocks.pricing.types import Vector, vector_to_list
from logicblocks.pricing.utils import format_number
from logicblocks.pricing.verification import OracleResult

DISTRIBUTION = "logicblocks.pricing"


def tool_version() -> str:
    try:
        return version(DISTRIBUTION)
    except PackageNotFoundError:
        return "unknown"


@dataclass(frozen=True)
class AnalysisDocument:
    """Everything `analyze` reports for one instance and intercept."""

    instance: DemandSystem
    intercept: Vector
    profile: DominanceProfile
    interactions: InteractionSummary
    equilibria: EquilibriumPair
    report: PoaReport
    oracles: Sequence[OracleResult] | None
    tool_version: str
    timestamp: datetime | None = None

    @property
    def oracles_passed(self) -> bool:
        return self.oracles is None or all(
            oracle.passed for oracle in self.oracles
        )

    def serialise(self) -> Mapping[str, Any]:
        return {
            "instance": self.instance.serialise(),
            "intercept": vector_to_list(self.intercept),
            "dominance": self.profile.serialise(),
            "interactions": self.interactions.serialise(),
            "equilibria": self.equilibria.serialise(),
            "poa": self.report.serialise(),
            "oracles": (
                None
                if self.oracles is None
                else [oracle.serialise() for oracle in self.oracles]
            ),
            "tool_version": self.tool_version,
            "timestamp": (
                None if self.timestamp is None else self.timestamp.isoformat()
            ),
        }

    def summary_rows(self) -> list[tuple[str, str]]:
        """Scalar fields followed by indexed vector entries, as text."""
        report = self.report
        rows: list[tuple[str, float | None]] = [
            ("n", self.instance.n),
            ("mu", report.mu),
            ("mu_bound", report.mu_bound),
            ("mu_spectral", report.mu_spectral),
            ("poa_of_a", report.poa_of_a),
            ("revenue_loss", report.revenue_loss),
            ("poa_min", report.poa_min),
            ("poa_max", report.poa_max),
            ("exact_poa_min", report.exact_poa_min),
            ("spectral_formula_value", report.spectral_formula_value),
            ("alpha_mu", report.alpha_mu),
            ("beta_mu", report.beta_mu),
            ("r_star", self.equilibria.r_star),
            ("r_ne", self.equilibria.r_ne),
        ]
        vectors: list[tuple[str, Vector]] = [
            ("intercept", self.intercept),
            ("p_star", self.equilibria.p_star.p),
            ("p_ne", self.equilibria.p_ne.p),
            ("worst_intercept", report.worst_intercept),
            ("lambda_norm", report.lambda_norm),
        ]
        for name, vector in vectors:
            rows.extend(
                (f"{name}[{i}]", float(value))
                for i, value in enumerate(vector)
            )
        return [
            (name, "" if value is None else format_number(value))
            for name, value in rows
        ]
