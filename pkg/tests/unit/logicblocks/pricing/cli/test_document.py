import sys
from datetime import UTC, datetime

import numpy as np
import pytest

from logicblocks.pricing.anarchy import analyse
from logicblocks.pricing.cli import AnalysisDocument
from logicblocks.pricing.cli.document import tool_version
from logicblocks.pricing.demand import classify_interactions, dominance_profile
from logicblocks.pricing.equilibrium import equilibrium_pair
from logicblocks.pricing.instances import SymmetricModelSpec, make_symmetric
from logicblocks.pricing.verification import OracleQuantity, OracleResult


def document(
    oracles: list[OracleResult] | None = None,
    timestamp: datetime | None = None,
) -> AnalysisDocument:
    s, _ = make_symmetric(SymmetricModelSpec(n=2, rho=0.5))
    return AnalysisDocument(
        instance=s,
        intercept=s.a,
        profile=dominance_profile(s),
        interactions=classify_interactions(s),
        equilibria=equilibrium_pair(s),
        report=analyse(s),
        oracles=oracles,
        tool_version="1.2.3",
        timestamp=timestamp,
    )


def oracle(passed: bool) -> OracleResult:
    return OracleResult(
        quantity=OracleQuantity.POA_MIN_SAMPLED,
        value=8 / 9,
        discrepancy=0.0 if passed else 1.0,
        tolerance=1e-9,
        passed=passed,
    )


class TestAnalysisDocument:
    def test_serialises_sections(self):
        serialised = document().serialise()

        assert list(serialised) == [
            "instance",
            "intercept",
            "dominance",
            "interactions",
            "equilibria",
            "poa",
            "oracles",
            "tool_version",
            "timestamp",
        ]
        assert serialised["oracles"] is None
        assert serialised["timestamp"] is None
        assert serialised["tool_version"] == "1.2.3"

    def test_serialises_timestamp_in_iso_format(self):
        now = datetime(2024, 5, 6, 7, 8, 9, tzinfo=UTC)

        serialised = document(timestamp=now).serialise()

        assert serialised["timestamp"] == "2024-05-06T07:08:09+00:00"

    def test_oracles_pass_when_not_run(self):
        assert document().oracles_passed

    def test_oracles_fail_when_any_fails(self):
        assert document([oracle(True)]).oracles_passed
        assert not document([oracle(True), oracle(False)]).oracles_passed

    def test_summary_rows(self):
        rows = dict(document().summary_rows())

        assert rows["n"] == "2"
        assert rows["mu"] == "0.5"
        assert float(rows["poa_of_a"]) == pytest.approx(8 / 9)
        assert float(rows["p_ne[1]"]) == pytest.approx(2 / 3)
        assert "lambda_norm[0]" in rows

    def test_summary_rows_leave_missing_values_empty(self):
        s, _ = make_symmetric(SymmetricModelSpec(n=2, rho=0.5, a_scalar=0))
        base = document()
        empty = AnalysisDocument(
            instance=s,
            intercept=np.zeros(2),
            profile=base.profile,
            interactions=base.interactions,
            equilibria=equilibrium_pair(s),
            report=analyse(s),
            oracles=None,
            tool_version="1.2.3",
        )

        rows = dict(empty.summary_rows())

        assert rows["poa_of_a"] == ""
        assert rows["revenue_loss"] == ""


class TestToolVersion:
    def test_is_never_empty(self):
        assert tool_version() != ""


if __name__ == "__main__":
    sys.exit(pytest.main([__file__]))
