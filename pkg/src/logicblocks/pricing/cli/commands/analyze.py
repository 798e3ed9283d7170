import csv
import io
from argparse import ArgumentParser, Namespace
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from datetime import UTC
from enum import StrEnum
from pathlib import Path

import numpy as np
from rich.table import Table

from logicblocks.pricing.anarchy import analyse
from logicblocks.pricing.demand import (
    DemandSystem,
    classify_interactions,
    dominance_profile,
)
from logicblocks.pricing.equilibrium import equilibrium_pair
from logicblocks.pricing.exceptions import ZeroInterceptError
from logicblocks.pricing.utils import write_atomically
from logicblocks.pricing.verification import (
    OracleResult,
    oracle_centralized,
    oracle_nash,
    oracle_poa_min,
)

from ..document import AnalysisDocument, tool_version
from ..exit_codes import ExitCode
from ..files import read_instance, read_vector, write_json
from .base import Command, CommandContext


class OutputFormat(StrEnum):
    JSON = "json"
    CSV = "csv"


def run_oracles(
    s: DemandSystem, *, samples: int, seed: int, threads: int
) -> list[OracleResult]:
    """All three oracles, at most `threads` at a time, in fixed order."""
    oracles: list[Callable[[], OracleResult]] = [
        lambda: oracle_centralized(s),
        lambda: oracle_nash(s, seed=seed),
        lambda: oracle_poa_min(s, samples=samples, seed=seed),
    ]
    with ThreadPoolExecutor(max_workers=threads) as executor:
        futures = [executor.submit(oracle) for oracle in oracles]
        return [future.result() for future in futures]


def render_csv(document: AnalysisDocument) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["field", "value"])
    writer.writerows(document.summary_rows())
    return buffer.getvalue()


class AnalyzeCommand(Command):
    help = "Run the full price-of-anarchy analysis of an instance."
    description = (
        "Run the full price-of-anarchy analysis of an instance. The "
        "intercept read from --intercept replaces the instance's own; "
        "without it the all-ones intercept is analysed."
    )

    def configure(self, parser: ArgumentParser) -> None:
        parser.add_argument("--input", type=Path, required=True)
        parser.add_argument("--intercept", type=Path)
        parser.add_argument("--output", type=Path, required=True)
        parser.add_argument(
            "--format",
            type=OutputFormat,
            choices=list(OutputFormat),
            default=OutputFormat.JSON,
        )
        parser.add_argument("--verify", action="store_true")
        parser.add_argument("--samples", type=int, default=1000)
        parser.add_argument("--seed", type=int, default=0)
        parser.add_argument(
            "--timestamp",
            action="store_true",
            help="stamp the document with the current time",
        )

    def run(self, args: Namespace, context: CommandContext) -> ExitCode:
        s = read_instance(args.input)
        intercept = (
            read_vector(args.intercept, "a")
            if args.intercept is not None
            else np.ones(s.n)
        )
        if not np.any(intercept):
            raise ZeroInterceptError()

        analysed = s.with_intercept(intercept)
        report = analyse(s, intercept)
        oracles = (
            run_oracles(
                analysed,
                samples=args.samples,
                seed=args.seed,
                threads=context.settings.threads,
            )
            if args.verify
            else None
        )

        document = AnalysisDocument(
            instance=s,
            intercept=analysed.a,
            profile=dominance_profile(s),
            interactions=classify_interactions(s),
            equilibria=equilibrium_pair(analysed),
            report=report,
            oracles=oracles,
            tool_version=tool_version(),
            timestamp=context.clock.now(UTC) if args.timestamp else None,
        )

        match args.format:
            case OutputFormat.CSV:
                write_atomically(args.output, render_csv(document))
            case _:
                write_json(args.output, document.serialise())

        self._summarise(document, context)

        if not document.oracles_passed:
            return ExitCode.ORACLE_FAILED
        return ExitCode.OK

    @staticmethod
    def _summarise(
        document: AnalysisDocument, context: CommandContext
    ) -> None:
        table = Table("field", "value")
        for name, value in document.summary_rows():
            if "[" not in name:
                table.add_row(name, value)
        for oracle in document.oracles or []:
            table.add_row(
                oracle.quantity.value,
                "passed" if oracle.passed else "FAILED",
            )
        context.console.print(table)
