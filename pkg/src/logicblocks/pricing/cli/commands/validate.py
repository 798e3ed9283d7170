from argparse import ArgumentParser, Namespace
from pathlib import Path

from rich.table import Table

from logicblocks.pricing.demand import (
    classify_interactions,
    dominance_profile,
    gershgorin_discs,
)
from logicblocks.pricing.utils import format_number

from ..exit_codes import ExitCode
from ..files import read_instance
from .base import Command, CommandContext


class ValidateCommand(Command):
    help = "Check an instance against the modelling assumptions."

    def configure(self, parser: ArgumentParser) -> None:
        parser.add_argument("--input", type=Path, required=True)

    def run(self, args: Namespace, context: CommandContext) -> ExitCode:
        s = read_instance(args.input)
        profile = dominance_profile(s)
        interactions = classify_interactions(s)
        discs = gershgorin_discs(s)

        table = Table("product", "b_ii", "mu_i", "disc right endpoint")
        for i in range(s.n):
            table.add_row(
                str(i),
                format_number(float(s.b[i, i])),
                format_number(float(profile.mu_local[i])),
                format_number(float(discs.right_endpoints[i])),
            )

        context.console.print(table)
        context.console.print(
            f"valid: n = {s.n}, mu = {format_number(profile.mu)}, "
            f"{interactions.substitutes} substitute, "
            f"{interactions.complements} complement and "
            f"{interactions.independent} independent pairs, "
            f"largest disc endpoint "
            f"{format_number(discs.max_right_endpoint)}",
            markup=False,
        )
        context.logger.info("pricing.cli.validated", n=s.n, mu=profile.mu)
        return ExitCode.OK
