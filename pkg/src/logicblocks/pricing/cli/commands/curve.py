import csv
import io
from argparse import ArgumentParser, Namespace
from pathlib import Path

import numpy as np

from logicblocks.pricing.anarchy import mu_bound
from logicblocks.pricing.exceptions import SpecInvalidError
from logicblocks.pricing.utils import format_number, write_atomically

from ..exit_codes import ExitCode
from .base import Command, CommandContext


def bound_curve(mu_min: float, mu_max: float, steps: int) -> str:
    """`mu,bound` rows of the worst-case bound on an even grid."""
    if not 0.0 <= mu_min < mu_max < 1.0:
        raise SpecInvalidError(
            f"need 0 <= mu-min < mu-max < 1, "
            f"got {mu_min!r} and {mu_max!r}"
        )
    if steps < 2:
        raise SpecInvalidError(f"steps = {steps} must be at least 2")

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["mu", "bound"])
    for mu in np.linspace(mu_min, mu_max, steps):
        writer.writerow(
            [format_number(float(mu)), format_number(mu_bound(float(mu)))]
        )
    return buffer.getvalue()


class CurveCommand(Command):
    help = "Tabulate the worst-case bound 4(1 - mu)/(2 - mu)^2."

    def configure(self, parser: ArgumentParser) -> None:
        parser.add_argument("--mu-min", type=float, required=True)
        parser.add_argument("--mu-max", type=float, required=True)
        parser.add_argument("--steps", type=int, required=True)
        parser.add_argument("--output", type=Path, required=True)

    def run(self, args: Namespace, context: CommandContext) -> ExitCode:
        write_atomically(
            args.output, bound_curve(args.mu_min, args.mu_max, args.steps)
        )
        context.logger.info("pricing.cli.curve-written", steps=args.steps)
        return ExitCode.OK
