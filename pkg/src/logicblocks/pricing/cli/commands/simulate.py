from argparse import ArgumentParser, Namespace
from enum import StrEnum
from pathlib import Path

import numpy as np

from logicblocks.pricing.dynamics import (
    DEFAULT_EPS,
    DEFAULT_MAX_ITERS,
    best_response_dynamics,
    eta_max,
    gradient_play,
    trajectory_csv,
)
from logicblocks.pricing.utils import format_number, write_atomically

from ..exit_codes import ExitCode
from ..files import read_instance, read_vector
from .base import Command, CommandContext


class Dynamic(StrEnum):
    BEST_RESPONSE = "br"
    GRADIENT_PLAY = "gd"


class SimulateCommand(Command):
    help = "Simulate best-response or gradient-play learning."
    description = (
        "Simulate best-response (br) or gradient-play (gd) learning from "
        "--p0 (zero prices when absent). Gradient play uses half the "
        "largest accepted step size when --eta is absent."
    )

    def configure(self, parser: ArgumentParser) -> None:
        parser.add_argument("--input", type=Path, required=True)
        parser.add_argument(
            "--dynamic", type=Dynamic, choices=list(Dynamic), required=True
        )
        parser.add_argument("--eta", type=float)
        parser.add_argument("--p0", type=Path)
        parser.add_argument(
            "--max-iters", type=int, default=DEFAULT_MAX_ITERS
        )
        parser.add_argument("--eps", type=float, default=DEFAULT_EPS)
        parser.add_argument("--output", type=Path, required=True)

    def run(self, args: Namespace, context: CommandContext) -> ExitCode:
        s = read_instance(args.input)
        p0 = (
            read_vector(args.p0, "p0")
            if args.p0 is not None
            else np.zeros(s.n)
        )

        match args.dynamic:
            case Dynamic.GRADIENT_PLAY:
                eta = args.eta if args.eta is not None else eta_max(s) / 2
                record = gradient_play(
                    s, p0, eta, max_iters=args.max_iters, eps=args.eps
                )
            case _:
                record = best_response_dynamics(
                    s, p0, max_iters=args.max_iters, eps=args.eps
                )

        write_atomically(args.output, trajectory_csv(record))

        context.console.print(
            f"steps={record.steps} "
            f"dist_to_ne={format_number(float(record.dist_to_ne[-1]))} "
            f"converged={str(record.converged).lower()}",
            markup=False,
        )

        return ExitCode.OK if record.converged else ExitCode.NOT_CONVERGED
