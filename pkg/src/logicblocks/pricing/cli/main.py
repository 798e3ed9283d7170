import logging
import os
import sys
from argparse import ArgumentParser
from collections.abc import Mapping, Sequence

import structlog
from rich.console import Console

from logicblocks.pricing.exceptions import PricingError
from logicblocks.pricing.utils import Clock, SystemClock

from .commands import (
    AnalyzeCommand,
    Command,
    CommandContext,
    CurveCommand,
    GenerateCommand,
    SimulateCommand,
    ValidateCommand,
)
from .exit_codes import exit_code_for
from .logger import default_logger
from .settings import CliSettings

COMMANDS: Sequence[Command] = (
    ValidateCommand(),
    AnalyzeCommand(),
    CurveCommand(),
    GenerateCommand(),
    SimulateCommand(),
)

LOG_LEVELS = ("debug", "info", "warning", "error", "critical")


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="poa-pricing",
        description=(
            "Centralised and Nash pricing for linear multi-product demand, "
            "with price-of-anarchy analysis."
        ),
    )
    parser.add_argument(
        "--log-level", choices=LOG_LEVELS, default="warning"
    )
    subparsers = parser.add_subparsers(
        title="commands", dest="command_name", required=True
    )
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def configure_logging(level: str) -> None:
    structlog.configure(
        processors=[
            structlog.processors.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.dev.ConsoleRenderer(colors=False),
        ],
        wrapper_class=structlog.make_filtering_bound_logger(
            logging.getLevelNamesMapping()[level.upper()]
        ),
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,
    )


def _describe(error: Exception) -> str:
    if isinstance(error, PricingError):
        return error.message
    return str(error)


def main(
    argv: Sequence[str] | None = None,
    *,
    console: Console | None = None,
    error_console: Console | None = None,
    environ: Mapping[str, str] | None = None,
    clock: Clock | None = None,
) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)

    logger = default_logger
    command: Command = args.command
    context = CommandContext(
        console=console or Console(),
        settings=CliSettings.from_environment(
            os.environ if environ is None else environ, logger=logger
        ),
        clock=clock or SystemClock(),
        logger=logger.bind(command=command.name),
    )
    error_console = error_console or Console(stderr=True)

    try:
        return int(command.run(args, context))
    except Exception as error:
        code = exit_code_for(error)
        if code is None:
            raise
        context.logger.info(
            "pricing.cli.command-failed",
            error=error.__class__.__name__,
            exit_code=int(code),
        )
        error_console.print(f"error: {_describe(error)}", markup=False)
        return int(code)
