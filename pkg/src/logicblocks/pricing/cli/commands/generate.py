from argparse import ArgumentParser, Namespace
from enum import StrEnum
from pathlib import Path

from logicblocks.pricing.demand import DemandSystem
from logicblocks.pricing.exceptions import SpecInvalidError
from logicblocks.pricing.instances import (
    SignMode,
    StarSpec,
    SymmetricModelSpec,
    SymmetricReference,
    make_random,
    make_star,
    make_symmetric,
)

from ..exit_codes import ExitCode
from ..files import write_json
from .base import Command, CommandContext


class Model(StrEnum):
    SYMMETRIC = "symmetric"
    STAR = "star"
    RANDOM = "random"


def _required[T](value: T | None, flag: str, model: Model) -> T:
    if value is None:
        raise SpecInvalidError(f"--{flag} is required for the {model} model")
    return value


def reference_path(output: Path) -> Path:
    return output.with_name(f"{output.stem}.reference.json")


class GenerateCommand(Command):
    help = "Write a symmetric, star or seeded random instance."

    def configure(self, parser: ArgumentParser) -> None:
        parser.add_argument(
            "--model", type=Model, choices=list(Model), required=True
        )
        parser.add_argument("--n", type=int, required=True)
        parser.add_argument("--rho", type=float)
        parser.add_argument("--mu", type=float)
        parser.add_argument(
            "--sign-mode",
            type=SignMode,
            choices=list(SignMode),
            default=SignMode.MIXED,
        )
        parser.add_argument("--a", type=float, default=1.0)
        parser.add_argument("--seed", type=int, default=0)
        parser.add_argument("--output", type=Path, required=True)
        parser.add_argument(
            "--reference",
            type=Path,
            help="closed-form reference output for the symmetric model, "
            "defaults to <output stem>.reference.json",
        )

    def run(self, args: Namespace, context: CommandContext) -> ExitCode:
        model: Model = args.model
        reference: SymmetricReference | None = None

        match model:
            case Model.SYMMETRIC:
                system, reference = make_symmetric(
                    SymmetricModelSpec(
                        n=args.n,
                        rho=_required(args.rho, "rho", model),
                        a_scalar=args.a,
                    )
                )
            case Model.STAR:
                system = make_star(
                    StarSpec(
                        n=args.n,
                        rho=_required(args.rho, "rho", model),
                        a_scalar=args.a,
                    )
                )
            case Model.RANDOM:
                system = make_random(
                    args.n,
                    _required(args.mu, "mu", model),
                    args.sign_mode,
                    args.seed,
                )

        self._write(args, context, system, reference)
        return ExitCode.OK

    @staticmethod
    def _write(
        args: Namespace,
        context: CommandContext,
        system: DemandSystem,
        reference: SymmetricReference | None,
    ) -> None:
        write_json(args.output, system.serialise())
        context.console.print(f"wrote {args.output}", markup=False)
        if reference is not None:
            path = args.reference or reference_path(args.output)
            write_json(path, reference.serialise())
            context.console.print(f"wrote {path}", markup=False)
        context.logger.info(
            "pricing.cli.generated", model=str(args.model), n=system.n
        )
