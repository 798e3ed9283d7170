from abc import ABC, abstractmethod
from argparse import ArgumentParser, Namespace, _SubParsersAction
from dataclasses import dataclass
from typing import ClassVar

from pyheck import kebab as to_kebab_case
from rich.console import Console
from structlog.typing import FilteringBoundLogger

from logicblocks.pricing.utils import Clock

from ..exit_codes import ExitCode
from ..settings import CliSettings


@dataclass(frozen=True)
class CommandContext:
    console: Console
    settings: CliSettings
    clock: Clock
    logger: FilteringBoundLogger


class Command(ABC):
    help: ClassVar[str]
    description: ClassVar[str | None] = None

    @property
    def name(self) -> str:
        return to_kebab_case(self.__class__.__name__.replace("Command", ""))

    def register(
        self, subparsers: "_SubParsersAction[ArgumentParser]"
    ) -> None:
        parser = subparsers.add_parser(
            self.name,
            help=self.help,
            description=self.description or self.help,
        )
        self.configure(parser)
        parser.set_defaults(command=self)

    @abstractmethod
    def configure(self, parser: ArgumentParser) -> None:
        raise NotImplementedError()

    @abstractmethod
    def run(self, args: Namespace, context: CommandContext) -> ExitCode:
        raise NotImplementedError()
