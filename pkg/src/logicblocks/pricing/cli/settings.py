from collections.abc import Mapping
from dataclasses import dataclass
from typing import Self

from structlog.typing import FilteringBoundLogger

from .logger import default_logger

THREADS_VARIABLE = "POA_PRICING_THREADS"
DEFAULT_THREADS = 3


@dataclass(frozen=True)
class CliSettings:
    threads: int = DEFAULT_THREADS

    @classmethod
    def from_environment(
        cls,
        environ: Mapping[str, str],
        *,
        logger: FilteringBoundLogger = default_logger,
    ) -> Self:
        raw = environ.get(THREADS_VARIABLE)
        if raw is None:
            return cls()
        try:
            threads = int(raw)
        except ValueError:
            threads = 0
        if threads < 1:
            logger.warning(
                "pricing.cli.invalid-thread-count",
                variable=THREADS_VARIABLE,
                value=raw,
                fallback=1,
            )
            return cls(threads=1)
        return cls(threads=threads)
