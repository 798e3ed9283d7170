import json
from enum import IntEnum

from logicblocks.pricing.exceptions import (
    InstanceFormatError,
    NumericalError,
    ValidationError,
)


class ExitCode(IntEnum):
    OK = 0
    IO_ERROR = 1
    VALIDATION_ERROR = 2
    ORACLE_FAILED = 3
    NOT_CONVERGED = 4


def exit_code_for(error: Exception) -> ExitCode | None:
    match error:
        case ValidationError() | NumericalError():
            return ExitCode.VALIDATION_ERROR
        case InstanceFormatError() | json.JSONDecodeError() | OSError():
            return ExitCode.IO_ERROR
        case _:
            return None
