import json
import sys

import pytest

from logicblocks.pricing.cli import ExitCode
from logicblocks.pricing.cli.exit_codes import exit_code_for
from logicblocks.pricing.exceptions import (
    DominanceViolatedError,
    InstanceFormatError,
    NotPositiveDefiniteError,
    StepSizeTooLargeError,
    ZeroInterceptError,
)


class TestExitCodeFor:
    @pytest.mark.parametrize(
        "error",
        [
            DominanceViolatedError(0, 1.2),
            ZeroInterceptError(),
            StepSizeTooLargeError(1.0, 0.5),
            NotPositiveDefiniteError(-1e-3, 1e-12),
        ],
    )
    def test_rejected_input_is_a_validation_error(self, error: Exception):
        assert exit_code_for(error) == ExitCode.VALIDATION_ERROR

    @pytest.mark.parametrize(
        "error",
        [
            InstanceFormatError("bad"),
            FileNotFoundError("missing.json"),
            json.JSONDecodeError("Expecting value", "", 0),
        ],
    )
    def test_unreadable_input_is_an_io_error(self, error: Exception):
        assert exit_code_for(error) == ExitCode.IO_ERROR

    def test_unexpected_errors_are_not_mapped(self):
        assert exit_code_for(RuntimeError("boom")) is None

    def test_codes(self):
        assert [int(code) for code in ExitCode] == [0, 1, 2, 3, 4]


if __name__ == "__main__":
    sys.exit(pytest.main([__file__]))
