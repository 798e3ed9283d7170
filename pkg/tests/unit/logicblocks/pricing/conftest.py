import logging

import pytest
import structlog

structlog.configure(
    wrapper_class=structlog.make_filtering_bound_logger(logging.CRITICAL)
)

for package in [
    "logicblocks.pricing.testcases.invariants",
]:
    pytest.register_assert_rewrite(package)
