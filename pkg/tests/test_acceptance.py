"""One test per reproduction check; each prints as its own pass/fail line."""

import pytest

from discweil.acceptance import CHECKS, run_check


@pytest.mark.parametrize(
    "index", range(1, len(CHECKS) + 1), ids=[name for name, _ in CHECKS]
)
def test_criterion(index):
    result = run_check(index)
    assert result["passed"], "%s: %s (%.1fs)" % (
        result["name"],
        result["detail"],
        result["seconds"],
    )
