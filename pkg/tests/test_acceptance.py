"""The ten primary acceptance criteria at their stated tolerances.

Each criterion prints one PASS/FAIL line even under output capture.
"""

import pytest

from classical_mops.acceptance import CRITERIA, AcceptanceConfig, run_criterion

CONFIG = AcceptanceConfig()


@pytest.mark.parametrize("number", range(1, len(CRITERIA) + 1))
def test_criterion(number, capsys):
    result = run_criterion(number, CONFIG)
    with capsys.disabled():
        print("\n" + result.line())
        for failure in result.failures[:10]:
            print(f"    {failure}")
    assert result.passed, "\n".join(result.failures[:10]) or result.detail
