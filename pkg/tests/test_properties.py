import pytest

from hadamard_forge.field import prime_power
from hadamard_forge.properties import FAIL, PASS, SKIPPED, property_suite


@pytest.mark.parametrize("q", [q for q in range(3, 50, 2) if prime_power(q)])
def test_all_identities_hold(q):
    report = property_suite(q)
    assert report.passed
    expected = PASS if prime_power(q)[1] == 1 else SKIPPED
    assert report.status("Q R symmetric") == expected
    assert all(c.status in (PASS, SKIPPED) for c in report.checks)
    assert FAIL not in "".join(report.lines())


def test_report_lines_q9():
    lines = property_suite(9).lines()
    assert any(line.startswith("SKIPPED") and "not circulant" in line for line in lines)
    assert len(lines) == 11
