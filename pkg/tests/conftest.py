"""Emit one "[criterion N] PASS|FAIL" line per acceptance test.

The reporting hook runs outside output capture, so the gate lines are
visible in every pytest invocation, not only with -s.
"""

import re

_ACCEPTANCE = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")


def pytest_runtest_logreport(report):
    m = _ACCEPTANCE.search(report.nodeid)
    if m and report.when == "call":
        num, slug = m.group(1), m.group(2).replace("_", " ")
        verdict = "PASS" if report.passed else "FAIL"
        print(f"\n[criterion {num}] {verdict}: {slug}", end="")
