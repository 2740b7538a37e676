"""Shared pytest plumbing: per-criterion verdict lines.

The acceptance tests are named test_criterion_<N>_*; after a run that
touched any of them, a one-line PASS/FAIL verdict per criterion is
appended to the terminal summary.
"""

import pytest

CRITERIA = {
    1: "worked example table and its defective masks",
    2: "framework example: mask products and defect sets",
    3: "avoidance counts by rank",
    4: "maximal singular loci against the table oracle",
    5: "two-row family polynomials are q-Fibonacci",
    6: "three-row family polynomials match the generating function",
    7: "five equivalent characterizations over all of rank 6",
    8: "negative-delta mask instances",
    9: "structural property sweeps",
}

_results: dict[int, tuple[bool, float]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when != "call":
        return
    if item.name.startswith("test_criterion_"):
        try:
            num = int(item.name.split("_")[2])
        except (IndexError, ValueError):
            return
        _results[num] = (rep.passed, rep.duration)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(CRITERIA):
        if num in _results:
            passed, duration = _results[num]
            verdict = "PASS" if passed else "FAIL"
            terminalreporter.write_line(
                f"criterion {num}: {verdict} ({duration:.2f}s) - {CRITERIA[num]}"
            )
        else:
            terminalreporter.write_line(
                f"criterion {num}: NOT RUN - {CRITERIA[num]}"
            )
