import re

_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py::" not in report.nodeid:
        return
    match = re.search(r"test_criterion_(\d+)_(\w+)", report.nodeid)
    if match:
        _ACCEPTANCE[int(match.group(1))] = (match.group(2).replace("_", " "), report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        name, outcome = _ACCEPTANCE[number]
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {verdict}  ({name})")
