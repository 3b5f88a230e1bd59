"""Shared test plumbing.

The acceptance suite gets its own terminal section: one pass/fail line per
criterion, labelled by each test's docstring headline, printed in file order.
"""

ACCEPTANCE_FILE = "test_acceptance.py"

_labels: dict[str, str] = {}
_results: dict[str, str] = {}


def pytest_collection_modifyitems(config, items):
    for item in items:
        if ACCEPTANCE_FILE not in item.nodeid:
            continue
        doc = (getattr(item, "function", None).__doc__ or "").strip()
        headline = doc.splitlines()[0] if doc else item.name
        _labels[item.nodeid] = headline


def pytest_runtest_logreport(report):
    if ACCEPTANCE_FILE not in report.nodeid:
        return
    if report.when == "call":
        _results[report.nodeid] = report.outcome
    elif report.outcome != "passed" and report.nodeid not in _results:
        _results[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number, (nodeid, outcome) in enumerate(_results.items(), start=1):
        label = _labels.get(nodeid, nodeid)
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{number:2d}. {label}: {verdict}")
