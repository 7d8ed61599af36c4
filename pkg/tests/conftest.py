import os

from hypothesis import settings

# derandomized so that two runs of the suite see the same examples
settings.register_profile("repro", derandomize=True, deadline=None, print_blob=False)
settings.register_profile("explore", deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "repro"))

_criteria: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            number, title = m.args
            _criteria[item.nodeid] = {"number": number, "title": title, "outcome": "not run",
                                      "duration": 0.0}


def pytest_runtest_logreport(report):
    entry = _criteria.get(report.nodeid)
    if entry is None:
        return
    if report.when == "call":
        entry["duration"] = report.duration
    if report.failed:
        entry["outcome"] = "failed"
    elif entry["outcome"] != "failed" and (report.when == "call" or report.skipped):
        entry["outcome"] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for entry in sorted(_criteria.values(), key=lambda e: e["number"]):
        mark = "PASS" if entry["outcome"] == "passed" else "FAIL"
        if entry["outcome"] not in ("passed", "failed"):
            mark = entry["outcome"].upper()
        terminalreporter.write_line(
            f"{mark}  criterion {entry['number']:>2}  {entry['title']}  ({entry['duration']:.2f}s)")
