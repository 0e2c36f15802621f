import os

import pytest

# nodeid -> (code, title) for tests carrying the acceptance marker,
# and nodeid -> outcome, filled as tests run.
_acceptance_info = {}
_acceptance_outcome = {}


@pytest.fixture(scope="session", autouse=True)
def _session_home(tmp_path_factory):
    """Point the cache root away from the real user directory for the whole run."""
    home = tmp_path_factory.mktemp("mahanlp-home")
    previous = os.environ.get("MAHANLP_HOME")
    os.environ["MAHANLP_HOME"] = str(home)
    yield home
    if previous is None:
        os.environ.pop("MAHANLP_HOME", None)
    else:
        os.environ["MAHANLP_HOME"] = previous


@pytest.fixture
def fresh_home(tmp_path, monkeypatch):
    """A per-test empty cache root, for tests that count cache files/fetches."""
    home = tmp_path / "home"
    monkeypatch.setenv("MAHANLP_HOME", str(home))
    return home


def pytest_collection_modifyitems(config, items):
    for item in items:
        marker = item.get_closest_marker("acceptance")
        if marker is not None:
            _acceptance_info[item.nodeid] = (marker.args[0], marker.args[1])


def pytest_runtest_logreport(report):
    if report.nodeid not in _acceptance_info:
        return
    if report.when == "call":
        _acceptance_outcome[report.nodeid] = "PASS" if report.passed else "FAIL"
    elif not report.passed:
        # setup/teardown error or skip
        _acceptance_outcome[report.nodeid] = "SKIP" if report.skipped else "FAIL"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_info:
        return
    terminalreporter.section("acceptance criteria")
    entries = sorted(_acceptance_info.items(), key=lambda kv: kv[1][0])
    for nodeid, (code, title) in entries:
        outcome = _acceptance_outcome.get(nodeid, "NOT RUN")
        terminalreporter.write_line(f"[{outcome}] {code}: {title}")
