import pytest

from fuzzmine import load_config, parse_streams_csv

from common import QUICKSTART_CONFIG, QUICKSTART_CSV

_node_criterion = {}
_criterion_results = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "criterion(number, title): acceptance criterion this test checks")


def pytest_collection_modifyitems(items):
    for item in items:
        marker = item.get_closest_marker("criterion")
        if marker:
            _node_criterion[item.nodeid] = (marker.args[0], marker.args[1])


def pytest_runtest_logreport(report):
    key = _node_criterion.get(report.nodeid)
    if key is None:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        _criterion_results.setdefault(key, []).append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _criterion_results:
        return
    terminalreporter.write_line("")
    terminalreporter.write_line("acceptance criteria:")
    for (number, title), outcomes in sorted(_criterion_results.items()):
        status = "PASS" if all(outcomes) else "FAIL"
        terminalreporter.write_line(f"  {number}. {title}: {status}")


@pytest.fixture(scope="session")
def quickstart_csv_text():
    return QUICKSTART_CSV.read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def quickstart_config():
    return load_config(QUICKSTART_CONFIG)


@pytest.fixture(scope="session")
def quickstart_bundle(quickstart_csv_text, quickstart_config):
    return parse_streams_csv(quickstart_csv_text, quickstart_config.roles)
