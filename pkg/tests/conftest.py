from __future__ import annotations

import random

import pytest

ACCEPTANCE: dict[str, str] = {}


@pytest.fixture
def rng():
    return random.Random(12345)


def record_criterion(label: str, ok: bool) -> None:
    # a criterion passes only if every contributing test passed
    if ACCEPTANCE.get(label) == "FAIL":
        return
    ACCEPTANCE[label] = "PASS" if ok else "FAIL"


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call" and not report.failed:
        return
    record_criterion(marker.args[0], report.passed)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion covered by a test")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(ACCEPTANCE, key=lambda s: int(s.split()[0])):
        terminalreporter.write_line(f"{ACCEPTANCE[label]}  criterion {label}")
