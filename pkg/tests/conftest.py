from functools import lru_cache

import pytest

from staircase.enumerate import enumerate_partitions


@lru_cache(maxsize=None)
def partitions_of(n, r=None):
    return tuple(enumerate_partitions(n, r))


@lru_cache(maxsize=None)
def partitions_upto(weight):
    return tuple(lam for n in range(weight + 1) for lam in partitions_of(n))


@pytest.fixture(scope="session")
def upto25():
    return partitions_upto(25)


_ACCEPTANCE = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance" in report.nodeid:
        _ACCEPTANCE.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
