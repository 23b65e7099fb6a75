import os
import zlib

import numpy as np
import pytest

from oracles import shift

_RESULTS = {}


class Criterion:
    """Records the pinned checks of one acceptance criterion for the summary line."""

    def __init__(self, number, title):
        self.number = number
        self.title = title
        self.notes = []

    def close(self, name, got, want, tol):
        ok = abs(got - want) <= tol
        self.notes.append(f"{name}={got:.12g} (want {want:.12g} +/- {tol:g})")
        assert ok, f"{name}: {got!r} differs from {want!r} by more than {tol:g}"

    def flag(self, name, got, want=True):
        self.notes.append(f"{name}={got}")
        assert got == want, f"{name}: got {got!r}, want {want!r}"

    def timed(self, name, seconds, limit):
        self.notes.append(f"{name} {seconds:.2f}s (< {limit:g}s)")
        assert seconds < limit, f"{name} took {seconds:.2f} s, limit {limit} s"

    def note(self, text):
        self.notes.append(text)


@pytest.fixture
def criterion(request):
    def make(number, title):
        c = Criterion(number, title)
        _RESULTS[request.node.nodeid] = [c, None]
        return c

    return make


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    entry = _RESULTS.get(item.nodeid)
    if entry is None:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        entry[1] = report.passed


def pytest_terminal_summary(terminalreporter):
    rows = sorted(((c.number, c, ok) for c, ok in _RESULTS.values()), key=lambda r: r[0])
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for number, c, ok in rows:
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{verdict}] criterion {number}: {c.title} | {'; '.join(c.notes)}")


@pytest.fixture
def rng(request):
    # one reproducible stream per test, independent of test order
    return np.random.default_rng(zlib.crc32(request.node.name.encode()))


@pytest.fixture
def shift3():
    return shift(3)


@pytest.fixture
def n2():
    return shift(2)


@pytest.fixture
def diag_example():
    return np.diag([20.0, 30.0 + 30.0j])


def pytest_report_header(config):
    import numrad

    forced = os.environ.get("NUMRAD_PURE_PYTHON")
    return f"numrad backend: {numrad.BACKEND}" + (f" (NUMRAD_PURE_PYTHON={forced})" if forced else "")
