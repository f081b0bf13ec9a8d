from __future__ import annotations

import pytest

from gabikit.algcore import base_algebra
from gabikit.coalg import Side
from gabikit.exactalg import QQ, Matrix
from gabikit.fixtures import dual_numbers_f2, group_algebra, hopf_corpus, sweedler_h4
from gabikit.gabi import GabiStructure


@pytest.fixture(scope="session")
def c2():
    return group_algebra(2)


@pytest.fixture(scope="session")
def h4():
    return sweedler_h4()


@pytest.fixture(scope="session")
def dual2():
    return dual_numbers_f2()


@pytest.fixture(scope="session")
def point():
    """The ground field with its only gabi structure."""
    a = base_algebra(QQ)
    one = Matrix(QQ, [[1]], cols=1)
    return GabiStructure(a, one, one, Side.LEFT)


HOPF = hopf_corpus()


@pytest.fixture(scope="session", params=HOPF, ids=[h.name for h in HOPF])
def hopf(request):
    return request.param


SMALL = [h for h in HOPF if h.algebra.dim <= 4]


@pytest.fixture(scope="session", params=SMALL, ids=[h.name for h in SMALL])
def small_hopf(request):
    return request.param


def vec(m: Matrix, j: int) -> list:
    """Column j as a plain list, for readable comparisons."""
    return list(m.col(j))


# acceptance reporting -------------------------------------------------

_CRITERIA: dict[int, tuple[str, str, float]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call" and not rep.failed:
        return
    number, title = mark.args
    if rep.when == "call" or number not in _CRITERIA:
        _CRITERIA[number] = ("PASS" if rep.passed else "FAIL", title, rep.duration)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        verdict, title, secs = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number:2d} {verdict}  {title} ({secs:.2f} s)")
