from fractions import Fraction

import pytest

from equilat.families import PairFamily
from equilat.supnorm import PointSet


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False,
                     help="run the long exhaustive sweeps")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def fam(n, *pairs):
    return PairFamily.from_sets(n, pairs)


def pts(*rows):
    return PointSet.of(*[[Fraction(c) for c in r] for r in rows])


@pytest.fixture
def triangle():
    return fam(3, ({0}, {1}), ({1}, {2}), ({2}, {0}))


@pytest.fixture
def complement2():
    return fam(2, (set(), {0, 1}), ({0}, {1}), ({1}, {0}), ({0, 1}, set()))


@pytest.fixture
def square():
    return pts((0, 0), (0, 1), (1, 0), (1, 1))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line)
