import random

import pytest

from ribbonpd import RibbonGraph
from ribbonpd.linkdiag import parse_pd

TREFOIL = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
CURL = "X(1,1,2,2)"


def loop():
    return RibbonGraph([["a+", "a-"]])


def bouquet2():
    return RibbonGraph([["a+", "b+", "a-", "b-"]])


def nested2():
    return RibbonGraph([["a+", "a-", "b+", "b-"]])


def bouquet3():
    return RibbonGraph([["a+", "b+", "c+", "a-", "b-", "c-"]])


def triangle():
    return RibbonGraph([["a+", "c-"], ["b+", "a-"], ["c+", "b-"]])


def bridge():
    return RibbonGraph([["a+"], ["a-"]])


@pytest.fixture
def L():
    return loop()


@pytest.fixture
def B2():
    return bouquet2()


@pytest.fixture
def N2():
    return nested2()


@pytest.fixture
def B3():
    return bouquet3()


@pytest.fixture
def C3():
    return triangle()


@pytest.fixture
def trefoil():
    return parse_pd(TREFOIL)


@pytest.fixture
def rng():
    return random.Random(7)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if not mod or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        ok, text = mod.RESULTS[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {text}")
