from pathlib import Path

import pytest

from posetblockers.generate import catalog_by_name

DATA = Path(__file__).resolve().parent.parent / "data"

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def cat():
    return catalog_by_name()


@pytest.fixture
def b2(cat):
    return cat["B2"]


@pytest.fixture
def n5(cat):
    return cat["N5"]


@pytest.fixture
def c2(cat):
    return cat["C2"]


@pytest.fixture
def c3(cat):
    return cat["C3"]


@pytest.fixture
def m3(cat):
    return cat["M3"]


@pytest.fixture
def data_dir():
    return DATA


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
