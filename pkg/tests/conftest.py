from pathlib import Path

import pytest

from graphentropy import read_graph

DATA = Path(__file__).parent / "data"
KARATE = DATA / "soc-karate.mtx"
DOLPHINS = DATA / "soc-dolphins.mtx"


@pytest.fixture(scope="session")
def karate():
    return read_graph(KARATE)


@pytest.fixture(scope="session")
def data_dir():
    return DATA


_ACCEPTANCE = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_ACCEPTANCE] = []


@pytest.fixture
def acceptance_log(request):
    """Append ``(criterion, ok, detail)``; printed at the end of the run."""
    return request.config.stash[_ACCEPTANCE].append


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash[_ACCEPTANCE]
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in lines:
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
