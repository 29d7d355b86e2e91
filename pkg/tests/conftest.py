import pytest

from localduality.ring import GF, QQ, Ring


@pytest.fixture
def R2():
    return Ring(["x", "y"])


@pytest.fixture
def R3():
    return Ring(["x", "y", "z"])


@pytest.fixture
def Rzw():
    return Ring(["z", "w"])


@pytest.fixture
def R4():
    return Ring(["x", "y", "z", "w"])


@pytest.fixture
def R4p():
    return Ring(["x", "y", "z", "w"], GF(32003))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
