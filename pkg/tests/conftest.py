import pytest

from knitord.instances import get_instance

ACCEPTANCE_LINES = []


def record_criterion(number, name, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    ACCEPTANCE_LINES.append(f"criterion {number} [{status}] {name}" + (f" :: {detail}" if detail else ""))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def worked():
    return get_instance("g-paper")


@pytest.fixture(scope="session")
def direct():
    return get_instance("thm2-direct")


@pytest.fixture(scope="session")
def shear():
    return get_instance("thm2-shear")


@pytest.fixture(scope="session")
def H():
    return get_instance("h-amalgam").group


@pytest.fixture(scope="session")
def K():
    return get_instance("b3").group
