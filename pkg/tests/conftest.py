import pytest

from paper_profiles import EXAMPLE1_ORDERS, EXAMPLE2_ORDERS, REMARK_ORDERS
from rankyank.model import Profile


@pytest.fixture
def example1():
    return Profile.from_orders(EXAMPLE1_ORDERS)


@pytest.fixture
def example2():
    return Profile.from_orders(EXAMPLE2_ORDERS)


@pytest.fixture
def remark():
    return Profile.from_orders(REMARK_ORDERS)


ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
