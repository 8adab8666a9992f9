from itertools import product

import pytest


def box_points(c, p, l):
    """Brute-force count of a in [0, p-1]^c with sum l."""
    return sum(1 for a in product(range(p), repeat=c) if sum(a) == l)


@pytest.fixture
def brute_box():
    return box_points


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.REPORT:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.REPORT:
            terminalreporter.write_line(line)
