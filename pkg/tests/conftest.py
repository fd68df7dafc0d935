import pytest

from ringauto.polyring import Poly


@pytest.fixture
def P():
    """Shorthand constructor: P([c0, c1, ...], n)."""
    return lambda coeffs, n: Poly(tuple(coeffs), n)


def pytest_terminal_summary(terminalreporter):
    from tests.test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
