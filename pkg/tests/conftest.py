import os
import sys
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

from unavoidable.geometry import polygon  # noqa: E402


@pytest.fixture
def basic_triangle():
    return polygon([(1, 0), (0, 1), (-1, -1)])


@pytest.fixture
def square():
    return polygon([(1, 1), (-1, 1), (-1, -1), (1, -1)])


@pytest.fixture
def cross_polytope():
    return polygon([(1, 0), (0, 1), (-1, 0), (0, -1)])


@pytest.fixture
def worked_triangle():
    return polygon([(Fraction(3, 2), 0), (0, 1), (-1, -1)])


@pytest.fixture
def golden_dir():
    return os.path.join(os.path.dirname(__file__), "golden")


def pytest_terminal_summary(terminalreporter):
    import acceptance_log

    if acceptance_log.LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in sorted(acceptance_log.LINES, key=lambda s: int(s.split(":")[0].split()[1])):
            terminalreporter.write_line(line)
