import pytest
from hypothesis import settings

from polyconvex.exact import Point
from polyconvex.polygon import Polygon

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


@pytest.fixture
def square():
    return Polygon([(0, 0), (1, 0), (1, 1), (0, 1)])


@pytest.fixture
def square_0213():
    return Polygon([(0, 0), (1, 1), (1, 0), (0, 1)])


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import summary_lines

    lines = summary_lines()
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
