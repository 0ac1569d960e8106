import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20090301)


def random_phase(rng, size=None):
    return np.exp(2j * np.pi * rng.random(size))


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
