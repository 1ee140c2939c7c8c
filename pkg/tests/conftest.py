"""Shared fixtures for the eventsync test suite."""

import gevent
import pytest

from eventsync.config import settings
from eventsync.machine import compile_program
from eventsync.progdsl import parse_program

# Four procs over x, y, z: either x and z pair up, or y does
EXAMPLE_PROGRAM = "select(!x,!y) | select(y,z) | select(!z) | select(x)"

# Upper bound on any single live test; a protocol deadlock fails instead of hanging
LIVE_TEST_BUDGET_S = 10


@pytest.fixture
def deadline():
    """Fail the test if it blocks for longer than LIVE_TEST_BUDGET_S."""
    with gevent.Timeout(LIVE_TEST_BUDGET_S, AssertionError("test blocked: probable deadlock")):
        yield


@pytest.fixture
def example_program():
    return parse_program(EXAMPLE_PROGRAM)


@pytest.fixture
def example_state(example_program):
    return compile_program(example_program)


@pytest.fixture
def debug_mode(monkeypatch):
    """Run with settings.debug enabled."""
    monkeypatch.setattr(settings, "debug", True)
    yield settings
