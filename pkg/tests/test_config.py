"""Tests for environment-driven settings."""

import pytest
from pydantic import ValidationError

from eventsync.config import Settings


def test_defaults(monkeypatch):
    monkeypatch.delenv("EVENTSYNC_MAX_STATES", raising=False)
    config = Settings(_env_file=None)
    assert config.max_states == 100_000
    assert config.timezone == "UTC"
    assert config.debug is False


def test_prefixed_environment_overrides(monkeypatch):
    monkeypatch.setenv("EVENTSYNC_MAX_STATES", "7")
    monkeypatch.setenv("eventsync_debug", "true")
    config = Settings(_env_file=None)
    assert config.max_states == 7
    assert config.debug is True


def test_unprefixed_and_unknown_variables_are_ignored(monkeypatch):
    monkeypatch.delenv("EVENTSYNC_MAX_STATES", raising=False)
    monkeypatch.setenv("MAX_STATES", "9")
    monkeypatch.setenv("EVENTSYNC_NOT_A_SETTING", "x")
    config = Settings(_env_file=None)
    assert config.max_states == 100_000


def test_invalid_bound_rejected(monkeypatch):
    monkeypatch.setenv("EVENTSYNC_MAX_STATES", "0")
    with pytest.raises(ValidationError):
        Settings(_env_file=None)
