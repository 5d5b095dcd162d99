import logging

import pytest

from blockmatch.runtime import settings


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ("BLOCKMATCH_LOG_LEVEL", "BLOCKMATCH_BENCH_REPEATS", "BLOCKMATCH_WORKERS"):
        monkeypatch.delenv(name, raising=False)


def test_defaults():
    assert settings.log_level() == logging.INFO
    assert settings.bench_repeats() == settings.DEFAULT_BENCH_REPEATS == 5
    assert settings.workers() == 1


def test_values_from_environment(monkeypatch):
    monkeypatch.setenv("BLOCKMATCH_LOG_LEVEL", "debug")
    monkeypatch.setenv("BLOCKMATCH_BENCH_REPEATS", "3")
    monkeypatch.setenv("BLOCKMATCH_WORKERS", "8")
    assert settings.log_level() == logging.DEBUG
    assert settings.bench_repeats() == 3
    assert settings.workers() == 8


def test_blank_value_means_default(monkeypatch):
    monkeypatch.setenv("BLOCKMATCH_WORKERS", " ")
    assert settings.workers() == 1


@pytest.mark.parametrize("raw", ["0", "-2", "many"])
def test_bad_counts_name_the_variable(monkeypatch, raw):
    monkeypatch.setenv("BLOCKMATCH_BENCH_REPEATS", raw)
    with pytest.raises(RuntimeError, match="BLOCKMATCH_BENCH_REPEATS"):
        settings.bench_repeats()


def test_bad_log_level(monkeypatch):
    monkeypatch.setenv("BLOCKMATCH_LOG_LEVEL", "chatty")
    with pytest.raises(RuntimeError, match="CHATTY"):
        settings.log_level()

