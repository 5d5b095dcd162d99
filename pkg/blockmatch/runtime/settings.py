"""Runtime-level environment configuration (shared by every subcommand).

Read lazily (inside functions, not at import) so importing the package never
requires a populated environment.

Environment (.env):
    BLOCKMATCH_LOG_LEVEL      Logging level name (default: INFO).
    BLOCKMATCH_BENCH_REPEATS  Timed repetitions per algorithm in ``bench`` (default: 5).
    BLOCKMATCH_WORKERS        Worker threads for per-block estimation (default: 1).

Search parameters (block size, dm, criterion) are not environment settings;
they live on :class:`blockmatch.search.SearchConfig` and come from CLI flags.
"""

import logging
import os

from dotenv import load_dotenv

load_dotenv()

DEFAULT_BENCH_REPEATS = 5


def _positive_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        value = 0
    if value < 1:
        raise RuntimeError(
            f"Environment variable {name!r} must be a positive integer, got {raw!r}. "
            "Fix it in .env or unset it to use the default."
        )
    return value


def log_level() -> int:
    """Logging level for the CLI (``BLOCKMATCH_LOG_LEVEL``)."""
    name = os.getenv("BLOCKMATCH_LOG_LEVEL", "INFO").upper()
    level = logging.getLevelName(name)
    if not isinstance(level, int):
        raise RuntimeError(
            f"Unknown log level {name!r} in BLOCKMATCH_LOG_LEVEL. "
            "Use one of DEBUG, INFO, WARNING, ERROR."
        )
    return level


def bench_repeats() -> int:
    """Timed repetitions per algorithm; the benchmark reports the median."""
    return _positive_int("BLOCKMATCH_BENCH_REPEATS", DEFAULT_BENCH_REPEATS)


def workers() -> int:
    """Worker threads for per-block estimation (1 = run inline)."""
    return _positive_int("BLOCKMATCH_WORKERS", 1)
