"""
Logging setup shared by all modules.

The level comes from ``GUP_LOG_LEVEL`` (default WARNING). Records go to
stderr so that tables written to stdout stay byte-identical between runs.
"""
import logging
import os
import sys

LOG_LEVEL_ENV = "GUP_LOG_LEVEL"
LOG_FORMAT = "%(asctime)s %(name)s %(levelname)s %(message)s"

_configured = False


def _configure_root() -> None:
    global _configured
    if _configured:
        return
    root = logging.getLogger("gup_systems")
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root.addHandler(handler)
    level = os.environ.get(LOG_LEVEL_ENV, "WARNING").upper()
    known = isinstance(logging.getLevelName(level), int)
    root.setLevel(level if known else logging.WARNING)
    root.propagate = False
    _configured = True


def get_logger(name: str) -> logging.Logger:
    """Return a package logger, configuring the handler on first use."""
    _configure_root()
    return logging.getLogger(name)


def set_level(level: int) -> None:
    """Override the package log level (used by the CLI ``-v`` flag)."""
    _configure_root()
    logging.getLogger("gup_systems").setLevel(level)
