from __future__ import annotations

import logging

from rich.console import Console
from rich.logging import RichHandler

from jordan_star.utils import config

PACKAGE_LOGGER = "jordan_star"


def setup_logging(level: str | None = None) -> logging.Logger:
    """Attach a single RichHandler to the package logger."""
    logger = logging.getLogger(PACKAGE_LOGGER)
    logger.setLevel((level or config.LOG_LEVEL).upper())
    if not any(isinstance(h, RichHandler) for h in logger.handlers):
        handler = RichHandler(console=Console(stderr=True), show_path=False, markup=False)
        handler.setFormatter(logging.Formatter("%(message)s"))
        logger.addHandler(handler)
    logger.propagate = False
    return logger
