"""
Logging for qpascal runs.

LOG_LEVEL picks silent (0), info (1) or debug (2); anything else is silent.
LOG_FILE names the log file; its directory is created on demand.
"""

import logging
import os
from pathlib import Path
from typing import Optional

DEFAULT_LOG_FILE = "qpascal.log"
SILENT = logging.CRITICAL + 1
LEVELS = {"0": SILENT, "1": logging.INFO, "2": logging.DEBUG}
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s [%(threadName)s]: %(message)s"


def resolve_level(raw: Optional[str] = None) -> int:
    if raw is None:
        raw = os.getenv("LOG_LEVEL", "0")
    return LEVELS.get(raw.strip(), SILENT)


def resolve_log_file(raw: Optional[str] = None) -> str:
    """Usable log path, or DEFAULT_LOG_FILE when LOG_FILE is a directory or unwritable."""
    if raw is None:
        raw = os.getenv("LOG_FILE") or DEFAULT_LOG_FILE
    target = Path(raw)
    if target.is_dir():
        return DEFAULT_LOG_FILE
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
    except OSError:
        return DEFAULT_LOG_FILE
    return str(target)


def setup_logging() -> str:
    """Configure the root logger from the environment and return the file in use."""
    path = resolve_log_file()
    logging.basicConfig(filename=path, level=resolve_level(), format=LOG_FORMAT, force=True)
    # third-party loggers stay at WARNING
    for noisy in ("sympy", "concurrent.futures"):
        logging.getLogger(noisy).setLevel(logging.WARNING)
    return path
