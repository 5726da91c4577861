"""
pfsa/utils/logging.py

Centralized logging utility for the pfsa toolkit.
Tracks induction runs, search progress and benchmark trials.

Key Features:
- Configurable log levels (DEBUG, INFO, WARNING, ERROR)
- Log to file and/or console
- Structured log format: timestamp, level, module, message, extra details

Usage:
    from pfsa.utils.logging import IgsLogger
    run_logger = IgsLogger(run_name="bench", session_datetime="2026-01-01_120000")
    run_logger.info("New best machine", extra={"states": 4, "mml_bits": 57.2})
"""

import logging
import os
from typing import Optional

LOG_FORMAT = '[%(asctime)s] %(levelname)s %(module)s %(message)s %(extra)s'
DATE_FORMAT = '%Y-%m-%d %H:%M:%S'


def get_log_dir(run_name=None, session_datetime=None, root: Optional[str] = None):
    # One folder per session: outputs/<run>/<YYYY-MM-DD_HHMMSS>
    if session_datetime is None:
        raise ValueError("session_datetime must be provided and fixed for the entire run.")
    root = root or os.path.join(os.getcwd(), 'outputs')
    log_dir = os.path.join(root, run_name or 'unnamed_run', session_datetime)
    os.makedirs(log_dir, exist_ok=True)
    return log_dir


def get_log_file(run_name=None, session_datetime=None, root: Optional[str] = None):
    return os.path.join(get_log_dir(run_name, session_datetime, root), 'igs.log')


class _ExtraDefault(logging.Filter):
    # Records from plain loggers carry no 'extra' attribute
    def filter(self, record):
        if not hasattr(record, 'extra'):
            record.extra = {}
        return True


class IgsLogger:
    """
    Session logger of one CLI run: a DEBUG file handler on the 'pfsa' logger tree, so search
    progress from every module lands in outputs/<run>/<session>/igs.log.
    """

    def __init__(self, name='pfsa', run_name=None, session_datetime=None, root: Optional[str] = None,
                 log_file: Optional[str] = None, console_level=logging.INFO, to_console: bool = True):
        self.logger = logging.getLogger(name)
        self._previous_level = self.logger.level
        self.logger.setLevel(logging.DEBUG)
        self.path = log_file or get_log_file(run_name, session_datetime, root)
        self._handlers = []
        formatter = logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT)
        fh = logging.FileHandler(self.path, encoding='utf-8')
        fh.setLevel(logging.DEBUG)
        fh.setFormatter(formatter)
        fh.addFilter(_ExtraDefault())
        self._handlers.append(fh)
        if to_console:
            ch = logging.StreamHandler()
            ch.setLevel(console_level)
            ch.setFormatter(formatter)
            ch.addFilter(_ExtraDefault())
            self._handlers.append(ch)
        for handler in self._handlers:
            self.logger.addHandler(handler)

    def info(self, msg, extra=None):
        self.logger.info(msg, extra={'extra': extra or {}})

    def debug(self, msg, extra=None):
        self.logger.debug(msg, extra={'extra': extra or {}})

    def warning(self, msg, extra=None):
        self.logger.warning(msg, extra={'extra': extra or {}})

    def error(self, msg, extra=None):
        self.logger.error(msg, extra={'extra': extra or {}})

    def close(self):
        for handler in self._handlers:
            handler.close()
            self.logger.removeHandler(handler)
        self._handlers = []
        self.logger.setLevel(self._previous_level)


def configure_logging(level=logging.WARNING, log_file: Optional[str] = None):
    """
    Configure the root 'pfsa' logger once for a CLI invocation.

    Args:
        level: Logging level name or number; applied to the console and log_file handlers.
        log_file: Optional path of an extra file handler.
    """
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
        if not isinstance(level, int):
            raise ValueError(f"unknown log level: {level}")
    root = logging.getLogger('pfsa')
    root.setLevel(level)
    if not root.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT))
        handler.addFilter(_ExtraDefault())
        root.addHandler(handler)
    if log_file:
        fh = logging.FileHandler(log_file, encoding='utf-8')
        fh.setFormatter(logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT))
        fh.addFilter(_ExtraDefault())
        root.addHandler(fh)
    # a session log may later lower the logger level; handlers keep this one
    for handler in root.handlers:
        handler.setLevel(level)
    return root
