"""
test_logging.py

Tests for IgsLogger and configure_logging.
"""
import logging

import pytest

from pfsa.utils.logging import IgsLogger, configure_logging, get_log_dir, get_log_file


def test_run_logger_writes_file(tmp_path):
    path = tmp_path / "run.log"
    run_logger = IgsLogger(name="pfsa.test_run", log_file=str(path), console_level=logging.ERROR)
    run_logger.info("New best machine", extra={"states": 4})
    run_logger.debug("details")
    run_logger.close()
    text = path.read_text(encoding="utf-8")
    assert "New best machine" in text
    assert "'states': 4" in text
    assert "details" in text


def test_log_dir_needs_session(tmp_path):
    with pytest.raises(ValueError):
        get_log_dir("bench", None, root=str(tmp_path))
    path = get_log_dir("bench", "2026-01-01_120000", root=str(tmp_path))
    assert path.endswith("2026-01-01_120000")


def test_configure_logging_levels(tmp_path):
    log_file = tmp_path / "cli.log"
    root = configure_logging("debug", str(log_file))
    assert root.level == logging.DEBUG
    logging.getLogger("pfsa.search").debug("search detail")
    for handler in list(root.handlers):
        if isinstance(handler, logging.FileHandler):
            handler.close()
            root.removeHandler(handler)
    assert "search detail" in log_file.read_text(encoding="utf-8")
    with pytest.raises(ValueError):
        configure_logging("chatty")
    configure_logging("WARNING")


def test_session_log_captures_module_loggers(tmp_path):
    package = logging.getLogger("pfsa")
    level = package.level
    run_logger = IgsLogger(run_name="induce", session_datetime="2026-01-01_120000", root=str(tmp_path),
                           to_console=False)
    assert run_logger.path == get_log_file("induce", "2026-01-01_120000", root=str(tmp_path))
    logging.getLogger("pfsa.search.igs").debug("expanding node 7")
    run_logger.close()
    assert package.level == level
    assert not any(isinstance(h, logging.FileHandler) and h.baseFilename == run_logger.path
                   for h in package.handlers)
    assert "expanding node 7" in (tmp_path / "induce" / "2026-01-01_120000" / "igs.log").read_text(encoding="utf-8")
