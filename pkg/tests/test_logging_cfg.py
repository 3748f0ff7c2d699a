"""
Logging Configuration Tests

LOG_LEVEL selects silent (0), info (1) or debug (2) logging and LOG_FILE the target
file. Missing parent directories are created. A LOG_FILE that names a directory falls
back to the default file in the working directory.
"""

from __future__ import annotations

import logging

from qpascal.logging_cfg import DEFAULT_LOG_FILE, resolve_level, resolve_log_file, setup_logging


def test_debug_level_writes_to_nested_file(tmp_path, monkeypatch):
    target = tmp_path / "a" / "b" / "run.log"
    monkeypatch.setenv("LOG_LEVEL", "2")
    monkeypatch.setenv("LOG_FILE", str(target))
    setup_logging()
    logging.getLogger("qpascal.test").debug("sampled message")
    logging.shutdown()
    assert logging.getLogger().level == logging.DEBUG
    assert "sampled message" in target.read_text()


def test_silent_by_default(tmp_path, monkeypatch):
    monkeypatch.delenv("LOG_LEVEL", raising=False)
    monkeypatch.setenv("LOG_FILE", str(tmp_path / "silent.log"))
    setup_logging()
    assert logging.getLogger().level == logging.CRITICAL + 1


def test_unknown_level_is_silent(tmp_path, monkeypatch):
    monkeypatch.setenv("LOG_LEVEL", "verbose")
    monkeypatch.setenv("LOG_FILE", str(tmp_path / "x.log"))
    setup_logging()
    assert logging.getLogger().level == logging.CRITICAL + 1


def test_directory_log_file_falls_back_to_default(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    (tmp_path / "logs").mkdir()
    monkeypatch.setenv("LOG_LEVEL", "1")
    monkeypatch.setenv("LOG_FILE", str(tmp_path / "logs"))
    setup_logging()
    logging.getLogger("qpascal.test").info("fallback")
    logging.shutdown()
    assert "fallback" in (tmp_path / DEFAULT_LOG_FILE).read_text()


def test_level_and_path_helpers(tmp_path):
    assert resolve_level("2") == logging.DEBUG
    assert resolve_level(" 1 ") == logging.INFO
    assert resolve_level("9") == logging.CRITICAL + 1
    assert resolve_log_file(str(tmp_path)) == DEFAULT_LOG_FILE
    nested = tmp_path / "x" / "y.log"
    assert resolve_log_file(str(nested)) == str(nested)
    assert nested.parent.is_dir()


def test_setup_returns_file_and_quiets_sympy(tmp_path, monkeypatch):
    target = tmp_path / "run.log"
    monkeypatch.setenv("LOG_LEVEL", "2")
    monkeypatch.setenv("LOG_FILE", str(target))
    assert setup_logging() == str(target)
    assert logging.getLogger("sympy").level == logging.WARNING
