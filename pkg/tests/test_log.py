# -*- coding: utf-8 -*-
"""
Tests for core.log module - stderr logging with array abbreviation
"""

import logging

from sharpflat.core import log


class TestAbbreviate:
    """Long residue arrays are shortened before logging"""

    def test_short_list_kept(self):
        message = "positions [0, 1, 2]"
        assert log._abbreviate(message) == message

    def test_long_list_shortened(self):
        items = ", ".join(str(i) for i in range(20))
        out = log._abbreviate(f"coeffs [{items}] at m=2")
        assert out == "coeffs [0, 1, 2, ... (17 more)] at m=2"

    def test_every_list_handled(self):
        long = ", ".join("7" for _ in range(10))
        out = log._abbreviate(f"[{long}] and [{long}]")
        assert out.count("(7 more)") == 2

    def test_empty_message(self):
        assert log._abbreviate("") == ""
        assert log._abbreviate(None) is None


class TestLogging:
    """Messages reach the sharpflat logger with a level prefix"""

    def test_set_level_by_name(self):
        log.set_level("DEBUG")
        assert logging.getLogger("sharpflat").level == logging.DEBUG
        log.set_level("bogus")
        assert logging.getLogger("sharpflat").level == logging.WARNING

    def test_warning_goes_through_logger(self, mocker):
        logger = log._get_logger()
        spy = mocker.patch.object(logger, "warning")
        log.warning("settings missing")
        spy.assert_called_once_with("[sharpflat] WARNING: settings missing")

    def test_error_safe_appends_exception(self, mocker):
        spy = mocker.patch.object(log._get_logger(), "error")
        log.error_safe("scan failed", ValueError("bad table"))
        spy.assert_called_once_with("[sharpflat] ERROR: scan failed: bad table")

    def test_debug_safe_without_exception(self, mocker):
        spy = mocker.patch.object(log._get_logger(), "debug")
        log.debug_safe("plain")
        spy.assert_called_once_with("[sharpflat] DEBUG: plain")

    def test_stdout_untouched(self, capsys):
        log.set_level("INFO")
        log.info("to stderr")
        captured = capsys.readouterr()
        assert captured.out == ""
        log.set_level("WARNING")
