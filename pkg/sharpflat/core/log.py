# SPDX-License-Identifier: MIT
# -*- coding: utf-8 -*-
"""
sharpflat Logging Module

Thin module-level logging helpers. Messages go to stderr through the
``sharpflat`` stdlib logger so stdout stays free for JSON reports.
Long residue arrays are abbreviated before they reach the log.
"""

import logging
import os
import re
import sys

_LOGGER_NAME = "sharpflat"
_PREFIX = "[sharpflat]"

# Arrays longer than this are shortened in log output
_MAX_LOGGED_ITEMS = 8

_ARRAY_PATTERN = re.compile(r"\[([^\[\]]*)\]")


def _abbreviate(message):
    """
    Shorten long bracketed lists inside a log message.

    Coefficient arrays of Iwasawa elements routinely hold hundreds of
    residues; only the first few are kept.

    Args:
        message: Log message string

    Returns:
        Message with long lists replaced by ``[a, b, c, ... (k more)]``
    """
    if not message:
        return message

    msg = str(message)

    def _shorten(match):
        items = [s.strip() for s in match.group(1).split(",")]
        if len(items) <= _MAX_LOGGED_ITEMS:
            return match.group(0)
        head = ", ".join(items[:3])
        return f"[{head}, ... ({len(items) - 3} more)]"

    return _ARRAY_PATTERN.sub(_shorten, msg)


def _get_logger():
    logger = logging.getLogger(_LOGGER_NAME)
    if not logger.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("%(message)s"))
        logger.addHandler(handler)
        logger.propagate = False
        level = os.environ.get("SHARPFLAT_LOG_LEVEL", "WARNING").upper()
        logger.setLevel(getattr(logging, level, logging.WARNING))
    return logger


def set_level(level):
    """
    Change the active log level.

    Args:
        level: Level name ("DEBUG", "INFO", ...) or logging constant
    """
    if isinstance(level, str):
        level = getattr(logging, level.upper(), logging.WARNING)
    _get_logger().setLevel(level)


def info(message):
    """Log an informational message"""
    _get_logger().info(f"{_PREFIX} INFO: {_abbreviate(str(message))}")


def warning(message):
    """Log a warning message"""
    _get_logger().warning(f"{_PREFIX} WARNING: {_abbreviate(str(message))}")


def error(message):
    """Log an error message"""
    _get_logger().error(f"{_PREFIX} ERROR: {_abbreviate(str(message))}")


def debug(message):
    """Log a debug message"""
    _get_logger().debug(f"{_PREFIX} DEBUG: {_abbreviate(str(message))}")


def error_safe(message, exception=None):
    """
    Log an error with the exception text appended.

    Args:
        message: Error message prefix
        exception: Optional exception object to include
    """
    if exception:
        full_msg = f"{message}: {_abbreviate(str(exception))}"
    else:
        full_msg = message
    error(full_msg)


def warning_safe(message, exception=None):
    """
    Log a warning with the exception text appended.

    Args:
        message: Warning message prefix
        exception: Optional exception object to include
    """
    if exception:
        full_msg = f"{message}: {_abbreviate(str(exception))}"
    else:
        full_msg = message
    warning(full_msg)


def debug_safe(message, exception=None):
    """
    Log a debug message with the exception text appended.

    Args:
        message: Debug message prefix
        exception: Optional exception object to include
    """
    if exception:
        full_msg = f"{message}: {_abbreviate(str(exception))}"
    else:
        full_msg = message
    debug(full_msg)
