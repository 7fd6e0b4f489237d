# SPDX-License-Identifier: MIT
# -*- coding: utf-8 -*-
"""
Settings loader for sharpflat (v1)

Reads .sharpflat/config.json (or an explicit path / SHARPFLAT_CONFIG).
Provides safe defaults and clamps values to reasonable bounds.
"""

import json
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional

from sharpflat.core import log


_SETTINGS_REL_PATH = Path(".sharpflat/config.json")
_ENV_CONFIG = "SHARPFLAT_CONFIG"

# Bounds for the dense level cap p^m
_MIN_GROUP_ORDER = 9
_MAX_GROUP_ORDER = 15625

_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


_DEFAULT_SETTINGS: Dict[str, Any] = {
    "settingsVersion": 1,
    "levels": {"maxGroupOrder": 3125},
    "precision": {"extraDigits": 2},
    "selftest": {"trials": 100, "workers": 4},
    "logmatrix": {"xPrecision": 0},
    "logging": {"level": "WARNING"},
}


@dataclass
class SettingsResult:
    settings: Dict[str, Any]
    from_file: bool
    error: Optional[str]


def default_settings() -> Dict[str, Any]:
    return json.loads(json.dumps(_DEFAULT_SETTINGS))


def _clamp_int(value: Any, default: int, lo: int, hi: int) -> int:
    try:
        out = int(value)
    except Exception:
        return default
    return max(lo, min(hi, out))


def _sanitize_settings(data: Dict[str, Any]) -> Dict[str, Any]:
    # Start from defaults and overwrite known keys
    result = default_settings()

    lv_in = data.get("levels", {}) or {}
    result["levels"]["maxGroupOrder"] = _clamp_int(
        lv_in.get("maxGroupOrder"), 3125, _MIN_GROUP_ORDER, _MAX_GROUP_ORDER
    )

    pr_in = data.get("precision", {}) or {}
    result["precision"]["extraDigits"] = _clamp_int(pr_in.get("extraDigits"), 2, 0, 16)

    st_in = data.get("selftest", {}) or {}
    result["selftest"]["trials"] = _clamp_int(st_in.get("trials"), 100, 1, 1000)
    result["selftest"]["workers"] = _clamp_int(st_in.get("workers"), 4, 1, 32)

    lm_in = data.get("logmatrix", {}) or {}
    result["logmatrix"]["xPrecision"] = _clamp_int(
        lm_in.get("xPrecision"), 0, 0, _MAX_GROUP_ORDER
    )

    lg_in = data.get("logging", {}) or {}
    level = str(lg_in.get("level", "WARNING")).strip().upper()
    result["logging"]["level"] = level if level in _LOG_LEVELS else "WARNING"

    return result


def _resolve_path(path: Optional[Path]) -> Path:
    if path:
        return Path(path)
    env = os.environ.get(_ENV_CONFIG, "").strip()
    if env:
        return Path(env)
    return Path.cwd() / _SETTINGS_REL_PATH


def load_settings(path: Optional[Path] = None) -> SettingsResult:
    """
    Load settings JSON.
    If missing or malformed, return defaults and an error message.
    """
    try:
        settings_path = _resolve_path(path)
        if not settings_path.is_file():
            log.debug("Settings file missing; using defaults")
            return SettingsResult(settings=default_settings(), from_file=False, error=None)
        try:
            data = json.loads(settings_path.read_text(encoding="utf-8"))
            if not isinstance(data, dict):
                raise ValueError("settings root must be an object")
        except Exception as e:
            log.warning(f"Settings parse failed: {e}")
            return SettingsResult(
                settings=default_settings(),
                from_file=True,
                error="Settings parse failure; using defaults",
            )
        return SettingsResult(settings=_sanitize_settings(data), from_file=True, error=None)
    except Exception as e:
        log.warning(f"Settings load error: {e}")
        return SettingsResult(
            settings=default_settings(),
            from_file=False,
            error="Settings load error; using defaults",
        )
