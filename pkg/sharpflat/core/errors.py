# SPDX-License-Identifier: MIT
# -*- coding: utf-8 -*-
"""
Error hierarchy for sharpflat.

Every failure that should stop a computation raises a `SharpFlatError`
subclass. The CLI maps the class to its exit code:

    SchemaError         2  malformed input, failed validation
    ContractViolation   3  a mathematical contract did not hold
    PrecisionExhausted  4  denominators consumed the working precision

Diagnostic checks never raise; they return `core.result.Result`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Dict, Optional


@dataclass
class SharpFlatError(Exception):
    """
    Structured error with a stable code and optional machine-readable meta.
    """

    code: str
    message: str
    details: str = ""
    meta: Optional[Dict[str, Any]] = None

    exit_code = 1

    def __str__(self) -> str:
        return self.message

    def to_report(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "code": self.code,
            "message": self.message,
            "exit_code": str(self.exit_code),
        }
        if self.details:
            out["details"] = self.details
        if self.meta:
            out["meta"] = {k: str(v) for k, v in self.meta.items()}
        return out


@dataclass
class SchemaError(SharpFlatError):
    exit_code = 2

    @staticmethod
    def from_json_error(exc: json.JSONDecodeError, source: str = "") -> "SchemaError":
        where = f" in {source}" if source else ""
        return SchemaError(
            code="MALFORMED_JSON",
            message=f"Input is not valid JSON{where}",
            details=f"line {exc.lineno} column {exc.colno}: {exc.msg}",
        )

    @staticmethod
    def from_validation(message: str, source: str = "") -> "SchemaError":
        """Wrap an (is_valid, error_message) failure from input_validator."""
        where = f"{source}: " if source else ""
        return SchemaError(code="SCHEMA", message=f"{where}{message}")


@dataclass
class ContractViolation(SharpFlatError):
    exit_code = 3


@dataclass
class PrecisionExhausted(SharpFlatError):
    exit_code = 4

    @staticmethod
    def for_level(working: int, needed: int, what: str) -> "PrecisionExhausted":
        return PrecisionExhausted(
            code="PRECISION_EXHAUSTED",
            message=f"{what}: effective precision exhausted",
            details=f"working precision {working} leaves {working - needed} digits",
            meta={"working": working, "needed": needed},
        )
