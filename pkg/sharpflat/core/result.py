# SPDX-License-Identifier: MIT
# -*- coding: utf-8 -*-
from __future__ import annotations

from dataclasses import dataclass
from typing import Generic, Optional, TypeVar, Dict, Any


T = TypeVar("T")


@dataclass(frozen=True)
class AppError:
    """Structured diagnostic for a failed check.

    `details` is a human-readable explanation.
    `meta` holds machine-readable context (failing index, coefficient
    positions, violated condition number).
    """

    code: str
    message: str
    details: str = ""
    meta: Optional[Dict[str, Any]] = None


@dataclass(frozen=True)
class Result(Generic[T]):
    ok: bool
    value: Optional[T] = None
    error: Optional[AppError] = None

    @staticmethod
    def success(value: T = None) -> "Result[T]":
        return Result(ok=True, value=value, error=None)

    @staticmethod
    def failure(
        code: str,
        message: str,
        details: str = "",
        meta: Optional[Dict[str, Any]] = None,
    ) -> "Result[T]":
        return Result(
            ok=False,
            value=None,
            error=AppError(code=code, message=message, details=details, meta=meta),
        )

    def unwrap_or(self, default: T) -> T:
        return self.value if self.ok and self.value is not None else default

    def to_report(self) -> Dict[str, Any]:
        """JSON-ready summary; integers in meta become decimal strings."""
        if self.ok:
            return {"ok": True}
        err = self.error
        out: Dict[str, Any] = {"ok": False, "code": err.code, "message": err.message}
        if err.details:
            out["details"] = err.details
        if err.meta:
            out["meta"] = _stringify(err.meta)
        return out


def _stringify(value: Any) -> Any:
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, dict):
        return {str(k): _stringify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_stringify(v) for v in value]
    return str(value)
