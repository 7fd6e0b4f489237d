# SPDX-License-Identifier: MIT
# -*- coding: utf-8 -*-
"""
Input Validation

Validates user-controlled inputs before any computation:
- primes, precisions and levels
- residue arrays (decimal strings or integers)
- JSON payloads for every ingested type (NormSeq, ThetaTable,
  QSystemModel, EigenTable, CoordSeq, Functional)
- run configuration (working precision covers the denominators)

Every validator returns an (is_valid, error_message) tuple.
"""

from __future__ import annotations

import re
from typing import Any, Optional, Tuple

import sympy


INTEGER_PATTERN = re.compile(r"^-?[0-9]+$")

MAX_PRIME = 10007
MAX_PRECISION = 64
HARD_MAX_GROUP_ORDER = 15625
MAX_RANK = 16
MAX_DELTA_ORDER = 4096
MAX_SCAN_BOUND = 100000
MAX_RESIDUE_DIGITS = 4000


def as_int(value: Any) -> Optional[int]:
    """Integer from an int or a decimal string; None otherwise."""
    if isinstance(value, bool):
        return None
    if isinstance(value, int):
        return value
    if isinstance(value, str) and len(value) <= MAX_RESIDUE_DIGITS:
        if INTEGER_PATTERN.match(value.strip()):
            return int(value.strip())
    return None


def validate_prime(p: Any) -> Tuple[bool, str]:
    """
    Validate the residue characteristic.

    Args:
        p: candidate prime

    Returns:
        (is_valid, error_message) tuple
    """
    value = as_int(p)
    if value is None:
        return False, "p must be an integer"
    if value == 2:
        return False, "p = 2 is not supported"
    if value < 3 or value > MAX_PRIME:
        return False, f"p out of range (3..{MAX_PRIME})"
    if not sympy.isprime(value):
        return False, f"p = {value} is not prime"
    return True, ""


def validate_precision(n: Any, name: str = "n") -> Tuple[bool, str]:
    value = as_int(n)
    if value is None:
        return False, f"{name} must be an integer"
    if value < 1 or value > MAX_PRECISION:
        return False, f"{name} out of range (1..{MAX_PRECISION})"
    return True, ""


def validate_level(p: int, m: Any, max_order: int = HARD_MAX_GROUP_ORDER) -> Tuple[bool, str]:
    value = as_int(m)
    if value is None:
        return False, "level must be an integer"
    if value < 0:
        return False, "level must be non-negative"
    if p ** value > max_order:
        return False, f"p^m = {p}^{value} exceeds the level cap {max_order}"
    return True, ""


def validate_residues(values: Any, length: Optional[int] = None) -> Tuple[bool, str]:
    """
    Validate a coefficient array.

    Args:
        values: list of integers or decimal strings
        length: required length, or None for "at most"

    Returns:
        (is_valid, error_message) tuple
    """
    if not isinstance(values, list):
        return False, "coefficients must be a list"
    if length is not None and len(values) > length:
        return False, f"too many coefficients ({len(values)} > {length})"
    for i, v in enumerate(values):
        if as_int(v) is None:
            return False, f"coefficient {i} is not a decimal integer"
    return True, ""


def _check_header(data: Any, keys: Tuple[str, ...]) -> Tuple[bool, str]:
    if not isinstance(data, dict):
        return False, "payload must be a JSON object"
    for key in keys:
        if key not in data:
            return False, f"missing field '{key}'"
    ok, msg = validate_prime(data["p"])
    if not ok:
        return ok, msg
    return validate_precision(data["n"])


def _check_ap(data: dict) -> Tuple[bool, str]:
    ap = as_int(data.get("ap"))
    if ap is None:
        return False, "ap must be an integer"
    p = as_int(data["p"])
    if ap % p != 0:
        return False, "ap must be divisible by p (non-ordinary case only)"
    return True, ""


def validate_norm_seq_payload(data: Any) -> Tuple[bool, str]:
    """NormSeq JSON: {p, n, ap, terms: [coeff arrays]}"""
    ok, msg = _check_header(data, ("p", "n", "ap", "terms"))
    if not ok:
        return ok, msg
    ok, msg = _check_ap(data)
    if not ok:
        return ok, msg
    terms = data["terms"]
    if not isinstance(terms, list) or len(terms) < 2:
        return False, "terms must list at least F_0 and F_1"
    p = as_int(data["p"])
    ok, msg = validate_level(p, len(terms) - 1)
    if not ok:
        return ok, msg
    for m, term in enumerate(terms):
        ok, msg = validate_residues(term, p ** m)
        if not ok:
            return False, f"term {m}: {msg}"
    return True, ""


def validate_theta_payload(data: Any) -> Tuple[bool, str]:
    """ThetaTable JSON: {p, n, m, delta_order, entries: [{label, value}]}"""
    ok, msg = _check_header(data, ("p", "n", "m", "delta_order", "entries"))
    if not ok:
        return ok, msg
    p = as_int(data["p"])
    ok, msg = validate_level(p, data["m"])
    if not ok:
        return ok, msg
    d = as_int(data["delta_order"])
    if d is None or d < 1 or d > MAX_DELTA_ORDER:
        return False, f"delta_order out of range (1..{MAX_DELTA_ORDER})"
    entries = data["entries"]
    if not isinstance(entries, list):
        return False, "entries must be a list"
    for i, entry in enumerate(entries):
        if not isinstance(entry, dict) or "label" not in entry or "value" not in entry:
            return False, f"entry {i} needs label and value"
        label = entry["label"]
        if not isinstance(label, list) or len(label) != 2:
            return False, f"entry {i}: label must be [delta_idx, gamma_exp]"
        if as_int(label[0]) is None or as_int(label[1]) is None:
            return False, f"entry {i}: label components must be integers"
        if as_int(entry["value"]) is None:
            return False, f"entry {i}: value must be a decimal integer"
    return True, ""


def validate_model_payload(data: Any) -> Tuple[bool, str]:
    """QSystemModel JSON: {p, n, ap, horizon, rows, witnesses?}"""
    ok, msg = _check_header(data, ("p", "n", "ap", "horizon", "rows"))
    if not ok:
        return ok, msg
    ok, msg = _check_ap(data)
    if not ok:
        return ok, msg
    p = as_int(data["p"])
    horizon = as_int(data["horizon"])
    if horizon is None or horizon < 1:
        return False, "horizon must be an integer >= 1"
    ok, msg = validate_level(p, horizon)
    if not ok:
        return ok, msg
    rows = data["rows"]
    if not isinstance(rows, list) or len(rows) != horizon + 1:
        return False, "rows must have one entry per level 0..horizon"
    for m, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != 2:
            return False, f"row {m} must have two coordinates"
        for z, coeffs in enumerate(row):
            ok, msg = validate_residues(coeffs, p ** m)
            if not ok:
                return False, f"row {m} coordinate {z}: {msg}"
    witnesses = data.get("witnesses")
    if witnesses is not None:
        if not isinstance(witnesses, dict):
            return False, "witnesses must be an object"
        for key in ("d0", "d1"):
            vals = witnesses.get(key)
            if vals is None:
                continue
            ok, msg = validate_residues(vals, 2)
            if not ok or len(vals) != 2:
                return False, f"witnesses.{key} must hold two residues"
    return True, ""


def validate_eigen_table_payload(data: Any) -> Tuple[bool, str]:
    """EigenTable JSON: {N0, entries: {"2": -2, ...}, provenance?}"""
    if not isinstance(data, dict):
        return False, "payload must be a JSON object"
    n0 = as_int(data.get("N0"))
    if n0 is None or n0 < 1:
        return False, "N0 must be a positive integer"
    entries = data.get("entries")
    if not isinstance(entries, dict):
        return False, "entries must map primes to eigenvalues"
    for key, value in entries.items():
        ell = as_int(key)
        if ell is None or ell < 2 or not sympy.isprime(ell):
            return False, f"entry key {key!r} is not a prime"
        if as_int(value) is None:
            return False, f"a_{key} must be an integer"
    return True, ""


def validate_coord_seq_payload(data: Any) -> Tuple[bool, str]:
    """CoordSeq JSON: {p, n, ap, rank, levels: [[coeffs per coordinate] ...]}"""
    ok, msg = _check_header(data, ("p", "n", "ap", "rank", "levels"))
    if not ok:
        return ok, msg
    ok, msg = _check_ap(data)
    if not ok:
        return ok, msg
    p = as_int(data["p"])
    rank = as_int(data["rank"])
    if rank is None or rank < 1 or rank > MAX_RANK:
        return False, f"rank out of range (1..{MAX_RANK})"
    levels = data["levels"]
    if not isinstance(levels, list) or len(levels) < 2:
        return False, "levels must cover at least levels 0 and 1"
    ok, msg = validate_level(p, len(levels) - 1)
    if not ok:
        return ok, msg
    for m, coords in enumerate(levels):
        if not isinstance(coords, list) or len(coords) != rank:
            return False, f"level {m} must have {rank} coordinates"
        for i, coeffs in enumerate(coords):
            ok, msg = validate_residues(coeffs, p ** m)
            if not ok:
                return False, f"level {m} coordinate {i}: {msg}"
    return True, ""


def validate_functional_payload(data: Any) -> Tuple[bool, str]:
    """Functional JSON: {kind, p, n, m, row: [coeffs per coordinate]}"""
    ok, msg = _check_header(data, ("kind", "p", "n", "m", "row"))
    if not ok:
        return ok, msg
    if data["kind"] not in ("partial", "v"):
        return False, "kind must be 'partial' or 'v'"
    p = as_int(data["p"])
    ok, msg = validate_level(p, data["m"])
    if not ok:
        return ok, msg
    row = data["row"]
    if not isinstance(row, list) or not row or len(row) > MAX_RANK:
        return False, f"row must hold 1..{MAX_RANK} coordinates"
    m = as_int(data["m"])
    for i, coeffs in enumerate(row):
        ok, msg = validate_residues(coeffs, p ** m)
        if not ok:
            return False, f"row coordinate {i}: {msg}"
    return True, ""


def validate_run_config(p: int, n: int, N: int, M: int) -> Tuple[bool, str]:
    """Working precision must cover the worst-case denominators."""
    if M < 0:
        return False, "horizon M must be non-negative"
    if N < n + M + 2:
        return False, f"working precision N={N} below n + M + 2 = {n + M + 2}"
    return True, ""
