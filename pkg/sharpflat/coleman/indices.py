# SPDX-License-Identifier: MIT
# -*- coding: utf-8 -*-
"""
Plus/minus index bookkeeping for the inert case.

d_m^+ is d_m for even m and d_(m-1) for odd m; d_m^- is mirrored. The
minus class at m = 0 is undefined; pm_index reports it as None.
"""

from __future__ import annotations

from typing import Optional, Sequence, Tuple

from sharpflat.core.errors import ContractViolation
from sharpflat.core.result import Result
from sharpflat.iwasawa.ring import IwasawaElem
from sharpflat.sprung.normseq import NormSeq, verify_norm_relation


def plus_source(m: int) -> int:
    if m < 0:
        raise ContractViolation("BAD_LEVEL", f"level {m} is negative")
    return m if m % 2 == 0 else m - 1


def minus_source(m: int) -> int:
    if m < 0:
        raise ContractViolation("BAD_LEVEL", f"level {m} is negative")
    if m == 0:
        raise ContractViolation("MINUS_AT_ZERO", "d_0^- is undefined")
    return m if m % 2 else m - 1


def pm_index(m: int) -> Tuple[int, Optional[int]]:
    """(source of d_m^+, source of d_m^-); the minus slot is None at m = 0."""
    return plus_source(m), (minus_source(m) if m else None)


def signed_terms(terms: Sequence[IwasawaElem], m: int) -> Tuple[IwasawaElem, Optional[IwasawaElem]]:
    """(d_m^+, d_m^-) read off an abstract sequence d_0, d_1, ..."""
    plus, minus = pm_index(m)
    return terms[plus], (terms[minus] if minus is not None else None)


def check_trace_contract(terms: Sequence[IwasawaElem]) -> Result:
    """
    Tr d_m = -d_(m-2) along the tower, i.e. the norm relation with ap = 0.

    Returns:
        Result.success() or TRACE_CONTRACT with meta {"index": m} naming
        the level m at which Tr d_m differs from -d_(m-2).
    """
    res = verify_norm_relation(NormSeq(tuple(terms), 0, strict=False))
    if res.ok:
        return res
    index = res.error.meta["index"] + 1
    return Result.failure(
        "TRACE_CONTRACT",
        f"Tr d_{index} != -d_{index - 2}",
        details=res.error.details,
        meta={"index": index, "positions": res.error.meta["positions"]},
    )
