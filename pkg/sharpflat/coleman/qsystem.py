# SPDX-License-Identifier: MIT
# -*- coding: utf-8 -*-
"""
Mock Q-systems and their Coleman maps.

Iwasawa cohomology is replaced by a free rank-2 module over Lambda_n with a
fixed basis (z_1, z_2). A Q-system is then recorded through its Coleman
rows: row m holds (<z_1, d_m>, <z_2, d_m>) in Lambda_{m,n}. The four
conditions a Q-system must satisfy are

  (1) d_m in the finite part          - no mock analogue, reported "n/a"
  (2) some <z, d_0> is a unit
  (3) some <z, cor(d_1) - ap d_0> is a unit
  (4) the three-term norm relation, coordinate by coordinate
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from sharpflat.core import log
from sharpflat.core.errors import ContractViolation
from sharpflat.core.result import Result
from sharpflat.iwasawa.ring import IwasawaElem
from sharpflat.sprung.factorize import SharpFlatPair, decompose
from sharpflat.sprung.matrices import ApLike, ap_int
from sharpflat.sprung.normseq import NormSeq, generate_seq, verify_norm_relation

Row = Tuple[IwasawaElem, IwasawaElem]

CONDITION_NA = "n/a"


@dataclass(frozen=True)
class MockIwModule:
    """Lambda_n^2 truncated at `horizon`, with the standard basis."""

    p: int
    n: int
    horizon: int

    def basis(self, m: int) -> Tuple[Row, Row]:
        one = IwasawaElem.one(self.p, self.n, m)
        zero = IwasawaElem.zero(self.p, self.n, m)
        return (one, zero), (zero, one)

    def element(self, x: Sequence[int], y: Sequence[int], m: int) -> Row:
        return IwasawaElem(tuple(x), self.p, self.n, m), IwasawaElem(tuple(y), self.p, self.n, m)

    def pair(self, row: Row, z: Row) -> IwasawaElem:
        """Value of the functional `row` on z = z_1 e_1 + z_2 e_2."""
        m = row[0].m
        z1, z2 = z[0].project(m), z[1].project(m)
        return row[0] * z1 + row[1] * z2


@dataclass(frozen=True)
class QSystemModel:
    ap: int
    rows: Tuple[Row, ...]
    inert: bool = False

    def __post_init__(self):
        rows = tuple((r[0], r[1]) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise ContractViolation("EMPTY_MODEL", "a model needs the level-0 row")
        p, n = rows[0][0].p, rows[0][0].n
        for m, (a, b) in enumerate(rows):
            for x in (a, b):
                if (x.p, x.n, x.m) != (p, n, m):
                    raise ContractViolation("BAD_LEVEL", f"row {m} has an entry at level {x.m}")
        object.__setattr__(self, "ap", ap_int(self.ap) % p ** n)

    @property
    def p(self) -> int:
        return self.rows[0][0].p

    @property
    def n(self) -> int:
        return self.rows[0][0].n

    @property
    def horizon(self) -> int:
        return len(self.rows) - 1

    @property
    def module(self) -> MockIwModule:
        return MockIwModule(self.p, self.n, self.horizon)

    def coordinate(self, i: int, strict: bool = False) -> NormSeq:
        """The sequence <z_i, d_m>, m = 0..M."""
        return NormSeq(tuple(row[i] for row in self.rows), self.ap, strict=strict)

    def witnesses(self) -> Dict[str, Tuple[int, int]]:
        """
        Level-0 pairings per basis element:
        "d0" -> <z_i, d_0>, "d1" -> <z_i, cor(d_1) - ap d_0>.
        """
        if self.horizon < 1:
            raise ContractViolation("SHORT_MODEL", "witnesses need rows 0 and 1")
        d0 = tuple(self.rows[0][i].coeffs[0] for i in range(2))
        d1 = tuple(
            (self.rows[1][i].project(0) - self.rows[0][i] * self.ap).coeffs[0] for i in range(2)
        )
        return {"d0": d0, "d1": d1}

    def at_precision(self, n: int) -> "QSystemModel":
        return QSystemModel(
            self.ap, tuple((a.at_precision(n), b.at_precision(n)) for a, b in self.rows), self.inert
        )


def build_model(sharp: Row, flat: Row, ap: ApLike, inert: bool = False) -> QSystemModel:
    """
    Rows generated from prescribed sharp/flat coordinates at level M, so
    condition (4) holds by construction.
    """
    seqs = [generate_seq(sharp[i], flat[i], ap) for i in range(2)]
    rows = tuple((seqs[0].terms[m], seqs[1].terms[m]) for m in range(seqs[0].horizon + 1))
    return QSystemModel(ap_int(ap), rows, inert)


def _is_unit(value: int, p: int) -> bool:
    return value % p != 0


def qsystem_check(model: QSystemModel) -> Result:
    """
    Returns:
        Result.success({"conditions": {...}}) with "n/a" for condition 1,
        or a failure whose meta carries the violated condition (and the
        failing index and coordinate for condition 4).
    """
    p = model.p
    w = model.witnesses()
    if not any(_is_unit(v, p) for v in w["d0"]):
        return Result.failure(
            "QSYSTEM_CONDITION",
            "no basis element pairs to a unit with d_0",
            meta={"condition": 2, "witnesses": list(w["d0"])},
        )
    if not any(_is_unit(v, p) for v in w["d1"]):
        return Result.failure(
            "QSYSTEM_CONDITION",
            "no basis element pairs to a unit with cor(d_1) - ap d_0",
            meta={"condition": 3, "witnesses": list(w["d1"])},
        )
    for i in range(2):
        res = verify_norm_relation(model.coordinate(i))
        if not res.ok:
            log.debug(f"qsystem condition 4 fails in coordinate {i}")
            return Result.failure(
                "QSYSTEM_CONDITION",
                f"norm relation fails at index {res.error.meta['index']} in coordinate {i}",
                meta={"condition": 4, "coordinate": i, **res.error.meta},
            )
    return Result.success({"conditions": {"1": CONDITION_NA, "2": "ok", "3": "ok", "4": "ok"}})


@dataclass(frozen=True)
class ColemanFunctionals:
    """Col^sharp and Col^flat as rows at level M, each coordinate mod ker H_M."""

    sharp: Row
    flat: Row
    pairs: Tuple[SharpFlatPair, SharpFlatPair]

    @property
    def level(self) -> int:
        return self.sharp[0].m

    def kernel_length(self) -> int:
        return self.pairs[0].kernel_length


def coleman_sharp_flat(model: QSystemModel, check_witnesses: bool = True) -> ColemanFunctionals:
    """
    Decompose each coordinate sequence.

    With check_witnesses=False only the norm relation is required, which is
    all the factorization itself needs.

    Raises:
        ContractViolation: a Q-system condition fails, or decompose fails
    """
    if check_witnesses:
        res = qsystem_check(model)
        if not res.ok:
            raise ContractViolation(res.error.code, res.error.message, meta=res.error.meta)
    pairs: List[SharpFlatPair] = [decompose(model.coordinate(i, strict=True)) for i in range(2)]
    return ColemanFunctionals(
        sharp=(pairs[0].sharp, pairs[1].sharp),
        flat=(pairs[0].flat, pairs[1].flat),
        pairs=(pairs[0], pairs[1]),
    )


def mod_x_identities(model: QSystemModel, cols: ColemanFunctionals) -> Result:
    """Col^sharp = Col_0 and Col^flat = Col_1 - ap Col_0 modulo X."""
    w = model.witnesses()
    for i in range(2):
        s0 = cols.sharp[i].coeffs[0]
        f0 = cols.flat[i].coeffs[0]
        if s0 != w["d0"][i] or f0 != w["d1"][i]:
            return Result.failure(
                "MOD_X_IDENTITY",
                f"sharp/flat constant terms differ from the level-0 rows in coordinate {i}",
                meta={"coordinate": i, "sharp": s0, "flat": f0},
            )
    return Result.success()
