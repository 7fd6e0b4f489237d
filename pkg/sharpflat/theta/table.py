# SPDX-License-Identifier: MIT
# -*- coding: utf-8 -*-
"""
Theta-value tables over G~_(m+1) = Delta x G_m and their assembly into
Lambda_{m,n}.

A label (delta, g) stands for the group element (delta, gamma^g). The value
at that label contributes to the coefficient of sigma^(-1), i.e. of
gamma^(-g mod p^m), and the Delta-fibers are summed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, Optional, Sequence, Tuple

from sharpflat.core.errors import SchemaError
from sharpflat.core.result import Result
from sharpflat.iwasawa.ring import IwasawaElem
from sharpflat.sprung.normseq import NormSeq, verify_norm_relation

Label = Tuple[int, int]


@dataclass(frozen=True)
class ThetaTable:
    p: int
    n: int
    m: int
    delta_order: int
    values: Dict[Label, int] = field(default_factory=dict)

    def __post_init__(self):
        size = self.p ** self.m
        q = self.p ** self.n
        clean: Dict[Label, int] = {}
        for (d, g), value in self.values.items():
            if not (0 <= d < self.delta_order and 0 <= g < size):
                raise SchemaError("BAD_LABEL", f"label ({d}, {g}) outside Delta x G_{self.m}")
            clean[(d, g)] = int(value) % q
        expected = self.delta_order * size
        if len(clean) != expected:
            missing = [
                (d, g) for d in range(self.delta_order) for g in range(size) if (d, g) not in clean
            ]
            raise SchemaError(
                "MISSING_LABEL",
                f"table has {len(clean)} labels, expected {expected}",
                meta={"first_missing": missing[0] if missing else None},
            )
        object.__setattr__(self, "values", clean)

    @staticmethod
    def from_entries(
        p: int, n: int, m: int, delta_order: int, entries: Iterable[Tuple[Label, int]]
    ) -> "ThetaTable":
        values: Dict[Label, int] = {}
        for label, value in entries:
            key = (int(label[0]), int(label[1]))
            if key in values:
                raise SchemaError("DUPLICATE_LABEL", f"label {key} appears twice")
            values[key] = value
        return ThetaTable(p, n, m, delta_order, values)

    @staticmethod
    def constant(c: int, p: int, n: int, m: int, delta_order: int) -> "ThetaTable":
        return ThetaTable(
            p, n, m, delta_order, {(d, g): c for d in range(delta_order) for g in range(p ** m)}
        )

    @staticmethod
    def indicator(label: Label, p: int, n: int, m: int, delta_order: int) -> "ThetaTable":
        values = {(d, g): 0 for d in range(delta_order) for g in range(p ** m)}
        values[label] = 1
        return ThetaTable(p, n, m, delta_order, values)

    def translate(self, d0: int, g0: int) -> "ThetaTable":
        """Regular action of (d0, gamma^g0): new value at x is the old value at x - (d0, g0)."""
        size = self.p ** self.m
        moved = {
            ((d + d0) % self.delta_order, (g + g0) % size): v for (d, g), v in self.values.items()
        }
        return ThetaTable(self.p, self.n, self.m, self.delta_order, moved)

    def __add__(self, other: "ThetaTable") -> "ThetaTable":
        if (self.p, self.n, self.m, self.delta_order) != (other.p, other.n, other.m, other.delta_order):
            raise SchemaError("TABLE_MISMATCH", "tables over different groups")
        return ThetaTable(
            self.p, self.n, self.m, self.delta_order,
            {k: v + other.values[k] for k, v in self.values.items()},
        )

    def scale(self, c: int) -> "ThetaTable":
        return ThetaTable(self.p, self.n, self.m, self.delta_order, {k: c * v for k, v in self.values.items()})


def assemble_twisted(table: ThetaTable, chi: Optional[Sequence[int]] = None) -> IwasawaElem:
    """
    Sum over Delta weighted by chi(delta) (all ones when chi is None),
    indexed by inverse group elements.
    """
    size = table.p ** table.m
    if chi is not None and len(chi) != table.delta_order:
        raise SchemaError("BAD_CHARACTER", f"character needs {table.delta_order} values")
    d = [0] * size
    for (delta, g), value in table.values.items():
        weight = 1 if chi is None else int(chi[delta])
        d[(-g) % size] += weight * value
    return IwasawaElem.from_gamma(d, table.p, table.n, table.m)


def assemble(table: ThetaTable) -> IwasawaElem:
    return assemble_twisted(table)


def check_theta_norm(elems: Sequence[IwasawaElem], ap: int) -> Result:
    """Norm relation on a family of assembled theta elements."""
    return verify_norm_relation(NormSeq(tuple(elems), ap, strict=False))


def lp_product(x: IwasawaElem) -> IwasawaElem:
    """x times its involution."""
    return x * x.involute()
