# SPDX-License-Identifier: MIT
# -*- coding: utf-8 -*-
"""
Finite-level reciprocity checks.

First law:  d_l(kappa^s, kappa^f) = u * (L^s, L^f)
Second law: v_l2(kappa(l1)^s, kappa(l1)^f) = u1 * (L'^s, L'^f) and
            v_l1(kappa(l2)^s, kappa(l2)^f) = u2 * (L'^s, L'^f)

All equalities are taken mod (p^n, ker H_M). Units are explicit: the
checker never searches the unit group. The second law only admits units
of the form c * gamma^k with c a p-adic unit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from sharpflat.core import log
from sharpflat.core.errors import ContractViolation
from sharpflat.core.result import Result
from sharpflat.euler.vectors import CoordSeq, Vector, VectorPair
from sharpflat.iwasawa.ring import IwasawaElem
from sharpflat.sprung.factorize import in_kernel
from sharpflat.sprung.matrices import ApLike, Pair, ap_int
from sharpflat.sprung.normseq import generate_seq

FUNCTIONAL_KINDS = ("partial", "v")


@dataclass(frozen=True)
class Functional:
    """
    A Lambda-linear functional in the formal basis, defined up to the unit
    held in `unit` (1 unless stated).
    """

    kind: str
    ell: int
    row: Vector
    unit: Optional[IwasawaElem] = None

    def __post_init__(self):
        if self.kind not in FUNCTIONAL_KINDS:
            raise ContractViolation("BAD_FUNCTIONAL", f"kind must be one of {FUNCTIONAL_KINDS}")
        if not self.row:
            raise ContractViolation("BAD_FUNCTIONAL", "empty row")
        if self.unit is not None and not self.unit.is_unit():
            raise ContractViolation("NOT_A_UNIT", "functional normalization is not a unit")

    @property
    def rank(self) -> int:
        return len(self.row)

    def apply(self, vec: Vector) -> IwasawaElem:
        if len(vec) != self.rank:
            raise ContractViolation("RANK_MISMATCH", f"functional of rank {self.rank} on a vector of rank {len(vec)}")
        m = vec[0].m
        total = self.row[0].project(m) * vec[0]
        for r, x in zip(self.row[1:], vec[1:]):
            total = total + r.project(m) * x
        if self.unit is not None:
            total = total * self.unit.project(m)
        return total

    def apply_pair(self, pair: VectorPair) -> Pair:
        return self.apply(pair.sharp), self.apply(pair.flat)


def is_unit_times_group_element(u: IwasawaElem) -> Optional[Tuple[int, int]]:
    """(c, k) with u = c * gamma^k and c a p-adic unit, or None."""
    support = [(k, c) for k, c in enumerate(u.gamma_coeffs()) if c]
    if len(support) != 1:
        return None
    k, c = support[0]
    if c % u.p == 0:
        return None
    return c, k


def _residual(lhs: Pair, unit: IwasawaElem, target: Pair) -> Pair:
    m = lhs[0].m
    u = unit.project(m)
    return lhs[0] - u * target[0].project(m), lhs[1] - u * target[1].project(m)


def solve_unit(lhs: Pair, target: Pair) -> IwasawaElem:
    """
    u with lhs = u * target, read off the first slot of `target` that is a
    unit.

    Raises:
        ContractViolation: no slot of the target is a unit, or the solved u
            is not a unit
    """
    for x, t in zip(lhs, target):
        t = t.project(x.m)
        if t.is_unit():
            u = x * t.inverse()
            if not u.is_unit():
                raise ContractViolation("NOT_A_UNIT", "solved factor is not a unit")
            return u
    raise ContractViolation("UNIT_UNDETERMINED", "neither target slot is a unit")


def first_reciprocity_check(
    decomposed: VectorPair,
    L_pair: Pair,
    functional: Functional,
    ap: ApLike,
    unit: Optional[IwasawaElem] = None,
) -> Result:
    """
    d_l(kappa^s, kappa^f) = unit * (L^s, L^f) mod ker H_M.

    With unit=None the unit is solved from the first invertible L slot;
    the solved unit is returned in the success value.

    Raises:
        ContractViolation: the claimed unit is not a unit
    """
    lhs = functional.apply_pair(decomposed)
    if unit is None:
        unit = solve_unit(lhs, L_pair)
    elif not unit.is_unit():
        raise ContractViolation("NOT_A_UNIT", "claimed unit has non-unit constant term")
    diff = _residual(lhs, unit, L_pair)
    if in_kernel(ap_int(ap), diff):
        return Result.success({"unit": unit})
    log.debug("first reciprocity defect")
    return Result.failure(
        "RECIPROCITY_DEFECT",
        f"d_{functional.ell} of the decomposed class differs from unit * L",
        meta={"positions": [[k for k, c in enumerate(x.coeffs) if c] for x in diff]},
    )


def second_reciprocity_check(
    pair_1: VectorPair,
    v_2: Functional,
    pair_2: VectorPair,
    v_1: Functional,
    L_other: Pair,
    ap: ApLike,
    units: Tuple[IwasawaElem, IwasawaElem],
) -> Result:
    """
    Both equalities of the second law mod ker H_M.

    Returns:
        success, or RECIPROCITY_DEFECT with meta {"side": "left"|"right"|"both"}

    Raises:
        ContractViolation: a unit is not of the form c * gamma^k
    """
    for u in units:
        if is_unit_times_group_element(u) is None:
            raise ContractViolation("BAD_UNIT_CLASS", "second-law units must be c * gamma^k with c a unit")
    a = ap_int(ap)
    left = in_kernel(a, _residual(v_2.apply_pair(pair_1), units[0], L_other))
    right = in_kernel(a, _residual(v_1.apply_pair(pair_2), units[1], L_other))
    if left and right:
        return Result.success()
    side = "both" if not (left or right) else ("left" if not left else "right")
    return Result.failure(
        "RECIPROCITY_DEFECT",
        f"second reciprocity fails on the {side} side",
        meta={"side": side},
    )


def build_reciprocity_class(
    target: Pair,
    functional: Functional,
    unit: IwasawaElem,
    free: Sequence[Pair],
    ap: ApLike,
) -> CoordSeq:
    """
    A class whose decomposition satisfies functional(kappa) = unit * target.

    `free` prescribes the sharp/flat coordinates 1..r-1; coordinate 0 is
    solved, so row[0] of the functional (times its own unit) must be a unit.

    Raises:
        ContractViolation: row[0] is not a unit or the ranks disagree
    """
    if len(free) != functional.rank - 1:
        raise ContractViolation("RANK_MISMATCH", f"need {functional.rank - 1} free coordinates")
    M = target[0].m
    lead = functional.row[0].project(M)
    if functional.unit is not None:
        lead = lead * functional.unit.project(M)
    if not lead.is_unit():
        raise ContractViolation("NOT_A_UNIT", "first functional coefficient must be a unit")
    lead_inv = lead.inverse()
    u = unit.project(M)
    coords = []
    for slot in range(2):
        rest = u * target[slot]
        for r, pair in zip(functional.row[1:], free):
            scale = r.project(M) if functional.unit is None else r.project(M) * functional.unit.project(M)
            rest = rest - scale * pair[slot]
        coords.append(lead_inv * rest)
    seqs = [generate_seq(coords[0], coords[1], ap)]
    seqs.extend(generate_seq(s, f, ap) for s, f in free)
    return CoordSeq.from_coordinates(seqs)
