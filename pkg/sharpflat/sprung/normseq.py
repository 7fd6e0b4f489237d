# SPDX-License-Identifier: MIT
# -*- coding: utf-8 -*-
"""
Norm-compatible sequences F_0, ..., F_M with F_m in Lambda_{m,n} and

    project(F_{m+1}) = ap * F_m - norm(F_{m-1})     (1 <= m <= M-1)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from sharpflat.core import log
from sharpflat.core.errors import ContractViolation
from sharpflat.core.result import Result
from sharpflat.iwasawa.ring import IwasawaElem
from sharpflat.sprung.matrices import ApLike, Pair, ap_int, apply_H


def relation_defect(terms: Sequence[IwasawaElem], ap: int, m: int) -> IwasawaElem:
    """project(F_{m+1}) - ap F_m + norm(F_{m-1}) at level m."""
    return terms[m + 1].project() - terms[m] * ap + terms[m - 1].norm()


@dataclass(frozen=True)
class NormSeq:
    terms: Tuple[IwasawaElem, ...]
    ap: int
    strict: bool = True

    def __post_init__(self):
        terms = tuple(self.terms)
        object.__setattr__(self, "terms", terms)
        if not terms:
            raise ContractViolation("EMPTY_SEQUENCE", "a norm sequence needs F_0")
        p, n = terms[0].p, terms[0].n
        for m, term in enumerate(terms):
            if (term.p, term.n, term.m) != (p, n, m):
                raise ContractViolation(
                    "BAD_LEVEL", f"term {m} lives in Lambda_{{{term.m},{term.n}}}, expected level {m}"
                )
        object.__setattr__(self, "ap", ap_int(self.ap) % p ** n)
        if self.ap % p:
            raise ContractViolation("ORDINARY_AP", "ap must be divisible by p")
        if self.strict:
            res = verify_norm_relation(self)
            if not res.ok:
                raise ContractViolation(
                    "NORM_RELATION",
                    res.error.message,
                    meta=res.error.meta,
                )

    @property
    def p(self) -> int:
        return self.terms[0].p

    @property
    def n(self) -> int:
        return self.terms[0].n

    @property
    def horizon(self) -> int:
        return len(self.terms) - 1

    def target(self, m: int) -> Pair:
        """
        (F_m, -norm(F_{m-1})), the vector H_m is expected to reach.

        At m = 0 the second slot is project(F_1) - ap*F_0, which continues
        the relation one step down.
        """
        F = self.terms
        if m == 0:
            if self.horizon < 1:
                raise ContractViolation("SHORT_SEQUENCE", "level-0 target needs F_1")
            return F[0], F[1].project() - F[0] * self.ap
        return F[m], -F[m - 1].norm()

    def truncate(self, horizon: int) -> "NormSeq":
        return NormSeq(self.terms[: horizon + 1], self.ap, self.strict)

    def at_precision(self, n: int) -> "NormSeq":
        """Read the canonical representatives mod p^n (reduction when n is smaller)."""
        return NormSeq(tuple(t.at_precision(n) for t in self.terms), self.ap, self.strict)

    def with_ap(self, ap: ApLike) -> "NormSeq":
        return NormSeq(self.terms, ap_int(ap), strict=False)


def verify_norm_relation(seq: NormSeq) -> Result:
    """
    Check the three-term relation at every 1 <= m <= M-1.

    Returns:
        Result.success() or a NORM_RELATION failure whose meta carries the
        first failing index and the nonzero coefficient positions.
    """
    F = seq.terms
    for m in range(1, seq.horizon):
        defect = relation_defect(F, seq.ap, m)
        if not defect.is_zero():
            positions = [k for k, c in enumerate(defect.coeffs) if c]
            log.debug(f"norm relation fails at index {m}: positions {positions}")
            return Result.failure(
                "NORM_RELATION",
                f"norm relation fails at index {m}",
                details=f"defect {defect.pretty()}",
                meta={"index": m, "positions": positions},
            )
    return Result.success()


def generate_seq(sharp: IwasawaElem, flat: IwasawaElem, ap: ApLike, horizon: int = None) -> NormSeq:
    """
    F_m := first component of H_m applied to (sharp, flat) projected to level m.

    The second component of H_m equals -norm(F_{m-1}), which makes the
    sequence norm-compatible by construction.
    """
    if not sharp.same_ring(flat):
        raise ContractViolation("RING_MISMATCH", "sharp and flat must share a ring")
    M = sharp.m if horizon is None else horizon
    if M > sharp.m:
        raise ContractViolation("BAD_LEVEL", f"horizon {M} above the level {sharp.m} of the pair")
    a = ap_int(ap)
    terms = []
    for m in range(M + 1):
        x, _ = apply_H(a, m, (sharp.project(m), flat.project(m)))
        terms.append(x)
    return NormSeq(tuple(terms), a)
