# SPDX-License-Identifier: MIT
# -*- coding: utf-8 -*-
"""
Coordinate vectors of norm-compatible classes and their sharp/flat parts.

A CoordSeq stores, for every level m <= M, the r coordinates r_{i,m} of a
class in a fixed (formal) Lambda_{m,n}-basis. Each coordinate is a norm
sequence on its own, so the decomposition runs coordinatewise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from sharpflat.core import log
from sharpflat.core.errors import ContractViolation
from sharpflat.iwasawa.ring import IwasawaElem
from sharpflat.sprung.factorize import SharpFlatPair, decompose, equal_mod_kernel
from sharpflat.sprung.matrices import ApLike, ap_int, apply_H
from sharpflat.sprung.normseq import NormSeq, verify_norm_relation

Vector = Tuple[IwasawaElem, ...]


@dataclass(frozen=True)
class CoordSeq:
    levels: Tuple[Vector, ...]
    ap: int

    def __post_init__(self):
        levels = tuple(tuple(v) for v in self.levels)
        object.__setattr__(self, "levels", levels)
        if not levels or not levels[0]:
            raise ContractViolation("EMPTY_SEQUENCE", "need at least one level and one coordinate")
        r = len(levels[0])
        if any(len(v) != r for v in levels):
            raise ContractViolation("RANK_MISMATCH", "every level needs the same number of coordinates")
        first = levels[0][0]
        object.__setattr__(self, "ap", ap_int(self.ap) % first.modulus)

    @property
    def rank(self) -> int:
        return len(self.levels[0])

    @property
    def horizon(self) -> int:
        return len(self.levels) - 1

    @property
    def p(self) -> int:
        return self.levels[0][0].p

    @property
    def n(self) -> int:
        return self.levels[0][0].n

    def coordinate(self, i: int, strict: bool = False) -> NormSeq:
        return NormSeq(tuple(v[i] for v in self.levels), self.ap, strict=strict)

    @staticmethod
    def from_coordinates(seqs: Sequence[NormSeq]) -> "CoordSeq":
        if not seqs:
            raise ContractViolation("EMPTY_SEQUENCE", "need at least one coordinate")
        M = seqs[0].horizon
        if any(s.horizon != M for s in seqs):
            raise ContractViolation("HORIZON_MISMATCH", "coordinates need a common horizon")
        return CoordSeq(tuple(tuple(s.terms[m] for s in seqs) for m in range(M + 1)), seqs[0].ap)

    def change_basis(self, U: Sequence[Sequence[IwasawaElem]]) -> "CoordSeq":
        """
        New coordinates r'_{j,m} = sum_i U[j][i] r_{i,m}, with the level-M
        matrix U projected to each level. Lambda-linear changes keep the
        norm relation.
        """
        r = self.rank
        if len(U) != r or any(len(row) != r for row in U):
            raise ContractViolation("RANK_MISMATCH", f"change of basis must be {r}x{r}")
        out = []
        for m, v in enumerate(self.levels):
            out.append(
                tuple(
                    sum((U[j][i].project(m) * v[i] for i in range(1, r)), U[j][0].project(m) * v[0])
                    for j in range(r)
                )
            )
        return CoordSeq(tuple(out), self.ap)


@dataclass(frozen=True)
class VectorPair:
    """kappa^sharp and kappa^flat coordinates at level M."""

    sharp: Vector
    flat: Vector
    pairs: Tuple[SharpFlatPair, ...]

    @property
    def rank(self) -> int:
        return len(self.sharp)

    @property
    def level(self) -> int:
        return self.sharp[0].m

    def project(self, level: int) -> "VectorPair":
        pairs = tuple(pair.project(level) for pair in self.pairs)
        return VectorPair(tuple(p.sharp for p in pairs), tuple(p.flat for p in pairs), pairs)

    def ord_pi(self):
        """Minimum coefficient valuation over all coordinates."""
        return min(x.ord_pi() for x in self.sharp + self.flat)


def vector_decompose(seq: CoordSeq) -> VectorPair:
    """
    Decompose every coordinate and confirm
    H_M (kappa^sharp_i, kappa^flat_i) = (kappa_{i,M}, -norm kappa_{i,M-1}).

    Raises:
        ContractViolation: a coordinate breaks the norm relation or fails
            the reconstruction; meta["coordinate"] names it
    """
    pairs: List[SharpFlatPair] = []
    M = seq.horizon
    for i in range(seq.rank):
        coord = seq.coordinate(i)
        res = verify_norm_relation(coord)
        if not res.ok:
            raise ContractViolation(
                "NORM_RELATION",
                f"coordinate {i}: {res.error.message}",
                meta={"coordinate": i, **res.error.meta},
            )
        pair = decompose(coord)
        x, y = apply_H(seq.ap, M, pair.as_pair())
        tx, ty = coord.target(M)
        if x != tx or y != ty:
            raise ContractViolation(
                "RECONSTRUCTION", f"H_{M} applied to coordinate {i} misses its target", meta={"coordinate": i}
            )
        pairs.append(pair)
    log.debug(f"vector_decompose: rank {seq.rank}, horizon {M}")
    return VectorPair(tuple(p.sharp for p in pairs), tuple(p.flat for p in pairs), tuple(pairs))


def vectors_agree(ap: ApLike, one: VectorPair, two: VectorPair) -> bool:
    """Coordinatewise equality mod ker H at the common level."""
    if one.rank != two.rank:
        return False
    return all(
        equal_mod_kernel(ap, (one.sharp[i], one.flat[i]), (two.sharp[i], two.flat[i]))
        for i in range(one.rank)
    )
