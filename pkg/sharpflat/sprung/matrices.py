# SPDX-License-Identifier: MIT
# -*- coding: utf-8 -*-
"""
2x2 matrices over Lambda_{m,n} and the structural matrices

    B   = [[ap, 1], [-p, 0]]
    C_m = [[ap, 1], [-Phi_m, 0]]
    C'_m = adj(C_m) = [[0, -1], [Phi_m, ap]]

with H_m = C_m ... C_1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple, Union

from sharpflat.arith.scalars import PAdicScalar
from sharpflat.core.errors import ContractViolation
from sharpflat.iwasawa.ring import IwasawaElem, _phi_mod

Pair = Tuple[IwasawaElem, IwasawaElem]
ApLike = Union[int, PAdicScalar]


def ap_int(ap: ApLike) -> int:
    return ap.value if isinstance(ap, PAdicScalar) else int(ap)


@dataclass(frozen=True)
class Mat2:
    """[[a, b], [c, d]] with a global p-denominator exponent."""

    a: IwasawaElem
    b: IwasawaElem
    c: IwasawaElem
    d: IwasawaElem
    denom_exp: int = 0

    def __post_init__(self):
        for x in (self.b, self.c, self.d):
            if not self.a.same_ring(x):
                raise ContractViolation("RING_MISMATCH", "matrix entries must share level and precision")

    @staticmethod
    def from_ints(rows, p: int, n: int, m: int) -> "Mat2":
        (a, b), (c, d) = rows
        k = IwasawaElem.constant
        return Mat2(k(a, p, n, m), k(b, p, n, m), k(c, p, n, m), k(d, p, n, m))

    @staticmethod
    def identity(p: int, n: int, m: int) -> "Mat2":
        return Mat2.from_ints(((1, 0), (0, 1)), p, n, m)

    @staticmethod
    def diag(x: IwasawaElem, y: IwasawaElem) -> "Mat2":
        z = IwasawaElem.zero(x.p, x.n, x.m)
        return Mat2(x, z, z, y)

    @property
    def level(self) -> int:
        return self.a.m

    def entries(self) -> Tuple[IwasawaElem, IwasawaElem, IwasawaElem, IwasawaElem]:
        return self.a, self.b, self.c, self.d

    def __mul__(self, other):
        if isinstance(other, Mat2):
            return Mat2(
                self.a * other.a + self.b * other.c,
                self.a * other.b + self.b * other.d,
                self.c * other.a + self.d * other.c,
                self.c * other.b + self.d * other.d,
                self.denom_exp + other.denom_exp,
            )
        if isinstance(other, (int, IwasawaElem)):
            return Mat2(self.a * other, self.b * other, self.c * other, self.d * other, self.denom_exp)
        return NotImplemented

    def __add__(self, other: "Mat2") -> "Mat2":
        if self.denom_exp != other.denom_exp:
            raise ContractViolation("DENOMINATOR_MISMATCH", "add matrices over a common denominator")
        return Mat2(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d, self.denom_exp)

    def __sub__(self, other: "Mat2") -> "Mat2":
        return self + other * -1

    def __pow__(self, k: int) -> "Mat2":
        out = Mat2.identity(self.a.p, self.a.n, self.level)
        for _ in range(k):
            out = out * self
        return out

    def apply(self, v: Pair) -> Pair:
        x, y = v
        return self.a * x + self.b * y, self.c * x + self.d * y

    def det(self) -> IwasawaElem:
        return self.a * self.d - self.b * self.c

    def adjugate(self) -> "Mat2":
        return Mat2(self.d, -self.b, -self.c, self.a, self.denom_exp)

    def project(self, level: int) -> "Mat2":
        return Mat2(*(x.project(level) for x in self.entries()), denom_exp=self.denom_exp)

    def lift_to(self, level: int) -> "Mat2":
        return Mat2(*(x.lift_to(level) for x in self.entries()), denom_exp=self.denom_exp)

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.entries())

    def is_diagonal(self) -> bool:
        return self.b.is_zero() and self.c.is_zero()


def _phi_elem(p: int, n: int, j: int, level: int) -> IwasawaElem:
    return IwasawaElem(_phi_mod(p, j, n), p, n, level)


def mat_B(ap: ApLike, p: int, n: int, m: int = 0) -> Mat2:
    a = ap_int(ap)
    B = Mat2.from_ints(((a, 1), (-p, 0)), p, n, m)
    if B.det() != IwasawaElem.constant(p, p, n, m):
        raise ContractViolation("DET_B", "det B must equal p")
    return B


def adjugate_B(ap: ApLike, p: int, n: int, m: int = 0) -> Mat2:
    return mat_B(ap, p, n, m).adjugate()


def mat_C(ap: ApLike, j: int, p: int, n: int, level: int = None) -> Mat2:
    """C_j read at `level` (default j)."""
    if j < 1:
        raise ContractViolation("BAD_LEVEL", "C_m needs m >= 1")
    level = j if level is None else level
    return _mat_C(ap_int(ap) % p ** n, j, p, n, level)


@lru_cache(maxsize=1024)
def _mat_C(a: int, j: int, p: int, n: int, level: int) -> Mat2:
    phi = _phi_elem(p, n, j, level)
    one = IwasawaElem.one(p, n, level)
    zero = IwasawaElem.zero(p, n, level)
    C = Mat2(IwasawaElem.constant(a, p, n, level), one, -phi, zero)
    if C.det() != phi:
        raise ContractViolation("DET_C", f"det C_{j} must equal Phi_{j}")
    return C


def adjugate_C(ap: ApLike, j: int, p: int, n: int, level: int = None) -> Mat2:
    """C'_j with C_j C'_j = Phi_j * Id."""
    return mat_C(ap, j, p, n, level).adjugate()


def h_matrix(ap: ApLike, m: int, p: int, n: int, level: int = None) -> Mat2:
    """C_m ... C_1 at `level` (default m); the identity for m = 0."""
    level = m if level is None else level
    out = Mat2.identity(p, n, level)
    for j in range(1, m + 1):
        out = mat_C(ap, j, p, n, level) * out
    return out


def apply_H(ap: ApLike, m: int, v: Pair) -> Pair:
    """C_m ... C_1 v, applying C_1 first and reducing mod omega_m each step."""
    x, y = v
    if x.m != m or y.m != m:
        raise ContractViolation("BAD_LEVEL", f"apply_H at level {m} needs level-{m} components")
    for j in range(1, m + 1):
        x, y = mat_C(ap, j, x.p, x.n, m).apply((x, y))
    return x, y
