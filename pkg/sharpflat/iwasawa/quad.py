# SPDX-License-Identifier: MIT
# -*- coding: utf-8 -*-
"""
Lambda_{m,n} with coefficients in Z/p^n[alpha]: pairs u + v*alpha of
IwasawaElem, alpha^2 = ap*alpha - p.
"""

from __future__ import annotations

from dataclasses import dataclass

from sharpflat.arith.scalars import QuadScalar
from sharpflat.core.errors import ContractViolation
from sharpflat.iwasawa.ring import IwasawaElem


@dataclass(frozen=True)
class QuadIwasawaElem:
    u: IwasawaElem
    v: IwasawaElem
    ap: int

    def __post_init__(self):
        if not self.u.same_ring(self.v):
            raise ContractViolation("RING_MISMATCH", "components of a quadratic element differ in ring")
        object.__setattr__(self, "ap", int(self.ap) % self.u.modulus)
        if self.ap % self.u.p:
            raise ContractViolation("ORDINARY_AP", "ap must be divisible by p")

    @staticmethod
    def from_rational(x: IwasawaElem, ap: int) -> "QuadIwasawaElem":
        return QuadIwasawaElem(x, IwasawaElem.zero(x.p, x.n, x.m), ap)

    @property
    def p(self) -> int:
        return self.u.p

    @property
    def n(self) -> int:
        return self.u.n

    @property
    def m(self) -> int:
        return self.u.m

    def _make(self, u: IwasawaElem, v: IwasawaElem) -> "QuadIwasawaElem":
        return QuadIwasawaElem(u, v, self.ap)

    def _coerce(self, other):
        if isinstance(other, QuadIwasawaElem):
            if other.ap != self.ap:
                raise ContractViolation("RING_MISMATCH", "quadratic elements with different ap")
            return other.u, other.v
        if isinstance(other, IwasawaElem):
            return other, IwasawaElem.zero(other.p, other.n, other.m)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._make(self.u + o[0], self.v + o[1])

    __radd__ = __add__

    def __neg__(self):
        return self._make(-self.u, -self.v)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._make(self.u - o[0], self.v - o[1])

    def __mul__(self, other):
        if isinstance(other, QuadScalar):
            if other.p != self.p or (other.ap - self.ap) % self.u.modulus:
                raise ContractViolation("RING_MISMATCH", "scalar from another quadratic ring")
            su, sv = other.u, other.v
            vv = self.v * sv
            return self._make(self.u * su - vv * self.p, self.u * sv + self.v * su + vv * self.ap)
        if isinstance(other, int):
            return self._make(self.u * other, self.v * other)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        u2, v2 = o
        vv = self.v * v2
        return self._make(self.u * u2 - vv * self.p, self.u * v2 + u2 * self.v + vv * self.ap)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.u.is_zero() and self.v.is_zero()

    def project(self, level: int = None) -> "QuadIwasawaElem":
        return self._make(self.u.project(level), self.v.project(level))

    def coefficient(self, k: int) -> QuadScalar:
        return QuadScalar(self.u.coeffs[k], self.v.coeffs[k], self.ap, self.p, self.n)

    def nonzero_positions(self):
        """Indices k whose quadratic coefficient is nonzero."""
        return [k for k in range(self.u.size) if self.u.coeffs[k] or self.v.coeffs[k]]
