# SPDX-License-Identifier: MIT
# -*- coding: utf-8 -*-
"""
Truncated Iwasawa algebra Lambda_{m,n} = (Z/p^n)[X]/(omega_m).

IwasawaElem stores the canonical representative: exactly p^m coefficients,
each reduced mod p^n. The constructor accepts any lift and reduces it, so
`IwasawaElem(coeffs, p, n, m)` is also the natural "reduce this polynomial"
entry point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Tuple

import numpy as np

from sharpflat.arith.scalars import INF, PAdicScalar, int_valuation
from sharpflat.core.errors import ContractViolation
from sharpflat.iwasawa.poly import (
    StructPoly,
    _omega_coeffs,
    _phi_coeffs,
    from_gamma_basis,
    poly_add,
    poly_mod,
    poly_mul,
    to_gamma_basis,
)


@lru_cache(maxsize=512)
def _omega_mod(p: int, m: int, n: int) -> Tuple[int, ...]:
    q = p ** n
    return tuple(c % q for c in _omega_coeffs(p, m))


@lru_cache(maxsize=512)
def _phi_mod(p: int, m: int, n: int) -> Tuple[int, ...]:
    q = p ** n
    return tuple(c % q for c in _phi_coeffs(p, m))


def _canonical(coeffs: Sequence[int], p: int, n: int, m: int) -> Tuple[int, ...]:
    q = p ** n
    size = p ** m
    if len(coeffs) > size:
        coeffs = poly_mod(coeffs, _omega_mod(p, m, n), q)
    out = [int(c) % q for c in coeffs]
    out.extend([0] * (size - len(out)))
    return tuple(out)


@dataclass(frozen=True)
class IwasawaElem:
    coeffs: Tuple[int, ...]
    p: int
    n: int
    m: int

    def __post_init__(self):
        if self.m < 0 or self.n < 1:
            raise ContractViolation("BAD_LEVEL", f"invalid level m={self.m} or precision n={self.n}")
        object.__setattr__(self, "coeffs", _canonical(self.coeffs, self.p, self.n, self.m))

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, p: int, n: int, m: int) -> "IwasawaElem":
        return cls((), p, n, m)

    @classmethod
    def constant(cls, c: int, p: int, n: int, m: int) -> "IwasawaElem":
        return cls((c,), p, n, m)

    @classmethod
    def one(cls, p: int, n: int, m: int) -> "IwasawaElem":
        return cls((1,), p, n, m)

    @classmethod
    def X(cls, p: int, n: int, m: int) -> "IwasawaElem":
        return cls((0, 1), p, n, m)

    @classmethod
    def gamma_power(cls, k: int, p: int, n: int, m: int) -> "IwasawaElem":
        """gamma^k = (1+X)^k with k taken mod p^m."""
        k %= p ** m
        return cls(tuple(math.comb(k, i) for i in range(k + 1)), p, n, m)

    @classmethod
    def from_gamma(cls, d: Sequence[int], p: int, n: int, m: int) -> "IwasawaElem":
        """Element sum d_k gamma^k given in the group-element basis."""
        size = p ** m
        folded = [0] * size
        for k, c in enumerate(d):
            folded[k % size] += int(c)
        return cls(tuple(from_gamma_basis(folded, p ** n)), p, n, m)

    # -- views ---------------------------------------------------------

    @property
    def size(self) -> int:
        return self.p ** self.m

    @property
    def modulus(self) -> int:
        return self.p ** self.n

    def array(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=object)

    def gamma_coeffs(self) -> Tuple[int, ...]:
        """Coefficients in the basis 1, gamma, ..., gamma^(p^m - 1)."""
        out = [int(c) for c in to_gamma_basis(self.coeffs, self.modulus)]
        out.extend([0] * (self.size - len(out)))
        return tuple(out[: self.size])

    def constant_term(self) -> PAdicScalar:
        return PAdicScalar(self.coeffs[0], self.p, self.n)

    def degree(self) -> int:
        for k in range(self.size - 1, -1, -1):
            if self.coeffs[k]:
                return k
        return -1

    def same_ring(self, other: "IwasawaElem") -> bool:
        return (self.p, self.n, self.m) == (other.p, other.n, other.m)

    def _make(self, coeffs) -> "IwasawaElem":
        return IwasawaElem(tuple(int(c) for c in coeffs), self.p, self.n, self.m)

    def _check(self, other: "IwasawaElem") -> None:
        if not self.same_ring(other):
            raise ContractViolation(
                "RING_MISMATCH",
                f"Lambda_{{{self.m},{self.n}}} vs Lambda_{{{other.m},{other.n}}} (p={self.p}/{other.p})",
            )

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = IwasawaElem.constant(other, self.p, self.n, self.m)
        if not isinstance(other, IwasawaElem):
            return NotImplemented
        self._check(other)
        return self._make(poly_add(self.coeffs, other.coeffs, self.modulus))

    __radd__ = __add__

    def __neg__(self):
        return self._make([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            other = IwasawaElem.constant(other, self.p, self.n, self.m)
        if not isinstance(other, IwasawaElem):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, PAdicScalar):
            if other.p != self.p:
                raise ContractViolation("RING_MISMATCH", "scalar from another prime")
            other = other.value
        if isinstance(other, int):
            return self._make([c * other for c in self.coeffs])
        if not isinstance(other, IwasawaElem):
            return NotImplemented
        self._check(other)
        return self._make(poly_mul(self.coeffs, other.coeffs, self.modulus))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = IwasawaElem.one(self.p, self.n, self.m)
        base = self
        while k > 0:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_poly(self, poly: Sequence[int]) -> "IwasawaElem":
        """Multiply by an integer polynomial, reducing mod omega_m."""
        return self._make(poly_mul(self.coeffs, poly, self.modulus))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_unit(self) -> bool:
        """Units of the local ring are exactly elements with unit constant term."""
        return self.coeffs[0] % self.p != 0

    def inverse(self) -> "IwasawaElem":
        """
        Multiplicative inverse by Newton iteration v <- v + v(1 - x v).

        The error term squares each step and the maximal ideal (p, X) is
        nilpotent in Lambda_{m,n}, so the loop terminates.

        Raises:
            ContractViolation: x is not a unit
        """
        if not self.is_unit():
            raise ContractViolation("NOT_A_UNIT", "element of Lambda has non-unit constant term")
        one = IwasawaElem.one(self.p, self.n, self.m)
        v = IwasawaElem.constant(pow(self.coeffs[0], -1, self.modulus), self.p, self.n, self.m)
        for _ in range((self.n * self.size).bit_length() + 2):
            err = one - self * v
            if err.is_zero():
                return v
            v = v + v * err
        if self * v != one:
            raise ContractViolation("INVERSE_FAILED", "Newton iteration did not converge")
        return v

    def ord_pi(self):
        """Content valuation: min p-adic valuation of the coefficients (INF for 0)."""
        best = INF
        for c in self.coeffs:
            v = int_valuation(c, self.p, self.n)
            if v < best:
                best = v
        return best

    # -- change of ring --------------------------------------------------

    def at_precision(self, n: int) -> "IwasawaElem":
        """Same canonical representatives read in Lambda_{m,n'}."""
        return IwasawaElem(self.coeffs, self.p, n, self.m)

    def lift_to(self, m: int) -> "IwasawaElem":
        """The canonical representative viewed as a polynomial at a higher level."""
        if m < self.m:
            raise ContractViolation("BAD_LEVEL", "lift_to needs a level >= the current one")
        return IwasawaElem(self.coeffs, self.p, self.n, m)

    def project(self, level: int = None) -> "IwasawaElem":
        """Natural projection Lambda_{m,n} -> Lambda_{level,n} (default m-1)."""
        level = self.m - 1 if level is None else level
        if level < 0 or level > self.m:
            raise ContractViolation("BAD_LEVEL", f"cannot project level {self.m} to {level}")
        return IwasawaElem(self.coeffs, self.p, self.n, level)

    def norm(self) -> "IwasawaElem":
        """xi_{m+1}: multiply a lift by Phi_{m+1} into Lambda_{m+1,n}."""
        target = self.m + 1
        coeffs = poly_mul(self.coeffs, _phi_mod(self.p, target, self.n), self.modulus)
        return IwasawaElem(tuple(int(c) for c in coeffs), self.p, self.n, target)

    def involute(self) -> "IwasawaElem":
        """gamma -> gamma^(-1), computed in the group-element basis."""
        d = self.gamma_coeffs()
        size = self.size
        flipped = [d[(-k) % size] for k in range(size)]
        return IwasawaElem.from_gamma(flipped, self.p, self.n, self.m)

    def eval_char(self, j: int) -> "CharValue":
        """Image in (Z/p^n)[X]/(Phi_j) (j >= 1), or Z/p^n via X -> 0 (j = 0)."""
        if j < 0 or j > self.m:
            raise ContractViolation("BAD_LEVEL", f"character level {j} outside 0..{self.m}")
        divisor = (0, 1) if j == 0 else _phi_mod(self.p, j, self.n)
        return CharValue(poly_mod(self.coeffs, divisor, self.modulus), self.p, self.n, j)

    def pretty(self) -> str:
        return StructPoly("element", self.p, self.m, self.coeffs).pretty()


@dataclass(frozen=True)
class CharValue:
    """Element of the character quotient at level j."""

    coeffs: Tuple[int, ...]
    p: int
    n: int
    j: int

    def _divisor(self) -> Tuple[int, ...]:
        return (0, 1) if self.j == 0 else _phi_mod(self.p, self.j, self.n)

    def __mul__(self, other: "CharValue") -> "CharValue":
        if (self.p, self.n, self.j) != (other.p, other.n, other.j):
            raise ContractViolation("RING_MISMATCH", "character values at different levels")
        q = self.p ** self.n
        return CharValue(poly_mod(poly_mul(self.coeffs, other.coeffs, q), self._divisor(), q), self.p, self.n, self.j)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_one(self) -> bool:
        return bool(self.coeffs) and self.coeffs[0] % self.p ** self.n == 1 and not any(self.coeffs[1:])

    def multiplicative_order(self, limit: int) -> int:
        """Smallest k in 1..limit with self^k = 1, or 0 if none."""
        acc = self
        for k in range(1, limit + 1):
            if acc.is_one():
                return k
            acc = acc * self
        return 0
