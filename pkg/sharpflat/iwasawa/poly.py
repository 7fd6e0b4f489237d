# SPDX-License-Identifier: MIT
# -*- coding: utf-8 -*-
"""
Dense polynomial helpers over Z and Z/p^N, plus the structural polynomials
of the cyclotomic tower (omega_m, Phi_m and the signed products).

Coefficient vectors run from the constant term upwards. Arithmetic uses
numpy object arrays so residues never overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence, Tuple

import numpy as np

from sharpflat.core.errors import ContractViolation


STRUCT_KINDS = ("omega", "phi", "omega_plus", "omega_minus", "tilde_plus", "tilde_minus")

# Where the X factor of omega_m = X * tilde_plus * tilde_minus sits
CONVENTION_X_ON_OMEGA = "x_on_omega"
CONVENTION_X_ON_TILDE = "x_on_tilde"


def as_array(coeffs: Sequence[int]) -> np.ndarray:
    return np.array([int(c) for c in coeffs], dtype=object)


def trim(coeffs: Sequence[int]) -> Tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


_INT64_BUDGET = 1 << 62


def poly_mul(a: Sequence[int], b: Sequence[int], modulus: Optional[int] = None) -> np.ndarray:
    if len(a) == 0 or len(b) == 0:
        return np.zeros(0, dtype=object)
    if modulus is not None and modulus * modulus * min(len(a), len(b)) < _INT64_BUDGET:
        fast = np.convolve(
            np.array([int(c) % modulus for c in a], dtype=np.int64),
            np.array([int(c) % modulus for c in b], dtype=np.int64),
        )
        return (fast % modulus).astype(object)
    out = np.convolve(as_array(a), as_array(b))
    if modulus is not None:
        out = out % modulus
    return out


def poly_add(a: Sequence[int], b: Sequence[int], modulus: Optional[int] = None) -> np.ndarray:
    size = max(len(a), len(b))
    out = np.zeros(size, dtype=object)
    out[: len(a)] += as_array(a)
    out[: len(b)] += as_array(b)
    if modulus is not None:
        out = out % modulus
    return out


def poly_scale(a: Sequence[int], c: int, modulus: Optional[int] = None) -> np.ndarray:
    out = as_array(a) * int(c)
    if modulus is not None:
        out = out % modulus
    return out


@dataclass(frozen=True)
class DivisionResult:
    quotient: Tuple[int, ...]
    remainder: Tuple[int, ...]

    @property
    def exact(self) -> bool:
        return not any(self.remainder)


def monic_divide(f: Sequence[int], g: Sequence[int], modulus: Optional[int] = None) -> DivisionResult:
    """
    Division with remainder by a monic polynomial.

    f = q*g + r with deg r < deg g; unique because g is monic, so the
    division is exact over Z/p^N for every N.

    Raises:
        ContractViolation: g is not monic
    """
    g = trim(g if modulus is None else [int(c) % modulus for c in g])
    if not g or g[-1] != 1:
        raise ContractViolation("NOT_MONIC", "divisor must be monic")
    dg = len(g) - 1
    r = as_array(f)
    if modulus is not None:
        r = r % modulus
    if len(r) <= dg:
        padded = np.zeros(dg, dtype=object)
        padded[: len(r)] = r
        return DivisionResult((), tuple(int(c) for c in padded))
    q = np.zeros(len(r) - dg, dtype=object)
    garr = as_array(g)
    for i in range(len(r) - 1, dg - 1, -1):
        c = r[i]
        if c == 0:
            continue
        q[i - dg] = c
        r[i - dg : i + 1] -= c * garr
        if modulus is not None:
            r[i - dg : i + 1] %= modulus
    return DivisionResult(tuple(int(c) for c in q), tuple(int(c) for c in r[:dg]))


def poly_mod(f: Sequence[int], g: Sequence[int], modulus: Optional[int] = None) -> Tuple[int, ...]:
    return monic_divide(f, g, modulus).remainder


@dataclass(frozen=True)
class StructPoly:
    """A monic structural polynomial with exact integer coefficients."""

    kind: str
    p: int
    m: int
    coeffs: Tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def reduce(self, N: int) -> Tuple[int, ...]:
        q = self.p ** N
        return tuple(c % q for c in self.coeffs)

    def pretty(self) -> str:
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("X" if k == 1 else f"X^{k}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms) if terms else "0"


@lru_cache(maxsize=256)
def _omega_coeffs(p: int, m: int) -> Tuple[int, ...]:
    d = p ** m
    return (0,) + tuple(math.comb(d, k) for k in range(1, d + 1))


@lru_cache(maxsize=256)
def _phi_coeffs(p: int, m: int) -> Tuple[int, ...]:
    res = monic_divide(_omega_coeffs(p, m), _omega_coeffs(p, m - 1))
    if not res.exact:
        raise ContractViolation("PHI_NOT_EXACT", f"omega_{m} not divisible by omega_{m - 1}")
    return res.quotient


def omega(p: int, m: int) -> StructPoly:
    """(1+X)^(p^m) - 1."""
    if m < 0:
        raise ContractViolation("BAD_LEVEL", "level must be non-negative")
    return StructPoly("omega", p, m, _omega_coeffs(p, m))


def phi(p: int, m: int) -> StructPoly:
    """The p^m-th cyclotomic polynomial in 1+X, omega_m / omega_(m-1)."""
    if m < 1:
        raise ContractViolation("BAD_LEVEL", "phi needs m >= 1")
    return StructPoly("phi", p, m, _phi_coeffs(p, m))


@lru_cache(maxsize=256)
def _phi_product(p: int, m: int, parity: int) -> Tuple[int, ...]:
    out: Tuple[int, ...] = (1,)
    for j in range(1, m + 1):
        if j % 2 == parity:
            out = tuple(int(c) for c in poly_mul(out, _phi_coeffs(p, j)))
    return out


def omega_pm(p: int, m: int, sign: str, tilde: bool = True, convention: str = CONVENTION_X_ON_OMEGA) -> StructPoly:
    """
    Signed products over the cyclotomic levels 1..m.

    tilde_plus = prod of Phi_j over even j, tilde_minus over odd j, and
    omega_pm = X * tilde_pm. With convention x_on_tilde the X factor moves
    to the tilde kind instead.
    """
    if sign not in ("+", "-"):
        raise ContractViolation("BAD_SIGN", "sign must be '+' or '-'")
    if m < 0:
        raise ContractViolation("BAD_LEVEL", "level must be non-negative")
    if convention not in (CONVENTION_X_ON_OMEGA, CONVENTION_X_ON_TILDE):
        raise ContractViolation("BAD_CONVENTION", f"unknown convention {convention!r}")
    base = _phi_product(p, m, 0 if sign == "+" else 1)
    with_x = (tilde and convention == CONVENTION_X_ON_TILDE) or (
        not tilde and convention == CONVENTION_X_ON_OMEGA
    )
    coeffs = (0,) + base if with_x else base
    suffix = "plus" if sign == "+" else "minus"
    kind = f"tilde_{suffix}" if tilde else f"omega_{suffix}"
    return StructPoly(kind, p, m, coeffs)


def struct_poly(kind: str, p: int, m: int, convention: str = CONVENTION_X_ON_OMEGA) -> StructPoly:
    """Dispatch on the StructPoly kind name."""
    if kind == "omega":
        return omega(p, m)
    if kind == "phi":
        return phi(p, m)
    if kind in STRUCT_KINDS:
        prefix, suffix = kind.split("_")
        return omega_pm(p, m, "+" if suffix == "plus" else "-", prefix == "tilde", convention)
    raise ContractViolation("BAD_KIND", f"unknown structural polynomial {kind!r}")


def from_gamma_basis(d: Sequence[int], modulus: int) -> np.ndarray:
    """Coefficients in X of sum d_k (1+X)^k."""
    r = np.zeros(0, dtype=object)
    for c in reversed(as_array(d)):
        shifted = np.zeros(len(r) + 1, dtype=object)
        shifted[: len(r)] += r
        shifted[1:] += r
        shifted[0] += c
        r = shifted % modulus
    return r


def to_gamma_basis(c: Sequence[int], modulus: int) -> np.ndarray:
    """Coefficients in gamma = 1+X of sum c_k X^k = sum c_k (gamma - 1)^k."""
    r = np.zeros(0, dtype=object)
    for a in reversed(as_array(c)):
        shifted = np.zeros(len(r) + 1, dtype=object)
        shifted[1:] += r
        shifted[: len(r)] -= r
        shifted[0] += a
        r = shifted % modulus
    return r
