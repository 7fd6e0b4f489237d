# SPDX-License-Identifier: MIT
# -*- coding: utf-8 -*-
"""
Hecke eigenvalue tables a_l for a weight-two newform.

Tables are either ingested (JSON) or built by naive point counting on a
Weierstrass model [a1, a2, a3, a4, a6]. The Weil bound is enforced at
ingest.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Sequence

import numpy as np
from sympy import isprime, jacobi_symbol, primerange

from sharpflat.core import log
from sharpflat.core.errors import SchemaError
from sharpflat.core.jobs import ordered_map

CURVE_11A1 = (0, -1, 1, -10, -20)


def kronecker(D: int, ell: int) -> int:
    """Kronecker symbol (D | ell) for a prime ell."""
    if ell == 2:
        if D % 2 == 0:
            return 0
        return 1 if D % 8 in (1, 7) else -1
    return int(jacobi_symbol(D % ell, ell))


def count_affine(coeffs: Sequence[int], ell: int) -> int:
    """Number of affine solutions of y^2 + a1xy + a3y = x^3 + a2x^2 + a4x + a6 over F_ell."""
    a1, a2, a3, a4, a6 = (int(c) % ell for c in coeffs)
    x = np.arange(ell, dtype=np.int64)[:, None]
    y = np.arange(ell, dtype=np.int64)[None, :]
    lhs = (y * y + a1 * x * y + a3 * y) % ell
    rhs = (((x * x) % ell) * x + a2 * x * x + a4 * x + a6) % ell
    return int(np.count_nonzero(lhs == rhs))


def count_ap(coeffs: Sequence[int], ell: int) -> int:
    """a_l = l + 1 - #E(F_l); also correct at primes of multiplicative or additive reduction."""
    if not isprime(ell):
        raise SchemaError("NOT_PRIME", f"{ell} is not prime")
    return ell - count_affine(coeffs, ell)


def _weil_ok(ell: int, a: int, bad: bool) -> bool:
    if bad:
        return abs(a) <= 1
    return a * a <= 4 * ell


@dataclass(frozen=True)
class EigenTable:
    N0: int
    entries: Dict[int, int] = field(default_factory=dict)
    provenance: str = ""

    def __post_init__(self):
        clean: Dict[int, int] = {}
        for ell, a in self.entries.items():
            ell, a = int(ell), int(a)
            if not isprime(ell):
                raise SchemaError("NOT_PRIME", f"table key {ell} is not prime")
            if not _weil_ok(ell, a, self.N0 % ell == 0):
                raise SchemaError(
                    "WEIL_BOUND",
                    f"a_{ell} = {a} violates the Weil bound",
                    meta={"ell": ell, "a": a},
                )
            clean[ell] = a
        object.__setattr__(self, "entries", dict(sorted(clean.items())))

    def __contains__(self, ell: int) -> bool:
        return ell in self.entries

    def __getitem__(self, ell: int) -> int:
        return self.entries[ell]

    def missing(self, bound: int):
        return [ell for ell in primerange(2, bound + 1) if ell not in self.entries]

    def restrict(self, bound: int) -> "EigenTable":
        return EigenTable(self.N0, {ell: a for ell, a in self.entries.items() if ell <= bound}, self.provenance)


def eigen_table_from_curve(coeffs: Sequence[int], N0: int, bound: int, workers: int = 1) -> EigenTable:
    primes = list(primerange(2, bound + 1))
    values = ordered_map(lambda ell: count_ap(coeffs, ell), primes, workers=workers, name="count_ap")
    log.info(f"Counted points on {list(coeffs)} for {len(primes)} primes up to {bound}")
    return EigenTable(
        N0,
        dict(zip(primes, values)),
        provenance=f"point count on [{', '.join(str(c) for c in coeffs)}]",
    )
