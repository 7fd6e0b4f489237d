# SPDX-License-Identifier: MIT
# -*- coding: utf-8 -*-
"""
n-admissible primes relative to a newform and an imaginary quadratic K.

A prime l is n-admissible when
  (i)   l does not divide p*N0
  (ii)  l is inert in K, i.e. (D_K | l) = -1
  (iii) p does not divide l^2 - 1
  (iv)  p^n divides l + 1 + eps*a_l for some eps in {+1, -1}
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Dict, List, Optional, Tuple

from sympy import factorint, isprime, primerange

from sharpflat.admissible.tables import EigenTable, kronecker
from sharpflat.core import log
from sharpflat.core.errors import ContractViolation, SchemaError
from sharpflat.core.jobs import ordered_map

CONDITIONS = ("i", "ii", "iii", "iv")


@dataclass(frozen=True)
class AdmissibleReport:
    ell: int
    a_ell: int
    p: int
    n: int
    checks: Dict[str, bool] = field(default_factory=dict)
    epsilons: Tuple[int, ...] = ()

    @property
    def admissible(self) -> bool:
        return all(self.checks.get(c, False) for c in CONDITIONS)

    def to_dict(self) -> Dict:
        return {
            "ell": str(self.ell),
            "a_ell": str(self.a_ell),
            "p": str(self.p),
            "n": str(self.n),
            "checks": {c: self.checks[c] for c in CONDITIONS},
            "epsilons": [str(e) for e in self.epsilons],
            "admissible": self.admissible,
        }


def _squarefree(k: int) -> bool:
    return all(e == 1 for e in factorint(abs(k)).values())


def is_fundamental(DK: int) -> bool:
    """D = 1 mod 4 squarefree, or D = 4d with d = 2, 3 mod 4 squarefree."""
    if DK % 4 == 1:
        return _squarefree(DK)
    if DK % 4 == 0:
        d = DK // 4
        return d % 4 in (2, 3) and _squarefree(d)
    return False


def check_discriminant(DK: int, p: int, N0: int) -> None:
    """
    Raises:
        SchemaError: BAD_DISCRIMINANT unless D_K is a negative fundamental
            discriminant prime to p*N0
    """
    if DK >= 0:
        raise SchemaError("BAD_DISCRIMINANT", f"D_K = {DK} must be negative")
    if not is_fundamental(DK):
        raise SchemaError("BAD_DISCRIMINANT", f"D_K = {DK} is not a fundamental discriminant")
    if gcd(DK, p * N0) != 1:
        raise SchemaError("BAD_DISCRIMINANT", f"gcd(D_K, p*N0) = {gcd(DK, p * N0)} != 1")


def _epsilons(ell: int, a: int, q: int) -> Tuple[int, ...]:
    return tuple(e for e in (1, -1) if (ell + 1 + e * a) % q == 0)


def is_admissible(ell: int, a_ell: int, p: int, n: int, N0: int, DK: int) -> AdmissibleReport:
    """
    Evaluate conditions i-iv; every condition is reported, not only the
    first failure.

    Raises:
        SchemaError: l not prime, or D_K rejected by check_discriminant
    """
    if not isprime(ell):
        raise SchemaError("NOT_PRIME", f"{ell} is not prime")
    check_discriminant(DK, p, N0)
    eps = _epsilons(ell, a_ell, p ** n)
    checks = {
        "i": (p * N0) % ell != 0,
        "ii": kronecker(DK, ell) == -1,
        "iii": (ell * ell - 1) % p != 0,
        "iv": bool(eps),
    }
    return AdmissibleReport(ell, a_ell, p, n, checks, eps)


def scan(table: EigenTable, p: int, n: int, DK: int, bound: int, workers: int = 1) -> List[AdmissibleReport]:
    """
    All n-admissible l <= bound, ascending.

    Raises:
        SchemaError: TABLE_GAP when the table misses a prime <= bound
            or BAD_DISCRIMINANT, raised before any prime is classified
    """
    check_discriminant(DK, p, table.N0)
    if bound < 2:
        return []
    missing = table.missing(bound)
    if missing:
        raise SchemaError(
            "TABLE_GAP",
            f"eigenvalue table misses {len(missing)} primes up to {bound}",
            meta={"missing": missing},
        )
    primes = list(primerange(2, bound + 1))
    reports = ordered_map(
        lambda ell: is_admissible(ell, table[ell], p, n, table.N0, DK),
        primes,
        workers=workers,
        name="admissible",
    )
    found = [r for r in reports if r.admissible]
    log.info(f"scan up to {bound}: {len(found)} admissible primes for p={p}, n={n}, D_K={DK}")
    return found


@dataclass(frozen=True)
class FrobeniusEigs:
    epsilon: int
    pair: Tuple[int, int]
    hecke_roots: Tuple[int, int]
    over_k: Tuple[int, int]


def frobenius_eigs(report: AdmissibleReport, epsilon: Optional[int] = None) -> FrobeniusEigs:
    """
    Eigenvalues attached to an admissible l, all mod p^n.

    pair:        (eps, eps*l)
    hecke_roots: roots of x^2 - a_l x + l, namely (-eps, -eps*l)
    over_k:      Frobenius of the inert completion, (1, l^2)

    Raises:
        ContractViolation: l not admissible, eps not recorded or ambiguous,
            or the pair is not distinct mod p
    """
    if not report.admissible:
        raise ContractViolation("NOT_ADMISSIBLE", f"{report.ell} is not {report.n}-admissible")
    if epsilon is None:
        if len(report.epsilons) != 1:
            raise ContractViolation("AMBIGUOUS_EPSILON", "both signs are admissible; pass epsilon")
        epsilon = report.epsilons[0]
    if epsilon not in report.epsilons:
        raise ContractViolation("BAD_EPSILON", f"eps = {epsilon} not recorded for l = {report.ell}")
    q = report.p ** report.n
    ell = report.ell
    pair = (epsilon % q, (epsilon * ell) % q)
    if (pair[0] - pair[1]) % report.p == 0:
        raise ContractViolation("NOT_DISTINCT", f"Frobenius eigenvalues coincide mod {report.p}")
    return FrobeniusEigs(
        epsilon=epsilon,
        pair=pair,
        hecke_roots=((-epsilon) % q, (-epsilon * ell) % q),
        over_k=(1, (ell * ell) % q),
    )


@dataclass(frozen=True)
class AdmissibleSet:
    """
    A finite set of n-admissible primes with an asserted Selmer-vanishing
    flag. The flag is carried, never verified.
    """

    reports: Tuple[AdmissibleReport, ...]
    selmer_vanishing_asserted: bool = False
    label: str = ""

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(r.ell for r in self.reports)

    def validate(self) -> Tuple[bool, str]:
        if len(set(self.primes)) != len(self.primes):
            return False, "primes are not distinct"
        params = {(r.p, r.n) for r in self.reports}
        if len(params) > 1:
            return False, "reports use different (p, n)"
        bad = [r.ell for r in self.reports if not r.admissible]
        if bad:
            return False, f"not admissible: {bad}"
        return True, ""


@dataclass(frozen=True)
class RigidPair:
    """Two admissible primes with an asserted rigidity flag."""

    first: AdmissibleReport
    second: AdmissibleReport
    rigid_asserted: bool = False

    def validate(self) -> Tuple[bool, str]:
        return AdmissibleSet((self.first, self.second)).validate()
