# SPDX-License-Identifier: MIT
# -*- coding: utf-8 -*-
"""
Sharp/flat factorization of norm-compatible sequences.

decompose() follows the inductive construction: with P_M = Phi_1 ... Phi_M,

    q_M = C'_1 ... C'_M (F~_M, -Phi_M F~_(M-1)) / P_M

is an exact polynomial quotient over Z/p^n (the divisor is monic) and
H_M q_M = (F_M, -norm F_(M-1)) in Lambda_{M,n}. The pair is unique up to
ker H_M, which is computed with the Howell form of the 2p^M x 2p^M
multiplication matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

import numpy as np

from sharpflat.core import log
from sharpflat.core.errors import ContractViolation
from sharpflat.core.result import Result
from sharpflat.iwasawa.poly import monic_divide, omega_pm, poly_add, poly_mul, poly_scale
from sharpflat.iwasawa.ring import IwasawaElem, _phi_mod
from sharpflat.linalg import howell
from sharpflat.sprung.matrices import ApLike, Mat2, Pair, ap_int, apply_H, h_matrix
from sharpflat.sprung.normseq import NormSeq, verify_norm_relation


@dataclass(frozen=True)
class SharpFlatPair:
    sharp: IwasawaElem
    flat: IwasawaElem
    ap: int
    kernel: howell.HowellForm

    @property
    def level(self) -> int:
        return self.sharp.m

    @property
    def kernel_length(self) -> int:
        return self.kernel.length

    def kernel_basis(self) -> List[Pair]:
        return [split_pair(row, self.sharp) for row in self.kernel.rows]

    def as_pair(self) -> Pair:
        return self.sharp, self.flat

    def project(self, level: int) -> "SharpFlatPair":
        s, f = self.sharp.project(level), self.flat.project(level)
        return SharpFlatPair(s, f, self.ap, kernel_H(self.ap, level, s.p, s.n))

    def at_precision(self, n: int) -> "SharpFlatPair":
        s, f = self.sharp.at_precision(n), self.flat.at_precision(n)
        return SharpFlatPair(s, f, self.ap, kernel_H(self.ap, s.m, s.p, n))


def split_pair(row, template: IwasawaElem) -> Pair:
    d = template.size
    return (
        IwasawaElem(tuple(row[:d]), template.p, template.n, template.m),
        IwasawaElem(tuple(row[d:]), template.p, template.n, template.m),
    )


def flatten_pair(v: Pair) -> Tuple[int, ...]:
    return tuple(v[0].coeffs) + tuple(v[1].coeffs)


def mult_matrix(h: IwasawaElem) -> np.ndarray:
    """Matrix of x -> h*x on Lambda_{m,n} in the monomial basis."""
    d = h.size
    out = np.zeros((d, d), dtype=object)
    X = IwasawaElem.X(h.p, h.n, h.m)
    col = h
    for k in range(d):
        out[:, k] = col.coeffs
        col = col * X
    return out


def h_operator(ap: ApLike, m: int, p: int, n: int) -> np.ndarray:
    """H_m as a 2p^m x 2p^m matrix over Z/p^n."""
    H = h_matrix(ap, m, p, n)
    return np.block([[mult_matrix(H.a), mult_matrix(H.b)], [mult_matrix(H.c), mult_matrix(H.d)]])


@lru_cache(maxsize=128)
def _kernel_cached(a: int, m: int, p: int, n: int) -> howell.HowellForm:
    return howell.kernel(h_operator(a, m, p, n), p, n)


@lru_cache(maxsize=128)
def _solver_cached(a: int, m: int, p: int, n: int) -> howell.Solve:
    return howell.solver(h_operator(a, m, p, n), p, n)


def kernel_H(ap: ApLike, m: int, p: int, n: int) -> howell.HowellForm:
    """Howell basis of ker H_m on Lambda_{m,n}^2 (coordinates: first slot, then second)."""
    return _kernel_cached(ap_int(ap) % p ** n, m, p, n)


def kernel_length(ap: ApLike, m: int, p: int, n: int) -> int:
    return kernel_H(ap, m, p, n).length


def in_kernel(ap: ApLike, v: Pair) -> bool:
    x, y = apply_H(ap, v[0].m, v)
    return x.is_zero() and y.is_zero()


def equal_mod_kernel(ap: ApLike, v: Pair, w: Pair) -> bool:
    return in_kernel(ap, (v[0] - w[0], v[1] - w[1]))


def decompose(seq: NormSeq) -> SharpFlatPair:
    """
    Level-M representative of (F_sharp, F_flat) with its kernel.

    Raises:
        ContractViolation: horizon below 1, norm relation broken, or the
            exact-division assertion failed
    """
    M = seq.horizon
    if M < 1:
        raise ContractViolation("SHORT_SEQUENCE", "decompose needs a horizon M >= 1")
    res = verify_norm_relation(seq)
    if not res.ok:
        raise ContractViolation("NORM_RELATION", res.error.message, meta=res.error.meta)

    p, n, a = seq.p, seq.n, seq.ap
    q = p ** n
    F = seq.terms
    x = np.array(F[M].coeffs, dtype=object)
    y = poly_scale(poly_mul(F[M - 1].coeffs, _phi_mod(p, M, n), q), -1, q)
    divisor: Tuple[int, ...] = (1,)
    for j in range(M, 0, -1):
        phi = _phi_mod(p, j, n)
        x, y = poly_scale(y, -1, q), poly_add(poly_mul(phi, x, q), poly_scale(y, a, q), q)
        divisor = tuple(int(c) for c in poly_mul(divisor, phi, q))

    halves = []
    for comp, label in ((x, "sharp"), (y, "flat")):
        div = monic_divide(comp, divisor, q)
        if not div.exact:
            raise ContractViolation(
                "DIVISIBILITY",
                f"{label} numerator not divisible by Phi_1...Phi_{M}",
                details="corrupted input or precision mismatch",
            )
        halves.append(IwasawaElem(div.quotient, p, n, M))

    sharp, flat = halves
    log.debug(f"decompose: p={p} n={n} M={M} ap={a}")
    return SharpFlatPair(sharp, flat, a, kernel_H(a, M, p, n))


def oracle_decompose(seq: NormSeq) -> SharpFlatPair:
    """
    Independent solve of H_M v = (F_M, -norm F_(M-1)) by Howell form.

    Raises:
        ContractViolation: the linear system has no solution
    """
    M = seq.horizon
    p, n = seq.p, seq.n
    target = seq.target(M)
    sol = _solver_cached(seq.ap, M, p, n)(flatten_pair(target))
    if sol is None:
        raise ContractViolation("NO_SOLUTION", f"H_{M} v = target has no solution")
    sharp, flat = split_pair(sol, target[0])
    return SharpFlatPair(sharp, flat, seq.ap, kernel_H(seq.ap, M, p, n))


def _positions(v: Pair) -> List[List[int]]:
    return [[k for k, c in enumerate(x.coeffs) if c] for x in v]


def congruence_check(seq: NormSeq, n: int) -> Result:
    """Decompose-then-reduce against reduce-then-decompose, mod (p^n, ker H_M)."""
    if n > seq.n:
        raise ContractViolation("BAD_PRECISION", f"target precision {n} above sequence precision {seq.n}")
    high = decompose(seq).at_precision(n)
    low = decompose(seq.at_precision(n))
    diff = (high.sharp - low.sharp, high.flat - low.flat)
    if in_kernel(seq.ap, diff):
        return Result.success({"kernel_length": low.kernel_length})
    return Result.failure(
        "CONGRUENCE_MISMATCH",
        f"decompositions differ mod (p^{n}, kernel)",
        meta={"positions": _positions(diff)},
    )


def paired_congruence_check(seq_a: NormSeq, seq_b: NormSeq, n: int) -> Result:
    """
    Two sequences whose eigenvalues and terms agree mod p^n must have
    decompositions that agree mod (p^n, ker H_M).
    """
    if seq_a.horizon != seq_b.horizon:
        raise ContractViolation("HORIZON_MISMATCH", "paired sequences need the same horizon")
    q = seq_a.p ** n
    if (seq_a.ap - seq_b.ap) % q:
        raise ContractViolation("AP_MISMATCH", f"eigenvalues differ mod p^{n}")
    for m, (x, y) in enumerate(zip(seq_a.terms, seq_b.terms)):
        if x.at_precision(n) != y.at_precision(n):
            raise ContractViolation("TERM_MISMATCH", f"terms differ mod p^{n} at level {m}")
    one = decompose(seq_a).at_precision(n)
    two = decompose(seq_b).at_precision(n)
    diff = (one.sharp - two.sharp, one.flat - two.flat)
    if in_kernel(seq_a.ap % q, diff):
        return Result.success()
    return Result.failure(
        "CONGRUENCE_MISMATCH",
        "paired decompositions differ mod kernel",
        meta={"positions": _positions(diff)},
    )


def horizon_check(seq: NormSeq) -> Result:
    """Decompose at M, project to M-1, compare with decompose at M-1 mod ker H_(M-1)."""
    M = seq.horizon
    if M < 2:
        raise ContractViolation("SHORT_SEQUENCE", "horizon check needs M >= 2")
    top = decompose(seq).project(M - 1)
    below = decompose(seq.truncate(M - 1))
    diff = (top.sharp - below.sharp, top.flat - below.flat)
    if in_kernel(seq.ap, diff):
        return Result.success()
    return Result.failure(
        "HORIZON_MISMATCH",
        f"level-{M} decomposition does not project to the level-{M - 1} class",
        meta={"positions": _positions(diff)},
    )


def diagonal_law(m: int, p: int, n: int) -> Tuple[Mat2, Mat2]:
    """
    For ap = 0 and even m: (C_m ... C_1, (-1)^(m/2) diag(tilde_minus, tilde_plus)).
    The two matrices are equal.
    """
    if m % 2:
        raise ContractViolation("BAD_LEVEL", "the diagonal law holds at even m")
    sign = -1 if (m // 2) % 2 else 1
    minus = IwasawaElem(omega_pm(p, m, "-").reduce(n), p, n, m) * sign
    plus = IwasawaElem(omega_pm(p, m, "+").reduce(n), p, n, m) * sign
    return h_matrix(0, m, p, n), Mat2.diag(minus, plus)
