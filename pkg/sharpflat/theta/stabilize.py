# SPDX-License-Identifier: MIT
# -*- coding: utf-8 -*-
"""
p-stabilization of norm-compatible sequences.

For a root lambda of x^2 - ap*x + p,

    L^lambda_m = lambda^(-(m+1)) (L_m - lambda^(-1) norm L_(m-1))
               = N_m / lambda^(m+2),   N_m = lambda*L_m - norm L_(m-1).

Only the numerators N_m are stored; they are integral. At m = 0 the role
of norm L_(-1) is played by ap*L_0 - project(L_1), which keeps
project(N_(m+1)) = lambda * N_m valid from the bottom level up.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from sharpflat.arith.scalars import PAdicScalar, QuadScalar, ScaledScalar, quad_roots
from sharpflat.core import log
from sharpflat.core.errors import ContractViolation, PrecisionExhausted
from sharpflat.core.result import Result
from sharpflat.iwasawa.quad import QuadIwasawaElem
from sharpflat.sprung.factorize import decompose, in_kernel
from sharpflat.sprung.normseq import NormSeq


def _digits_lost(m: int) -> int:
    # lambda^(m+2) has p-adic valuation (m+2)/2
    return (m + 3) // 2


@dataclass(frozen=True)
class StabSeq:
    lam: QuadScalar
    numerators: Tuple[QuadIwasawaElem, ...]

    @property
    def horizon(self) -> int:
        return len(self.numerators) - 1

    def denom_exp(self, m: int) -> int:
        """Half-unit denominator exponent of term m: lambda^(m+2) divides p^(m+2)."""
        return 2 * (m + 2)

    def precision(self, m: int) -> int:
        return self.numerators[m].n - _digits_lost(m)

    def coefficient(self, m: int, k: int) -> ScaledScalar:
        """Coefficient k of L^lambda_m as a scaled scalar: conj(lambda)^(m+2) N / p^(m+2)."""
        num = self.numerators[m].coefficient(k)
        body = num * self.lam.conj() ** (m + 2)
        return ScaledScalar.make(body, self.denom_exp(m))


def pstabilize(seq: NormSeq, lam: QuadScalar) -> StabSeq:
    """
    Stabilize every term and check project(N_(m+1)) = lambda * N_m.

    Raises:
        ContractViolation: lam is not a root of x^2 - ap*x + p, M < 1, or
            PROJECTION_COMPAT when a level pair is incompatible (meta index)
        PrecisionExhausted: lambda^(M+2) eats the whole precision
    """
    M = seq.horizon
    if M < 1:
        raise ContractViolation("SHORT_SEQUENCE", "stabilization needs F_0 and F_1")
    p, n = seq.p, seq.n
    lam = lam.reduce(n)
    if (lam.ap - seq.ap) % p ** n or not (lam * lam - lam * seq.ap + p).is_zero():
        raise ContractViolation("NOT_A_ROOT", "lambda is not a root of the Hecke polynomial")
    if n - _digits_lost(M) <= 0:
        raise PrecisionExhausted.for_level(n, _digits_lost(M), f"pstabilize up to level {M}")
    numerators: List[QuadIwasawaElem] = []
    for m in range(M + 1):
        x, minus_y = seq.target(m)
        numerators.append(QuadIwasawaElem.from_rational(x, seq.ap) * lam + QuadIwasawaElem.from_rational(minus_y, seq.ap))
    stab = StabSeq(lam, tuple(numerators))
    compat = check_projection_compat(stab)
    if not compat.ok:
        raise ContractViolation(
            compat.error.code, compat.error.message, details=compat.error.details, meta=compat.error.meta
        )
    return stab


def stabilize_both(seq: NormSeq) -> Tuple[StabSeq, StabSeq]:
    alpha, beta = quad_roots(PAdicScalar(seq.ap, seq.p, seq.n))
    return pstabilize(seq, alpha), pstabilize(seq, beta)


def check_projection_compat(stab: StabSeq) -> Result:
    """project(N_(m+1)) = lambda * N_m, i.e. the stabilized family is projection-compatible."""
    for m in range(stab.horizon):
        defect = stab.numerators[m + 1].project() - stab.numerators[m] * stab.lam
        if not defect.is_zero():
            return Result.failure(
                "PROJECTION_COMPAT",
                f"stabilized terms {m + 1} -> {m} are not compatible",
                meta={"index": m, "positions": defect.nonzero_positions()},
            )
    return Result.success()


def _cleared_matrix(alpha: QuadScalar, beta: QuadScalar, m: int) -> Tuple[QuadScalar, ...]:
    """
    K = [[1, -1], [-beta, alpha]] with B^(m+1) Q0 diag(beta^(m+2), alpha^(m+2)) = p^(m+2) K,
    where Q0 = (alpha - beta) Q. The identity is checked, not assumed.
    """
    p = alpha.p
    ap = alpha.ap
    one = alpha.one()
    B = ((one * ap, one), (one * -p, one * 0))
    W = ((alpha, -beta), (one * -p, one * p))
    for _ in range(m + 1):
        W = (
            (B[0][0] * W[0][0] + B[0][1] * W[1][0], B[0][0] * W[0][1] + B[0][1] * W[1][1]),
            (B[1][0] * W[0][0] + B[1][1] * W[1][0], B[1][0] * W[0][1] + B[1][1] * W[1][1]),
        )
    ba, ab = beta ** (m + 2), alpha ** (m + 2)
    lhs = (W[0][0] * ba, W[0][1] * ab, W[1][0] * ba, W[1][1] * ab)
    K = (one, -one, -beta, alpha)
    scale = p ** (m + 2)
    if any(not (x - k * scale).is_zero() for x, k in zip(lhs, K)):
        raise ContractViolation("DIAGONALIZER", f"B^{m + 1} Q does not clear to K at level {m}")
    return K


def verify_stab_identity(
    seq: NormSeq, m: int, stabilized: Optional[Tuple[StabSeq, StabSeq]] = None
) -> Result:
    """
    B^(m+1) Q (L^alpha_m, L^beta_m) = (L_m, -norm L_(m-1)), with the
    lambda-powers multiplied through:

        K (N^alpha_m, N^beta_m) = (alpha - beta) (L_m, -norm L_(m-1)).

    `stabilized` defaults to pstabilize(seq) for both roots, in which case a
    projection defect of seq is returned as the failure. Pass a pair stored
    from an earlier sequence to check seq against it.
    """
    if stabilized is None:
        try:
            stabilized = stabilize_both(seq)
        except ContractViolation as e:
            if e.code != "PROJECTION_COMPAT":
                raise
            log.debug(f"stab identity: {e.message}")
            return Result.failure(e.code, e.message, meta=e.meta)
    sa, sb = stabilized
    alpha, beta = sa.lam, sb.lam
    k11, k12, k21, k22 = _cleared_matrix(alpha, beta, m)
    na, nb = sa.numerators[m], sb.numerators[m]
    x, minus_y = seq.target(m)
    pi_e = alpha - beta
    top = na * k11 + nb * k12 - QuadIwasawaElem.from_rational(x, seq.ap) * pi_e
    bottom = na * k21 + nb * k22 - QuadIwasawaElem.from_rational(minus_y, seq.ap) * pi_e
    if top.is_zero() and bottom.is_zero():
        return Result.success()
    log.debug(f"stab identity defect at m={m}")
    return Result.failure(
        "STAB_IDENTITY",
        f"stabilization identity fails at m={m}",
        meta={"index": m, "first": top.nonzero_positions(), "second": bottom.nonzero_positions()},
    )


def check_nonvanishing_transfer(seq: NormSeq) -> Result:
    """
    If some (L_m, -norm L_(m-1)) is nonzero mod p, the decomposition is
    nonzero mod (p, ker H_M).
    """
    any_nonzero = any(
        not (t.at_precision(1).is_zero()) for m in range(seq.horizon + 1) for t in seq.target(m)
    )
    if not any_nonzero:
        return Result.success({"premise": False})
    pair = decompose(seq).at_precision(1)
    if in_kernel(seq.ap, pair.as_pair()):
        return Result.failure(
            "NONVANISHING_TRANSFER",
            "sequence is nonzero mod p but both sharp and flat vanish mod (p, kernel)",
        )
    return Result.success({"premise": True})

