# SPDX-License-Identifier: MIT
# -*- coding: utf-8 -*-
"""
Finite-level logarithm matrices.

M_m = B^(-m-1) C_m ... C_1 = p^(-(m+1)) adj(B)^(m+1) C_m ... C_1, stored as
an integral body with a p-denominator exponent. The body entries have
degree < p^m, so no reduction mod omega_m is involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from sharpflat.arith.scalars import PAdicScalar, QuadScalar, ScaledScalar, quad_roots, scaled_mul
from sharpflat.core import log
from sharpflat.core.errors import ContractViolation, PrecisionExhausted
from sharpflat.core.result import Result
from sharpflat.iwasawa.quad import QuadIwasawaElem
from sharpflat.iwasawa.ring import IwasawaElem
from sharpflat.sprung.matrices import ApLike, Mat2, adjugate_B, ap_int, apply_H, h_matrix, mat_B
from sharpflat.theta.stabilize import StabSeq


@dataclass(frozen=True)
class ScaledMat2:
    """p^(-denom_exp) * body."""

    body: Mat2
    denom_exp: int

    @property
    def N(self) -> int:
        return self.body.a.n

    @property
    def effective_precision(self) -> int:
        return self.N - self.denom_exp

    def det_numerator(self) -> IwasawaElem:
        """det(body); det of the scaled matrix is this over p^(2*denom_exp)."""
        return self.body.det()

    def cleared(self, k: int) -> Mat2:
        """p^k times the matrix, for k >= denom_exp."""
        if k < self.denom_exp:
            raise ContractViolation("DENOMINATOR", f"p^{k} does not clear p^{self.denom_exp}")
        return self.body * self.body.a.p ** (k - self.denom_exp)


def _truncate_x(x: IwasawaElem, D: int) -> IwasawaElem:
    return IwasawaElem(x.coeffs[:D], x.p, x.n, x.m)


def mat_M(ap: ApLike, m: int, p: int, N: int, n: int = 0, x_precision: int = 0) -> ScaledMat2:
    """
    Args:
        ap: Hecke eigenvalue at p (divisible by p)
        m: level
        N: working precision of the body
        n: target precision; N - (m+1) must exceed it
        x_precision: truncate entries mod X^D when D > 0

    Raises:
        PrecisionExhausted: N - (m+1) <= n
    """
    e = m + 1
    if N - e <= n:
        raise PrecisionExhausted.for_level(N, e + n, f"mat_M at level {m}")
    adj = adjugate_B(ap, p, N, m)
    body = adj ** e * h_matrix(ap, m, p, N)
    if x_precision > 0:
        body = Mat2(*(_truncate_x(x, x_precision) for x in body.entries()))
    return ScaledMat2(body, e)


def convergence_defect(ap: ApLike, m: int, p: int, N: int) -> Mat2:
    """
    p^(m+2) (M_(m+1) - M_m) reduced mod omega_m; identically zero because
    C_(m+1) = B mod omega_m.
    """
    upper = mat_M(ap, m + 1, p, N).body.project(m)
    lower = mat_M(ap, m, p, N).body
    return upper - lower * p


def convergence_report(ap: ApLike, m: int, p: int, N: int) -> Result:
    defect = convergence_defect(ap, m, p, N)
    if defect.is_zero():
        return Result.success()
    positions = [[k for k, c in enumerate(x.coeffs) if c] for x in defect.entries()]
    log.warning(f"logmatrix convergence defect at m={m}, p={p}, ap={ap_int(ap)}")
    return Result.failure(
        "CONVERGENCE_DEFECT",
        f"p^{m + 2}(M_{m + 1} - M_{m}) is nonzero mod omega_{m}",
        meta={"level": m, "positions": positions},
    )


def reconstruct_check(ap: ApLike, m: int, p: int, N: int) -> bool:
    """B^(m+1) times the body of M_m equals p^(m+1) C_m ... C_1."""
    M = mat_M(ap, m, p, N)
    B = mat_B(ap, p, N, m)
    return B ** (m + 1) * M.body == h_matrix(ap, m, p, N) * p ** (m + 1)


QuadMat = Tuple[ScaledScalar, ScaledScalar, ScaledScalar, ScaledScalar]


def mat_Q(ap: ApLike, p: int, N: int) -> Tuple[QuadMat, QuadMat]:
    """
    Q = (alpha - beta)^(-1) [[alpha, -beta], [-p, p]] and
    Q^(-1) = [[1, beta/p], [1, alpha/p]] as scaled quadratic scalars.
    """
    alpha, beta = quad_roots(PAdicScalar(ap_int(ap), p, N))
    one = alpha.one()
    inv_pi = ScaledScalar.inverse_pi(alpha)
    inv_p = ScaledScalar.inverse_p(p, N)

    def over_pi(x: QuadScalar) -> ScaledScalar:
        return scaled_mul(ScaledScalar.make(x), inv_pi)

    Q = (over_pi(alpha), over_pi(-beta), over_pi(one * -p), over_pi(one * p))
    Q_inv = (
        ScaledScalar.make(one),
        scaled_mul(ScaledScalar.make(beta), inv_p),
        ScaledScalar.make(one),
        scaled_mul(ScaledScalar.make(alpha), inv_p),
    )
    return Q, Q_inv


def _mul_quad(A: Tuple[QuadScalar, ...], B: Tuple[QuadScalar, ...]) -> Tuple[QuadScalar, ...]:
    a, b, c, d = A
    e, f, g, h = B
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def check_diagonalizer(ap: ApLike, p: int, N: int, power: int = 1) -> Result:
    """
    B^k Q0 = Q0 diag(alpha^k, beta^k) exactly (Q0 = (alpha - beta) Q), and
    Q Q^(-1) = Id with denominators cleared: Q0 (p Q^(-1)) = p (alpha - beta) Id.
    """
    alpha, beta = quad_roots(PAdicScalar(ap_int(ap), p, N))
    one = alpha.one()
    a = one * ap_int(ap)
    B = (a, one, one * -p, one * 0)
    Q0 = (alpha, -beta, one * -p, one * p)
    lhs = Q0
    for _ in range(power):
        lhs = _mul_quad(B, lhs)
    ak, bk = alpha ** power, beta ** power
    rhs = (Q0[0] * ak, Q0[1] * bk, Q0[2] * ak, Q0[3] * bk)
    if any(not (x - y).is_zero() for x, y in zip(lhs, rhs)):
        return Result.failure("DIAGONALIZER", f"B^{power} Q differs from Q diag(alpha, beta)^{power}")

    p_q_inv = (one * p, beta, one * p, alpha)
    scale = alpha.pi_e() * p
    zero = one * 0
    prod = _mul_quad(Q0, p_q_inv)
    if any(not (x - y).is_zero() for x, y in zip(prod, (scale, zero, zero, scale))):
        return Result.failure("DIAGONALIZER", "Q Q^(-1) is not the identity")
    return Result.success()


def linear_combo_check(
    sharp: IwasawaElem, flat: IwasawaElem, stab_alpha: StabSeq, stab_beta: StabSeq, m: int
) -> Result:
    """
    Q^(-1) M_m (sharp, flat) = (L^alpha_m, L^beta_m) at level m.

    With c = adj(B)^(m+1) H_m (sharp, flat), i.e. the body of M_m applied,
    clearing p^(m+2) gives the integral identities

        p c_1 + beta c_2  = beta^(m+2)  N^alpha_m
        p c_1 + alpha c_2 = alpha^(m+2) N^beta_m
    """
    p, n = sharp.p, sharp.n
    s, f = sharp.project(m), flat.project(m)
    ap = stab_alpha.numerators[0].ap
    alpha, beta = stab_alpha.lam, stab_beta.lam
    c1, c2 = apply_H(ap, m, (s, f))
    adj = adjugate_B(ap, p, n, m)
    for _ in range(m + 1):
        c1, c2 = adj.apply((c1, c2))
    q1 = QuadIwasawaElem.from_rational(c1 * p, ap)
    q2 = QuadIwasawaElem.from_rational(c2, ap)
    first = q1 + q2 * beta - stab_alpha.numerators[m] * beta ** (m + 2)
    second = q1 + q2 * alpha - stab_beta.numerators[m] * alpha ** (m + 2)
    if first.is_zero() and second.is_zero():
        return Result.success({"level": m})
    return Result.failure(
        "LINEAR_COMBO",
        f"Q^-1 M_{m} (sharp, flat) differs from the stabilized pair",
        meta={"level": m, "alpha": first.nonzero_positions(), "beta": second.nonzero_positions()},
    )
