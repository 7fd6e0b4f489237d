# -*- coding: utf-8 -*-
"""
Tests for logmatrix module - finite-level logarithm matrices
"""

import pytest

from sharpflat.core.errors import ContractViolation, PrecisionExhausted
from sharpflat.iwasawa.ring import IwasawaElem
from sharpflat.logmatrix import (
    check_diagonalizer,
    convergence_defect,
    convergence_report,
    linear_combo_check,
    mat_M,
    mat_Q,
    reconstruct_check,
)
from sharpflat.sprung.factorize import decompose
from sharpflat.sprung.normseq import generate_seq
from sharpflat.theta.stabilize import stabilize_both


class TestMatM:
    def test_denominator_and_precision(self):
        M = mat_M(3, 1, 3, 6)
        assert M.denom_exp == 2
        assert M.effective_precision == 4
        assert M.N == 6

    def test_exhausted(self):
        with pytest.raises(PrecisionExhausted) as info:
            mat_M(0, 3, 3, 4)
        assert info.value.code == "PRECISION_EXHAUSTED"

    def test_target_precision_counts(self):
        with pytest.raises(PrecisionExhausted):
            mat_M(0, 1, 3, 5, n=3)
        assert mat_M(0, 1, 3, 6, n=3).effective_precision == 4

    def test_x_truncation(self):
        M = mat_M(3, 1, 3, 6, x_precision=1)
        for x in M.body.entries():
            assert not any(x.coeffs[1:])

    def test_cleared(self):
        M = mat_M(0, 1, 3, 6)
        assert M.cleared(3) == M.body * 3
        with pytest.raises(ContractViolation) as info:
            M.cleared(1)
        assert info.value.code == "DENOMINATOR"

    @pytest.mark.parametrize("ap,m", [(0, 0), (0, 1), (3, 1), (6, 2)])
    def test_reconstruct(self, ap, m):
        assert reconstruct_check(ap, m, 3, 7)


class TestConvergence:
    """p^(m+2)(M_(m+1) - M_m) vanishes mod omega_m"""

    @pytest.mark.parametrize("ap", [0, 3, 6])
    @pytest.mark.parametrize("m", [0, 1, 2])
    def test_defect_vanishes(self, ap, m):
        assert convergence_defect(ap, m, 3, 7).is_zero()
        assert convergence_report(ap, m, 3, 7).ok

    def test_p_five(self):
        assert convergence_report(5, 1, 5, 5).ok


class TestDiagonalizer:
    @pytest.mark.parametrize("ap", [0, 3, 6])
    @pytest.mark.parametrize("power", [1, 3])
    def test_diagonalizes_b(self, ap, power):
        assert check_diagonalizer(ap, 3, 6, power).ok

    def test_q_entries_have_pi_denominators(self):
        Q, Q_inv = mat_Q(3, 3, 6)
        assert all(x.denom_exp <= 1 for x in Q)
        assert Q_inv[0].denom_exp == 0
        assert not any(x.exhausted for x in Q + Q_inv)


class TestLinearCombination:
    """Q^(-1) M_m (sharp, flat) against the stabilized pair"""

    @pytest.mark.parametrize("ap", [0, 3])
    def test_matches_stabilization(self, random_elem, ap):
        sharp = IwasawaElem((1,), 3, 7, 2) + random_elem(3, 7, 2) * IwasawaElem.X(3, 7, 2)
        seq = generate_seq(sharp, random_elem(3, 7, 2), ap)
        alpha, beta = stabilize_both(seq)
        pair = decompose(seq)
        for m in range(3):
            assert linear_combo_check(pair.sharp, pair.flat, alpha, beta, m).ok

    def test_swapped_pair_is_rejected(self, random_elem):
        sharp = IwasawaElem((1,), 3, 7, 2) + random_elem(3, 7, 2) * IwasawaElem.X(3, 7, 2)
        seq = generate_seq(sharp, IwasawaElem.constant(0, 3, 7, 2), 0)
        alpha, beta = stabilize_both(seq)
        pair = decompose(seq)
        res = linear_combo_check(pair.flat, pair.sharp, alpha, beta, 0)
        assert not res.ok
        assert res.error.code == "LINEAR_COMBO"
