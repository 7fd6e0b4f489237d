# -*- coding: utf-8 -*-
"""
Tests for arith.scalars module - p-adic, quadratic and scaled scalars
"""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sharpflat.arith.scalars import (
    INF,
    PAdicScalar,
    QuadScalar,
    ScaledScalar,
    int_valuation,
    quad_roots,
    scaled_add,
    scaled_mul,
)
from sharpflat.core.errors import ContractViolation, PrecisionExhausted


class TestValuation:
    def test_int_valuation(self):
        assert int_valuation(18, 3, 5) == 2
        assert int_valuation(7, 3, 5) == 0
        assert int_valuation(0, 3, 5) is INF
        assert int_valuation(3 ** 5, 3, 5) is INF

    def test_infinity_ordering(self):
        assert INF > 10 ** 9
        assert not INF < 0
        assert min(INF, 4) == 4
        assert INF + 3 is INF


class TestPAdicScalar:
    def test_reduction_and_arithmetic(self):
        x = PAdicScalar(-1, 3, 2)
        assert x.value == 8
        assert (x + 2).value == 1
        assert (x * x).value == 1
        assert x.signed() == -1

    def test_inverse(self):
        x = PAdicScalar(2, 5, 3)
        assert (x * x.inverse()).value == 1
        with pytest.raises(ContractViolation) as info:
            PAdicScalar(10, 5, 3).inverse()
        assert info.value.code == "NOT_A_UNIT"

    def test_mixed_rings_rejected(self):
        with pytest.raises(ContractViolation):
            PAdicScalar(1, 3, 2) + PAdicScalar(1, 3, 3)

    @given(st.integers(), st.integers())
    def test_valuation_of_product(self, a, b):
        x, y = PAdicScalar(a, 3, 6), PAdicScalar(b, 3, 6)
        vx, vy = x.valuation(), y.valuation()
        if vx is INF or vy is INF or vx + vy >= 6:
            assert (x * y).valuation() is INF
        else:
            assert (x * y).valuation() == vx + vy


class TestQuadScalar:
    """Z/p^N[alpha] with alpha^2 = ap*alpha - p"""

    @pytest.mark.parametrize("p,ap", [(3, 0), (3, 3), (5, 10), (7, 0)])
    def test_roots_satisfy_hecke_polynomial(self, p, ap):
        alpha, beta = quad_roots(PAdicScalar(ap, p, 4))
        assert alpha + beta == QuadScalar(ap, 0, ap, p, 4)
        assert alpha * beta == QuadScalar(p, 0, ap, p, 4)
        assert (alpha * alpha - alpha * ap + p).is_zero()
        assert alpha.conj() == beta

    def test_ordinary_rejected(self):
        with pytest.raises(ContractViolation) as info:
            quad_roots(PAdicScalar(1, 3, 4))
        assert info.value.code == "ORDINARY_AP"

    @pytest.mark.parametrize("ap", [0, 3, 6])
    def test_pi_squared_is_p_times_unit(self, ap):
        alpha, _ = quad_roots(PAdicScalar(ap, 3, 5))
        pi = alpha.pi_e()
        assert pi * pi == QuadScalar(3 * alpha.w(), 0, ap, 3, 5)
        assert alpha.w() % 3 != 0

    def test_divide_by_pi_loses_top_digit(self):
        x = QuadScalar(2, 1, 3, 3, 4)
        y = (x * x.pi_e()).divide_by_pi()
        assert y.reduce(3) == x.reduce(3)

    def test_half_valuation(self):
        alpha, _ = quad_roots(PAdicScalar(0, 3, 4))
        assert alpha.pi_e().half_valuation() == 1
        assert QuadScalar(3, 0, 0, 3, 4).half_valuation() == 2
        assert QuadScalar(0, 0, 0, 3, 4).half_valuation() is INF

    def test_inverse(self):
        x = QuadScalar(2, 5, 3, 3, 4)
        assert x * x.inverse() == x.one()
        with pytest.raises(ContractViolation):
            QuadScalar(3, 1, 3, 3, 4).inverse()


class TestScaledScalar:
    """body / pi_E^d with tracked precision"""

    def test_rational_normalization(self):
        s = ScaledScalar.make(PAdicScalar(9, 3, 4), 2)
        assert s.body.value == 3
        assert s.denom_exp == 0
        assert s.prec == 3

    def test_odd_rational_exponent_rejected(self):
        with pytest.raises(ContractViolation) as info:
            ScaledScalar.make(PAdicScalar(1, 3, 4), 1)
        assert info.value.code == "ODD_RATIONAL_DENOMINATOR"

    def test_inverse_p_times_p(self):
        s = scaled_mul(ScaledScalar.inverse_p(3, 4), ScaledScalar.make(PAdicScalar(3, 3, 4)))
        assert s.body.value == 1
        assert s.denom_exp == 0
        assert s.prec == 3

    def test_inverse_pi_times_pi(self):
        alpha, _ = quad_roots(PAdicScalar(3, 3, 4))
        s = scaled_mul(ScaledScalar.inverse_pi(alpha), ScaledScalar.make(alpha.pi_e()))
        assert s.denom_exp == 0
        assert s.body.reduce(3) == alpha.one().reduce(3)

    def test_rational_and_quadratic_denominators_agree(self):
        alpha, _ = quad_roots(PAdicScalar(3, 3, 5))
        w = alpha.w()
        one_over_p = ScaledScalar.inverse_p(3, 5)
        minus_w_over_pi2 = ScaledScalar.make(alpha._make(-w, 0), 2)
        assert scaled_add(one_over_p, minus_w_over_pi2).body.is_zero()

    def test_exhausted_input_raises(self):
        dead = ScaledScalar.make(PAdicScalar(1, 3, 2), 4)
        assert dead.exhausted
        with pytest.raises(PrecisionExhausted) as info:
            scaled_mul(dead, ScaledScalar.make(PAdicScalar(1, 3, 2)))
        assert info.value.exit_code == 4
