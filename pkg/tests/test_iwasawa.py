# -*- coding: utf-8 -*-
"""
Tests for the iwasawa package - structural polynomials and Lambda_{m,n}
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sharpflat.core.errors import ContractViolation
from sharpflat.iwasawa.poly import (
    CONVENTION_X_ON_TILDE,
    from_gamma_basis,
    monic_divide,
    omega,
    phi,
    poly_mul,
    struct_poly,
    to_gamma_basis,
    trim,
)
from sharpflat.iwasawa.ring import IwasawaElem


def elems(p=3, n=2, m=1):
    q = p ** n
    return st.lists(st.integers(0, q - 1), min_size=p ** m, max_size=p ** m).map(
        lambda c: IwasawaElem(tuple(c), p, n, m)
    )


class TestStructPolys:
    """omega_m, Phi_m and the signed products"""

    def test_phi_level_one(self):
        assert phi(3, 1).coeffs == (3, 3, 1)
        assert phi(3, 1).pretty() == "X^2 + 3*X + 3"

    def test_omega_level_one(self):
        assert omega(3, 1).coeffs == (0, 3, 3, 1)
        assert omega(5, 0).coeffs == (0, 1)

    @pytest.mark.parametrize("p,m", [(3, 1), (3, 2), (3, 3), (5, 2), (7, 1)])
    def test_omega_factors(self, p, m):
        plus = struct_poly("tilde_plus", p, m)
        minus = struct_poly("tilde_minus", p, m)
        product = poly_mul(poly_mul((0, 1), plus.coeffs), minus.coeffs)
        assert trim(int(c) for c in product) == omega(p, m).coeffs

    @pytest.mark.parametrize("p,m", [(3, 2), (5, 2)])
    def test_phi_divides_omega(self, p, m):
        res = monic_divide(omega(p, m).coeffs, phi(p, m).coeffs)
        assert res.exact
        assert trim(res.quotient) == omega(p, m - 1).coeffs

    def test_signed_degrees(self):
        # tilde_minus(3, 2) = Phi_1, tilde_plus(3, 2) = Phi_2
        assert struct_poly("tilde_minus", 3, 2).degree == 2
        assert struct_poly("tilde_plus", 3, 2).degree == 6
        assert struct_poly("omega_plus", 3, 2).degree == 7

    def test_convention_moves_x(self):
        assert struct_poly("tilde_plus", 3, 1, CONVENTION_X_ON_TILDE).coeffs == (0, 1)
        assert struct_poly("omega_plus", 3, 1, CONVENTION_X_ON_TILDE).coeffs == (1,)

    def test_bad_kind(self):
        with pytest.raises(ContractViolation) as info:
            struct_poly("theta", 3, 1)
        assert info.value.code == "BAD_KIND"
        with pytest.raises(ContractViolation):
            phi(3, 0)

    def test_monic_required(self):
        with pytest.raises(ContractViolation) as info:
            monic_divide((1, 2, 3), (1, 2))
        assert info.value.code == "NOT_MONIC"

    @given(st.lists(st.integers(0, 80), min_size=1, max_size=9))
    def test_gamma_basis_inverse(self, coeffs):
        back = from_gamma_basis(to_gamma_basis(coeffs, 81), 81)
        assert trim(int(c) for c in back) == trim(coeffs)


class TestIwasawaElem:
    """Canonical representatives in Lambda_{m,n}"""

    def test_reduction_mod_omega(self):
        # X^3 = -3X^2 - 3X mod omega_1
        x = IwasawaElem((0, 0, 0, 1), 3, 2, 1)
        assert x.coeffs == (0, 6, 6)

    def test_constant_and_padding(self):
        x = IwasawaElem((10,), 3, 2, 1)
        assert x.coeffs == (1, 0, 0)
        assert x.size == 3
        assert x.degree() == 0
        assert IwasawaElem.zero(3, 2, 1).degree() == -1

    def test_gamma_power_order(self):
        g = IwasawaElem.gamma_power(1, 3, 2, 2)
        assert g ** 9 == IwasawaElem.one(3, 2, 2)
        assert g ** 3 != IwasawaElem.one(3, 2, 2)
        assert IwasawaElem.gamma_power(-1, 3, 2, 2) * g == IwasawaElem.one(3, 2, 2)

    def test_ring_mismatch(self):
        with pytest.raises(ContractViolation) as info:
            IwasawaElem.one(3, 2, 1) + IwasawaElem.one(3, 2, 2)
        assert info.value.code == "RING_MISMATCH"

    @settings(max_examples=40)
    @given(elems(), elems(), elems())
    def test_ring_axioms(self, a, b, c):
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        assert a - a == IwasawaElem.zero(3, 2, 1)

    @settings(max_examples=40)
    @given(elems(p=3, n=3, m=2))
    def test_inverse(self, x):
        if x.is_unit():
            assert x * x.inverse() == IwasawaElem.one(3, 3, 2)
        else:
            with pytest.raises(ContractViolation):
                x.inverse()

    @given(elems(m=2))
    def test_involution_squares_to_identity(self, x):
        assert x.involute().involute() == x

    @given(elems(m=2), elems(m=2))
    def test_involution_is_multiplicative(self, a, b):
        assert (a * b).involute() == a.involute() * b.involute()

    @given(elems(m=1))
    def test_norm_then_project(self, x):
        # project(norm x) = p * x since Phi_(m+1) = p mod omega_m
        assert x.norm().project() == x * 3

    @given(elems(m=2), elems(m=2))
    def test_projection_is_a_ring_map(self, a, b):
        assert (a * b).project(1) == a.project(1) * b.project(1)
        assert (a + b).project(0) == a.project(0) + b.project(0)

    def test_gamma_coefficients(self):
        g = IwasawaElem.gamma_power(2, 3, 2, 1)
        assert g.gamma_coeffs() == (0, 0, 1)
        assert IwasawaElem.from_gamma((0, 0, 1), 3, 2, 1) == g

    def test_eval_char(self):
        x = IwasawaElem((1, 1, 0), 3, 2, 1)
        assert x.eval_char(0).coeffs == (1,)
        assert x.eval_char(1).coeffs == (1, 1)
        with pytest.raises(ContractViolation):
            x.eval_char(2)

    def test_ord_pi(self):
        assert IwasawaElem((3, 6, 0), 3, 2, 1).ord_pi() == 1
        assert IwasawaElem((0, 0, 1), 3, 2, 1).ord_pi() == 0

    def test_change_of_precision(self):
        x = IwasawaElem((4, 5, 8), 3, 2, 1)
        assert x.at_precision(1).coeffs == (1, 2, 2)
        assert x.lift_to(2).project(1) == x
        with pytest.raises(ContractViolation):
            x.project(2)
