# -*- coding: utf-8 -*-
"""
Tests for the coleman package - mock Q-systems, functionals and the
plus/minus index bookkeeping
"""

import numpy as np
import pytest

from sharpflat.coleman.functionals import (
    is_free_of_rank_one,
    is_perfect,
    kernel_of,
    kernel_rank_one_check,
    orthogonal_complement,
    signed_condition,
    surjectivity_check,
    trace_pairing,
)
from sharpflat.coleman.indices import (
    check_trace_contract,
    minus_source,
    plus_source,
    pm_index,
    signed_terms,
)
from sharpflat.coleman.qsystem import (
    CONDITION_NA,
    QSystemModel,
    build_model,
    coleman_sharp_flat,
    mod_x_identities,
    qsystem_check,
)
from sharpflat.core.errors import ContractViolation
from sharpflat.iwasawa.ring import IwasawaElem
from sharpflat.linalg import howell
from sharpflat.sprung.factorize import equal_mod_kernel
from sharpflat.sprung.normseq import generate_seq


def lift(c, p=3, n=2, m=2):
    """Element with constant term c plus X^2, at level m"""
    coeffs = [0] * p ** m
    coeffs[0] = c
    if len(coeffs) > 2:
        coeffs[2] = 1
    return IwasawaElem(tuple(coeffs), p, n, m)


@pytest.fixture
def good_model():
    return build_model((lift(1), lift(3)), (lift(3), lift(2)), 3)


class TestQSystem:
    """Conditions 2-4 and the level-0 witnesses"""

    def test_witnesses_read_seed_constants(self, good_model):
        w = good_model.witnesses()
        assert w["d0"] == (1, 3)
        assert w["d1"] == (3, 2)

    def test_good_model_passes(self, good_model):
        res = qsystem_check(good_model)
        assert res.ok
        assert res.value["conditions"]["1"] == CONDITION_NA
        assert res.value["conditions"]["4"] == "ok"

    def test_condition_two(self):
        model = build_model((lift(3), lift(6)), (lift(1), lift(1)), 0)
        res = qsystem_check(model)
        assert not res.ok
        assert res.error.meta["condition"] == 2
        assert res.error.meta["witnesses"] == [3, 6]

    def test_condition_three(self):
        model = build_model((lift(1), lift(2)), (lift(0), lift(3)), 0)
        res = qsystem_check(model)
        assert res.error.meta["condition"] == 3

    def test_condition_four(self, good_model):
        rows = list(good_model.rows)
        a, b = rows[2]
        rows[2] = (a + 1, b)
        res = qsystem_check(QSystemModel(good_model.ap, tuple(rows)))
        assert res.error.meta["condition"] == 4
        assert res.error.meta["coordinate"] == 0
        assert res.error.meta["index"] == 1

    def test_empty_and_short_models(self):
        with pytest.raises(ContractViolation) as info:
            QSystemModel(0, ())
        assert info.value.code == "EMPTY_MODEL"
        short = QSystemModel(0, ((lift(1, m=0), lift(0, m=0)),))
        with pytest.raises(ContractViolation) as info:
            short.witnesses()
        assert info.value.code == "SHORT_MODEL"

    def test_rows_need_matching_levels(self):
        with pytest.raises(ContractViolation) as info:
            QSystemModel(0, ((lift(1, m=1), lift(0, m=1)),))
        assert info.value.code == "BAD_LEVEL"

    def test_module_pairing(self, good_model):
        module = good_model.module
        z1, z2 = module.basis(2)
        row = good_model.rows[2]
        assert module.pair(row, z1) == row[0]
        assert module.pair(row, z2) == row[1]


class TestColemanMaps:
    """Sharp/flat functionals of a mock Q-system"""

    def test_recovers_seed(self, good_model):
        cols = coleman_sharp_flat(good_model)
        assert cols.level == 2
        assert equal_mod_kernel(3, (cols.sharp[0], cols.flat[0]), (lift(1), lift(3)))
        assert equal_mod_kernel(3, (cols.sharp[1], cols.flat[1]), (lift(3), lift(2)))

    def test_mod_x_identities(self, good_model):
        cols = coleman_sharp_flat(good_model)
        assert mod_x_identities(good_model, cols).ok

    def test_failed_condition_raises(self):
        model = build_model((lift(3), lift(6)), (lift(1), lift(1)), 0)
        with pytest.raises(ContractViolation) as info:
            coleman_sharp_flat(model)
        assert info.value.code == "QSYSTEM_CONDITION"
        assert info.value.meta["condition"] == 2

    def test_witness_check_can_be_skipped(self):
        model = build_model((lift(3), lift(6)), (lift(1), lift(1)), 0)
        cols = coleman_sharp_flat(model, check_witnesses=False)
        assert mod_x_identities(model, cols).ok

    def test_at_precision_keeps_witness_residues(self, good_model):
        low = good_model.at_precision(1)
        assert low.witnesses()["d0"] == (1, 0)


class TestFunctionals:
    """Surjectivity, kernels and complements under the trace pairing"""

    def test_surjectivity(self):
        one, zero = IwasawaElem.one(3, 2, 1), IwasawaElem.zero(3, 2, 1)
        X = IwasawaElem.X(3, 2, 1)
        assert surjectivity_check((zero, one))
        assert not surjectivity_check((X, one * 3))

    def test_kernel_rank_one(self):
        one, zero = IwasawaElem.one(3, 2, 1), IwasawaElem.zero(3, 2, 1)
        assert kernel_rank_one_check((one, zero), 1)
        assert not kernel_rank_one_check((one * 3, zero), 1)

    def test_kernel_is_free(self):
        one, zero = IwasawaElem.one(3, 2, 1), IwasawaElem.zero(3, 2, 1)
        assert is_free_of_rank_one(kernel_of((one, zero)), 1)

    def test_small_span_not_free(self):
        form = howell.howell_form([[3, 0, 0, 0, 0, 0]], 6, 3, 2)
        assert not is_free_of_rank_one(form, 1)

    def test_level_checked(self):
        one, zero = IwasawaElem.one(3, 2, 1), IwasawaElem.zero(3, 2, 1)
        with pytest.raises(ContractViolation) as info:
            kernel_of((one, zero), 2)
        assert info.value.code == "BAD_LEVEL"

    def test_trace_pairing_is_perfect(self):
        G = trace_pairing(3, 2, 1)
        assert G.shape == (6, 6)
        assert is_perfect(G, 3, 2)
        assert (G == G.T).all()

    def test_double_complement(self):
        G = trace_pairing(3, 2, 1)
        one = IwasawaElem.one(3, 2, 1)
        X = IwasawaElem.X(3, 2, 1)
        span = kernel_of((one, X))
        left = orthogonal_complement(G, span.rows, 3, 2, side="left")
        back = orthogonal_complement(G, left.rows, 3, 2, side="right")
        assert back.length == span.length
        assert back.contains_form(span)

    def test_signed_condition_is_free(self):
        G = trace_pairing(3, 2, 1)
        one, zero = IwasawaElem.one(3, 2, 1), IwasawaElem.zero(3, 2, 1)
        cond = signed_condition(G, (one, zero), 1)
        assert is_free_of_rank_one(cond, 1)
        assert cond.contains([1, 0, 0, 0, 0, 0])
        assert not cond.contains([0, 0, 0, 1, 0, 0])

    def test_degenerate_pairing(self):
        G = np.zeros((6, 6), dtype=object)
        with pytest.raises(ContractViolation) as info:
            orthogonal_complement(G, [[1, 0, 0, 0, 0, 0]], 3, 2)
        assert info.value.code == "PAIRING_NOT_PERFECT"

    def test_complement_of_nothing_is_everything(self):
        G = trace_pairing(3, 2, 1)
        assert orthogonal_complement(G, [[0] * 6], 3, 2).is_everything()


class TestIndices:
    """d_m^+ and d_m^- sources and the trace contract"""

    @pytest.mark.parametrize("m,plus,minus", [(1, 0, 1), (2, 2, 1), (3, 2, 3), (4, 4, 3)])
    def test_sources(self, m, plus, minus):
        assert pm_index(m) == (plus, minus)

    def test_plus_at_zero(self):
        assert plus_source(0) == 0

    def test_minus_at_zero(self):
        with pytest.raises(ContractViolation) as info:
            minus_source(0)
        assert info.value.code == "MINUS_AT_ZERO"

    def test_negative_level(self):
        with pytest.raises(ContractViolation) as info:
            plus_source(-1)
        assert info.value.code == "BAD_LEVEL"

    def test_signed_terms(self):
        terms = ["d0", "d1", "d2", "d3"]
        assert signed_terms(terms, 3) == ("d2", "d3")

    def test_level_zero_has_plus_only(self):
        assert pm_index(0) == (0, None)
        assert signed_terms(["d0", "d1"], 0) == ("d0", None)

    def test_trace_contract(self, random_elem):
        seq = generate_seq(random_elem(3, 2, 3), random_elem(3, 2, 3), 0)
        assert check_trace_contract(seq.terms).ok
        bad = list(seq.terms)
        bad[2] = bad[2] + 1
        res = check_trace_contract(bad)
        assert res.error.code == "TRACE_CONTRACT"
        assert res.error.meta["index"] == 2
