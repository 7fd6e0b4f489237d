# -*- coding: utf-8 -*-
"""
Tests for coordinate sequences, their vector decomposition and the
finite-level reciprocity checks
"""

import pytest

from sharpflat.core.errors import ContractViolation
from sharpflat.euler.reciprocity import (
    Functional,
    build_reciprocity_class,
    first_reciprocity_check,
    is_unit_times_group_element,
    second_reciprocity_check,
    solve_unit,
)
from sharpflat.euler.vectors import CoordSeq, vector_decompose, vectors_agree
from sharpflat.iwasawa.ring import IwasawaElem
from sharpflat.sprung.factorize import equal_mod_kernel
from sharpflat.sprung.normseq import generate_seq, verify_norm_relation

P, N, M = 3, 2, 2


def one():
    return IwasawaElem.one(P, N, M)


def X():
    return IwasawaElem.X(P, N, M)


def gamma():
    return IwasawaElem.gamma_power(1, P, N, M)


@pytest.fixture
def target():
    return IwasawaElem((1, 0, 1), P, N, M), IwasawaElem((2, 0, 1), P, N, M)


@pytest.fixture
def free(random_elem):
    return [(random_elem(P, N, M), random_elem(P, N, M))]


@pytest.fixture
def coord_seq(random_seq):
    return CoordSeq.from_coordinates([random_seq(P, N, M, 0), random_seq(P, N, M, 0)])


class TestCoordSeq:
    """Construction and change of basis"""

    def test_shape(self, coord_seq):
        assert coord_seq.rank == 2
        assert coord_seq.horizon == M
        assert (coord_seq.p, coord_seq.n) == (P, N)

    def test_rank_mismatch(self, coord_seq):
        levels = list(coord_seq.levels)
        levels[1] = levels[1][:1]
        with pytest.raises(ContractViolation) as info:
            CoordSeq(tuple(levels), 0)
        assert info.value.code == "RANK_MISMATCH"

    def test_horizon_mismatch(self, random_seq):
        with pytest.raises(ContractViolation) as info:
            CoordSeq.from_coordinates([random_seq(P, N, 2, 0), random_seq(P, N, 1, 0)])
        assert info.value.code == "HORIZON_MISMATCH"

    def test_empty(self):
        with pytest.raises(ContractViolation) as info:
            CoordSeq.from_coordinates([])
        assert info.value.code == "EMPTY_SEQUENCE"

    def test_change_basis_keeps_norm_relation(self, coord_seq):
        zero = IwasawaElem.zero(P, N, M)
        moved = coord_seq.change_basis([[one(), zero], [one(), X()]])
        for m, v in enumerate(moved.levels):
            old = coord_seq.levels[m]
            assert v[0] == old[0]
            assert v[1] == old[0] + IwasawaElem.X(P, N, m) * old[1]
        for i in range(2):
            assert verify_norm_relation(moved.coordinate(i)).ok

    def test_change_basis_shape_checked(self, coord_seq):
        with pytest.raises(ContractViolation):
            coord_seq.change_basis([[one()]])


class TestVectorDecompose:
    """Coordinatewise sharp/flat parts"""

    def test_recovers_seeds(self, random_elem):
        seeds = [(random_elem(P, N, M), random_elem(P, N, M)) for _ in range(2)]
        seq = CoordSeq.from_coordinates([generate_seq(s, f, 3) for s, f in seeds])
        pair = vector_decompose(seq)
        assert pair.rank == 2
        assert pair.level == M
        for i, (s, f) in enumerate(seeds):
            assert equal_mod_kernel(3, (pair.sharp[i], pair.flat[i]), (s, f))

    def test_broken_coordinate_named(self, coord_seq):
        levels = [list(v) for v in coord_seq.levels]
        levels[2][1] = levels[2][1] + 1
        with pytest.raises(ContractViolation) as info:
            vector_decompose(CoordSeq(tuple(tuple(v) for v in levels), 0))
        assert info.value.code == "NORM_RELATION"
        assert info.value.meta["coordinate"] == 1

    def test_agreement_and_projection(self, coord_seq):
        pair = vector_decompose(coord_seq)
        assert vectors_agree(0, pair, pair)
        low = pair.project(1)
        assert low.level == 1
        assert low.sharp[0] == pair.sharp[0].project(1)


class TestFunctional:
    """Rows, normalizing units and validation"""

    def test_apply(self):
        zero = IwasawaElem.zero(P, N, M)
        f = Functional("partial", 13, (one(), X()))
        assert f.apply((one(), zero)) == one()
        assert f.apply((zero, one())) == X()

    def test_normalizing_unit(self):
        f = Functional("v", 7, (one(), X()), unit=gamma())
        assert f.apply((one(), one())) == (one() + X()) * gamma()

    def test_bad_kind(self):
        with pytest.raises(ContractViolation) as info:
            Functional("bogus", 13, (one(),))
        assert info.value.code == "BAD_FUNCTIONAL"

    def test_non_unit_normalization(self):
        with pytest.raises(ContractViolation) as info:
            Functional("partial", 13, (one(),), unit=X())
        assert info.value.code == "NOT_A_UNIT"

    def test_rank_mismatch(self):
        f = Functional("partial", 13, (one(), X()))
        with pytest.raises(ContractViolation) as info:
            f.apply((one(),))
        assert info.value.code == "RANK_MISMATCH"

    @pytest.mark.parametrize(
        "elem,expected",
        [
            (lambda: gamma() * 2, (2, 1)),
            (one, (1, 0)),
            (lambda: one() + X() * 2, None),
            (lambda: gamma() * 3, None),
        ],
    )
    def test_unit_times_group_element(self, elem, expected):
        assert is_unit_times_group_element(elem()) == expected


class TestReciprocity:
    """First and second laws mod ker H_M"""

    def test_solve_unit(self, target):
        u = gamma() * 2
        assert solve_unit((u * target[0], u * target[1]), target) == u

    def test_solve_unit_undetermined(self):
        t = (X(), X() * 3)
        with pytest.raises(ContractViolation) as info:
            solve_unit(t, t)
        assert info.value.code == "UNIT_UNDETERMINED"

    def test_first_law_holds_for_built_class(self, target, free):
        f = Functional("partial", 13, (one(), X()))
        u = one() + X()
        seq = build_reciprocity_class(target, f, u, free, 0)
        res = first_reciprocity_check(vector_decompose(seq), target, f, 0, unit=u)
        assert res.ok
        assert res.value["unit"] == u

    def test_first_law_detects_mutation(self, target, free):
        f = Functional("partial", 13, (one(), X()))
        u = one()
        seq = build_reciprocity_class(target, f, u, free, 0)
        mutated = (target[0] + 1, target[1])
        res = first_reciprocity_check(vector_decompose(seq), mutated, f, 0, unit=u)
        assert not res.ok
        assert res.error.code == "RECIPROCITY_DEFECT"

    def test_first_law_rejects_non_unit(self, target, free):
        f = Functional("partial", 13, (one(), X()))
        seq = build_reciprocity_class(target, f, one(), free, 0)
        with pytest.raises(ContractViolation) as info:
            first_reciprocity_check(vector_decompose(seq), target, f, 0, unit=X())
        assert info.value.code == "NOT_A_UNIT"

    def test_build_needs_unit_lead(self, target, free):
        f = Functional("partial", 13, (X(), one()))
        with pytest.raises(ContractViolation) as info:
            build_reciprocity_class(target, f, one(), free, 0)
        assert info.value.code == "NOT_A_UNIT"

    def test_build_rank_checked(self, target):
        f = Functional("partial", 13, (one(), X()))
        with pytest.raises(ContractViolation) as info:
            build_reciprocity_class(target, f, one(), [], 0)
        assert info.value.code == "RANK_MISMATCH"

    def _second_law_inputs(self, target, free):
        v_1 = Functional("v", 13, (one(), X()))
        v_2 = Functional("v", 7, (one() + X(), one()))
        u1, u2 = gamma() * 2, one()
        pair_1 = vector_decompose(build_reciprocity_class(target, v_2, u1, free, 0))
        pair_2 = vector_decompose(build_reciprocity_class(target, v_1, u2, free, 0))
        return pair_1, v_2, pair_2, v_1, u1, u2

    def test_second_law(self, target, free):
        pair_1, v_2, pair_2, v_1, u1, u2 = self._second_law_inputs(target, free)
        assert second_reciprocity_check(pair_1, v_2, pair_2, v_1, target, 0, (u1, u2)).ok

    def test_second_law_wrong_unit(self, target, free):
        pair_1, v_2, pair_2, v_1, u1, _ = self._second_law_inputs(target, free)
        res = second_reciprocity_check(pair_1, v_2, pair_2, v_1, target, 0, (u1, u1))
        assert res.error.code == "RECIPROCITY_DEFECT"
        assert res.error.meta["side"] == "right"

    def test_second_law_unit_class(self, target, free):
        pair_1, v_2, pair_2, v_1, _, u2 = self._second_law_inputs(target, free)
        with pytest.raises(ContractViolation) as info:
            second_reciprocity_check(pair_1, v_2, pair_2, v_1, target, 0, (one() + X() * 2, u2))
        assert info.value.code == "BAD_UNIT_CLASS"
