# -*- coding: utf-8 -*-
"""
Tests for Hecke eigenvalue tables and n-admissible primes
"""

import pytest

from sharpflat.admissible.classify import (
    AdmissibleSet,
    RigidPair,
    frobenius_eigs,
    is_admissible,
    is_fundamental,
    scan,
)
from sharpflat.admissible.tables import (
    CURVE_11A1,
    EigenTable,
    count_ap,
    eigen_table_from_curve,
    kronecker,
)
from sharpflat.core.errors import ContractViolation, SchemaError

# q-expansion coefficients of the level-11 newform
KNOWN_11A1 = {2: -2, 3: -1, 5: 1, 7: -2, 11: 1, 13: 4, 17: -2, 19: 0}


@pytest.fixture
def table():
    return EigenTable(11, KNOWN_11A1, provenance="test")


class TestTables:
    """Point counts and the Weil bound"""

    @pytest.mark.parametrize("ell", sorted(KNOWN_11A1))
    def test_point_count_matches_newform(self, ell):
        assert count_ap(CURVE_11A1, ell) == KNOWN_11A1[ell]

    def test_table_from_curve(self):
        built = eigen_table_from_curve(CURVE_11A1, 11, 20, workers=2)
        assert built.entries == KNOWN_11A1
        assert "point count" in built.provenance

    def test_count_rejects_composite(self):
        with pytest.raises(SchemaError) as info:
            count_ap(CURVE_11A1, 9)
        assert info.value.code == "NOT_PRIME"

    def test_weil_bound(self):
        with pytest.raises(SchemaError) as info:
            EigenTable(11, {13: 8})
        assert info.value.code == "WEIL_BOUND"
        assert info.value.meta == {"ell": 13, "a": 8}

    def test_bad_prime_bound(self):
        with pytest.raises(SchemaError):
            EigenTable(11, {11: 2})

    def test_composite_key(self):
        with pytest.raises(SchemaError) as info:
            EigenTable(11, {4: 0})
        assert info.value.code == "NOT_PRIME"

    def test_missing_and_restrict(self, table):
        assert table.missing(29) == [23, 29]
        assert sorted(table.restrict(7).entries) == [2, 3, 5, 7]
        assert 13 in table
        assert table[13] == 4

    @pytest.mark.parametrize(
        "D,ell,expected",
        [(-8, 2, 0), (-7, 2, 1), (-3, 2, -1), (-8, 13, -1), (-8, 17, 1), (-8, 19, 1), (-8, 7, -1)],
    )
    def test_kronecker(self, D, ell, expected):
        assert kronecker(D, ell) == expected


class TestClassify:
    """Conditions i-iv, scanning and Frobenius eigenvalues"""

    def test_thirteen_is_admissible(self, table):
        report = is_admissible(13, table[13], 5, 1, 11, -8)
        assert report.admissible
        assert report.epsilons == (-1,)
        assert report.to_dict()["checks"] == {"i": True, "ii": True, "iii": True, "iv": True}

    def test_every_condition_reported(self, table):
        report = is_admissible(11, table[11], 5, 1, 11, -8)
        assert not report.admissible
        assert report.checks["i"] is False
        assert set(report.checks) == {"i", "ii", "iii", "iv"}

    def test_split_prime(self, table):
        report = is_admissible(17, table[17], 5, 1, 11, -8)
        assert report.checks["ii"] is False

    @pytest.mark.parametrize(
        "ell,DK,code",
        [
            (15, -8, "NOT_PRIME"),
            (13, 5, "BAD_DISCRIMINANT"),
            (13, -11, "BAD_DISCRIMINANT"),
            (13, -12, "BAD_DISCRIMINANT"),
        ],
    )
    def test_rejected_inputs(self, ell, DK, code):
        with pytest.raises(SchemaError) as info:
            is_admissible(ell, 0, 5, 1, 11, DK)
        assert info.value.code == code

    def test_scan(self, table):
        found = scan(table, 5, 1, -8, 19, workers=2)
        assert [r.ell for r in found] == [7, 13]

    def test_scan_below_two(self, table):
        assert scan(table, 5, 1, -8, 1) == []

    def test_scan_checks_discriminant_first(self, table):
        with pytest.raises(SchemaError) as info:
            scan(table, 5, 1, -11, 29, workers=2)
        assert info.value.code == "BAD_DISCRIMINANT"

    @pytest.mark.parametrize(
        "DK,fundamental",
        [(-3, True), (-4, True), (-8, True), (-20, True), (-12, False), (-16, False), (-1, False)],
    )
    def test_is_fundamental(self, DK, fundamental):
        assert is_fundamental(DK) is fundamental

    def test_scan_table_gap(self, table):
        with pytest.raises(SchemaError) as info:
            scan(table, 5, 1, -8, 29)
        assert info.value.code == "TABLE_GAP"
        assert info.value.meta["missing"] == [23, 29]

    def test_frobenius_eigs(self, table):
        eigs = frobenius_eigs(is_admissible(13, table[13], 5, 1, 11, -8))
        assert eigs.epsilon == -1
        assert eigs.pair == (4, 2)
        assert eigs.hecke_roots == (1, 3)
        assert eigs.over_k == (1, 4)

    def test_frobenius_needs_admissible(self, table):
        with pytest.raises(ContractViolation) as info:
            frobenius_eigs(is_admissible(17, table[17], 5, 1, 11, -8))
        assert info.value.code == "NOT_ADMISSIBLE"

    def test_frobenius_wrong_sign(self, table):
        with pytest.raises(ContractViolation) as info:
            frobenius_eigs(is_admissible(13, table[13], 5, 1, 11, -8), epsilon=1)
        assert info.value.code == "BAD_EPSILON"

    def test_admissible_set(self, table):
        seven = is_admissible(7, table[7], 5, 1, 11, -8)
        thirteen = is_admissible(13, table[13], 5, 1, 11, -8)
        s = AdmissibleSet((seven, thirteen), selmer_vanishing_asserted=True)
        assert s.validate() == (True, "")
        assert s.primes == (7, 13)
        ok, msg = AdmissibleSet((seven, seven)).validate()
        assert not ok and "distinct" in msg
        assert RigidPair(seven, thirteen, rigid_asserted=True).validate()[0]

    def test_admissible_set_rejects_mixed(self, table):
        seven = is_admissible(7, table[7], 5, 1, 11, -8)
        other = is_admissible(13, table[13], 5, 2, 11, -8)
        ok, msg = AdmissibleSet((seven, other)).validate()
        assert not ok
        assert "different" in msg
