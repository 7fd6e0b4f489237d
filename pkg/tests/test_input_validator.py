# -*- coding: utf-8 -*-
"""
Tests for core.input_validator module - payload and parameter validation
"""

import pytest

from sharpflat.core import input_validator as iv


class TestAsInt:
    """Integers arrive as JSON ints or decimal strings"""

    def test_accepts_int_and_string(self):
        assert iv.as_int(7) == 7
        assert iv.as_int("-12") == -12
        assert iv.as_int(" 5 ") == 5

    def test_rejects_other(self):
        assert iv.as_int(True) is None
        assert iv.as_int(1.5) is None
        assert iv.as_int("0x10") is None
        assert iv.as_int("9" * (iv.MAX_RESIDUE_DIGITS + 1)) is None

    def test_huge_residue_exact(self):
        text = str(5 ** 300)
        assert iv.as_int(text) == 5 ** 300


class TestParameters:
    """Primes, precisions and levels"""

    @pytest.mark.parametrize("p", [3, 5, 7, "11"])
    def test_valid_primes(self, p):
        assert iv.validate_prime(p) == (True, "")

    @pytest.mark.parametrize("p,fragment", [(2, "not supported"), (9, "not prime"), (1, "range"), ("x", "integer")])
    def test_invalid_primes(self, p, fragment):
        ok, msg = iv.validate_prime(p)
        assert not ok
        assert fragment in msg

    def test_precision_range(self):
        assert iv.validate_precision(1)[0]
        assert not iv.validate_precision(0)[0]
        assert "N" in iv.validate_precision(iv.MAX_PRECISION + 1, "N")[1]

    def test_level_cap(self):
        assert iv.validate_level(3, 2, 9)[0]
        ok, msg = iv.validate_level(3, 3, 9)
        assert not ok and "exceeds" in msg
        assert not iv.validate_level(3, -1)[0]

    def test_run_config(self):
        assert iv.validate_run_config(3, 2, 6, 2)[0]
        ok, msg = iv.validate_run_config(3, 2, 5, 2)
        assert not ok and "n + M + 2 = 6" in msg


class TestResidues:
    def test_length_is_an_upper_bound(self):
        assert iv.validate_residues([1, "2"], 3)[0]
        assert not iv.validate_residues([1, 2, 3, 4], 3)[0]

    def test_bad_entries(self):
        assert not iv.validate_residues("1,2")[0]
        ok, msg = iv.validate_residues([1, "a"])
        assert not ok and "coefficient 1" in msg


class TestPayloads:
    """Each ingested type is checked before construction"""

    def _norm_seq(self, **overrides):
        data = {"p": "3", "n": "2", "ap": "0", "terms": [["1"], ["1", "0", "0"]]}
        data.update(overrides)
        return data

    def test_norm_seq_ok(self):
        assert iv.validate_norm_seq_payload(self._norm_seq()) == (True, "")

    def test_norm_seq_ordinary_ap_rejected(self):
        ok, msg = iv.validate_norm_seq_payload(self._norm_seq(ap="1"))
        assert not ok and "divisible by p" in msg

    def test_norm_seq_needs_two_terms(self):
        assert not iv.validate_norm_seq_payload(self._norm_seq(terms=[["1"]]))[0]

    def test_norm_seq_term_too_long(self):
        ok, msg = iv.validate_norm_seq_payload(self._norm_seq(terms=[["1", "2"], ["0"]]))
        assert not ok and msg.startswith("term 0")

    def test_missing_field(self):
        ok, msg = iv.validate_norm_seq_payload({"p": 3, "n": 2, "ap": 0})
        assert not ok and "terms" in msg

    def test_theta_labels(self):
        data = {"p": 3, "n": 2, "m": 1, "delta_order": 2, "entries": [{"label": [0, 1], "value": "4"}]}
        assert iv.validate_theta_payload(data)[0]
        data["entries"][0]["label"] = [0]
        assert not iv.validate_theta_payload(data)[0]

    def test_model_rows_per_level(self):
        data = {"p": 3, "n": 1, "ap": 0, "horizon": 1, "rows": [[["1"], ["0"]]]}
        ok, msg = iv.validate_model_payload(data)
        assert not ok and "one entry per level" in msg
        data["rows"].append([["1", "0", "0"], ["0"]])
        assert iv.validate_model_payload(data)[0]
        data["witnesses"] = {"d0": [1]}
        assert not iv.validate_model_payload(data)[0]

    def test_eigen_table_keys_prime(self):
        assert iv.validate_eigen_table_payload({"N0": 11, "entries": {"2": -2, "3": "-1"}})[0]
        ok, msg = iv.validate_eigen_table_payload({"N0": 11, "entries": {"4": 0}})
        assert not ok and "not a prime" in msg

    def test_coord_seq_rank(self):
        data = {"p": 3, "n": 1, "ap": 0, "rank": 2, "levels": [[[1], [0]], [[1], [0, 1, 0]]]}
        assert iv.validate_coord_seq_payload(data)[0]
        data["rank"] = 3
        assert not iv.validate_coord_seq_payload(data)[0]

    def test_functional_kind(self):
        data = {"kind": "partial", "p": 3, "n": 1, "m": 0, "row": [[1]]}
        assert iv.validate_functional_payload(data)[0]
        data["kind"] = "w"
        assert not iv.validate_functional_payload(data)[0]
