# SPDX-License-Identifier: MIT
# -*- coding: utf-8 -*-
"""
JSON codec for every ingested and reported type.

Residues travel as decimal strings on output; input accepts decimal
strings or JSON integers. Payloads are checked with core.input_validator
before any object is built, so malformed input surfaces as SchemaError.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Callable, Dict, List, Sequence, Tuple, Union

from sharpflat.admissible.tables import EigenTable
from sharpflat.coleman.qsystem import QSystemModel
from sharpflat.core import input_validator as iv
from sharpflat.core.errors import ContractViolation, SchemaError
from sharpflat.core.result import Result
from sharpflat.euler.reciprocity import Functional
from sharpflat.euler.vectors import CoordSeq
from sharpflat.iwasawa.ring import IwasawaElem
from sharpflat.sprung.normseq import NormSeq
from sharpflat.theta.table import ThetaTable

Validator = Callable[[Any], Tuple[bool, str]]


def read_json(path: Union[str, Path]) -> Any:
    """
    Raises:
        SchemaError: unreadable file or malformed JSON
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise SchemaError("UNREADABLE", f"cannot read {path}", details=str(e)) from e
    return parse_json(text, str(path))


def parse_json(text: str, source: str = "") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError.from_json_error(e, source) from e


def dumps(report: Dict[str, Any]) -> str:
    """Canonical report text: sorted keys, two-space indent."""
    return json.dumps(report, sort_keys=True, indent=2)


def _validated(data: Any, validator: Validator, source: str) -> Dict[str, Any]:
    ok, msg = validator(data)
    if not ok:
        raise SchemaError.from_validation(msg, source)
    return data


def _ints(values: Sequence[Any]) -> Tuple[int, ...]:
    return tuple(iv.as_int(v) for v in values)


def _header(data: Dict[str, Any]) -> Tuple[int, int]:
    return iv.as_int(data["p"]), iv.as_int(data["n"])


# -- decoding ----------------------------------------------------------


def norm_seq_from_payload(data: Any, source: str = "norm sequence") -> NormSeq:
    """
    Raises:
        SchemaError: payload fails validation
        ContractViolation: the terms break the norm relation
    """
    data = _validated(data, iv.validate_norm_seq_payload, source)
    p, n = _header(data)
    terms = tuple(IwasawaElem(_ints(t), p, n, m) for m, t in enumerate(data["terms"]))
    return NormSeq(terms, iv.as_int(data["ap"]))


def theta_from_payload(data: Any, source: str = "theta table") -> ThetaTable:
    data = _validated(data, iv.validate_theta_payload, source)
    p, n = _header(data)
    entries = [((iv.as_int(e["label"][0]), iv.as_int(e["label"][1])), iv.as_int(e["value"])) for e in data["entries"]]
    return ThetaTable.from_entries(p, n, iv.as_int(data["m"]), iv.as_int(data["delta_order"]), entries)


def model_from_payload(data: Any, source: str = "model") -> QSystemModel:
    """
    Raises:
        SchemaError: payload fails validation
        ContractViolation: declared witnesses disagree with the rows
    """
    data = _validated(data, iv.validate_model_payload, source)
    p, n = _header(data)
    rows = tuple(
        (IwasawaElem(_ints(row[0]), p, n, m), IwasawaElem(_ints(row[1]), p, n, m))
        for m, row in enumerate(data["rows"])
    )
    model = QSystemModel(iv.as_int(data["ap"]), rows, bool(data.get("inert", False)))
    declared = data.get("witnesses") or {}
    derived = model.witnesses()
    q = p ** n
    for key, values in declared.items():
        if key in derived and tuple(v % q for v in _ints(values)) != derived[key]:
            raise ContractViolation(
                "WITNESS_MISMATCH",
                f"declared witnesses {key} disagree with the rows",
                meta={"key": key},
            )
    return model


def eigen_table_from_payload(data: Any, source: str = "eigen table") -> EigenTable:
    data = _validated(data, iv.validate_eigen_table_payload, source)
    entries = {iv.as_int(k): iv.as_int(v) for k, v in data["entries"].items()}
    return EigenTable(iv.as_int(data["N0"]), entries, str(data.get("provenance", "")))


def coord_seq_from_payload(data: Any, source: str = "coordinate sequence") -> CoordSeq:
    data = _validated(data, iv.validate_coord_seq_payload, source)
    p, n = _header(data)
    levels = tuple(
        tuple(IwasawaElem(_ints(c), p, n, m) for c in coords) for m, coords in enumerate(data["levels"])
    )
    return CoordSeq(levels, iv.as_int(data["ap"]))


def functional_from_payload(data: Any, source: str = "functional") -> Functional:
    data = _validated(data, iv.validate_functional_payload, source)
    p, n = _header(data)
    m = iv.as_int(data["m"])
    row = tuple(IwasawaElem(_ints(c), p, n, m) for c in data["row"])
    unit = data.get("unit")
    unit_elem = None
    if unit is not None:
        ok, msg = iv.validate_residues(unit, p ** m)
        if not ok:
            raise SchemaError.from_validation(f"unit: {msg}", source)
        unit_elem = IwasawaElem(_ints(unit), p, n, m)
    return Functional(data["kind"], iv.as_int(data.get("ell", 0)) or 0, row, unit_elem)


def elem_from_list(values: Any, p: int, n: int, m: int, source: str = "element") -> IwasawaElem:
    ok, msg = iv.validate_residues(values, p ** m)
    if not ok:
        raise SchemaError.from_validation(msg, source)
    return IwasawaElem(_ints(values), p, n, m)


# -- encoding ----------------------------------------------------------


def elem_to_list(x: IwasawaElem) -> List[str]:
    return [str(c) for c in x.coeffs]


def pair_to_dict(pair: Sequence[IwasawaElem], names: Tuple[str, str] = ("sharp", "flat")) -> Dict[str, Any]:
    return {names[0]: elem_to_list(pair[0]), names[1]: elem_to_list(pair[1])}


def norm_seq_to_payload(seq: NormSeq) -> Dict[str, Any]:
    return {
        "p": str(seq.p),
        "n": str(seq.n),
        "ap": str(seq.ap),
        "terms": [elem_to_list(t) for t in seq.terms],
    }


def model_to_payload(model: QSystemModel) -> Dict[str, Any]:
    w = model.witnesses()
    return {
        "p": str(model.p),
        "n": str(model.n),
        "ap": str(model.ap),
        "horizon": str(model.horizon),
        "inert": model.inert,
        "rows": [[elem_to_list(a), elem_to_list(b)] for a, b in model.rows],
        "witnesses": {k: [str(v) for v in vals] for k, vals in w.items()},
    }


def eigen_table_to_payload(table: EigenTable) -> Dict[str, Any]:
    return {
        "N0": str(table.N0),
        "entries": {str(ell): str(a) for ell, a in table.entries.items()},
        "provenance": table.provenance,
    }


def coord_seq_to_payload(seq: CoordSeq) -> Dict[str, Any]:
    return {
        "p": str(seq.p),
        "n": str(seq.n),
        "ap": str(seq.ap),
        "rank": str(seq.rank),
        "levels": [[elem_to_list(x) for x in v] for v in seq.levels],
    }


def check_entry(name: str, result: Result) -> Dict[str, Any]:
    out = result.to_report()
    out["check"] = name
    return out
