# SPDX-License-Identifier: MIT
# -*- coding: utf-8 -*-
"""
sharpflat command line.

Every subcommand writes one JSON report (stdout or --output). Failures
that stop a computation are reported as {"ok": false, "error": {...}}
and mapped to exit codes:

    0 ok, 2 schema error, 3 contract violation, 4 precision exhausted
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from sharpflat import __version__
from sharpflat.admissible.classify import frobenius_eigs, scan
from sharpflat.admissible.tables import CURVE_11A1, eigen_table_from_curve
from sharpflat.coleman.functionals import kernel_rank_one_check, surjectivity_check
from sharpflat.coleman.qsystem import coleman_sharp_flat, mod_x_identities, qsystem_check
from sharpflat.core import input_validator as iv
from sharpflat.core import log
from sharpflat.core.errors import SchemaError, SharpFlatError
from sharpflat.core.jobs import JobFailed
from sharpflat.core.settings import load_settings
from sharpflat.euler.reciprocity import first_reciprocity_check, second_reciprocity_check
from sharpflat.euler.vectors import vector_decompose
from sharpflat.formats import codec
from sharpflat.iwasawa.poly import CONVENTION_X_ON_OMEGA, CONVENTION_X_ON_TILDE, STRUCT_KINDS, struct_poly
from sharpflat.logmatrix import check_diagonalizer, convergence_report, mat_M, reconstruct_check
from sharpflat.selftest import SUITES, SelftestConfig, run_selftest
from sharpflat.sprung.factorize import decompose, equal_mod_kernel, horizon_check, oracle_decompose
from sharpflat.sprung.normseq import verify_norm_relation
from sharpflat.theta.stabilize import (
    check_nonvanishing_transfer,
    check_projection_compat,
    stabilize_both,
    verify_stab_identity,
)
from sharpflat.theta.table import assemble, check_theta_norm, lp_product


def _require(ok_msg, source: str = "") -> None:
    ok, msg = ok_msg
    if not ok:
        raise SchemaError.from_validation(msg, source)


def _int_list(text: str) -> List[int]:
    values = [v.strip() for v in text.split(",") if v.strip()]
    out = [iv.as_int(v) for v in values]
    if any(v is None for v in out):
        raise SchemaError("BAD_LIST", f"expected comma-separated integers, got {text!r}")
    return out


# -- subcommands -------------------------------------------------------


def _cmd_ring(args, settings) -> Dict[str, Any]:
    _require(iv.validate_prime(args.p), "--p")
    _require(iv.validate_level(args.p, args.m, settings["levels"]["maxGroupOrder"]), "--m")
    if args.elem is None:
        poly = struct_poly(args.kind, args.p, args.m, args.convention)
        return {
            "kind": poly.kind,
            "p": str(args.p),
            "m": str(args.m),
            "coeffs": [str(c) for c in poly.coeffs],
            "pretty": poly.pretty(),
        }
    _require(iv.validate_precision(args.n), "--n")
    x = codec.elem_from_list(_int_list(args.elem), args.p, args.n, args.m, "--elem")
    out: Dict[str, Any] = {"p": str(args.p), "n": str(args.n), "m": str(args.m), "elem": codec.elem_to_list(x)}
    if args.op == "norm":
        out["norm"] = codec.elem_to_list(x.norm())
    elif args.op == "involute":
        out["involute"] = codec.elem_to_list(x.involute())
    elif args.op == "eval-char":
        value = x.eval_char(args.j)
        out["eval_char"] = {"j": str(args.j), "coeffs": [str(c) for c in value.coeffs]}
    elif args.op == "inverse":
        out["inverse"] = codec.elem_to_list(x.inverse())
    elif args.op == "gamma":
        out["gamma"] = [str(c) for c in x.gamma_coeffs()]
    return out


def _cmd_decompose(args, settings) -> Dict[str, Any]:
    seq = codec.norm_seq_from_payload(codec.read_json(args.input), args.input)
    pair = decompose(seq)
    checks = [codec.check_entry("norm_relation", verify_norm_relation(seq))]
    if args.oracle:
        agree = equal_mod_kernel(seq.ap, pair.as_pair(), oracle_decompose(seq).as_pair())
        checks.append({"check": "oracle_agreement", "ok": agree})
    if seq.horizon >= 2:
        checks.append(codec.check_entry("horizon", horizon_check(seq)))
    return {
        "p": str(seq.p),
        "n": str(seq.n),
        "ap": str(seq.ap),
        "horizon": str(seq.horizon),
        **codec.pair_to_dict(pair.as_pair()),
        "kernel_length": str(pair.kernel_length),
        "checks": checks,
    }


def _cmd_logmatrix(args, settings) -> Dict[str, Any]:
    _require(iv.validate_prime(args.p), "--p")
    _require(iv.validate_precision(args.N, "N"), "--N")
    _require(iv.validate_level(args.p, args.m + 1, settings["levels"]["maxGroupOrder"]), "--m")
    x_precision = args.x_precision or settings["logmatrix"]["xPrecision"]
    M = mat_M(args.ap, args.m, args.p, args.N, x_precision=x_precision)
    return {
        "p": str(args.p),
        "ap": str(args.ap),
        "m": str(args.m),
        "N": str(args.N),
        "denom_exp": str(M.denom_exp),
        "effective_precision": str(M.effective_precision),
        "body": [codec.elem_to_list(x) for x in M.body.entries()],
        "checks": [
            codec.check_entry("convergence", convergence_report(args.ap, args.m, args.p, args.N)),
            {"check": "reconstruct", "ok": reconstruct_check(args.ap, args.m, args.p, args.N)},
            codec.check_entry("diagonalizer", check_diagonalizer(args.ap, args.p, args.N)),
        ],
    }


def _cmd_pstab(args, settings) -> Dict[str, Any]:
    seq = codec.norm_seq_from_payload(codec.read_json(args.input), args.input)
    alpha, beta = stabilize_both(seq)
    checks = [
        codec.check_entry("projection_alpha", check_projection_compat(alpha)),
        codec.check_entry("projection_beta", check_projection_compat(beta)),
    ]
    for m in range(seq.horizon + 1):
        checks.append(codec.check_entry(f"stab_identity_{m}", verify_stab_identity(seq, m, (alpha, beta))))
    nonvanishing = check_nonvanishing_transfer(seq)
    checks.append(codec.check_entry("nonvanishing_transfer", nonvanishing))

    def _numerators(stab):
        return [
            {"u": codec.elem_to_list(x.u), "v": codec.elem_to_list(x.v), "precision": str(stab.precision(m))}
            for m, x in enumerate(stab.numerators)
        ]

    return {
        "p": str(seq.p),
        "n": str(seq.n),
        "ap": str(seq.ap),
        "alpha": _numerators(alpha),
        "beta": _numerators(beta),
        "checks": checks,
    }


def _cmd_theta(args, settings) -> Dict[str, Any]:
    data = codec.read_json(args.input)
    if not isinstance(data, dict) or "tables" not in data or not isinstance(data["tables"], list):
        raise SchemaError("SCHEMA", f"{args.input}: expected {{ap, tables: [...]}}")
    ap = iv.as_int(data.get("ap"))
    if ap is None:
        raise SchemaError("SCHEMA", f"{args.input}: ap must be an integer")
    tables = [codec.theta_from_payload(t, f"{args.input}: table {i}") for i, t in enumerate(data["tables"])]
    elems = [assemble(t) for t in tables]
    report: Dict[str, Any] = {
        "ap": str(ap),
        "elements": [codec.elem_to_list(x) for x in elems],
        "lp": [codec.elem_to_list(lp_product(x)) for x in elems],
    }
    if len(elems) >= 2:
        report["checks"] = [codec.check_entry("norm_relation", check_theta_norm(elems, ap))]
    return report


def _cmd_mock(args, settings) -> Dict[str, Any]:
    model = codec.model_from_payload(codec.read_json(args.input), args.input)
    q = qsystem_check(model)
    report: Dict[str, Any] = {"model": codec.model_to_payload(model), "checks": [codec.check_entry("qsystem", q)]}
    if not q.ok:
        return report
    cols = coleman_sharp_flat(model)
    report["sharp"] = [codec.elem_to_list(x) for x in cols.sharp]
    report["flat"] = [codec.elem_to_list(x) for x in cols.flat]
    report["kernel_length"] = str(cols.kernel_length())
    report["checks"].append(codec.check_entry("mod_x", mod_x_identities(model, cols)))
    for name, row in (("sharp", cols.sharp), ("flat", cols.flat)):
        report["checks"].append({"check": f"surjective_{name}", "ok": surjectivity_check(row)})
        for m in range(min(model.horizon, args.max_level) + 1):
            report["checks"].append(
                {"check": f"kernel_rank_one_{name}_{m}", "ok": kernel_rank_one_check(row, m)}
            )
    return report


def _cmd_admissible(args, settings) -> Dict[str, Any]:
    _require(iv.validate_prime(args.p), "--p")
    _require(iv.validate_precision(args.n), "--n")
    if args.bound > iv.MAX_SCAN_BOUND:
        raise SchemaError("SCHEMA", f"--bound above {iv.MAX_SCAN_BOUND}")
    workers = settings["selftest"]["workers"]
    if args.table:
        table = codec.eigen_table_from_payload(codec.read_json(args.table), args.table)
    else:
        curve = _int_list(args.curve) if args.curve else list(CURVE_11A1)
        if len(curve) != 5:
            raise SchemaError("SCHEMA", "--curve needs five Weierstrass coefficients")
        table = eigen_table_from_curve(curve, args.N0, args.bound, workers)
    reports = scan(table, args.p, args.n, args.dk, args.bound, workers)
    out = []
    for r in reports:
        entry = r.to_dict()
        entry["frobenius"] = [
            {
                "epsilon": str(e),
                "pair": [str(v) for v in eigs.pair],
                "hecke_roots": [str(v) for v in eigs.hecke_roots],
                "over_k": [str(v) for v in eigs.over_k],
            }
            for e in r.epsilons
            for eigs in (frobenius_eigs(r, e),)
        ]
        out.append(entry)
    return {
        "p": str(args.p),
        "n": str(args.n),
        "dk": str(args.dk),
        "bound": str(args.bound),
        "N0": str(table.N0),
        "admissible": out,
    }


def _cmd_eigentable(args, settings) -> Dict[str, Any]:
    curve = _int_list(args.curve)
    if len(curve) != 5:
        raise SchemaError("SCHEMA", "--curve needs five Weierstrass coefficients")
    table = eigen_table_from_curve(curve, args.N0, args.bound, settings["selftest"]["workers"])
    return codec.eigen_table_to_payload(table)


def _load_L(path: str):
    data = codec.read_json(path)
    if not isinstance(data, dict):
        raise SchemaError("SCHEMA", f"{path}: expected an object")
    p, n, m = (iv.as_int(data.get(k)) for k in ("p", "n", "m"))
    if None in (p, n, m):
        raise SchemaError("SCHEMA", f"{path}: p, n and m are required")
    return (
        codec.elem_from_list(data.get("sharp"), p, n, m, f"{path}: sharp"),
        codec.elem_from_list(data.get("flat"), p, n, m, f"{path}: flat"),
    )


def _unit(text: Optional[str], template):
    if text is None:
        return None
    return codec.elem_from_list(_int_list(text), template.p, template.n, template.m, "unit")


def _cmd_euler(args, settings) -> Dict[str, Any]:
    seq = codec.coord_seq_from_payload(codec.read_json(args.input), args.input)
    pair = vector_decompose(seq)
    report: Dict[str, Any] = {
        "rank": str(seq.rank),
        "horizon": str(seq.horizon),
        "sharp": [codec.elem_to_list(x) for x in pair.sharp],
        "flat": [codec.elem_to_list(x) for x in pair.flat],
    }
    if args.action == "decompose":
        return report
    L = _load_L(args.L)
    if args.action == "check-rec1":
        functional = codec.functional_from_payload(codec.read_json(args.functional), args.functional)
        res = first_reciprocity_check(pair, L, functional, seq.ap, _unit(args.unit, L[0]))
        report["checks"] = [codec.check_entry("first_reciprocity", res)]
        if res.ok:
            report["unit"] = codec.elem_to_list(res.value["unit"])
        return report
    other = vector_decompose(codec.coord_seq_from_payload(codec.read_json(args.input2), args.input2))
    v2 = codec.functional_from_payload(codec.read_json(args.functional), args.functional)
    v1 = codec.functional_from_payload(codec.read_json(args.functional2), args.functional2)
    units = (_unit(args.unit or "1", L[0]), _unit(args.unit2 or "1", L[0]))
    res = second_reciprocity_check(pair, v2, other, v1, L, seq.ap, units)
    report["checks"] = [codec.check_entry("second_reciprocity", res)]
    return report


def _cmd_selftest(args, settings) -> Dict[str, Any]:
    _require(iv.validate_prime(args.p), "--p")
    _require(iv.validate_precision(args.n), "--n")
    _require(iv.validate_level(args.p, max(args.M, 2), settings["levels"]["maxGroupOrder"]), "--M")
    N = args.N if args.N is not None else args.n + args.M + settings["precision"]["extraDigits"]
    _require(iv.validate_run_config(args.p, args.n, N, args.M), "--N")
    suites = None
    if args.suite:
        unknown = [s for s in args.suite if s not in SUITES]
        if unknown:
            raise SchemaError("SCHEMA", f"unknown suites: {unknown}")
        suites = args.suite
    cfg = SelftestConfig(
        p=args.p,
        n=args.n,
        M=args.M,
        N=N,
        seed=args.seed,
        trials=args.trials or settings["selftest"]["trials"],
        workers=settings["selftest"]["workers"],
    )
    return run_selftest(cfg, suites)


# -- parser ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sharpflat", description=__doc__.strip().splitlines()[0])
    parser.add_argument("--version", action="version", version=f"sharpflat {__version__}")
    parser.add_argument("--config", help="settings file (default .sharpflat/config.json)")
    parser.add_argument("--output", help="write the JSON report here instead of stdout")
    parser.add_argument("--verbose", action="store_true", help="log at INFO level")
    sub = parser.add_subparsers(dest="command", required=True)

    ring = sub.add_parser("ring", help="structural polynomials and element operations")
    ring.add_argument("--p", type=int, required=True)
    ring.add_argument("--m", type=int, required=True)
    ring.add_argument("--n", type=int, default=1)
    kinds = ring.add_mutually_exclusive_group()
    for kind in STRUCT_KINDS:
        kinds.add_argument(f"--{kind.replace('_', '-')}", dest="kind", action="store_const", const=kind)
    ring.add_argument(
        "--convention", choices=(CONVENTION_X_ON_OMEGA, CONVENTION_X_ON_TILDE), default=CONVENTION_X_ON_OMEGA
    )
    ring.add_argument("--elem", help="comma-separated X-basis coefficients")
    ring.add_argument("--op", choices=("norm", "involute", "eval-char", "inverse", "gamma"), default="gamma")
    ring.add_argument("--j", type=int, default=0, help="character level for eval-char")
    ring.set_defaults(handler=_cmd_ring, kind="omega")

    dec = sub.add_parser("decompose", help="sharp/flat decomposition of a norm sequence")
    dec.add_argument("--input", required=True)
    dec.add_argument("--oracle", action="store_true", help="cross-check with the Howell solve")
    dec.set_defaults(handler=_cmd_decompose)

    lm = sub.add_parser("logmatrix", help="finite-level logarithm matrix")
    lm.add_argument("--p", type=int, required=True)
    lm.add_argument("--ap", type=int, default=0)
    lm.add_argument("--m", type=int, required=True)
    lm.add_argument("--N", type=int, required=True)
    lm.add_argument("--x-precision", type=int, default=0)
    lm.set_defaults(handler=_cmd_logmatrix)

    ps = sub.add_parser("pstab", help="p-stabilizations and their identities")
    ps.add_argument("--input", required=True)
    ps.set_defaults(handler=_cmd_pstab)

    th = sub.add_parser("theta", help="assemble theta tables")
    th.add_argument("--input", required=True)
    th.set_defaults(handler=_cmd_theta)

    mock = sub.add_parser("mock", help="Q-system model checks and Coleman maps")
    mock.add_argument("--input", required=True)
    mock.add_argument("--max-level", type=int, default=2)
    mock.set_defaults(handler=_cmd_mock)

    adm = sub.add_parser("admissible", help="scan for n-admissible primes")
    adm.add_argument("--p", type=int, required=True)
    adm.add_argument("--n", type=int, required=True)
    adm.add_argument("--dk", type=int, required=True)
    adm.add_argument("--bound", type=int, required=True)
    adm.add_argument("--table", help="EigenTable JSON")
    adm.add_argument("--curve", help="a1,a2,a3,a4,a6 (default 11a1)")
    adm.add_argument("--N0", type=int, default=11)
    adm.set_defaults(handler=_cmd_admissible)

    et = sub.add_parser("eigentable", help="write an EigenTable by point counting")
    et.add_argument("--curve", required=True)
    et.add_argument("--N0", type=int, required=True)
    et.add_argument("--bound", type=int, required=True)
    et.set_defaults(handler=_cmd_eigentable)

    eu = sub.add_parser("euler", help="coordinate decomposition and reciprocity checks")
    eu.add_argument("action", choices=("decompose", "check-rec1", "check-rec2"))
    eu.add_argument("--input", required=True, help="CoordSeq JSON (kappa, or kappa(l1) for check-rec2)")
    eu.add_argument("--input2", help="CoordSeq JSON for kappa(l2)")
    eu.add_argument("--L", help="L pair JSON {p, n, m, sharp, flat}")
    eu.add_argument("--functional", help="Functional JSON (d_l, or v_l2)")
    eu.add_argument("--functional2", help="Functional JSON for v_l1")
    eu.add_argument("--unit")
    eu.add_argument("--unit2")
    eu.set_defaults(handler=_cmd_euler)

    st = sub.add_parser("selftest", help="randomized invariant suites")
    st.add_argument("--p", type=int, default=3)
    st.add_argument("--n", type=int, default=2)
    st.add_argument("--M", type=int, default=2)
    st.add_argument("--N", type=int)
    st.add_argument("--seed", type=int, default=0)
    st.add_argument("--trials", type=int)
    st.add_argument("--suite", action="append", help="restrict to a suite (repeatable)")
    st.set_defaults(handler=_cmd_selftest)
    return parser


def _check_euler_args(args) -> None:
    if args.command != "euler" or args.action == "decompose":
        return
    needed = ["L", "functional"] + (["input2", "functional2"] if args.action == "check-rec2" else [])
    missing = [f"--{k}" for k in needed if getattr(args, k) is None]
    if missing:
        raise SchemaError("SCHEMA", f"{args.action} needs {', '.join(missing)}")


def _emit(report: Dict[str, Any], output: Optional[str]) -> None:
    text = codec.dumps(report)
    if output:
        Path(output).write_text(text + "\n", encoding="utf-8")
    else:
        sys.stdout.write(text + "\n")


def _run_handler(args, settings) -> Dict[str, Any]:
    """Run the subcommand; a domain error raised inside a worker job surfaces as itself."""
    _check_euler_args(args)
    try:
        return args.handler(args, settings)
    except JobFailed as e:
        if isinstance(e.cause, SharpFlatError):
            raise e.cause from e
        raise


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    loaded = load_settings(Path(args.config) if args.config else None)
    settings = loaded.settings
    log.set_level("INFO" if args.verbose else settings["logging"]["level"])
    if loaded.error:
        log.warning(loaded.error)
    try:
        report = _run_handler(args, settings)
    except SharpFlatError as e:
        log.error(f"{args.command}: {e.code}: {e.message}")
        _emit({"ok": False, "error": e.to_report()}, args.output)
        return e.exit_code
    ok = report.pop("ok", None)
    checks = report.get("checks", [])
    report["ok"] = ok if ok is not None else all(c.get("ok", True) for c in checks)
    _emit(report, args.output)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
