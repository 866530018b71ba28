"""Single batch-oriented command line entry point.

Subcommands: powersum, bernoulli, compositions, characters, verify
(prop1 | eq3 | coeffs | alkan).  Every run is deterministic given its flags;
exit status is 0 on success or PASS, 1 when a verification records a FAIL,
2 on usage errors.  Exact values print as rationals ("a/b"); the character
and L-series subcommands print 12 significant digits.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable

from . import bernoulli as bern
from . import compositions as comps
from . import dirichlet, exp_sums, power_sums
from .errors import (
    DivergenceError,
    ParityError,
    PreconditionError,
    SizeLimitError,
)
from .exact import format_rational


def _cap(value: int, cap: int, flag: str):
    if value > cap:
        raise SizeLimitError(f"{flag}={value} exceeds the supported cap {cap}; lower {flag}")


def _fmt_float(x: float) -> str:
    return f"{x:.12g}"


def _fmt_complex(z: complex) -> str:
    return f"{z.real:.12g}{z.imag:+.12g}i"


def emit_report(records: Iterable[dict], mode: str = "text",
                cases: int | None = None) -> tuple[str, int]:
    """Render verification records; returns (output, exit_status).

    Text mode is one tally line per run ("PASS (N cases)") plus one line per
    non-passing record; json mode is the record array itself (stable keys
    case/status/detail).  Any FAIL record forces exit status 1.
    """
    records = list(records)
    n_fail = sum(1 for r in records if r.get("status") == "FAIL")
    n_skip = sum(1 for r in records if r.get("status") == "SKIPPED")
    if cases is None:
        cases = len(records)
    status = 1 if n_fail else 0
    if mode == "json":
        return json.dumps(records, sort_keys=True), status
    skip_note = f", {n_skip} skipped" if n_skip else ""
    if n_fail:
        lines = [f"FAIL ({n_fail} of {cases} cases failed{skip_note})"]
    else:
        lines = [f"PASS ({cases} cases{skip_note})"]
    for r in records:
        if r.get("status") in ("FAIL", "SKIPPED"):
            lines.append(f"  {r.get('status')} {r.get('case')}: {r.get('detail')}")
    return "\n".join(lines), status


def _print_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _cmd_powersum(args) -> int:
    _cap(args.p, 64, "--p")
    if args.k is not None and args.k < 0:
        raise ValueError("--k must be >= 0")
    if args.k is not None:
        _cap(args.k, 1_000_000, "--k")
    method = args.method
    if method == "poly":
        if args.p < 1:
            raise ValueError("--method poly requires --p >= 1")
        poly = power_sums.h_polynomial(args.p)
        if args.k is None:
            if args.json:
                _print_json({"method": method, "p": args.p,
                             "polynomial": poly.to_json_coeffs()})
            else:
                print(str(poly))
            return 0
        value = format_rational(poly.evaluate(args.k))
    elif method == "naive":
        if args.k is None:
            raise ValueError("--method naive requires --k")
        value = str(power_sums.h_naive(args.p, args.k))
    elif method == "recurrence":
        if args.k is None:
            raise ValueError("--method recurrence requires --k")
        value = str(power_sums.h_recurrence(args.p, args.k))
    else:
        if args.k is None:
            raise ValueError("--method faulhaber requires --k")
        if args.p < 1:
            raise ValueError("--method faulhaber requires --p >= 1")
        value = format_rational(power_sums.h_faulhaber(args.p, args.k))
    if args.json:
        _print_json({"k": args.k, "method": method, "p": args.p, "value": value})
    else:
        print(value)
    return 0


def _cmd_bernoulli(args) -> int:
    if args.table is not None:
        _cap(args.table, 60, "--table")
        table = bern.bernoulli_table(args.table)
        if args.json:
            _print_json({"nmax": args.table,
                         "table": [{"n": n, "value": format_rational(table[n])}
                                   for n in range(args.table + 1)]})
        else:
            for n in range(args.table + 1):
                print(f"B_{n} = {format_rational(table[n])}")
        return 0
    if args.n is None:
        raise ValueError("provide --n with --method, or --table NMAX")
    if args.method == "oracle":
        _cap(args.n, 500, "--n")
        value = bern.bernoulli_oracle(args.n)
    else:
        _cap(args.n, 60, "--n")
        value = bern.retrieve_bernoulli(args.n)
    if args.json:
        _print_json({"method": args.method, "n": args.n,
                     "value": format_rational(value)})
    else:
        print(format_rational(value))
    return 0


def _cmd_compositions(args) -> int:
    _cap(args.n, comps.COMPOSITION_LIMIT, "--n")
    if args.length is not None:
        items = comps.enumerate_compositions_length(args.n, args.length)
    else:
        items = comps.enumerate_compositions(args.n)
    parts = [list(c.parts) for c in items]
    if args.json:
        _print_json({"compositions": parts, "count": len(parts),
                     "length": args.length, "n": args.n})
    else:
        for row in parts:
            print(json.dumps(row))
    return 0


def _cmd_characters(args) -> int:
    _cap(args.k, 1000, "--k")
    chars = dirichlet.enumerate_characters(args.k)
    if args.json:
        _print_json([
            {
                "conductor": c.conductor,
                "index": c.index,
                "modulus": c.modulus,
                "parity": c.parity,
                "primitive": c.primitive,
                "principal": c.principal,
                "values": [_fmt_complex(v) for v in c.values],
            }
            for c in chars
        ])
    else:
        print(f"{len(chars)} characters mod {args.k}")
        for c in chars:
            flags = [c.parity, "principal" if c.principal else "non-principal",
                     f"conductor {c.conductor}",
                     "primitive" if c.primitive else "imprimitive"]
            print(f"chi_{c.index}: " + ", ".join(flags))
            print("  values: " + ", ".join(_fmt_complex(v) for v in c.values))
    return 0


def _cmd_verify_prop1(args) -> int:
    if args.float:
        _cap(args.pmax, 12, "--pmax")
        _cap(args.kmax, 512, "--kmax")
        sweep = exp_sums.run_prop1_float(args.pmax, args.kmax, args.tol)
    else:
        _cap(args.pmax, 16, "--pmax")
        _cap(args.kmax, 64, "--kmax")
        sweep = exp_sums.run_prop1_exact(args.pmax, args.kmax)
    out, status = emit_report(sweep.failures, "json" if args.json else "text",
                              cases=sweep.cases)
    print(out)
    return status


def _cmd_verify_eq3(args) -> int:
    _cap(args.pmax, 12, "--pmax")
    _cap(args.kmax, 24, "--kmax")
    sweep = exp_sums.run_eq3(args.pmax, args.kmax)
    out, status = emit_report(sweep.failures, "json" if args.json else "text",
                              cases=sweep.cases)
    print(out)
    return status


def _cmd_verify_coeffs(args) -> int:
    _cap(args.pmax, 16, "--pmax")
    sweep = exp_sums.run_coefficient_check(args.pmax)
    out, status = emit_report(sweep.failures, "json" if args.json else "text",
                              cases=sweep.cases)
    print(out)
    return status


def _cmd_verify_alkan(args) -> int:
    _cap(args.k, 200, "--k")
    reports = dirichlet.alkan_sweep(args.k, args.r, args.tol,
                                    include_imprimitive=args.include_imprimitive)
    if args.json:
        _print_json([
            {
                "chi_index": rep.chi_index,
                "k": rep.modulus,
                "r": rep.r,
                "ratio": None if rep.ratio is None else _fmt_float(rep.ratio),
                "sign_observed": rep.sign_observed,
                "status": rep.status,
            }
            for rep in reports
        ])
        return 1 if any(rep.status == "FAIL" for rep in reports) else 0
    n_fail = sum(1 for rep in reports if rep.status == "FAIL")
    n_skip = sum(1 for rep in reports if rep.status == "SKIPPED")
    checked = len(reports) - n_skip
    for rep in reports:
        if rep.status == "SKIPPED":
            print(f"chi_{rep.chi_index}: SKIPPED ({rep.reason})")
        else:
            print(f"chi_{rep.chi_index}: {rep.status} ratio={_fmt_float(rep.ratio)} "
                  f"sign={rep.sign_observed:+d}")
    skip_note = f", {n_skip} skipped" if n_skip else ""
    if n_fail:
        print(f"FAIL ({n_fail} of {checked} characters failed{skip_note})")
        return 1
    print(f"PASS ({checked} characters{skip_note})")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="expsums",
        description="Exact power-sum and exponential power-sum identity toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("powersum", help="evaluate 1^p + ... + k^p")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--method", choices=["naive", "recurrence", "faulhaber", "poly"],
                   default="naive")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_powersum)

    b = sub.add_parser("bernoulli", help="Bernoulli numbers (oracle or retrieval)")
    b.add_argument("--n", type=int)
    b.add_argument("--method", choices=["oracle", "retrieve"], default="oracle")
    b.add_argument("--table", type=int)
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=_cmd_bernoulli)

    c = sub.add_parser("compositions", help="enumerate ordered partitions")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--length", type=int)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=_cmd_compositions)

    d = sub.add_parser("characters", help="list the characters mod k")
    d.add_argument("--k", type=int, required=True)
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=_cmd_characters)

    v = sub.add_parser("verify", help="run an identity verification sweep")
    vsub = v.add_subparsers(dest="check", required=True)

    vp = vsub.add_parser("prop1", help="negative-to-positive frequency expansion")
    vp.add_argument("--pmax", type=int, required=True)
    vp.add_argument("--kmax", type=int, required=True)
    mode = vp.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", default=True)
    mode.add_argument("--float", action="store_true", default=False)
    vp.add_argument("--tol", type=float, default=1e-8)
    vp.add_argument("--json", action="store_true")
    vp.set_defaults(func=_cmd_verify_prop1)

    ve = vsub.add_parser("eq3", help="periodicity-only reflection, all frequencies")
    ve.add_argument("--pmax", type=int, required=True)
    ve.add_argument("--kmax", type=int, required=True)
    ve.add_argument("--json", action="store_true")
    ve.set_defaults(func=_cmd_verify_eq3)

    vc = vsub.add_parser("coeffs", help="signed binomial chain sums")
    vc.add_argument("--pmax", type=int, required=True)
    vc.add_argument("--json", action="store_true")
    vc.set_defaults(func=_cmd_verify_coeffs)

    va = vsub.add_parser("alkan", help="L-series vs Gauss-sum moment magnitudes")
    va.add_argument("--k", type=int, required=True)
    va.add_argument("--r", type=int, required=True)
    va.add_argument("--tol", type=float, default=1e-5)
    va.add_argument("--include-imprimitive", action="store_true")
    va.add_argument("--json", action="store_true")
    va.set_defaults(func=_cmd_verify_alkan)

    return parser


def main(argv: list[str] | None = None) -> int:
    """Parse argv and dispatch; returns the process exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage/synopsis
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except (SizeLimitError, ParityError, PreconditionError, DivergenceError,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


run = main


def console_entry() -> None:
    sys.exit(main())
