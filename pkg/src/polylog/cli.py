"""Command-line surface: evaluate named quantities, emit tables, verify.

Output is machine-first JSON (sorted keys, stable float repr); --pretty
switches to indented JSON.  Exit codes: 0 success, 1 verification failure,
2 usage error (argparse), 3 domain/capacity error from the math modules.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

from .approx import s_minus_truncated
from .closedform import ClosedForm, monomial_name
from .errors import CapacityError, ConvergenceError, DomainError
from .eulersums import (SumKind, c_sum, jordan_nielsen, milgram, s_minus,
                        s_plus, sum_oracle)
from .ipq import Family, ipq_final, ipq_numeric
from .lognm import h_closed, i_closed
from .seriesring import kolbig_snp
from .sigma import cf_num, registry, sigma_tilde
from .verify import run_suite

_EVAL_TARGETS = ("ipq", "s-plus", "s-minus", "jordan1", "jordan2", "milgram",
                 "c", "s-np", "sigma-np", "inm", "hnm", "approx")


def _emit(obj: dict, pretty: bool) -> None:
    print(json.dumps(obj, sort_keys=True, indent=2 if pretty else None))


def _closed_payload(cf: ClosedForm) -> dict:
    return {"closed": cf.to_obj(), "pretty": cf.pretty(), "decimal": cf_num(cf)}


def _eval_target(args: argparse.Namespace) -> dict:
    t = args.target
    if t == "ipq":
        _need(args, "family", "p", "q")
        fam = Family.parse(args.family)
        cf = ipq_final(fam, args.p, args.q)
        return {"target": t, "params": {"family": fam.value, "p": args.p, "q": args.q},
                **_closed_payload(cf)}
    if t in ("s-plus", "s-minus", "jordan1", "jordan2", "milgram", "c"):
        _need(args, "r")
        fn = {"s-plus": s_plus, "s-minus": s_minus,
              "jordan1": lambda r: jordan_nielsen("J1", r),
              "jordan2": lambda r: jordan_nielsen("J2", r),
              "milgram": milgram, "c": c_sum}[t]
        cf = fn(args.r)
        return {"target": t, "params": {"r": args.r}, **_closed_payload(cf)}
    if t == "s-np":
        _need(args, "n", "p")
        cf = kolbig_snp(args.n, args.p)
        return {"target": t, "params": {"n": args.n, "p": args.p}, **_closed_payload(cf)}
    if t == "sigma-np":
        _need(args, "n", "p")
        cf = sigma_tilde(args.n, args.p)
        return {"target": t, "params": {"n": args.n, "p": args.p}, **_closed_payload(cf)}
    if t == "inm":
        _need(args, "n", "m")
        cf = i_closed(args.n, args.m)
        return {"target": t, "params": {"n": args.n, "m": args.m}, **_closed_payload(cf)}
    if t == "hnm":
        _need(args, "n", "m")
        cf = h_closed(args.n, args.m)
        return {"target": t, "params": {"n": args.n, "m": args.m}, **_closed_payload(cf)}
    if t == "approx":
        _need(args, "p", "kt")
        cf = s_minus_truncated(args.p, args.kt)
        return {"target": t, "params": {"p": args.p, "kt": args.kt}, **_closed_payload(cf)}
    raise DomainError(f"unknown target {t!r}")


def _need(args: argparse.Namespace, *names: str) -> None:
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        print(f"error: target {args.target!r} requires "
              + ", ".join(f"--{n}" for n in missing), file=sys.stderr)
        raise SystemExit(2)


def _cmd_eval(args: argparse.Namespace) -> int:
    _emit(_eval_target(args), args.pretty)
    return 0


def _cmd_ipq(args: argparse.Namespace) -> int:
    fam = Family.parse(args.family)
    cf = ipq_final(fam, args.p, args.q)
    closed_value = cf_num(cf)
    oracle = ipq_numeric(fam, args.p, args.q, args.tol)
    _emit({"closed": cf.to_obj(), "pretty": cf.pretty(), "decimal": closed_value,
           "oracle": oracle, "abs_error": abs(closed_value - oracle)}, args.pretty)
    return 0


def _cmd_approx(args: argparse.Namespace) -> int:
    if args.quantity != "s-minus":
        raise DomainError(f"unknown approximation target {args.quantity!r}")
    cf = s_minus_truncated(args.p, args.kt)
    value = cf_num(cf)
    reference = sum_oracle(SumKind("SMinus", args.p), 1e-12)
    _emit({"closed_form": cf.to_obj(), "pretty": cf.pretty(), "decimal": value,
           "reference_decimal": reference, "abs_error": abs(value - reference)},
          args.pretty)
    return 0


def _read_config(path: str | None) -> dict[str, float]:
    if not path:
        return {}
    overrides: dict[str, float] = {}
    for line in Path(path).read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, _, value = line.partition("=")
        if not _:
            raise DomainError(f"config line without '=': {line!r}")
        overrides[key.strip()] = float(value.strip())
    return overrides


def _cmd_verify(args: argparse.Namespace) -> int:
    report = run_suite(args.suite, args.tol_scale, _read_config(args.config))
    for e in report.entries:
        line = f"{e.status.upper():4s} {e.identity_id}  err={e.abs_error:.3e} tol={e.tolerance:.1e}"
        if e.note:
            line += f"  [{e.note}]"
        print(line)
    print(f"summary: {report.passed} pass, {report.failed} fail")
    if args.json:
        Path(args.json).write_text(report.to_json(indent=2))
    return 1 if report.failed else 0


def _out_dir(args: argparse.Namespace) -> Path:
    out = args.out or os.environ.get("POLYLOG_OUT") or "out"
    path = Path(out)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _table_entries(kind: str, max_weight: int) -> list[tuple[str, ClosedForm]]:
    entries: list[tuple[str, ClosedForm]] = []
    if kind == "inm":
        for n in range(1, max_weight):
            for m in range(n, max_weight):
                if n + m <= max_weight:
                    entries.append((f"i({n},{m})", i_closed(n, m)))
    elif kind == "hnm":
        for n in range(1, max_weight):
            for m in range(1, max_weight):
                if n + m <= max_weight:
                    entries.append((f"h({n},{m})", h_closed(n, m)))
    elif kind == "sigma":
        for (n, p), cf in sorted(registry().closed.items()):
            if n + p <= max_weight:
                entries.append((f"sigma_{n}_{p}", cf))
    elif kind == "ipq":
        for fam in Family:
            for p in range(1, max_weight):
                for q in range(1, max_weight):
                    if p + q <= max_weight:
                        entries.append((f"I[{fam.value}]({p},{q})", ipq_final(fam, p, q)))
    else:
        raise DomainError(f"unknown table kind {kind!r}")
    return entries


def _cmd_table(args: argparse.Namespace) -> int:
    entries = _table_entries(args.kind, args.max_weight)
    out = _out_dir(args)

    columns: list = []
    seen = set()
    for _, cf in entries:
        for mono in cf.terms:
            if mono not in seen:
                seen.add(mono)
                columns.append(mono)
    from .closedform import _monomial_key
    columns.sort(key=_monomial_key)

    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["entry"] + [monomial_name(m) for m in columns])
    for name, cf in entries:
        row = [name]
        for mono in columns:
            c = cf.coefficient(mono)
            row.append(str(c) if c else "")
        writer.writerow(row)
    csv_path = out / f"{args.kind}_table.csv"
    csv_path.write_text(buf.getvalue())

    obj = {"kind": args.kind, "max_weight": args.max_weight,
           "entries": [{"key": name, "closed": cf.to_obj(), "pretty": cf.pretty(),
                        "decimal": cf_num(cf)} for name, cf in entries]}
    json_path = out / f"{args.kind}_table.json"
    json_path.write_text(json.dumps(obj, sort_keys=True, indent=2))
    print(f"wrote {csv_path} and {json_path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polylog",
        description="Exact closed forms and certified numerics for "
                    "logarithmic/polylogarithmic integrals and Euler sums")
    sub = parser.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("eval", help="evaluate a named quantity")
    pe.add_argument("target", choices=_EVAL_TARGETS)
    pe.add_argument("--family", type=str)
    pe.add_argument("--p", type=int)
    pe.add_argument("--q", type=int)
    pe.add_argument("--r", type=int)
    pe.add_argument("--n", type=int)
    pe.add_argument("--m", type=int)
    pe.add_argument("--kt", type=int)
    pe.add_argument("--pretty", action="store_true")
    pe.set_defaults(fn=_cmd_eval)

    pi = sub.add_parser("ipq", help="one I(p,q) value with its quadrature oracle")
    pi.add_argument("--family", required=True)
    pi.add_argument("--p", type=int, required=True)
    pi.add_argument("--q", type=int, required=True)
    pi.add_argument("--tol", type=float, default=1e-11)
    pi.add_argument("--pretty", action="store_true")
    pi.set_defaults(fn=_cmd_ipq)

    pa = sub.add_parser("approx", help="truncated alternating Euler sum")
    pa.add_argument("quantity", choices=["s-minus"])
    pa.add_argument("--p", type=int, required=True)
    pa.add_argument("--kt", type=int, required=True)
    pa.add_argument("--pretty", action="store_true")
    pa.set_defaults(fn=_cmd_approx)

    pv = sub.add_parser("verify", help="run identity verification suites")
    pv.add_argument("--suite", default="all",
                    choices=["all", "ipq", "sums", "lognm", "appendix"])
    pv.add_argument("--tol-scale", type=float, default=1.0)
    pv.add_argument("--config", type=str, default=None,
                    help="key = value file of per-identity tolerance overrides")
    pv.add_argument("--json", type=str, default=None,
                    help="write the full report to this path")
    pv.set_defaults(fn=_cmd_verify)

    pt = sub.add_parser("table", help="emit a closed-form table as CSV + JSON")
    pt.add_argument("--kind", required=True, choices=["inm", "hnm", "sigma", "ipq"])
    pt.add_argument("--max-weight", type=int, default=6)
    pt.add_argument("--out", type=str, default=None,
                    help="output directory (default $POLYLOG_OUT or ./out)")
    pt.set_defaults(fn=_cmd_table)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (DomainError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ConvergenceError as exc:
        print(f"convergence error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
