"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import math
import sys
from fractions import Fraction

from .errors import DomainError
from .exact import PiValue
from .identities import IdentityReport
from .laurent import laurent_numeric_check, nonvanishing_certificate, pole_set
from .mzv import (
    Family,
    OracleConfig,
    diagonal_bell_form,
    diagonal_closed_form,
    diagonal_oracle,
    diagonal_recurrence,
)
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


# -- serialization ---------------------------------------------------------

def _format_float(x: float) -> str:
    if not math.isfinite(x):
        return "null"
    return "%.17g" % x


def canonical_json(obj, indent: int = 2, _level: int = 0) -> str:
    """JSON with insertion-ordered keys and floats printed to 17 significant digits.

    Parsing the output and serializing it again gives identical bytes.
    """
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _format_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {canonical_json(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [pad + canonical_json(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _plain(value):
    if isinstance(value, (PiValue, Fraction)):
        return str(value)
    if isinstance(value, Family):
        return value.value
    if isinstance(value, float):
        return value
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def _report_dict(rep: IdentityReport) -> dict:
    out = {
        "identity_id": rep.identity_id,
        "parameters": _plain(rep.parameters),
        "lhs": _plain(rep.lhs),
        "rhs": _plain(rep.rhs),
        "residual": float(rep.residual),
        "verdict": rep.verdict,
        "informational": rep.informational,
    }
    if rep.note:
        out["note"] = rep.note
    if rep.extra:
        out["extra"] = _plain(rep.extra)
    return out


def _emit(args, command: str, parameters: dict, results: list[dict], verdict: str, text_lines: list[str]):
    if args.format == "json":
        doc = {"command": command, "parameters": parameters, "results": results, "verdict": verdict}
        print(canonical_json(doc))
    elif args.format == "csv":
        buf = io.StringIO()
        if results:
            writer = csv.DictWriter(buf, fieldnames=list(results[0]), lineterminator="\n")
            writer.writeheader()
            for row in results:
                writer.writerow({k: (_format_float(v) if isinstance(v, float) else v) for k, v in row.items()})
        sys.stdout.write(buf.getvalue())
    else:
        for line in text_lines:
            print(line)


# -- argument parsing --------------------------------------------------------

def _parse_real(text: str) -> float:
    try:
        value = float(Fraction(text))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"argument {text!r} is not a finite decimal or integer")
    if not math.isfinite(value):
        raise UsageError(f"argument {text!r} is not finite")
    return value


def _parse_integer(text: str) -> int:
    try:
        q = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"argument {text!r} is not a number")
    if q.denominator != 1:
        raise DomainError(f"no exact closed form at non-integer s = {text}")
    return int(q)


def _family(text: str) -> Family:
    try:
        return Family.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _depth(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("depth must be >= 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="diagzeta", description="Multiple zeta functions at identical arguments")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--tolerance", type=float, default=None, help="override numeric tolerance")

    p = sub.add_parser("eval", help="numeric value by every method, with pairwise deltas")
    p.add_argument("--family", type=_family, required=True)
    p.add_argument("--depth", type=_depth, required=True)
    p.add_argument("--arg", required=True)
    p.add_argument("--oracle-n", type=int, default=None)
    common(p)

    p = sub.add_parser("exact", help="exact value in Q[pi^2]")
    p.add_argument("--family", type=_family, required=True)
    p.add_argument("--depth", type=_depth, required=True)
    p.add_argument("--arg", required=True)
    common(p)

    p = sub.add_parser("verify", help="run an identity suite")
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    p.add_argument("--max-depth", type=_depth, default=None)
    p.add_argument("--max-k", type=int, default=None)
    p.add_argument("--oracle-n", type=int, default=None)
    common(p)

    p = sub.add_parser("poles", help="pole table of zeta_r with numeric Laurent checks")
    p.add_argument("--depth", type=_depth, required=True)
    common(p)

    p = sub.add_parser("table", help="tabulate values over families and depths")
    p.add_argument("--family", type=_family, action="append", default=None)
    p.add_argument("--max-depth", type=_depth, default=6)
    p.add_argument("--arg", action="append", default=None)
    p.add_argument("--oracle-n", type=int, default=None)
    p.add_argument("--format", choices=("text", "json", "csv"), default="csv")
    p.add_argument("--tolerance", type=float, default=None)
    return parser


# -- commands ---------------------------------------------------------------

def cmd_eval(args) -> int:
    s = _parse_real(args.arg)
    family, r = args.family, args.depth
    values = [diagonal_closed_form(family, r, s), diagonal_bell_form(family, r, s), diagonal_recurrence(family, r, s)]
    if args.oracle_n is not None:
        values.append(diagonal_oracle(family, r, s, OracleConfig(truncation=args.oracle_n)))
    results = [{"family": family.value, "depth": r, "argument": s, "method": v.method.value,
                "value": float(v.value), "error_bound": float(v.error_bound or 0.0),
                "deltas": {w.method.value: float(v.value) - float(w.value) for w in values if w is not v}}
               for v in values]
    deltas = {f"{a.method.value} - {b.method.value}": float(a.value) - float(b.value)
              for a, b in itertools.combinations(values, 2)}
    tolerance = args.tolerance
    verdict = "pass"
    if tolerance is not None and any(abs(d) > tolerance for d in deltas.values()):
        verdict = "fail"
    lines = [f"{family.value}_{r}({s!r})"]
    lines += [f"  {row['method']:<12} {row['value']:.17g}  (bound {row['error_bound']:.3g})" for row in results]
    lines += [f"  delta {name}: {d:.3e}" for name, d in deltas.items()]
    params = {"family": family.value, "depth": r, "argument": s, "oracle_n": args.oracle_n}
    if args.format == "csv":
        results = [{k: v for k, v in row.items() if k != "deltas"} for row in results]
    _emit(args, "eval", params, results, verdict, lines)
    return EXIT_OK if verdict == "pass" else EXIT_FAIL


def cmd_exact(args) -> int:
    s = _parse_integer(args.arg)
    value = diagonal_closed_form(args.family, args.depth, s, "exact").value
    params = {"family": args.family.value, "depth": args.depth, "argument": s}
    results = [{"family": args.family.value, "depth": args.depth, "argument": s, "value": str(value)}]
    _emit(args, "exact", params, results, "pass", [str(value)])
    return EXIT_OK


def cmd_verify(args) -> int:
    reports = run_suite(args.suite, max_depth=args.max_depth, max_k=args.max_k,
                        oracle_n=args.oracle_n, tolerance=args.tolerance)
    failed = [rep for rep in reports if not rep.passed and not rep.informational]
    verdict = "fail" if failed else "pass"
    lines = []
    for rep in reports:
        tag = "info" if rep.informational else rep.verdict
        params = ", ".join(f"{k}={v}" for k, v in rep.parameters.items())
        lines.append(f"[{tag}] {rep.identity_id} ({params}) residual={rep.residual:.3e}")
    lines.append(f"{len(reports) - len(failed)}/{len(reports)} checks without failure; verdict: {verdict}")
    params = {"suite": args.suite, "max_depth": args.max_depth, "max_k": args.max_k,
              "oracle_n": args.oracle_n, "tolerance": args.tolerance}
    _emit(args, "verify", params, [_report_dict(rep) for rep in reports], verdict, lines)
    return EXIT_OK if not failed else EXIT_FAIL


def cmd_poles(args) -> int:
    if args.depth < 1:
        raise DomainError("poles needs depth >= 1")
    rows = []
    for pole in pole_set(args.depth):
        report = laurent_numeric_check(pole.r, pole.k, tolerance=args.tolerance)
        estimate = min((e for e in report.numeric_estimates if e[0] > 0), key=lambda pair: pair[0])[1]
        rows.append({
            "k": pole.k,
            "location": pole.location,
            "order": pole.order,
            "remainder": pole.remainder,
            "leading_coefficient": report.leading_closed_form,
            "numeric_estimate": estimate,
            "gap": report.final_gap,
            "tolerance": report.tolerance,
            "order_certified": nonvanishing_certificate(pole.r, pole.k),
            "verdict": report.verdict,
        })
    verdict = "pass" if all(row["verdict"] == "pass" and row["order_certified"] for row in rows) else "fail"
    lines = [f"{'s':>10} {'order':>5} {'leading coeff':>22} {'estimate':>22} {'gap':>9}  verdict"]
    for row in rows:
        lines.append(f"{'1/' + str(row['k']):>10} {row['order']:>5} {row['leading_coefficient']:>22.15g} "
                     f"{row['numeric_estimate']:>22.15g} {row['gap']:>9.2e}  {row['verdict']}")
    _emit(args, "poles", {"depth": args.depth, "tolerance": args.tolerance}, rows, verdict, lines)
    return EXIT_OK if verdict == "pass" else EXIT_FAIL


def cmd_table(args) -> int:
    families = args.family or list(Family)
    arguments = [_parse_real(a) for a in (args.arg or ["2"])]
    rows = []
    for family in families:
        for r in range(args.max_depth + 1):
            for s in arguments:
                methods = [diagonal_closed_form(family, r, s), diagonal_recurrence(family, r, s)]
                if args.oracle_n is not None and s > 1:
                    methods.append(diagonal_oracle(family, r, s, OracleConfig(truncation=args.oracle_n)))
                for v in methods:
                    rows.append({"family": family.value, "depth": r, "argument": s, "method": v.method.value,
                                 "value": float(v.value), "error_bound": float(v.error_bound or 0.0)})
    lines = [f"{row['family']:>8} {row['depth']:>3} {row['argument']:>8g} {row['method']:>12} "
             f"{row['value']:>24.17g} {row['error_bound']:>10.3g}" for row in rows]
    params = {"families": [f.value for f in families], "max_depth": args.max_depth,
              "arguments": arguments, "oracle_n": args.oracle_n}
    _emit(args, "table", params, rows, "pass", lines)
    return EXIT_OK


COMMANDS = {"eval": cmd_eval, "exact": cmd_exact, "verify": cmd_verify, "poles": cmd_poles, "table": cmd_table}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except (DomainError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
