"""``lcprop`` command line.

Exit codes: 0 when the checked property holds, 1 when it legitimately
fails, 2 on usage or parse errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import reproduce as repro
from .combinat import FAMILIES, TriangleRow, triangle_row
from .geomlab import NoThresholdError, geom_sum_analyze, min_lc_geom_param
from .kernel import check_condition1, dependent_sum, kernel_from_json, kernel_from_spec
from .polyroots import ExactPoly, factor_out_x, all_roots_real_negative, real_root_count_with_multiplicity, sturm_real_root_count
from .seq_core import ExactSeq, as_fraction, convolve, is_log_concave

OK, FAIL, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _fmt(x: Fraction, decimal: int | None) -> str:
    if decimal is None:
        return str(x)
    return f"{x} (~{float(x):.{decimal}f}, approx)"


def _load_json_file(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc.msg}") from exc


def _seq_from_json(data) -> ExactSeq:
    if isinstance(data, dict):
        if "row" in data:
            return TriangleRow.from_json(data).row if "family" in data else ExactSeq.from_json(data["row"])
        if "values" in data:
            return ExactSeq.from_json(data["values"])
        raise UsageError("JSON object must carry a 'row' or 'values' array")
    return ExactSeq.from_json(data)


def _read_seq(text: str | None, path: str | None, what: str = "--seq") -> ExactSeq:
    if (text is None) == (path is None):
        raise UsageError(f"give exactly one of {what} or --file")
    if path is not None:
        return _seq_from_json(_load_json_file(path))
    return ExactSeq.parse(text)


def _read_kernel(args):
    pW = ExactSeq.parse(args.pW) if getattr(args, "pW", None) else None
    spec = args.kernel
    if spec.lstrip().startswith("{"):
        try:
            return kernel_from_json(json.loads(spec))
        except json.JSONDecodeError as exc:
            raise UsageError(f"kernel JSON: {exc.msg}") from exc
    if spec.endswith(".json"):
        return kernel_from_json(_load_json_file(spec))
    return kernel_from_spec(spec, pW=pW)


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(text_lines))


def cmd_check(args) -> int:
    s = _read_seq(args.seq, args.file)
    rep = is_log_concave(s)
    lines = [f"sequence: {', '.join(s.to_json())}", f"log-concave: {'yes' if rep.is_lc else 'no'}"]
    if not rep.contiguous:
        lines.append("note: internal zeros in the support")
    for i, d in rep.deficits:
        mark = "  <-- violation" if d < 0 else ""
        lines.append(f"  deficit[{i}] = {_fmt(d, args.decimal)}{mark}")
    _emit(args, rep.to_json(), lines)
    return OK if rep.is_lc else FAIL


def cmd_convolve(args) -> int:
    a = ExactSeq.parse(args.a)
    b = ExactSeq.parse(args.b)
    out = convolve(a, b)
    rep = is_log_concave(out)
    _emit(args, {"result": out.to_json(), "is_lc": rep.is_lc},
          [", ".join(out.to_json()), f"log-concave: {'yes' if rep.is_lc else 'no'}"])
    return OK if rep.is_lc else FAIL


def cmd_dependent_sum(args) -> int:
    pV = _read_seq(args.seq, args.file)
    K = _read_kernel(args)
    out = dependent_sum(pV, K)
    rep = is_log_concave(out)
    _emit(args, {"result": out.to_json(), "is_lc": rep.is_lc},
          [", ".join(out.to_json()), f"log-concave: {'yes' if rep.is_lc else 'no'}"])
    return OK if rep.is_lc else FAIL


def cmd_condition1(args) -> int:
    K = _read_kernel(args)
    if args.imax < 0:
        raise UsageError("--imax must be >= 0")
    rep = check_condition1(K, args.imax, adjusted=args.adjusted)
    lines = [f"kernel: {K.kind}", f"i_max: {args.imax}", f"part (a): {'holds' if rep.holds_a else 'fails'}",
             f"part (b): {'holds' if rep.holds_b else 'fails'}"]
    if rep.first_failure:
        i, m, t, part = rep.first_failure
        lines.append(f"first failure: i={i} m={m} t={t} part={part} "
                     f"sum={_fmt(rep.failure_value(rep.first_failure), args.decimal)}")
    _emit(args, rep.to_json(), lines)
    return OK if rep.holds else FAIL


def cmd_triangle(args) -> int:
    row = triangle_row(args.family, args.n, q=None if args.q is None else as_fraction(args.q))
    rep = is_log_concave(row.row)
    _emit(args, row.to_json(), [f"{row.family}({row.n}): {', '.join(row.row.to_json())}",
                               f"log-concave: {'yes' if rep.is_lc else 'no'}"])
    return OK if rep.is_lc else FAIL


def cmd_geom(args) -> int:
    pX = _read_seq(args.seq, args.file)
    payload: dict = {}
    lines: list[str] = []
    status = OK
    if args.p is not None:
        an = geom_sum_analyze(pX, as_fraction(args.p))
        payload.update(an.to_json())
        lines.append(f"X + Geom({an.p}) log-concave: {'yes' if an.is_lc else 'no'}")
        for i, v in an.criterion_values:
            lines.append(f"  criterion[{i}] = {_fmt(v, args.decimal)}")
        status = OK if an.is_lc else FAIL
    if args.threshold is not None:
        try:
            iv = min_lc_geom_param(pX, args.threshold)
        except NoThresholdError as exc:
            payload["threshold"] = None
            lines.append(f"threshold: none ({exc})")
            status = FAIL
        else:
            payload["threshold"] = iv.to_json()
            lines.append(f"least LC parameter in [{_fmt(iv.lo, args.decimal)}, {_fmt(iv.hi, args.decimal)}]")
    if args.p is None and args.threshold is None:
        raise UsageError("give --p and/or --threshold")
    _emit(args, payload, lines)
    return status


def cmd_roots(args) -> int:
    if args.poly is not None:
        if args.seq is not None or args.file is not None:
            raise UsageError("give --poly or a sequence, not both")
        p = ExactPoly(as_fraction(c) for c in args.poly.split(","))
    else:
        s = _read_seq(args.seq, args.file)
        p = ExactPoly(s.values)
    if p.is_zero():
        raise UsageError("zero polynomial")
    k, core = factor_out_x(p)
    distinct = sturm_real_root_count(p)
    real_mult = real_root_count_with_multiplicity(p)
    nonneg = all(c >= 0 for c in p.coeffs)
    negative = all_roots_real_negative(core) if nonneg else None
    payload = {
        "poly": p.to_json(),
        "degree": p.degree,
        "zero_roots": k,
        "distinct_real_roots": distinct,
        "real_roots_with_multiplicity": real_mult,
        "real_negative_after_x": negative,
    }
    lines = [f"degree {p.degree}; roots at 0: {k}", f"distinct real roots: {distinct}",
             f"real roots with multiplicity: {real_mult}"]
    if negative is not None:
        lines.append(f"all other roots real and negative: {'yes' if negative else 'no'}")
    _emit(args, payload, lines)
    if negative is None:
        return OK if real_mult == p.degree else FAIL
    return OK if negative else FAIL


def cmd_reproduce(args) -> int:
    seed = int(os.environ.get("LCPROP_SEED", args.seed))
    try:
        results = repro.run(args.id, seed)
    except KeyError as exc:
        known = ", ".join(f"{name} ({num})" for name, (num, _) in repro.CHECKS.items())
        raise UsageError(f"unknown id {args.id!r}; known: {known}, all") from exc
    all_ok = True
    payload = {}
    lines = [f"seed: {seed}"]
    for name, checks in results.items():
        num = repro.CHECKS[name][0]
        ok = all(passed for _, passed, _ in checks)
        all_ok &= ok
        lines.append(f"[{'PASS' if ok else 'FAIL'}] {num}. {name}")
        for label, passed, detail in checks:
            lines.append(f"    {'ok  ' if passed else 'FAIL'} {label}" + (f"  ({detail})" if detail and not passed else ""))
        payload[name] = [{"check": label, "passed": passed, "detail": detail} for label, passed, detail in checks]
    _emit(args, {"seed": seed, "passed": all_ok, "results": payload}, lines)
    return OK if all_ok else FAIL


def build_parser() -> argparse.ArgumentParser:
    def output_args(p, default):
        p.add_argument("--format", choices=("text", "json"), default=default)
        p.add_argument("--decimal", type=int, default=default, metavar="K",
                       help="also print K-digit approximations (marked approximate)")

    parser = argparse.ArgumentParser(prog="lcprop", description="Exact log-concavity checks.")
    output_args(parser, None)
    # the same options after the subcommand; SUPPRESS keeps them from
    # overwriting values given before it
    common = argparse.ArgumentParser(add_help=False)
    output_args(common, argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    def seq_args(p):
        p.add_argument("--seq", help='comma separated rationals, e.g. "5/8,1/4,1/8"')
        p.add_argument("--file", help="JSON array, or an object with a 'row' array")

    p = add_parser("check", help="log-concavity report for a sequence")
    seq_args(p)
    p.set_defaults(func=cmd_check)

    p = add_parser("convolve", help="convolve two sequences")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(func=cmd_convolve)

    p = add_parser("dependent-sum", help="sum a base sequence against a kernel")
    seq_args(p)
    p.add_argument("--kernel", required=True, help="stirling2 | eulerian:N | geom_joint:P,A,H | independent | JSON")
    p.add_argument("--pW", help="row for the independent kernel")
    p.set_defaults(func=cmd_dependent_sum)

    p = add_parser("condition1", help="diagonal partial-sum test for a kernel")
    p.add_argument("--kernel", required=True, help="stirling2 | eulerian:N | geom_joint:P,A,H | independent | JSON")
    p.add_argument("--pW", help="row for the independent kernel")
    p.add_argument("--imax", type=int, default=10)
    p.add_argument("--adjusted", action="store_true", help="subtract (pV[i-1]-pV[i])^2 first")
    p.set_defaults(func=cmd_condition1)

    p = add_parser("triangle", help="generate a combinatorial row")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", help="parameter for q_stirling2")
    p.set_defaults(func=cmd_triangle)

    p = add_parser("geom", help="log-concavity of X + Geom(p)")
    seq_args(p)
    p.add_argument("--p", help="geometric parameter in (0, 1)")
    p.add_argument("--threshold", type=int, metavar="BOUND",
                   help="bracket the least LC parameter to width 1/BOUND")
    p.set_defaults(func=cmd_geom)

    p = add_parser("roots", help="real-root analysis of a generating polynomial")
    seq_args(p)
    p.add_argument("--poly", help="ascending coefficients, may be negative")
    p.set_defaults(func=cmd_roots)

    p = add_parser("reproduce", help="run a scripted reproduction (or 'all')")
    p.add_argument("id")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code not in (0, None) else OK
    if args.format is None:
        args.format = "text"
    if args.decimal is not None and not 0 <= args.decimal <= 50:
        print("lcprop: error: --decimal must be in 0..50", file=sys.stderr)
        return USAGE
    try:
        return args.func(args)
    except (UsageError, ValueError, TypeError, KeyError, ZeroDivisionError) as exc:
        print(f"lcprop: error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
