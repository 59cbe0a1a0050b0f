"""balpoly command line: gen, series, verify, check, bfile.

Exit status is 0 when every requested verification holds (or nothing was
verified), 1 when anything fails, and 2 on usage, parse or input errors.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import sys
from fractions import Fraction
from importlib import resources
from pathlib import Path

from . import series
from .dsl import DslError, eval_identity, parse_text
from .identities import DEPTHS, SUITES, verify_suite
from .sequences import sequence_value

FAMILIES = ("B", "C", "T", "U", "V", "W", "F", "L")
INTEGER_FAMILIES = ("F", "L")
GF_CHOICES = tuple(
    f"{prefix}-{gid}" for prefix in ("gf", "egf") for gid in series.GF_IDS.values()
)
_GF_FAMILY = {v: k for k, v in series.GF_IDS.items()}


class UsageError(Exception):
    pass


def rational(text):
    """'p/q' with optional sign, or an integer."""
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r} (expected p/q)") from None
    return value


def positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _scalar(value):
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def _json_scalar(value):
    value = _scalar(value)
    return value if isinstance(value, int) else str(value)


def _emit_csv(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _emit_json(obj):
    return json.dumps(obj, indent=2) + "\n"


# gen


def _values(family, count, at):
    if family in INTEGER_FAMILIES:
        if at is not None:
            raise UsageError(f"family {family} is integer-valued; --at does not apply")
        return [sequence_value(family, n) for n in range(count)]
    polys = [sequence_value(family, n) for n in range(count)]
    if at is None:
        return polys
    return [_scalar(p.evaluate(at)) for p in polys]


def cmd_gen(args):
    values = _values(args.family, args.count, args.at)
    as_poly = args.family not in INTEGER_FAMILIES and args.at is None
    if args.format == "text":
        return "".join(f"{v}\n" for v in values)
    if args.format == "json":
        rows = []
        for n, v in enumerate(values):
            if as_poly:
                rows.append({"n": n, "coefficients": [_json_scalar(c) for c in v.coeffs]})
            else:
                rows.append({"n": n, "value": _json_scalar(v)})
        out = {"family": args.family, "count": args.count}
        if args.at is not None:
            out["at"] = str(args.at)
        out["rows"] = rows
        return _emit_json(out)
    if not as_poly:
        return _emit_csv(["n", "value"], [[n, v] for n, v in enumerate(values)])
    width = max((len(v.coeffs) for v in values), default=0)
    header = ["n"] + [f"x^{k}" for k in range(width)]
    rows = [[n] + list(v.coeffs) + [0] * (width - len(v.coeffs)) for n, v in enumerate(values)]
    return _emit_csv(header, rows)


# series


def cmd_series(args):
    prefix, _, gid = args.which.partition("-")
    family = _GF_FAMILY[gid]
    if prefix == "gf":
        s = series.ogf_expand(family, args.order)
    else:
        s = series.egf_expand(family, args.order)
    coeffs = list(s.coeffs)
    terms = s.terms()
    if args.format == "json":
        out = {"id": args.which, "kind": s.kind, "order": s.order,
               "coefficients": [str(c) for c in coeffs]}
        if s.kind == series.EXPONENTIAL:
            out["terms"] = [str(t) for t in terms]
        return _emit_json(out)
    if args.format == "csv":
        if s.kind == series.EXPONENTIAL:
            return _emit_csv(["k", "coefficient", "term"],
                             [[k, str(c), str(t)] for k, (c, t) in enumerate(zip(coeffs, terms))])
        return _emit_csv(["k", "coefficient"], [[k, str(c)] for k, c in enumerate(coeffs)])
    if s.kind == series.EXPONENTIAL:
        return "".join(f"z^{k}/{k}!: {t}\n" for k, t in enumerate(terms))
    return "".join(f"z^{k}: {c}\n" for k, c in enumerate(coeffs))


# verify and check


def _range_text(grid):
    return ", ".join(f"{k}={lo}..{hi}" for k, (lo, hi) in grid.items())


def _witness_text(report):
    w = report.counterexample
    if not w:
        return ""
    point = ", ".join(f"{k}={v}" for k, v in w["params"].items())
    if "error" in w:
        return f"  at {point}: {w['error']}"
    return f"  witness {point}: lhs - rhs = {w['difference']}"


def _report_lines(reports, timing):
    lines = []
    for r in reports:
        line = f"{r.verdict:<5}  {r.id}  [{r.location}]  {_range_text(r.params_tested)}  {r.points} pts"
        if r.vacuous:
            line += " (vacuous)"
        if r.errata_of:
            line += f"  corrects {r.errata_of}"
        if timing:
            line += f"  {r.millis:.1f} ms"
        lines.append(line + _witness_text(r))
        if r.note:
            lines.append(f"       note: {r.note}")
    return "".join(f"{line}\n" for line in lines)


def _report_csv(reports, timing):
    header = ["id", "location", "reading", "errata_of", "params", "points", "verdict", "witness"]
    if timing:
        header.append("millis")
    rows = []
    for r in reports:
        w = r.counterexample
        witness = ";".join(f"{k}={v}" for k, v in w["params"].items()) if w else ""
        row = [r.id, r.location, r.reading, r.errata_of or "", _range_text(r.params_tested),
               r.points, r.verdict, witness]
        if timing:
            row.append(f"{r.millis:.1f}")
        rows.append(row)
    return _emit_csv(header, rows)


def _render_reports(reports, fmt, timing):
    if fmt == "json":
        return _emit_json([r.to_dict(timing=timing) for r in reports])
    if fmt == "csv":
        return _report_csv(reports, timing)
    return _report_lines(reports, timing)


def _status(reports):
    return 0 if all(r.verdict == "HOLDS" for r in reports) else 1


def cmd_verify(args):
    reports = verify_suite(args.suite, args.depth, s_max=args.s_max, n_max=args.n_max)
    if args.reading != "all":
        reports = [r for r in reports if (r.reading == "errata") == (args.reading == "errata")]
    return _render_reports(reports, args.format, not args.no_timing), _status(reports)


def _read_identity_file(name):
    path = Path(name)
    if path.is_file():
        return path.read_text(encoding="utf-8")
    # bundled corpus, e.g. corpus/thm-ogf.idl
    if path.parent.name == "corpus" or len(path.parts) == 1:
        bundled = resources.files("balpoly") / "corpus" / path.name
        if bundled.is_file():
            return bundled.read_text(encoding="utf-8")
    raise UsageError(f"{name}: no such file")


def cmd_check(args):
    text = _read_identity_file(args.file)
    try:
        entries = parse_text(text, args.file)
    except DslError as exc:
        raise UsageError(f"{args.file}: {exc}") from None
    reports = []
    for e in entries:
        try:
            report = eval_identity(e.ast, e.tag)
        except DslError as exc:
            raise UsageError(f"{args.file}: {exc}") from None
        if e.tag:
            report.location = f"{args.file}:{e.line} {report.location}"
        reports.append(report)
    return _render_reports(reports, args.format, not args.no_timing), _status(reports)


# bfile


def cmd_bfile(args):
    at = args.at if args.family not in INTEGER_FAMILIES else None
    lines = []
    for n in range(args.count):
        value = sequence_value(args.family, n)
        if at is not None:
            value = _scalar(value.evaluate(at))
        if not isinstance(value, int):
            raise UsageError(f"{args.family}_{n}({at}) = {value} is not an integer")
        lines.append(f"{n} {value}\n")
    return "".join(lines)


def build_parser():
    parser = argparse.ArgumentParser(prog="balpoly", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    fmt = {"choices": ("text", "json", "csv"), "default": "text"}

    p = sub.add_parser("gen", help="tabulate a sequence family")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--count", type=positive_int, default=10)
    p.add_argument("--at", type=rational, help="evaluate at a rational point p/q")
    p.add_argument("--format", **fmt)
    p.set_defaults(run=cmd_gen)

    p = sub.add_parser("series", help="expand a generating-function closed form")
    p.add_argument("--which", required=True, choices=GF_CHOICES)
    p.add_argument("--order", type=int, default=8)
    p.add_argument("--format", **fmt)
    p.set_defaults(run=cmd_series)

    p = sub.add_parser("verify", help="run a catalogued identity suite")
    p.add_argument("--suite", required=True, choices=SUITES + ("all",))
    p.add_argument("--depth", choices=DEPTHS, default="standard")
    p.add_argument("--s-max", type=positive_int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--reading", choices=("all", "literal", "errata"), default="all")
    p.add_argument("--no-timing", action="store_true", help="omit timings (stable output)")
    p.add_argument("--format", **fmt)
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("check", help="verify the identities in a DSL file")
    p.add_argument("file")
    p.add_argument("--no-timing", action="store_true")
    p.add_argument("--format", **fmt)
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("bfile", help="export an integer specialization as a b-file")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--count", type=positive_int, default=10)
    p.add_argument("--at", type=rational, default=Fraction(1))
    p.set_defaults(run=cmd_bfile)
    return parser


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(stderr), contextlib.redirect_stdout(stdout):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if getattr(args, "order", 0) is not None and getattr(args, "order", 0) < 0:
        stderr.write("balpoly: error: --order must be >= 0\n")
        return 2
    try:
        result = args.run(args)
    except UsageError as exc:
        stderr.write(f"balpoly: error: {exc}\n")
        return 2
    text, status = result if isinstance(result, tuple) else (result, 0)
    stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
