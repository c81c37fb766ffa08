"""Command-line front end.

Subcommands::

    eval   --x F
    table  --start F --stop F --count N --spacing linear|log
    verify [--start F --stop F --count N --spacing linear|log] [--tol F]
    scan   --function h1|h2 --interval A B [--samples N]

each with ``--format text|csv|json``. Exit status is 0 on success, 1 when
``verify`` finds a failing record and 2 on usage or domain errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from .paperfun import SUMMARY_FIELDS, point_summary
from .verify import CHECK_IDS, GridSpec, run_checks, scan_max

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

RECORD_FIELDS = ("x", "check_id", "lhs", "rhs", "margin", "pass", "note")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _exact(v):
    """Shortest round-trip text for machine formats."""
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _short(v):
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def _json_value(v):
    if isinstance(v, float) and not math.isfinite(v):
        return None
    return v


def render_csv(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_exact(v) for v in row])
    return buf.getvalue()


def render_json(obj):
    return json.dumps(obj, indent=2) + "\n"


def render_text_table(header, rows):
    cells = [list(header)] + [[_short(v) for v in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    return "\n".join(lines) + "\n"


def _grid_from(args):
    return GridSpec(args.start, args.stop, args.count, args.spacing)


def cmd_eval(args):
    row = point_summary(args.x)
    if args.format == "csv":
        return render_csv(SUMMARY_FIELDS, [list(row.values())]), EXIT_OK
    if args.format == "json":
        return render_json(row), EXIT_OK
    width = max(map(len, SUMMARY_FIELDS))
    text = "".join(f"{k.ljust(width)}  {_exact(v)}\n" for k, v in row.items())
    return text, EXIT_OK


def cmd_table(args):
    grid = _grid_from(args)
    rows = [point_summary(x) for x in grid.points()]
    values = [list(r.values()) for r in rows]
    if args.format == "csv":
        return render_csv(SUMMARY_FIELDS, values), EXIT_OK
    if args.format == "json":
        return render_json(rows), EXIT_OK
    return render_text_table(SUMMARY_FIELDS, values), EXIT_OK


def _record_row(r):
    return [r.x, r.check_id, r.lhs, r.rhs, r.margin, r.passed, r.note]


def cmd_verify(args):
    grid = _grid_from(args)
    records = run_checks(grid, args.tol)
    failures = [r for r in records if not r.passed]
    status = EXIT_FAILED if failures else EXIT_OK
    if args.format == "csv":
        rows = [_record_row(r) for r in records]
        return render_csv(RECORD_FIELDS, rows), status
    if args.format == "json":
        payload = {
            "grid": {"start": grid.start, "stop": grid.stop, "count": grid.count, "spacing": grid.spacing},
            "tol": args.tol,
            "records": [
                {k: _json_value(v) for k, v in zip(RECORD_FIELDS, _record_row(r))} for r in records
            ],
            "failures": len(failures),
        }
        return render_json(payload), status

    summary = []
    for cid in CHECK_IDS:
        mine = [r for r in records if r.check_id == cid]
        worst = min(mine, key=lambda r: r.margin if not math.isnan(r.margin) else -math.inf)
        failed = sum(not r.passed for r in mine)
        summary.append([cid, len(mine) - failed, failed, worst.margin, worst.x])
    out = render_text_table(("check", "passed", "failed", "min_margin", "at_x"), summary)
    if failures:
        out += "\nfailed records:\n"
        out += render_text_table(RECORD_FIELDS, [_record_row(r) for r in failures])
    out += f"\n{len(records)} records, {len(failures)} failed\n"
    return out, status


def cmd_scan(args):
    a, b = args.interval
    argmax, best = scan_max(args.function, a, b, args.samples)
    header = ("function", "a", "b", "argmax", "max")
    row = [args.function, a, b, argmax, best]
    if args.format == "csv":
        return render_csv(header, [row]), EXIT_OK
    if args.format == "json":
        return render_json(dict(zip(header, row))), EXIT_OK
    text = f"{args.function} on [{_short(a)}, {_short(b)}]\nargmax  {_short(argmax)}\nmax     {_short(best)}\n"
    return text, EXIT_OK


def _add_format(p):
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")


def _add_grid(p, defaults):
    start, stop, count, spacing = defaults
    p.add_argument("--start", type=float, default=start)
    p.add_argument("--stop", type=float, default=stop)
    p.add_argument("--count", type=int, default=count)
    p.add_argument("--spacing", choices=("linear", "log"), default=spacing)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gammamedian", description="Gamma-distribution median and its convexity checks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="all quantities at one point")
    p.add_argument("--x", type=float, required=True)
    _add_format(p)
    p.set_defaults(handler=cmd_eval)

    defaults = GridSpec()
    grid_defaults = (defaults.start, defaults.stop, defaults.count, defaults.spacing)

    p = sub.add_parser("table", help="quantities over a grid")
    _add_grid(p, grid_defaults)
    _add_format(p)
    p.set_defaults(handler=cmd_table)

    p = sub.add_parser("verify", help="run the inequality checks over a grid")
    _add_grid(p, grid_defaults)
    p.add_argument("--tol", type=float, default=1e-10, help="slack for the finite-difference checks")
    _add_format(p)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("scan", help="maximum of h1 or h2 on an interval")
    p.add_argument("--function", choices=("h1", "h2"), required=True)
    p.add_argument("--interval", type=float, nargs=2, metavar=("A", "B"), required=True)
    p.add_argument("--samples", type=int, default=100_000)
    _add_format(p)
    p.set_defaults(handler=cmd_scan)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # usage errors and --help; report the status instead of exiting
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        text, status = args.handler(args)
    except (ValueError, ArithmeticError) as exc:
        # DomainError is a ValueError; solver failures are ArithmeticErrors
        print(f"gammamedian: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
