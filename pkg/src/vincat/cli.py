"""Command-line front end.

Four subcommands:

  count    exact number of avoiders for one pattern and length
  series   coefficients t^1..t^K of the avoider generating function
  verify   cross-check every applicable method against the reference rows
  bfile    write an OEIS-style b-file for a pattern

Counts are exact integers throughout.  JSON output encodes them as strings
so consumers that parse numbers into doubles cannot silently lose digits.
"""

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass

from .counting import (
    CLOSED_FORM_PATTERNS,
    RECURRENCE_PATTERNS,
    closed_form,
    count_by_recurrence,
)
from .generate import count_avoiders, count_avoiders_many
from .genfun import GENFUN_PATTERNS, series_for
from .golden import GOLDEN_COUNTS, GOLDEN_MAX_N, GOLDEN_PATTERNS
from .words import PatternError, parse_pattern

DEFAULT_MAX_N = 12
DEFAULT_ORDER = 24
ORDER_ENV = "VINCAT_ORDER"
METHOD_NAMES = ("closed", "genfun", "oracle", "recurrence")
FORMATS = ("text", "json", "csv")

# 11-1 avoiders are equinumerous with 1-11 avoiders (transfer_runs is the
# witnessing bijection), so the 1-11 series serves for both patterns.
SERIES_ALIASES = {"11-1": "1-11"}


class CliError(Exception):
    """Error with a message for stderr and a process exit code."""

    def __init__(self, message: str, code: int = 2):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class RunConfig:
    max_n: int = DEFAULT_MAX_N
    order: int = DEFAULT_ORDER
    methods: tuple = METHOD_NAMES
    fmt: str = "text"

    def __post_init__(self):
        if self.max_n < 1:
            raise ValueError("max_n must be at least 1")
        if self.order < 1:
            raise ValueError("order must be at least 1")
        bad = sorted(set(self.methods) - set(METHOD_NAMES))
        if bad:
            raise ValueError(
                "unknown methods %s; choose from %s"
                % (", ".join(bad), ", ".join(METHOD_NAMES))
            )
        if self.fmt not in FORMATS:
            raise ValueError("unknown format %r" % self.fmt)


@dataclass(frozen=True)
class ReportRow:
    pattern: str
    n: int
    values: tuple  # sorted (source, count) pairs
    agree: bool


def available_methods(pattern: str) -> tuple:
    """Method names that can count avoiders of this pattern, sorted."""
    out = ["oracle"]
    if pattern in CLOSED_FORM_PATTERNS:
        out.append("closed")
    if pattern in RECURRENCE_PATTERNS:
        out.append("recurrence")
    if pattern in GENFUN_PATTERNS or SERIES_ALIASES.get(pattern) in GENFUN_PATTERNS:
        out.append("genfun")
    return tuple(sorted(out))


def fastest_method(pattern: str) -> str:
    avail = available_methods(pattern)
    for name in ("closed", "recurrence", "genfun"):
        if name in avail:
            return name
    return "oracle"


def count_one(pattern: str, n: int, method: str) -> int:
    if method == "closed":
        return closed_form(pattern, n)
    if method == "recurrence":
        return count_by_recurrence(pattern, n)
    if method == "genfun":
        key = SERIES_ALIASES.get(pattern, pattern)
        return int(series_for(key, order=n).coefficient(n))
    if method == "oracle":
        return count_avoiders(n, pattern)
    raise ValueError("unknown method %r" % method)


def series_values(pattern: str, order: int):
    """Coefficients of t^1..t^order, or None if only the oracle applies."""
    key = SERIES_ALIASES.get(pattern, pattern)
    if key in GENFUN_PATTERNS:
        s = series_for(key, order=order)
        return [int(s.coefficient(k)) for k in range(1, order + 1)]
    if pattern in CLOSED_FORM_PATTERNS:
        return [closed_form(pattern, k) for k in range(1, order + 1)]
    if pattern in RECURRENCE_PATTERNS:
        return [count_by_recurrence(pattern, k) for k in range(1, order + 1)]
    return None


def sequence_values(pattern: str, max_n: int) -> list:
    """Counts for n = 1..max_n via the fastest applicable method."""
    method = fastest_method(pattern)
    if method == "genfun":
        key = SERIES_ALIASES.get(pattern, pattern)
        s = series_for(key, order=max_n)
        return [int(s.coefficient(n)) for n in range(1, max_n + 1)]
    return [count_one(pattern, n, method) for n in range(1, max_n + 1)]


def build_report(config: RunConfig) -> list:
    """One ReportRow per (pattern, n), sorted, each with all selected methods."""
    patterns = list(GOLDEN_PATTERNS)
    columns = {p: {} for p in patterns}
    series_cache = {}
    for pattern in patterns:
        for method in available_methods(pattern):
            if method not in config.methods or method == "oracle":
                continue
            if method == "genfun":
                key = SERIES_ALIASES.get(pattern, pattern)
                if key not in series_cache:
                    series_cache[key] = series_for(
                        key, order=max(config.order, config.max_n)
                    )
                s = series_cache[key]
                vals = [int(s.coefficient(n)) for n in range(1, config.max_n + 1)]
            elif method == "closed":
                vals = [closed_form(pattern, n) for n in range(1, config.max_n + 1)]
            else:
                vals = [
                    count_by_recurrence(pattern, n)
                    for n in range(1, config.max_n + 1)
                ]
            columns[pattern][method] = vals
    if "oracle" in config.methods:
        for n in range(1, config.max_n + 1):
            for pattern, c in zip(patterns, count_avoiders_many(n, patterns)):
                columns[pattern].setdefault("oracle", []).append(c)
    rows = []
    for pattern in patterns:
        for n in range(1, config.max_n + 1):
            cells = {m: vals[n - 1] for m, vals in columns[pattern].items()}
            if n <= GOLDEN_MAX_N:
                cells["golden"] = GOLDEN_COUNTS[pattern][n - 1]
            rows.append(
                ReportRow(
                    pattern=pattern,
                    n=n,
                    values=tuple(sorted(cells.items())),
                    agree=len(set(cells.values())) <= 1,
                )
            )
    return rows


def render_text(rows) -> str:
    lines = []
    for r in rows:
        cells = " ".join("%s=%d" % (m, v) for m, v in r.values)
        lines.append(
            "%-5s n=%-2d %-8s %s" % (r.pattern, r.n, "ok" if r.agree else "MISMATCH", cells)
        )
    bad = sum(1 for r in rows if not r.agree)
    if bad:
        lines.append("%d of %d rows disagree" % (bad, len(rows)))
    else:
        lines.append("all %d rows agree" % len(rows))
    return "\n".join(lines) + "\n"


def render_json(rows, config: RunConfig) -> str:
    payload = {
        "max_n": config.max_n,
        "order": config.order,
        "methods": sorted(config.methods),
        "rows": [
            {
                "pattern": r.pattern,
                "n": r.n,
                "values": {m: str(v) for m, v in r.values},
                "agree": r.agree,
            }
            for r in rows
        ],
        "ok": all(r.agree for r in rows),
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def render_csv(rows) -> str:
    cols = ("closed", "genfun", "golden", "oracle", "recurrence")
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(("pattern", "n") + cols + ("agree",))
    for r in rows:
        cells = dict(r.values)
        writer.writerow(
            [r.pattern, r.n]
            + [cells.get(c, "") for c in cols]
            + ["true" if r.agree else "false"]
        )
    return buf.getvalue()


def render_report(rows, config: RunConfig) -> str:
    if config.fmt == "json":
        return render_json(rows, config)
    if config.fmt == "csv":
        return render_csv(rows)
    return render_text(rows)


def resolve_order(value) -> int:
    if value is not None:
        return value
    raw = os.environ.get(ORDER_ENV)
    if raw is None:
        return DEFAULT_ORDER
    try:
        return int(raw)
    except ValueError:
        raise CliError("%s must be an integer, got %r" % (ORDER_ENV, raw)) from None


def cmd_count(args) -> int:
    pattern = str(parse_pattern(args.pattern))
    if args.n < 1:
        raise CliError("n must be at least 1")
    avail = available_methods(pattern)
    method = fastest_method(pattern) if args.method == "auto" else args.method
    if method not in avail:
        raise CliError(
            "method %r does not apply to %s; applicable: %s"
            % (method, pattern, ", ".join(avail))
        )
    print(count_one(pattern, args.n, method))
    return 0


def cmd_series(args) -> int:
    pattern = str(parse_pattern(args.pattern))
    order = resolve_order(args.order)
    if order < 1:
        raise CliError("order must be at least 1")
    values = series_values(pattern, order)
    if values is None:
        raise CliError(
            "pattern %s has only the brute-force oracle; series needs a "
            "closed form, recurrence, or generating function" % pattern
        )
    print(", ".join(str(v) for v in values))
    return 0


def cmd_verify(args) -> int:
    methods = tuple(sorted({m.strip() for m in args.methods.split(",") if m.strip()}))
    config = RunConfig(
        max_n=args.max_n,
        order=resolve_order(args.order),
        methods=methods,
        fmt=args.fmt,
    )
    rows = build_report(config)
    sys.stdout.write(render_report(rows, config))
    return 0 if all(r.agree for r in rows) else 1


def cmd_bfile(args) -> int:
    pattern = str(parse_pattern(args.pattern))
    if args.max_n < 1:
        raise CliError("max-n must be at least 1")
    body = "".join(
        "%d %d\n" % (n, v)
        for n, v in enumerate(sequence_values(pattern, args.max_n), start=1)
    )
    if args.out == "-":
        sys.stdout.write(body)
        return 0
    try:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(body)
    except OSError as exc:
        raise CliError("cannot write %s: %s" % (args.out, exc), code=1) from None
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vincat",
        description="Count Catalan words avoiding a three-letter dashed pattern.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count avoiders of one pattern at one length")
    p.add_argument("--pattern", required=True, help="dashed pattern, e.g. 2-21")
    p.add_argument("--n", type=int, required=True, help="word length")
    p.add_argument(
        "--method",
        choices=("auto",) + METHOD_NAMES,
        default="auto",
        help="counting method (auto picks the fastest applicable)",
    )
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("series", help="print generating-function coefficients")
    p.add_argument("--pattern", required=True)
    p.add_argument(
        "--order",
        type=int,
        default=None,
        help="highest power of t (default $%s or %d)" % (ORDER_ENV, DEFAULT_ORDER),
    )
    p.set_defaults(func=cmd_series)

    p = sub.add_parser(
        "verify", help="cross-check every method against the reference rows"
    )
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, dest="max_n")
    p.add_argument("--order", type=int, default=None)
    p.add_argument(
        "--methods",
        default=",".join(METHOD_NAMES),
        help="comma-separated subset of %s" % (", ".join(METHOD_NAMES)),
    )
    p.add_argument("--format", choices=FORMATS, default="text", dest="fmt")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bfile", help="write an OEIS-style b-file")
    p.add_argument("--pattern", required=True)
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, dest="max_n")
    p.add_argument("--out", default="-", help="output path, - for stdout")
    p.set_defaults(func=cmd_bfile)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return exc.code
    except (PatternError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
