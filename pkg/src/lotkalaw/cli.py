"""Command line front end.

Five subcommands: ingest, fit, ks, pattern, report. Exit codes: 0 on
success, 1 for usage problems, 2 for bad input data, 3 for numeric
failures. Error text goes to stderr; nothing is written to stdout on an
error path. Identical inputs and flags always produce byte-identical
output.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from math import log10
from pathlib import Path

from .collab import authorship_pattern, collab_metrics, render_pattern_csv
from .corpus import (
    CountingMethod,
    ProductivityDistribution,
    PublicationRecord,
    count_productivity,
    dump_distribution,
    load_distribution,
    parse_records,
)
from .errors import DataError, NumericError
from .gof import COEFFICIENT_PRESETS, render_report_csv, ks_report, run_ks
from .lotka import expected_proportion, fit_power_law

__all__ = ["main", "build_parser", "RunConfig", "UsageError"]


class UsageError(Exception):
    """Bad flags or flag combinations; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse calls this on any usage problem
        raise UsageError(message)


@dataclass
class RunConfig:
    """Everything one invocation needs, resolved from flags."""

    command: str
    input_path: str
    input_kind: str = "auto"
    counting: CountingMethod = CountingMethod.COMPLETE
    output_format: str = "csv"
    c_method: str = "zeta"
    c_limit: int = 1_000_000
    c_digits: int | None = 2
    truncate_x: int | None = None
    coefficient: float | None = None
    ks_variant: str = "both"
    dense_expected: bool = False
    period_length: int = 5
    origin_year: int | None = None
    plot_out: str | None = None


# ---------------------------------------------------------------------------
# parser construction

def _add_input_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--input", required=True, help="input file path")
    sub.add_argument(
        "--input-kind",
        choices=["auto", "pipe", "jsonl", "distribution"],
        default="auto",
        help="input layout; auto sniffs the first content line",
    )
    sub.add_argument(
        "--counting",
        choices=[m.value for m in CountingMethod],
        default=CountingMethod.COMPLETE.value,
        help="credit every listed author (complete) or only the first (straight)",
    )
    sub.add_argument(
        "--format",
        dest="output_format",
        choices=["csv", "json"],
        default=None,
        help="output format (default csv; report always emits json)",
    )


def _add_fit_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--c-method",
        default="zeta",
        help="constant evaluation: 'zeta' or 'sum:<terms>' (default zeta)",
    )
    sub.add_argument(
        "--c-digits",
        default="2",
        help="round the exponent to this many decimals before the constant "
        "lookup; 'full' disables the rounding (default 2)",
    )
    sub.add_argument(
        "--truncate-x",
        type=int,
        default=None,
        help="ignore productivity levels above this value when fitting",
    )


def _add_ks_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--coefficient", type=float, default=None, help="critical value numerator")
    sub.add_argument(
        "--preset",
        choices=sorted(COEFFICIENT_PRESETS),
        default=None,
        help="named coefficient: " + ", ".join(
            f"{k}={v}" for k, v in sorted(COEFFICIENT_PRESETS.items())
        ),
    )
    sub.add_argument(
        "--ks-variant",
        choices=["standard", "pointwise", "both"],
        default="both",
        help="which statistic to report (default both)",
    )
    sub.add_argument(
        "--dense-expected",
        action="store_true",
        help="accumulate expected proportions over every integer level, "
        "not just the observed ones",
    )


def _add_pattern_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--period", type=int, default=5, help="years per period (default 5)")
    sub.add_argument(
        "--origin",
        type=int,
        default=None,
        help="first year of the first period (default: earliest record year)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lotkalaw", description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("ingest", help="parse records and emit the counted distribution")
    _add_input_flags(sub)

    sub = subs.add_parser("fit", help="fit the inverse power law")
    _add_input_flags(sub)
    _add_fit_flags(sub)

    sub = subs.add_parser("ks", help="fit, then test conformity")
    _add_input_flags(sub)
    _add_fit_flags(sub)
    _add_ks_flags(sub)

    sub = subs.add_parser("pattern", help="authorship pattern table and collaboration metrics")
    _add_input_flags(sub)
    _add_pattern_flags(sub)

    sub = subs.add_parser("report", help="combined JSON report with plot-ready data")
    _add_input_flags(sub)
    _add_fit_flags(sub)
    _add_ks_flags(sub)
    _add_pattern_flags(sub)
    sub.add_argument("--plot-out", default=None, help="also write plot-ready CSV here")

    return parser


def _parse_c_method(text: str) -> tuple[str, int]:
    if text == "zeta":
        return "zeta", 1_000_000
    if text == "sum":
        return "sum", 1_000_000
    match = re.fullmatch(r"sum:(\d+)", text)
    if match:
        limit = int(match.group(1))
        if limit < 1:
            raise UsageError("--c-method sum:<terms> needs at least one term")
        return "sum", limit
    raise UsageError(f"bad --c-method {text!r}; expected 'zeta' or 'sum:<terms>'")


def _parse_c_digits(text: str) -> int | None:
    if text == "full":
        return None
    try:
        digits = int(text)
    except ValueError:
        raise UsageError(f"bad --c-digits {text!r}; expected an integer or 'full'") from None
    if digits < 0:
        raise UsageError("--c-digits must be >= 0")
    return digits


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    config = RunConfig(
        command=args.command,
        input_path=args.input,
        input_kind=args.input_kind,
        counting=CountingMethod(args.counting),
    )
    default_format = "json" if args.command == "report" else "csv"
    if args.output_format is None:
        config.output_format = default_format
    elif args.command == "report" and args.output_format != "json":
        raise UsageError("report emits a json document; use --plot-out for csv plot data")
    else:
        config.output_format = args.output_format
    if hasattr(args, "c_method"):
        config.c_method, config.c_limit = _parse_c_method(args.c_method)
        config.c_digits = _parse_c_digits(args.c_digits)
        config.truncate_x = args.truncate_x
    if hasattr(args, "coefficient"):
        if args.coefficient is not None and args.preset is not None:
            raise UsageError("pass either --coefficient or --preset, not both")
        if args.coefficient is not None:
            config.coefficient = args.coefficient
        elif args.preset is not None:
            config.coefficient = COEFFICIENT_PRESETS[args.preset]
        else:
            raise UsageError(f"{args.command} requires --coefficient or --preset")
        config.ks_variant = args.ks_variant
        config.dense_expected = args.dense_expected
    if hasattr(args, "period"):
        if args.period < 1:
            raise UsageError("--period must be >= 1")
        config.period_length = args.period
        config.origin_year = args.origin
    if hasattr(args, "plot_out"):
        config.plot_out = args.plot_out
    return config


# ---------------------------------------------------------------------------
# input handling

def _detect_kind(text: str) -> str:
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("{"):
            return "jsonl"
        if "|" in line:
            return "pipe"
        squeezed = line.replace(" ", "").lower()
        if squeezed == "x,y" or re.fullmatch(r"\d+,\d+", squeezed):
            return "distribution"
        raise DataError(
            f"cannot tell what kind of input {line[:40]!r} starts; pass --input-kind"
        )
    raise DataError("input file is empty; pass --input-kind if this is intended")


def _load_input(
    config: RunConfig,
) -> tuple[list[PublicationRecord] | None, ProductivityDistribution | None]:
    """Returns (records, None) for record files, (None, dist) for tables."""
    try:
        data = Path(config.input_path).read_bytes()
    except OSError as exc:
        raise DataError(f"cannot read {config.input_path}: {exc.strerror}") from None
    kind = config.input_kind
    if kind == "auto":
        try:
            decoded = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DataError(f"input is not valid UTF-8: {exc}") from None
        kind = _detect_kind(decoded)
    if kind == "distribution":
        return None, load_distribution(data)
    return parse_records(data, fmt=kind), None


def _distribution_for(config: RunConfig) -> tuple[
    ProductivityDistribution, list[PublicationRecord] | None
]:
    records, dist = _load_input(config)
    if dist is None:
        dist = count_productivity(records, config.counting)
    return dist, records


# ---------------------------------------------------------------------------
# commands

def _fit_for(config: RunConfig, dist: ProductivityDistribution):
    return fit_power_law(
        dist,
        c_method=config.c_method,
        limit=config.c_limit,
        constant_digits=config.c_digits,
        max_x=config.truncate_x,
    )


def _json_doc(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _bool_text(flag: bool) -> str:
    return "true" if flag else "false"


def cmd_ingest(config: RunConfig) -> str:
    dist, _ = _distribution_for(config)
    if config.output_format == "json":
        return _json_doc(dist.to_dict())
    return dump_distribution(dist)


def cmd_fit(config: RunConfig) -> str:
    dist, _ = _distribution_for(config)
    fit = _fit_for(config, dist)
    if config.output_format == "json":
        return _json_doc(fit.to_dict())
    lines = [
        "field,value,display",
        f"n,{fit.n!r},{fit.n:.2f}",
        f"c,{fit.c!r},{fit.c:.4f}",
        f"intercept,{fit.intercept!r},{fit.intercept:.2f}",
        f"sum_x,{fit.sums.sum_x!r},",
        f"sum_y,{fit.sums.sum_y!r},",
        f"sum_xy,{fit.sums.sum_xy!r},",
        f"sum_x2,{fit.sums.sum_x2!r},",
        f"point_count,{fit.sums.point_count},",
    ]
    return "".join(line + "\n" for line in lines)


def _ks_summary_pairs(fit, result, variant: str) -> list[tuple[str, str]]:
    pairs = [
        ("n", repr(fit.n)),
        ("c", repr(fit.c)),
        ("intercept", repr(fit.intercept)),
        ("total_authors", str(result.total_authors)),
        ("coefficient", repr(result.coefficient)),
        ("critical_value", repr(result.critical_value)),
    ]
    if variant in ("pointwise", "both"):
        pairs.append(("d_max_pointwise", repr(result.d_max_pointwise)))
        pairs.append(("conforms_pointwise", _bool_text(result.conforms_pointwise)))
    if variant in ("standard", "both"):
        pairs.append(("d_max_cumulative", repr(result.d_max_cumulative)))
        pairs.append(("conforms_cumulative", _bool_text(result.conforms_cumulative)))
    return pairs


def _filtered_result_dict(result, variant: str) -> dict:
    doc = result.to_dict()
    if variant == "standard":
        doc.pop("d_max_pointwise")
        doc.pop("conforms_pointwise")
    elif variant == "pointwise":
        doc.pop("d_max_cumulative")
        doc.pop("conforms_cumulative")
    return doc


def cmd_ks(config: RunConfig) -> str:
    dist, _ = _distribution_for(config)
    fit = _fit_for(config, dist)
    report = ks_report(dist, fit.n, fit.c, dense_expected=config.dense_expected)
    result = run_ks(
        dist, fit.n, fit.c, config.coefficient, dense_expected=config.dense_expected
    )
    if config.output_format == "json":
        return _json_doc(
            {
                "fit": fit.to_dict(),
                "result": _filtered_result_dict(result, config.ks_variant),
                "rows": [row.__dict__ for row in report],
            }
        )
    summary = "".join(
        f"{k},{v}\n" for k, v in _ks_summary_pairs(fit, result, config.ks_variant)
    )
    return render_report_csv(report) + "\nmetric,value\n" + summary


def cmd_pattern(config: RunConfig) -> str:
    records, dist = _load_input(config)
    if records is None:
        raise DataError("pattern requires records input, not a distribution table")
    table = authorship_pattern(
        records, period_length=config.period_length, origin_year=config.origin_year
    )
    metrics = collab_metrics(records)
    if config.output_format == "json":
        return _json_doc({"pattern": table.to_dict(), "metrics": metrics.to_dict()})
    metric_lines = "".join(
        f"{k},{v!r}\n" if isinstance(v, float) else f"{k},{v}\n"
        for k, v in metrics.to_dict().items()
    )
    return render_pattern_csv(table) + "\nmetric,value\n" + metric_lines


def _plot_rows(dist: ProductivityDistribution, n: float, c: float) -> list[list[float]]:
    total = dist.total_authors
    rows = []
    for x, y in dist.points:
        expected_count = expected_proportion(n, c, x) * total
        rows.append([log10(x), log10(y), log10(expected_count)])
    return rows


def cmd_report(config: RunConfig) -> str:
    records, dist = _load_input(config)
    if dist is None:
        dist = count_productivity(records, config.counting)
    fit = _fit_for(config, dist)
    report = ks_report(dist, fit.n, fit.c, dense_expected=config.dense_expected)
    result = run_ks(
        dist, fit.n, fit.c, config.coefficient, dense_expected=config.dense_expected
    )
    plot_rows = _plot_rows(dist, fit.n, fit.c)
    doc = {
        "input": {"path": config.input_path, "counting": config.counting.value},
        "distribution": dist.to_dict(),
        "fit": fit.to_dict(),
        "ks": _filtered_result_dict(result, config.ks_variant),
        "ks_rows": [row.__dict__ for row in report],
        "plot_data": plot_rows,
        "pattern": None,
        "collaboration": None,
    }
    if records is not None:
        table = authorship_pattern(
            records, period_length=config.period_length, origin_year=config.origin_year
        )
        doc["pattern"] = table.to_dict()
        doc["collaboration"] = collab_metrics(records).to_dict()
    if config.plot_out is not None:
        lines = ["log10_x,log10_observed,log10_expected"]
        lines += [f"{r[0]!r},{r[1]!r},{r[2]!r}" for r in plot_rows]
        try:
            Path(config.plot_out).write_text(
                "".join(line + "\n" for line in lines), encoding="utf-8"
            )
        except OSError as exc:
            raise DataError(f"cannot write {config.plot_out}: {exc.strerror}") from None
    return _json_doc(doc)


_COMMANDS = {
    "ingest": cmd_ingest,
    "fit": cmd_fit,
    "ks": cmd_ks,
    "pattern": cmd_pattern,
    "report": cmd_report,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        config = _config_from_args(args)
        output = _COMMANDS[config.command](config)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except DataError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 2
    except NumericError as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return 3
    sys.stdout.write(output)
    return 0
