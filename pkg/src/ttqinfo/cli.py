"""Command-line interface: full grid scans, single points, figure exports.

Exit codes: 0 on success, 1 on validation/usage errors, 2 when a completed
scan violates a hard audit (conservation law, inequality slack, positivity).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .qcd_production import BelowThreshold
from .scan import (
    CSV_COLUMNS,
    DEFAULT_CONFIG,
    FIGURE_IDS,
    ParseError,
    ScanConfig,
    Tolerances,
    ValidationError,
    audit_violations,
    evaluate_point,
    load_config,
    run_scan,
    summarize_audits,
    summary_lines,
    write_csv,
    write_figure,
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ttqinfo",
        description=(
            "Scan top-pair spin states over (invariant mass, production angle, "
            "gluon weight) and audit their quantum-information measures."
        ),
    )
    parser.add_argument(
        "--config",
        type=Path,
        default=None,
        help="path to a key-value config file (defaults apply when omitted)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    scan_p = sub.add_parser("scan", help="run the full grid, write CSV + summary")
    scan_p.add_argument(
        "--output-dir", type=Path, default=None, help="override the configured output dir"
    )

    point_p = sub.add_parser("point", help="evaluate one phase-space point")
    point_p.add_argument("--mass", type=float, required=True, help="invariant mass in GeV")
    point_p.add_argument("--theta", type=float, required=True, help="production angle in rad")
    point_p.add_argument("--wgg", type=float, required=True, help="gluon-channel weight in [0,1]")

    figure_p = sub.add_parser("figure", help="export data for one standard figure")
    figure_p.add_argument("--id", required=True, choices=FIGURE_IDS, help="figure panel id")
    figure_p.add_argument(
        "--output-dir", type=Path, default=None, help="override the configured output dir"
    )
    return parser


def _load(args) -> ScanConfig:
    if args.config is None:
        return DEFAULT_CONFIG
    return load_config(args.config.read_text(encoding="utf-8"))


def _cmd_scan(config: ScanConfig, output_dir) -> int:
    out = Path(output_dir) if output_dir is not None else Path(config.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    records, summary = run_scan(config)
    csv_path = out / "scan.csv"
    write_csv(records, csv_path)
    lines = summary_lines(summary)
    (out / "summary.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {csv_path}")
    for line in lines:
        print(line)
    problems = audit_violations(summary, config.tolerances)
    if problems:
        for p in problems:
            print(f"AUDIT VIOLATION: {p}", file=sys.stderr)
        return 2
    return 0


def _cmd_point(config: ScanConfig, args) -> int:
    record = evaluate_point(
        args.mass,
        args.theta,
        args.wgg,
        m_top=config.m_top,
        axes=config.axes,
        closed_form_tol=config.tolerances.closed_form,
    )
    for col in CSV_COLUMNS:
        value = getattr(record, col)
        print(f"{col}={value if isinstance(value, str) else format(value, '.17g')}")
    problems = audit_violations(summarize_audits([record]), config.tolerances)
    if problems:
        for p in problems:
            print(f"AUDIT VIOLATION: {p}", file=sys.stderr)
        return 2
    return 0


def _cmd_figure(config: ScanConfig, args) -> int:
    out = Path(args.output_dir) if args.output_dir is not None else Path(config.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    path = out / f"fig_{args.id}.csv"
    write_figure(config, args.id, path)
    print(f"wrote {path}")
    return 0


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; map to the validation exit code
        return 0 if exc.code == 0 else 1
    try:
        config = _load(args)
        if args.command == "scan":
            return _cmd_scan(config, args.output_dir)
        if args.command == "point":
            return _cmd_point(config, args)
        return _cmd_figure(config, args)
    except (ParseError, ValidationError, BelowThreshold, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
