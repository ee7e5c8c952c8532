"""Command-line front end.

Subcommands: analyze (one n), sweep (a range), audit (range + verdict),
export-dot (Graphviz text).  Exit codes: 0 success, 1 usage or input
error, 2 audit found mismatches.
"""
from __future__ import annotations

import argparse
import sys

from .errors import NoZeroDivisorsError, ResourceLimitError
from .graphs import build_explicit, export_dot
from .harness import analyze, audit, csv_row, render, sweep


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--format", choices=("csv", "json"), default="csv",
        help="output format (default csv)",
    )
    sub.add_argument(
        "--output", default=None, metavar="PATH",
        help="write to PATH instead of stdout",
    )
    sub.add_argument(
        "--jobs", type=int, default=1, metavar="K",
        help="worker processes for range commands (default 1)",
    )
    sub.add_argument(
        "--oracle", choices=("flow", "exhaustive"), default="flow",
        help="connectivity engine (default flow)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zdg",
        description="Zero-divisor graph connectivity: compute, sweep, audit.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    p_analyze = commands.add_parser("analyze", help="audit a single n")
    p_analyze.add_argument("--n", type=int, required=True)
    _add_common(p_analyze)

    p_sweep = commands.add_parser("sweep", help="audit a whole range")
    p_sweep.add_argument("--from", dest="start", type=int, required=True)
    p_sweep.add_argument("--to", dest="stop", type=int, required=True)
    _add_common(p_sweep)

    p_audit = commands.add_parser(
        "audit", help="sweep a range, print offenders and a verdict"
    )
    p_audit.add_argument("--from", dest="start", type=int, required=True)
    p_audit.add_argument("--to", dest="stop", type=int, required=True)
    _add_common(p_audit)

    p_dot = commands.add_parser("export-dot", help="emit Graphviz DOT text")
    p_dot.add_argument("--n", type=int, required=True)
    p_dot.add_argument(
        "--color-classes", action="store_true",
        help="fill vertices by divisor class",
    )
    _add_common(p_dot)

    return parser


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", newline="") as handle:
            handle.write(text)


def _cmd_analyze(args) -> int:
    finding = analyze(args.n, oracle=args.oracle)
    _emit(render([finding], args.format), args.output)
    return 0


def _cmd_sweep(args) -> int:
    findings = sweep(
        args.start, args.stop, jobs=args.jobs, oracle=args.oracle
    )
    _emit(render(findings, args.format), args.output)
    return 0


def _cmd_audit(args) -> int:
    result = audit(args.start, args.stop, jobs=args.jobs, oracle=args.oracle)
    lines = [csv_row(r) for r in result.rows if r.skip_reason or not r.match]
    lines.append(result.summary())
    _emit("\n".join(lines) + "\n", args.output)
    return 2 if result.mismatches else 0


def _cmd_export_dot(args) -> int:
    graph = build_explicit(args.n)
    _emit(export_dot(graph, color_by_class=args.color_classes), args.output)
    return 0


_COMMANDS = {
    "analyze": _cmd_analyze,
    "sweep": _cmd_sweep,
    "audit": _cmd_audit,
    "export-dot": _cmd_export_dot,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:
        # argparse exits 2 on bad usage and 0 on --help; fold usage into 1
        return 0 if exit_.code == 0 else 1
    try:
        return _COMMANDS[args.command](args)
    except (NoZeroDivisorsError, ResourceLimitError, ValueError, OSError) as err:
        print(f"zdg: error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
