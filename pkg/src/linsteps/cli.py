"""Command-line front door: compute, compare, verify, benchmark, serve.

Exit codes: 0 success, 1 computation error (e.g. SingularMatrix), 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bench import BenchConfig, run_bench
from .errors import (ConfigInvalid, EngineError, ParseError, TaskMismatch,
                     UnknownMethod)
from .matmul import VARIANTS
from .pedagogy import verify_sw_basis
from .registry import (METHODS, check_cap, compute_payload, find_method,
                       methods_for_task, parse_task_inputs)
from .render import (render_bench_table, render_markdown_comparison,
                     render_methods_table, render_table_comparison,
                     render_verify_report)
from .trace import align_traces, canonical_json, trace_from_json

SUBCOMMAND_TASKS = {"mul": "multiply", "det": "determinant", "inv": "inverse",
                    "eigen": "eigen", "solve": "solve"}

USAGE_ERRORS = (ParseError, UnknownMethod, TaskMismatch, ConfigInvalid)


def _int_list(text: str):
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linsteps",
        description="Exact linear algebra with step-by-step traces and method comparison.")
    sub = parser.add_subparsers(dest="command", required=True)

    for command, task in SUBCOMMAND_TASKS.items():
        p = sub.add_parser(command, help=f"compute a {task} with one or more methods")
        p.add_argument("--method", action="append", default=None, metavar="ID",
                       help="method id; repeat for a side-by-side comparison "
                            "(default: every method registered for the task)")
        p.add_argument("--input", required=True, metavar="FILE.json",
                       help='input envelope, e.g. {"A": {...}} or {"A": {...}, "B": {...}}')
        p.add_argument("--format", choices=("json", "markdown", "table"), default="table")
        p.add_argument("--out", default=None, metavar="PATH", help="write output here instead of stdout")

    p = sub.add_parser("verify-sw", help="run the four basis-matrix checks plus linearity checks")
    p.add_argument("--variant", choices=VARIANTS, default="winograd")
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "table"), default="table")

    p = sub.add_parser("bench", help="naive vs block-recursion crossover benchmark")
    p.add_argument("--sizes", type=_int_list, default=(2, 4, 8, 16))
    p.add_argument("--entry-bits", type=int, default=32)
    p.add_argument("--thresholds", type=_int_list, default=(8,))
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--variants", default="winograd",
                   help="comma-separated subset of strassen,winograd")
    p.add_argument("--csv", default=None, metavar="PATH", help="also write rows as CSV")

    p = sub.add_parser("serve", help="run the HTTP JSON API")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--bind", default="127.0.0.1")
    p.add_argument("--no-cors", action="store_true", help="do not send permissive CORS headers")

    p = sub.add_parser("methods", help="list every registered method")
    p.add_argument("--format", choices=("json", "table"), default="table")

    return parser


def _emit(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _run_compute(command: str, args) -> int:
    task = SUBCOMMAND_TASKS[command]
    try:
        with open(args.input, "r", encoding="utf-8") as fh:
            payload = json.load(fh)
    except OSError as exc:
        print(f"cannot read {args.input}: {exc}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as exc:
        print(f"ParseError: {args.input} is not valid JSON: {exc}", file=sys.stderr)
        return 2

    method_ids = args.method or [m.method_id for m in methods_for_task(task)]
    for mid in method_ids:
        find_method(task, mid)  # raises UnknownMethod/TaskMismatch -> exit 2
    inputs = parse_task_inputs(task, payload)
    check_cap(inputs)

    result = compute_payload(task, method_ids, inputs)
    traces_json = [t for t in result["traces"] if "error" not in t]
    errors = [t for t in result["traces"] if "error" in t]
    if not traces_json:
        first = errors[0]
        print(f"{first['error']}: {first['message']}", file=sys.stderr)
        return 1

    if args.format == "json":
        if len(method_ids) == 1:
            _emit(canonical_json(result["traces"][0]), args.out)
        else:
            _emit(canonical_json(result), args.out)
        return 0

    traces = [trace_from_json(t) for t in traces_json]
    if args.format == "markdown":
        _emit(render_markdown_comparison(traces, errors), args.out)
        return 0

    table = align_traces(traces)
    _emit(render_table_comparison(table, errors), args.out)
    return 0


def _run_verify_sw(args) -> int:
    report = verify_sw_basis(args.variant, args.samples, args.seed)
    if args.format == "json":
        print(canonical_json(report.to_json()))
    else:
        print(render_verify_report(report))
    return 0 if report.overall_pass else 1


def _run_bench(args) -> int:
    variants = tuple(v.strip() for v in args.variants.split(",") if v.strip())
    cfg = BenchConfig(sizes=tuple(args.sizes), entry_bits=args.entry_bits,
                      thresholds=tuple(args.thresholds), repetitions=args.reps,
                      seed=args.seed, variants=variants)
    report = run_bench(cfg)
    print(render_bench_table(report))
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            fh.write(report.to_csv())
        print(f"wrote {args.csv}")
    return 0


def _run_methods(args) -> int:
    if args.format == "json":
        print(canonical_json({"methods": [m.to_json() for m in METHODS]}))
    else:
        print(render_methods_table(METHODS))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        if args.command in SUBCOMMAND_TASKS:
            return _run_compute(args.command, args)
        if args.command == "verify-sw":
            return _run_verify_sw(args)
        if args.command == "bench":
            return _run_bench(args)
        if args.command == "methods":
            return _run_methods(args)
        if args.command == "serve":
            from .service import serve

            serve(port=args.port, bind=args.bind, cors=not args.no_cors)
            return 0
    except USAGE_ERRORS as exc:
        print(f"{exc.code}: {exc}", file=sys.stderr)
        return 2
    except EngineError as exc:
        print(f"{exc.code}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
