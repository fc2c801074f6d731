#!/usr/bin/env python3
"""Print a side-by-side step comparison for each task on small sample inputs.

Useful as a quick look at what the trace model produces without starting the
web UI:

    python3 scripts/compare_methods_demo.py
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from linsteps import Matrix, align_traces
from linsteps.registry import compute
from linsteps.render import render_table_comparison

SAMPLES = [
    ("determinant", ["laplace", "sarrus", "lu"],
     {"A": Matrix.from_rows([[2, 0, 1], [1, 3, -1], [0, 5, 4]])}),
    ("multiply", ["naive", "winograd"],
     {"A": Matrix.from_rows([[1, 2], [3, 4]]), "B": Matrix.from_rows([[5, 6], [7, 8]])}),
    ("inverse", ["cramer", "cayley_hamilton"],
     {"A": Matrix.from_rows([[2, 1], [5, 3]])}),
    ("solve", ["gauss", "cramer"],
     {"A": Matrix.from_rows([[1, 1], [1, -1]]), "b": Matrix.column([2, 0])}),
]


def main() -> int:
    for task, methods, inputs in SAMPLES:
        outcomes = compute(task, methods, inputs)
        traces = [o.trace for o in outcomes if o.ok]
        print(f"\n===== {task}: {' vs '.join(methods)} =====")
        print(render_table_comparison(align_traces(traces), width=52))
    return 0


if __name__ == "__main__":
    sys.exit(main())
