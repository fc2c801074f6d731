"""Plain-text and Markdown renderers for traces, comparisons and reports."""

from __future__ import annotations

from .matrix import Matrix
from .trace import ComparisonTable, Trace


def matrix_lines(m: Matrix) -> list:
    cells = [[str(m[i, j]) for j in range(m.cols)] for i in range(m.rows)]
    widths = [max(len(cells[i][j]) for i in range(m.rows)) for j in range(m.cols)]
    return ["| " + "  ".join(cells[i][j].rjust(widths[j]) for j in range(m.cols)) + " |"
            for i in range(m.rows)]


def _snapshot_text(value) -> str:
    if isinstance(value, Matrix):
        return "\n".join(matrix_lines(value))
    return str(value)


def _cost_text(cost) -> str:
    return f"mults={cost.mults} adds={cost.adds} subs={cost.subs}"


def render_markdown_trace(trace: Trace) -> str:
    out = [f"## {trace.task} via `{trace.method_id}`", ""]
    for name, m in trace.inputs.items():
        out.append(f"Input `{name}`:")
        out.append("")
        out.append("```")
        out.extend(matrix_lines(m))
        out.append("```")
        out.append("")
    for step in trace.steps:
        out.append(f"{step.index + 1}. {step.description}")
        if isinstance(step.result, Matrix):
            out.append("")
            out.append("    ```")
            out.extend("    " + line for line in matrix_lines(step.result))
            out.append("    ```")
            out.append("")
    out.append("")
    out.append(f"Final result ({_cost_text(trace.total_cost)}):")
    out.append("")
    out.append("```")
    out.append(_snapshot_text(trace.final_result))
    out.append("```")
    return "\n".join(out)


def render_markdown_comparison(payload_traces, errors) -> str:
    sections = [render_markdown_trace(t) for t in payload_traces]
    for err in errors:
        sections.append(f"## {err['method_id']}\n\nFailed: `{err['error']}` {err.get('message', '')}")
    return "\n\n".join(sections)


def _clip(text: str, width: int) -> str:
    return text if len(text) <= width else text[: width - 3] + "..."


def render_table_comparison(table: ComparisonTable, errors=(), width: int = 44) -> str:
    headers = [col.method_id for col in table.columns]
    out = []
    header = " | ".join(h.ljust(width) for h in headers)
    out.append(header)
    out.append("-+-".join("-" * width for _ in headers))
    for row in range(table.row_count):
        cells = []
        for col in table.columns:
            step = col.cells[row]
            text = "" if step is None else f"{step.index + 1}. {step.description}"
            cells.append(_clip(text, width).ljust(width))
        out.append(" | ".join(cells))
    out.append("-+-".join("-" * width for _ in headers))
    out.append(" | ".join(
        _clip(f"final: {_snapshot_text(col.final_result)!s}".replace("\n", " "), width).ljust(width)
        for col in table.columns))
    out.append(" | ".join(
        _clip(f"cost: {_cost_text(col.total_cost)}", width).ljust(width)
        for col in table.columns))
    for err in errors:
        out.append(f"[{err['method_id']}] failed: {err['error']} {err.get('message', '')}")
    return "\n".join(out)


def render_methods_table(descriptors) -> str:
    rows = [("TASK", "METHOD", "NAME", "APPLICABILITY")]
    rows.extend((d.task, d.method_id, d.name, d.applicability) for d in descriptors)
    widths = [max(len(r[c]) for r in rows) for c in range(4)]
    return "\n".join("  ".join(r[c].ljust(widths[c]) for c in range(4)).rstrip() for r in rows)


def render_verify_report(report) -> str:
    from .pedagogy import scheme_formulas

    out = ["Basis-matrix checks for the 7-product scheme "
           f"(variant={report.variant}, samples={report.samples}, seed={report.seed})", "",
           "scheme under test:"]
    out.extend(f"  {line}" for line in scheme_formulas(report.variant))
    out.append("")
    for check in report.checks:
        pattern = "; ".join(" ".join(row) for row in check.pattern)
        status = "PASS" if check.passed else "FAIL"
        out.append(f"  {check.label}: expected pattern [{pattern}]  ->  {status}")
    additivity = [c for c in report.bilinearity_checks if c.kind == "additivity"]
    homogeneity = [c for c in report.bilinearity_checks if c.kind == "homogeneity"]
    out.append(f"  additivity in B: {sum(c.passed for c in additivity)}/{len(additivity)} passed")
    out.append(f"  homogeneity in B: {sum(c.passed for c in homogeneity)}/{len(homogeneity)} passed")
    out.append("")
    out.append(f"overall: {'PASS' if report.overall_pass else 'FAIL'}")
    return "\n".join(out)


def render_bench_table(report) -> str:
    header = ("size", "method", "variant", "threshold", "median_ns", "mults", "adds", "subs")
    rows = [header]
    for r in report.rows:
        rows.append((str(r.size), r.method, r.variant or "-",
                     str(r.threshold) if r.method == "strassen" else "-",
                     str(r.median_ns), str(r.ops.mults), str(r.ops.adds), str(r.ops.subs)))
    widths = [max(len(row[c]) for row in rows) for c in range(len(header))]
    lines = ["  ".join(row[c].rjust(widths[c]) for c in range(len(header))) for row in rows]
    lines.append("")
    for (variant, threshold), size in sorted(report.crossover_by_config.items()):
        where = f"size {size}" if size is not None else "not reached"
        lines.append(f"crossover ({variant}, threshold {threshold}): {where}")
    lines.append(f"overall crossover: "
                 f"{report.crossover_size if report.crossover_size is not None else 'not reached'}")
    return "\n".join(lines)
