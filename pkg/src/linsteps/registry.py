"""Single source of truth for every method the engine exposes.

The CLI `methods` listing, the HTTP method registry and the compute dispatch
all read from METHODS, so a method id accepted anywhere is guaranteed to be
listed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .determinant import det_laplace, det_lu, det_sarrus
from .eigen import eigen_rational
from .errors import (DimensionCapExceeded, EngineError, ParseError,
                     TaskMismatch, UnknownMethod)
from .inverse import inverse_cayley_hamilton, inverse_cramer
from .limits import DIMENSION_CAP, LAPLACE_CAP
from .linsolve import solve_cramer, solve_gauss
from .matmul import StrassenConfig, mul_naive, mul_strassen
from .matrix import Matrix
from .trace import (Trace, align_traces, trace_to_json)

TASKS = ("multiply", "determinant", "inverse", "eigen", "solve")

TASK_INPUT_KEYS = {
    "multiply": ("A", "B"),
    "determinant": ("A",),
    "inverse": ("A",),
    "eigen": ("A",),
    "solve": ("A", "b"),
}


@dataclass(frozen=True)
class MethodDescriptor:
    task: str
    method_id: str
    name: str
    applicability: str
    applicable: Callable[[dict], Optional[str]]  # reason string when not applicable
    run: Callable[[dict], Trace]

    def to_json(self) -> dict:
        return {"task": self.task, "id": self.method_id, "name": self.name,
                "applicability": self.applicability}


def _shapes_multiply(inputs) -> Optional[str]:
    a, b = inputs["A"], inputs["B"]
    if a.cols != b.rows:
        return f"inner dimensions differ: {a.rows}x{a.cols} by {b.rows}x{b.cols}"
    return None


def _square(inputs) -> Optional[str]:
    a = inputs["A"]
    if not a.is_square:
        return f"needs a square matrix, got {a.rows}x{a.cols}"
    return None


def _square_max(limit):
    def check(inputs) -> Optional[str]:
        reason = _square(inputs)
        if reason:
            return reason
        if inputs["A"].rows > limit:
            return f"limited to {limit}x{limit}"
        return None
    return check


def _three_by_three(inputs) -> Optional[str]:
    a = inputs["A"]
    if a.rows != 3 or a.cols != 3:
        return "3x3 only"
    return None


def _solvable(inputs) -> Optional[str]:
    a, b = inputs["A"], inputs["b"]
    if b.cols != 1:
        return "right-hand side must be a column vector"
    if a.rows != b.rows:
        return f"A has {a.rows} rows but b has {b.rows}"
    return None


def _solvable_square(inputs) -> Optional[str]:
    return _solvable(inputs) or _square(inputs)


def _mul_trace(method: Callable) -> Callable[[dict], Trace]:
    return lambda inputs: method(inputs["A"], inputs["B"])[1]


def _unary_trace(method: Callable) -> Callable[[dict], Trace]:
    return lambda inputs: method(inputs["A"])[1]


def _solve_trace(method: Callable) -> Callable[[dict], Trace]:
    return lambda inputs: method(inputs["A"], inputs["b"])[1]


METHODS = (
    MethodDescriptor("multiply", "naive", "Dot product (naive)",
                     "any m x k times k x n", _shapes_multiply, _mul_trace(mul_naive)),
    MethodDescriptor("multiply", "strassen", "Strassen 7-product recursion",
                     "any m x k times k x n (zero-padded internally)", _shapes_multiply,
                     _mul_trace(lambda a, b: mul_strassen(a, b, StrassenConfig(variant="strassen")))),
    MethodDescriptor("multiply", "winograd", "Strassen-Winograd 7-product recursion",
                     "any m x k times k x n (zero-padded internally)", _shapes_multiply,
                     _mul_trace(lambda a, b: mul_strassen(a, b, StrassenConfig(variant="winograd")))),
    MethodDescriptor("determinant", "laplace", "Laplace cofactor expansion",
                     f"square, up to {LAPLACE_CAP}x{LAPLACE_CAP}", _square_max(LAPLACE_CAP),
                     _unary_trace(det_laplace)),
    MethodDescriptor("determinant", "sarrus", "Sarrus' rule",
                     "3x3 only", _three_by_three, _unary_trace(det_sarrus)),
    MethodDescriptor("determinant", "lu", "LU decomposition",
                     "square", _square, _unary_trace(det_lu)),
    MethodDescriptor("inverse", "cramer", "Cramer's rule (adjugate)",
                     "square, nonsingular", _square, _unary_trace(inverse_cramer)),
    MethodDescriptor("inverse", "cayley_hamilton", "Cayley-Hamilton theorem",
                     "square, nonsingular", _square, _unary_trace(inverse_cayley_hamilton)),
    MethodDescriptor("eigen", "rational", "Rational eigenpairs via the characteristic polynomial",
                     "square", _square, _unary_trace(eigen_rational)),
    MethodDescriptor("solve", "gauss", "Gaussian elimination to RREF",
                     "any A with matching right-hand side", _solvable, _solve_trace(solve_gauss)),
    MethodDescriptor("solve", "cramer", "Cramer's rule",
                     "square, nonsingular", _solvable_square, _solve_trace(solve_cramer)),
)

BY_KEY = {(m.task, m.method_id): m for m in METHODS}


def methods_for_task(task: str) -> tuple:
    return tuple(m for m in METHODS if m.task == task)


def find_method(task: str, method_id: str) -> MethodDescriptor:
    descriptor = BY_KEY.get((task, method_id))
    if descriptor is not None:
        return descriptor
    tasks = [m.task for m in METHODS if m.method_id == method_id]
    if tasks:
        raise TaskMismatch(
            f"method '{method_id}' belongs to task(s) {', '.join(sorted(set(tasks)))}, not '{task}'")
    raise UnknownMethod(f"no method with id '{method_id}'")


def parse_task_inputs(task: str, payload: dict) -> dict:
    """Parse the JSON input envelope for a task into named matrices."""
    if task not in TASKS:
        raise UnknownMethod(f"unknown task '{task}'")
    if not isinstance(payload, dict):
        raise ParseError("inputs must be a JSON object")
    inputs = {}
    for key in TASK_INPUT_KEYS[task]:
        if key not in payload:
            raise ParseError(f"task '{task}' needs input '{key}'")
        inputs[key] = Matrix.from_json(payload[key])
    return inputs


def check_cap(inputs: dict, cap: int = DIMENSION_CAP) -> None:
    for name, m in inputs.items():
        if max(m.rows, m.cols) > cap:
            raise DimensionCapExceeded(
                f"input '{name}' is {m.rows}x{m.cols}, above the cap of {cap}x{cap}")


@dataclass(frozen=True)
class ComputeOutcome:
    method_id: str
    trace: Optional[Trace] = None
    error: Optional[str] = None
    message: str = ""

    @property
    def ok(self) -> bool:
        return self.trace is not None


def compute(task: str, method_ids, inputs: dict) -> list:
    """Run each method; failures become error outcomes, not exceptions."""
    descriptors = [find_method(task, mid) for mid in method_ids]
    outcomes = []
    for d in descriptors:
        try:
            outcomes.append(ComputeOutcome(d.method_id, trace=d.run(inputs)))
        except EngineError as exc:
            outcomes.append(ComputeOutcome(d.method_id, error=exc.code, message=str(exc)))
    return outcomes


def compute_payload(task: str, method_ids, inputs: dict) -> dict:
    """The JSON-ready compute result shared verbatim by the CLI and service."""
    outcomes = compute(task, method_ids, inputs)
    traces = [o.trace for o in outcomes if o.ok]
    entries = []
    for o in outcomes:
        if o.ok:
            entries.append(trace_to_json(o.trace))
        else:
            entries.append({"method_id": o.method_id, "error": o.error, "message": o.message})
    comparison = align_traces(traces).to_json() if traces else None
    return {"traces": entries, "comparison": comparison}
