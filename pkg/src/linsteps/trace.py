"""The step-by-step solution record.

Every method in the engine produces a :class:`Trace`: an ordered list of
:class:`Step` values, each holding a human-readable description, named
operand snapshots, a result snapshot, and the scalar-operation cost the step
incurred.  Because all snapshot types are immutable, storing a reference is
equivalent to storing a deep copy.

Traces can be replay-checked against an independent oracle
(:func:`verify_trace`) and laid out side by side for method comparison
(:func:`align_traces`).  The JSON schema used by the CLI, HTTP service and UI
is implemented by :func:`trace_to_json` / :func:`trace_from_json` and
round-trips losslessly.

Step kinds are plain strings; the ones emitted by the bundled methods are:
pad, unpad, assemble, dot_product, block_sum, block_product, recombine,
cofactor_expand, diagonal_sum, combine, pivot_swap, row_scale, row_eliminate,
singular, diagonal_product, charpoly_recurrence, cofactor, power_accumulate,
scale, candidates, root_found, deflation, residual, shift, eigenvector,
summary, back_substitute, nullspace_vector, contradiction,
column_determinant, cramer_ratio, decompose, basis_product, verify.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Union

from .errors import EmptyTrace, InputMismatch, ParseError, TaskMismatch
from .matrix import Matrix
from .rational import format_rational, parse_rational

# User-facing tasks; "charpoly" additionally labels the standalone
# characteristic-polynomial trace that inverse/eigen inline.
TASKS = ("multiply", "determinant", "inverse", "eigen", "solve")


@dataclass(frozen=True)
class OpCount:
    """Multiplication/addition/subtraction counters; divisions count as mults."""

    mults: int = 0
    adds: int = 0
    subs: int = 0

    def __post_init__(self):
        if self.mults < 0 or self.adds < 0 or self.subs < 0:
            raise ValueError(f"OpCount components must be nonnegative: {self}")

    def __add__(self, other: "OpCount") -> "OpCount":
        return OpCount(self.mults + other.mults, self.adds + other.adds, self.subs + other.subs)

    def __sub__(self, other: "OpCount") -> "OpCount":
        return OpCount(self.mults - other.mults, self.adds - other.adds, self.subs - other.subs)

    @property
    def total(self) -> int:
        return self.mults + self.adds + self.subs

    def to_json(self) -> dict:
        return {"mults": self.mults, "adds": self.adds, "subs": self.subs}

    @classmethod
    def from_json(cls, obj) -> "OpCount":
        try:
            return cls(int(obj["mults"]), int(obj["adds"]), int(obj["subs"]))
        except (KeyError, TypeError, ValueError):
            raise ParseError(f"bad OpCount JSON: {obj!r}") from None


ZERO_COST = OpCount()


class OpCounter:
    """Mutable tally that algorithms charge scalar operations to."""

    __slots__ = ("mults", "adds", "subs")

    def __init__(self):
        self.mults = 0
        self.adds = 0
        self.subs = 0

    def mul(self, n: int = 1) -> None:
        self.mults += n

    def add(self, n: int = 1) -> None:
        self.adds += n

    def sub(self, n: int = 1) -> None:
        self.subs += n

    def absorb(self, cost: OpCount) -> None:
        self.mults += cost.mults
        self.adds += cost.adds
        self.subs += cost.subs

    def snapshot(self) -> OpCount:
        return OpCount(self.mults, self.adds, self.subs)

    def since(self, mark: OpCount) -> OpCount:
        return self.snapshot() - mark


Snapshot = Union[Fraction, Matrix, object]


@dataclass(frozen=True)
class Step:
    """One textbook sentence of a solution."""

    index: int
    kind: str
    description: str
    operands: dict
    result: Snapshot
    cost: OpCount = ZERO_COST


@dataclass(frozen=True)
class Trace:
    """A finished method run: inputs, ordered steps, final result, total cost."""

    task: str
    method_id: str
    inputs: dict
    steps: tuple
    final_result: Snapshot
    total_cost: OpCount


class TraceBuilder:
    """Single-owner accumulator for a Trace.

    Steps are indexed contiguously from 0.  When the builder is given an
    :class:`OpCounter`, a step added with ``cost=None`` is charged everything
    the tally accumulated since the previous step, which keeps per-step costs
    and the running total consistent by construction.
    """

    def __init__(self, task: str, method_id: str, inputs: dict, tally: Optional[OpCounter] = None):
        self.task = task
        self.method_id = method_id
        self.inputs = dict(inputs)
        self.tally = tally if tally is not None else OpCounter()
        self._steps: list = []
        self._mark = self.tally.snapshot()

    def add(self, kind: str, description: str, operands: dict, result: Snapshot,
            cost: Optional[OpCount] = None) -> "TraceBuilder":
        if cost is None:
            cost = self.tally.since(self._mark)
        self._steps.append(Step(len(self._steps), kind, description, dict(operands), result, cost))
        self._mark = self.tally.snapshot()
        return self

    def inline(self, sub: Trace, prefix: str) -> "TraceBuilder":
        """Splice another trace's steps in, re-indexed and prefix-labelled."""
        for s in sub.steps:
            self._steps.append(Step(len(self._steps), s.kind, prefix + s.description,
                                    s.operands, s.result, s.cost))
        self._mark = self.tally.snapshot()
        return self

    def __len__(self) -> int:
        return len(self._steps)

    def finish(self, final_result: Optional[Snapshot] = None) -> Trace:
        if not self._steps:
            raise EmptyTrace(f"trace for {self.task}/{self.method_id} has no steps")
        last = self._steps[-1].result
        if final_result is None:
            final_result = last
        elif final_result != last:
            raise ValueError("final_result must equal the last step's result snapshot")
        total = ZERO_COST
        for s in self._steps:
            total = total + s.cost
        return Trace(self.task, self.method_id, dict(self.inputs), tuple(self._steps),
                     final_result, total)


# -- replay verification ---------------------------------------------------------


@dataclass(frozen=True)
class VerifyCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class VerifyReport:
    checks: tuple

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> tuple:
        return tuple(c for c in self.checks if not c.passed)


def verify_trace(trace: Trace, oracle: Callable[[dict], Snapshot]) -> VerifyReport:
    """Replay-check a trace against an independent recomputation.

    The oracle receives ``trace.inputs`` and must return the expected final
    value.  Failures are report entries, never exceptions.
    """
    checks = []

    indices = [s.index for s in trace.steps]
    contiguous = indices == list(range(len(trace.steps)))
    checks.append(VerifyCheck(
        "step_indices_contiguous", contiguous,
        "" if contiguous else f"indices {indices} are not 0..{len(trace.steps) - 1}"))

    total = ZERO_COST
    for s in trace.steps:
        total = total + s.cost
    cost_ok = total == trace.total_cost
    checks.append(VerifyCheck(
        "total_cost_consistent", cost_ok,
        "" if cost_ok else f"sum of step costs {total} != total_cost {trace.total_cost}"))

    last_ok = bool(trace.steps) and trace.steps[-1].result == trace.final_result
    checks.append(VerifyCheck(
        "final_matches_last_step", last_ok,
        "" if last_ok else "final_result differs from the last step's result"))

    try:
        expected = oracle(trace.inputs)
        final_ok = expected == trace.final_result
        detail = "" if final_ok else f"oracle says {expected!r}, trace says {trace.final_result!r}"
    except Exception as exc:  # oracle blew up: report, don't raise
        final_ok, detail = False, f"oracle raised {type(exc).__name__}: {exc}"
    checks.append(VerifyCheck("final_matches_oracle", final_ok, detail))

    return VerifyReport(tuple(checks))


# -- side-by-side alignment -------------------------------------------------------


@dataclass(frozen=True)
class ComparisonColumn:
    method_id: str
    cells: tuple          # Step or None (padding past the trace's end)
    final_result: Snapshot
    total_cost: OpCount


@dataclass(frozen=True)
class ComparisonTable:
    """One column per trace, rows padded to the longest trace."""

    task: str
    inputs: dict
    row_count: int
    columns: tuple

    def to_json(self) -> dict:
        return {
            "task": self.task,
            "inputs": {k: v.to_json() for k, v in self.inputs.items()},
            "row_count": self.row_count,
            "columns": [
                {
                    "method_id": col.method_id,
                    "cells": [None if s is None else step_to_json(s) for s in col.cells],
                    "final_result": snapshot_to_json(col.final_result),
                    "total_cost": col.total_cost.to_json(),
                }
                for col in self.columns
            ],
        }


def align_traces(traces) -> ComparisonTable:
    """Lay traces out side by side; they must share task and inputs."""
    traces = list(traces)
    if not traces:
        raise InputMismatch("nothing to align")
    task = traces[0].task
    inputs = traces[0].inputs
    for t in traces[1:]:
        if t.task != task:
            raise TaskMismatch(f"cannot align tasks {task!r} and {t.task!r}")
        if t.inputs != inputs:
            raise InputMismatch("traces were computed from different inputs")
    depth = max(len(t.steps) for t in traces)
    columns = tuple(
        ComparisonColumn(
            t.method_id,
            tuple(t.steps[i] if i < len(t.steps) else None for i in range(depth)),
            t.final_result,
            t.total_cost,
        )
        for t in traces
    )
    return ComparisonTable(task, dict(inputs), depth, columns)


# -- JSON schema ------------------------------------------------------------------


def snapshot_to_json(value: Snapshot):
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, Matrix):
        return value.to_json()
    to_json = getattr(value, "to_json", None)
    if callable(to_json):
        return to_json()
    raise ParseError(f"cannot serialize snapshot of type {type(value).__name__}")


def snapshot_from_json(obj) -> Snapshot:
    if isinstance(obj, str):
        return parse_rational(obj)
    if isinstance(obj, dict):
        if "rows" in obj:
            return Matrix.from_json(obj)
        if "coefficients" in obj:
            from .inverse import CharPoly

            return CharPoly.from_json(obj)
        if "eigenvalues" in obj:
            from .eigen import EigenResult

            return EigenResult.from_json(obj)
        if "classification" in obj:
            from .linsolve import SolveResult

            return SolveResult.from_json(obj)
    raise ParseError(f"unrecognized snapshot JSON: {obj!r}")


def step_to_json(step: Step) -> dict:
    return {
        "index": step.index,
        "kind": step.kind,
        "description": step.description,
        "operands": {k: snapshot_to_json(v) for k, v in step.operands.items()},
        "result": snapshot_to_json(step.result),
        "cost": step.cost.to_json(),
    }


def step_from_json(obj) -> Step:
    try:
        return Step(
            int(obj["index"]),
            str(obj["kind"]),
            str(obj["description"]),
            {k: snapshot_from_json(v) for k, v in obj["operands"].items()},
            snapshot_from_json(obj["result"]),
            OpCount.from_json(obj["cost"]),
        )
    except KeyError as missing:
        raise ParseError(f"step JSON missing key {missing}") from None


def trace_to_json(trace: Trace) -> dict:
    return {
        "task": trace.task,
        "method_id": trace.method_id,
        "inputs": {k: v.to_json() for k, v in trace.inputs.items()},
        "steps": [step_to_json(s) for s in trace.steps],
        "final_result": snapshot_to_json(trace.final_result),
        "total_cost": trace.total_cost.to_json(),
    }


def trace_from_json(obj) -> Trace:
    try:
        return Trace(
            str(obj["task"]),
            str(obj["method_id"]),
            {k: Matrix.from_json(v) for k, v in obj["inputs"].items()},
            tuple(step_from_json(s) for s in obj["steps"]),
            snapshot_from_json(obj["final_result"]),
            OpCount.from_json(obj["total_cost"]),
        )
    except KeyError as missing:
        raise ParseError(f"trace JSON missing key {missing}") from None


def canonical_json(payload) -> str:
    """The one serialization used everywhere byte-identical output matters."""
    return json.dumps(payload, indent=2, ensure_ascii=True)
