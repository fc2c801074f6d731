import dataclasses
import json
from fractions import Fraction

import pytest

from linsteps import (EmptyTrace, InputMismatch, Matrix, OpCount, TaskMismatch,
                      TraceBuilder, align_traces, canonical_json, det_laplace,
                      det_lu, det_sarrus, eigen_rational, mul_strassen,
                      solve_gauss, trace_from_json, trace_to_json, verify_trace)
from linsteps.trace import Step

from _oracles import oracle_for


def _single_step_trace(cost=OpCount(1, 0, 0)):
    m = Matrix.identity(2)
    builder = TraceBuilder("determinant", "demo", {"A": m})
    builder.add("combine", "only step", {}, Fraction(1), cost=cost)
    return builder.finish()


def test_single_step_total_cost():
    t = _single_step_trace()
    assert t.total_cost == OpCount(1, 0, 0)
    assert t.final_result == 1


def test_componentwise_cost_sum():
    builder = TraceBuilder("determinant", "demo", {"A": Matrix.identity(2)})
    builder.add("combine", "first", {}, Fraction(0), cost=OpCount(1, 0, 0))
    builder.add("combine", "second", {}, Fraction(1), cost=OpCount(2, 3, 0))
    t = builder.finish()
    assert t.total_cost == OpCount(3, 3, 0)


def test_empty_trace_rejected():
    builder = TraceBuilder("determinant", "demo", {"A": Matrix.identity(2)})
    with pytest.raises(EmptyTrace):
        builder.finish()


def test_verify_valid_laplace_trace():
    value, trace = det_laplace(Matrix.from_rows([[1, 2], [3, 4]]))
    assert value == -2
    report = verify_trace(trace, oracle_for("determinant"))
    assert report.passed, report.failures()


def test_verify_flags_tampered_final_result():
    _, trace = det_laplace(Matrix.from_rows([[1, 2], [3, 4]]))
    bad = dataclasses.replace(trace, final_result=Fraction(99))
    report = verify_trace(bad, oracle_for("determinant"))
    names = {c.name for c in report.failures()}
    assert "final_matches_oracle" in names


def test_verify_flags_index_gap():
    t = _single_step_trace()
    gappy_steps = (t.steps[0], dataclasses.replace(t.steps[0], index=5))
    bad = dataclasses.replace(t, steps=gappy_steps,
                              total_cost=t.total_cost + t.steps[0].cost)
    report = verify_trace(bad, oracle_for("determinant"))
    assert any(c.name == "step_indices_contiguous" for c in report.failures())


def test_verify_flags_cost_drift():
    t = _single_step_trace()
    bad = dataclasses.replace(t, total_cost=OpCount(9, 9, 9))
    report = verify_trace(bad, lambda inputs: Fraction(1))
    assert any(c.name == "total_cost_consistent" for c in report.failures())


def test_align_pads_to_longest():
    a = Matrix.from_rows([[1, 2, 3], [4, 5, 6], [7, 8, 10]])
    _, t_laplace = det_laplace(a)
    _, t_sarrus = det_sarrus(a)
    table = align_traces([t_laplace, t_sarrus])
    assert table.row_count == max(len(t_laplace.steps), len(t_sarrus.steps))
    assert [c.method_id for c in table.columns] == ["laplace", "sarrus"]
    sarrus_cells = table.columns[1].cells
    assert all(s is None for s in sarrus_cells[len(t_sarrus.steps):])
    assert all(s is not None for s in table.columns[0].cells)


def test_align_single_trace():
    _, t = det_lu(Matrix.identity(3))
    table = align_traces([t])
    assert table.row_count == len(t.steps)
    assert len(table.columns) == 1


def test_align_rejects_different_inputs():
    _, t1 = det_lu(Matrix.identity(2))
    _, t2 = det_lu(Matrix.from_rows([[1, 2], [3, 4]]))
    with pytest.raises(InputMismatch):
        align_traces([t1, t2])


def test_align_rejects_different_tasks():
    _, t1 = det_lu(Matrix.identity(2))
    _, t2 = eigen_rational(Matrix.identity(2))
    with pytest.raises(TaskMismatch):
        align_traces([t1, t2])


@pytest.mark.parametrize("make", [
    lambda: det_laplace(Matrix.from_rows([[1, 2], [3, 4]]))[1],
    lambda: det_lu(Matrix.from_rows([["1/2", 2], [3, 4]]))[1],
    lambda: mul_strassen(Matrix.from_rows([[1, 2], [3, 4]]), Matrix.identity(2))[1],
    lambda: eigen_rational(Matrix.from_rows([[2, 0], [0, 3]]))[1],
    lambda: solve_gauss(Matrix.from_rows([[1, 1]]), Matrix.column([2]))[1],
])
def test_json_round_trip_is_identity(make):
    trace = make()
    doc = json.loads(canonical_json(trace_to_json(trace)))
    assert trace_from_json(doc) == trace


def test_step_snapshots_share_immutable_values():
    a = Matrix.from_rows([[1, 2], [3, 4]])
    _, trace = det_laplace(a)
    assert trace.inputs["A"] == a
    for step in trace.steps:
        assert isinstance(step, Step)
