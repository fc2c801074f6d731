"""Linear systems by Gauss-Jordan elimination and by Cramer's rule."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .determinant import det_lu
from .elimination import nullspace_basis, rref
from .errors import (DimensionCapExceeded, DimensionMismatch, NotSquare,
                     ParseError, SingularMatrix)
from .limits import DIMENSION_CAP
from .matrix import Matrix
from .trace import OpCounter, TraceBuilder

CLASSIFICATIONS = ("unique", "infinite", "inconsistent")


@dataclass(frozen=True)
class SolveResult:
    """Outcome of solving A x = b.

    ``unique`` carries a particular solution and no null-space directions;
    ``infinite`` carries both; ``inconsistent`` carries neither.
    """

    classification: str
    particular_solution: Matrix | None
    nullspace_basis: tuple

    def __str__(self) -> str:
        if self.classification == "inconsistent":
            return "inconsistent: no solution"
        x = ", ".join(str(self.particular_solution[i, 0])
                      for i in range(self.particular_solution.rows))
        if self.classification == "unique":
            return f"unique solution x = ({x})"
        return f"infinite solutions: x = ({x}) plus {len(self.nullspace_basis)} free direction(s)"

    def to_json(self) -> dict:
        return {
            "classification": self.classification,
            "particular_solution": (
                None if self.particular_solution is None else self.particular_solution.to_json()
            ),
            "nullspace_basis": [v.to_json() for v in self.nullspace_basis],
        }

    @classmethod
    def from_json(cls, obj) -> "SolveResult":
        try:
            classification = obj["classification"]
            if classification not in CLASSIFICATIONS:
                raise ParseError(f"unknown classification {classification!r}")
            particular = obj["particular_solution"]
            return cls(
                classification,
                None if particular is None else Matrix.from_json(particular),
                tuple(Matrix.from_json(v) for v in obj["nullspace_basis"]),
            )
        except (KeyError, TypeError):
            raise ParseError(f"bad solve-result JSON: {obj!r}") from None


def _check_system(a: Matrix, b: Matrix, max_dim: int) -> None:
    if b.cols != 1:
        raise DimensionMismatch(f"right-hand side must be a column vector, got {b.rows}x{b.cols}")
    if a.rows != b.rows:
        raise DimensionMismatch(f"A has {a.rows} rows but b has {b.rows}")
    if max(a.rows, a.cols) > max_dim:
        raise DimensionCapExceeded(
            f"dimension {max(a.rows, a.cols)} exceeds the trace cap of {max_dim}")


def solve_gauss(a: Matrix, b: Matrix, max_dim: int = DIMENSION_CAP) -> tuple:
    """Reduce the augmented matrix [A|b] to RREF and read the solution off.

    One step per elementary row operation; the classification follows from
    the echelon form, with free variables parameterised in column order.
    """
    _check_system(a, b, max_dim)
    n_vars = a.cols
    tally = OpCounter()
    builder = TraceBuilder("solve", "gauss", {"A": a, "b": b}, tally=tally)
    rows = [list(a.row_values(i)) + [b[i, 0]] for i in range(a.rows)]
    pivots = rref(rows, n_vars, tally=tally, builder=builder)
    rank = len(pivots)

    contradiction = next(
        (r for r in range(rank, a.rows) if rows[r][n_vars] != 0), None)
    if contradiction is not None:
        row = Matrix.from_rows([rows[contradiction]])
        builder.add("contradiction",
                    f"Row {contradiction + 1} reduces to 0 = {rows[contradiction][n_vars]}: "
                    f"the system is inconsistent",
                    {"row": row}, row)
        result = SolveResult("inconsistent", None, ())
        builder.add("summary", "No solution exists", {}, result)
        return result, builder.finish()

    solution = [Fraction(0)] * n_vars
    free_note = "" if rank == n_vars else " (free variables set to 0)"
    for r, pc in enumerate(pivots):
        solution[pc] = rows[r][n_vars]
        builder.add("back_substitute",
                    f"x{pc + 1} = {solution[pc]}{free_note}",
                    {}, solution[pc])
    particular = Matrix.column(solution)

    if rank == n_vars:
        result = SolveResult("unique", particular, ())
        builder.add("summary", "Unique solution", {"x": particular}, result)
        return result, builder.finish()

    basis = nullspace_basis(rows, n_vars, pivots)
    free_cols = [c for c in range(n_vars) if c not in pivots]
    for f, vec in zip(free_cols, basis):
        builder.add("nullspace_vector",
                    f"Null-space direction for free variable x{f + 1}",
                    {}, vec)
    result = SolveResult("infinite", particular, tuple(basis))
    builder.add("summary",
                f"Infinitely many solutions: particular + span of {len(basis)} direction(s)",
                {"x": particular}, result)
    return result, builder.finish()


def solve_cramer(a: Matrix, b: Matrix, max_dim: int = DIMENSION_CAP) -> tuple:
    """x_i = det(A_i)/det(A) with column i of A replaced by b.

    Only defined for nonsingular square systems; the determinants are
    delegated to LU elimination with sub-steps inlined.
    """
    if not a.is_square:
        raise NotSquare(f"Cramer's rule needs a square matrix, got {a.rows}x{a.cols}")
    _check_system(a, b, max_dim)
    n = a.rows
    tally = OpCounter()
    builder = TraceBuilder("solve", "cramer", {"A": a, "b": b}, tally=tally)
    det_a, det_trace = det_lu(a, max_dim)
    builder.inline(det_trace, "[det A] ")
    if det_a == 0:
        raise SingularMatrix("det(A) = 0: Cramer's rule does not apply; "
                             "use method 'gauss' for singular systems")
    column_dets = []
    for i in range(n):
        replaced = a.with_column(i, b)
        det_i, trace_i = det_lu(replaced, max_dim)
        builder.inline(trace_i, f"[det A_{i + 1}] ")
        column_dets.append(det_i)
        builder.add("column_determinant",
                    f"det(A_{i + 1}) with column {i + 1} replaced by b: {det_i}",
                    {"A_i": replaced}, det_i)
    solution = []
    for i, det_i in enumerate(column_dets):
        value = det_i / det_a
        tally.mul()
        builder.add("cramer_ratio",
                    f"x{i + 1} = det(A_{i + 1}) / det(A) = {det_i} / ({det_a}) = {value}",
                    {}, value)
        solution.append(value)
    particular = Matrix.column(solution)
    result = SolveResult("unique", particular, ())
    builder.add("summary", "Unique solution by Cramer's rule", {"x": particular}, result)
    return result, builder.finish()
