"""Determinants by cofactor expansion, Sarrus' rule and LU elimination."""

from __future__ import annotations

from fractions import Fraction

from .errors import (DimensionCapExceeded, MethodInapplicable, NotSquare,
                     NotThreeByThree)
from .limits import DIMENSION_CAP, LAPLACE_CAP
from .matrix import Matrix
from .trace import OpCounter, TraceBuilder


def _require_square(a: Matrix, what: str) -> None:
    if not a.is_square:
        raise NotSquare(f"{what} needs a square matrix, got {a.rows}x{a.cols}")


def det_laplace(a: Matrix) -> tuple:
    """Recursive cofactor expansion along the first row.

    One step per term at every level; terms with a zero entry are reported
    but their minors are not expanded.  Limited to 8x8 because the step count
    grows factorially.
    """
    _require_square(a, "Laplace expansion")
    if a.rows > LAPLACE_CAP:
        raise MethodInapplicable(
            f"Laplace expansion is capped at {LAPLACE_CAP}x{LAPLACE_CAP}; "
            f"use method 'lu' for a {a.rows}x{a.rows} matrix")
    tally = OpCounter()
    builder = TraceBuilder("determinant", "laplace", {"A": a}, tally=tally)
    if a.rows == 1:
        value = a[0, 0]
        builder.add("cofactor_expand", f"Determinant of a 1x1 matrix is its entry: {value}",
                    {"A": a}, value)
    else:
        _laplace_level(a, builder, tally, "")
    trace = builder.finish()
    return trace.final_result, trace


def _laplace_level(a: Matrix, builder: TraceBuilder, tally: OpCounter, ctx: str) -> Fraction:
    n = a.rows
    prefix = f"[minor {ctx[:-1]}] " if ctx else ""
    running = Fraction(0)
    for j in range(n):
        entry = a[0, j]
        minor = a.minor(0, j)
        if entry == 0:
            term = Fraction(0)
            note = "entry is 0, minor skipped"
        else:
            if minor.rows == 1:
                sub_det = minor[0, 0]
            else:
                sub_det = _laplace_level(minor, builder, tally, ctx + f"{j + 1}.")
            term = entry * sub_det
            tally.mul()
            if j % 2:
                term = -term
            note = f"det(minor) = {sub_det}"
        if j == 0:
            running = term
        else:
            running = running + term
            tally.add()
        sign = "+" if j % 2 == 0 else "-"
        builder.add("cofactor_expand",
                    f"{prefix}Row-1 term {j + 1}: sign {sign}, entry {entry}, {note}; "
                    f"term {term}, running sum {running}",
                    {"entry": entry, "minor": minor}, running)
    return running


def det_sarrus(a: Matrix) -> tuple:
    """Sarrus' diagonal rule; defined for 3x3 matrices only."""
    if a.rows != 3 or a.cols != 3:
        raise NotThreeByThree(f"Sarrus' rule applies to 3x3 matrices only, got {a.rows}x{a.cols}")
    tally = OpCounter()
    builder = TraceBuilder("determinant", "sarrus", {"A": a}, tally=tally)
    down = (a[0, 0] * a[1, 1] * a[2, 2]
            + a[0, 1] * a[1, 2] * a[2, 0]
            + a[0, 2] * a[1, 0] * a[2, 1])
    tally.mul(6)
    tally.add(2)
    builder.add("diagonal_sum",
                f"Down diagonals: a11*a22*a33 + a12*a23*a31 + a13*a21*a32 = {down}",
                {"A": a}, down)
    up = (a[0, 2] * a[1, 1] * a[2, 0]
          + a[0, 0] * a[1, 2] * a[2, 1]
          + a[0, 1] * a[1, 0] * a[2, 2])
    tally.mul(6)
    tally.add(2)
    builder.add("diagonal_sum",
                f"Up diagonals: a13*a22*a31 + a11*a23*a32 + a12*a21*a33 = {up}",
                {"A": a}, up)
    det = down - up
    tally.sub()
    builder.add("combine", f"Determinant = down - up = {down} - ({up}) = {det}", {}, det)
    trace = builder.finish()
    return det, trace


def det_lu(a: Matrix, max_dim: int = DIMENSION_CAP) -> tuple:
    """Doolittle-style elimination to an upper triangle; det = sign * prod(diag).

    Rows are swapped only when a pivot is exactly zero; each swap flips the
    tracked sign.  If no nonzero pivot exists in a column the matrix is
    singular and the determinant is 0.
    """
    _require_square(a, "LU decomposition")
    if a.rows > max_dim:
        raise DimensionCapExceeded(f"dimension {a.rows} exceeds the trace cap of {max_dim}")
    tally = OpCounter()
    builder = TraceBuilder("determinant", "lu", {"A": a}, tally=tally)
    rows = a.to_row_lists()
    n = a.rows
    sign = 1
    for k in range(n):
        if rows[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if rows[r][k] != 0), None)
            if swap is None:
                zero = Fraction(0)
                builder.add("singular",
                            f"No nonzero pivot in column {k + 1}: the matrix is singular, "
                            f"determinant 0",
                            {"U": Matrix.from_rows(rows)}, zero)
                return zero, builder.finish()
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
            builder.add("pivot_swap",
                        f"Zero pivot in column {k + 1}: swap R{k + 1} and R{swap + 1} "
                        f"(sign flips to {sign})",
                        {}, Matrix.from_rows(rows))
        for i in range(k + 1, n):
            if rows[i][k] == 0:
                continue
            factor = rows[i][k] / rows[k][k]
            tally.mul()
            for c in range(k, n):
                if rows[k][c] != 0:
                    rows[i][c] -= factor * rows[k][c]
                    tally.mul()
                    tally.sub()
            builder.add("row_eliminate",
                        f"R{i + 1} <- R{i + 1} - ({factor})*R{k + 1}",
                        {"factor": factor}, Matrix.from_rows(rows))
    det = rows[0][0]
    for k in range(1, n):
        det = det * rows[k][k]
        tally.mul()
    if sign < 0:
        det = -det
    sign_text = "-" if sign < 0 else ""
    builder.add("diagonal_product",
                f"Determinant = {sign_text}product of the U diagonal = {det}",
                {"U": Matrix.from_rows(rows)}, det)
    trace = builder.finish()
    return det, trace
