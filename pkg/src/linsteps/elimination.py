"""Exact Gauss-Jordan elimination shared by the solver and eigen modules.

Pivoting is on the first nonzero entry in the current column (exact
arithmetic needs no magnitude pivoting), and reduction always proceeds to
full RREF.  When a builder is supplied, one step is emitted per elementary
row operation.
"""

from __future__ import annotations

from fractions import Fraction

from .matrix import Matrix
from .trace import OpCounter, TraceBuilder


def _snapshot(rows) -> Matrix:
    return Matrix.from_rows([list(r) for r in rows])


def rref(rows, pivot_col_limit: int, tally: OpCounter | None = None,
         builder: TraceBuilder | None = None, prefix: str = "") -> list:
    """Reduce ``rows`` (mutated in place) to RREF; returns the pivot columns.

    Pivots are only chosen among the first ``pivot_col_limit`` columns, so an
    augmented system [A|b] can be reduced without ever pivoting on b.
    """
    n_rows = len(rows)
    n_cols = len(rows[0])
    pivots = []
    piv_row = 0
    for col in range(pivot_col_limit):
        if piv_row == n_rows:
            break
        hit = next((r for r in range(piv_row, n_rows) if rows[r][col] != 0), None)
        if hit is None:
            continue
        if hit != piv_row:
            rows[piv_row], rows[hit] = rows[hit], rows[piv_row]
            if builder is not None:
                builder.add("pivot_swap", f"{prefix}Swap R{piv_row + 1} and R{hit + 1}",
                            {}, _snapshot(rows))
        pivot = rows[piv_row][col]
        if pivot != 1:
            for c in range(n_cols):
                if rows[piv_row][c] != 0:
                    rows[piv_row][c] /= pivot
                    if tally is not None:
                        tally.mul()
            if builder is not None:
                builder.add("row_scale", f"{prefix}R{piv_row + 1} <- R{piv_row + 1} / ({pivot})",
                            {"pivot": pivot}, _snapshot(rows))
        for r in range(n_rows):
            if r == piv_row or rows[r][col] == 0:
                continue
            factor = rows[r][col]
            for c in range(n_cols):
                if rows[piv_row][c] != 0:
                    rows[r][c] -= factor * rows[piv_row][c]
                    if tally is not None:
                        tally.mul()
                        tally.sub()
            if builder is not None:
                builder.add("row_eliminate",
                            f"{prefix}R{r + 1} <- R{r + 1} - ({factor})*R{piv_row + 1}",
                            {"factor": factor}, _snapshot(rows))
        pivots.append(col)
        piv_row += 1
    return pivots


def nullspace_basis(rows, n_cols: int, pivots) -> list:
    """Null-space basis from an RREF, free variables set to standard values.

    One column vector per free column f: entry f is 1, each pivot entry is
    the negated RREF coefficient, everything else 0.
    """
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n_cols
        v[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][f]
        basis.append(Matrix.column(v))
    return basis


def canonical_basis(vectors) -> list:
    """Rewrite a basis in reduced echelon normal form (leading entries 1).

    The vectors are stacked as rows and reduced; the RREF of a row space is
    unique, so this gives a deterministic representative basis.
    """
    if not vectors:
        return []
    n = vectors[0].rows
    rows = [[v[i, 0] for i in range(n)] for v in vectors]
    rref(rows, n)
    return [Matrix.column(r) for r in rows if any(x != 0 for x in r)]
