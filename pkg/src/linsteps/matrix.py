"""Immutable dense matrices over exact rationals.

Entries are stored row-major as a flat tuple of ``Fraction`` values.  Because
both the container and the scalars are immutable, matrices can be shared
freely between traces, snapshots and threads; a "deep copy" is the object
itself.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, ParseError
from .rational import format_rational, parse_rational


class Matrix:
    """A rows x cols matrix of canonical rationals.

    >>> m = Matrix.from_rows([[1, 2], ["3", "1/2"]])
    >>> m[1, 1]
    Fraction(1, 2)
    """

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, rows: int, cols: int, entries: Iterable) -> None:
        if not isinstance(rows, int) or not isinstance(cols, int) or rows < 1 or cols < 1:
            raise DimensionMismatch(f"matrix dimensions must be positive integers, got {rows}x{cols}")
        values = tuple(parse_rational(e) for e in entries)
        if len(values) != rows * cols:
            raise DimensionMismatch(
                f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(values)}"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "_entries", values)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        if not rows or any(not r for r in rows):
            raise DimensionMismatch("from_rows needs at least one non-empty row")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionMismatch("all rows must have the same length")
        flat = [e for row in rows for e in row]
        return cls(len(rows), width, flat)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [Fraction(1) if i == j else Fraction(0) for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, [Fraction(0)] * (rows * cols))

    @classmethod
    def column(cls, values: Sequence) -> "Matrix":
        return cls(len(values), 1, list(values))

    # -- element access --------------------------------------------------------

    def __getitem__(self, key) -> Fraction:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index ({i},{j}) out of range for {self.rows}x{self.cols}")
        return self._entries[i * self.cols + j]

    def row_values(self, i: int) -> tuple:
        return self._entries[i * self.cols : (i + 1) * self.cols]

    def col_values(self, j: int) -> tuple:
        return tuple(self._entries[i * self.cols + j] for i in range(self.rows))

    def row_matrix(self, i: int) -> "Matrix":
        return Matrix(1, self.cols, self.row_values(i))

    def col_matrix(self, j: int) -> "Matrix":
        return Matrix(self.rows, 1, self.col_values(j))

    def to_rows(self) -> tuple:
        return tuple(self.row_values(i) for i in range(self.rows))

    def to_row_lists(self) -> list:
        """Mutable row-of-lists copy for elimination routines."""
        return [list(self.row_values(i)) for i in range(self.rows)]

    # -- arithmetic -------------------------------------------------------------

    def _require_same_shape(self, other: "Matrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch(
                f"shapes differ: {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def __add__(self, other: "Matrix") -> "Matrix":
        self._require_same_shape(other)
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self._entries, other._entries)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._require_same_shape(other)
        return Matrix(self.rows, self.cols, [a - b for a, b in zip(self._entries, other._entries)])

    def scale(self, c) -> "Matrix":
        c = parse_rational(c)
        return Matrix(self.rows, self.cols, [c * e for e in self._entries])

    def __mul__(self, c) -> "Matrix":
        return self.scale(c)

    __rmul__ = __mul__

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [-e for e in self._entries])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._entries))

    # -- structure --------------------------------------------------------------

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def diagonal_sum(self) -> Fraction:
        """Sum of the diagonal entries (the matrix trace)."""
        return sum((self[i, i] for i in range(min(self.rows, self.cols))), Fraction(0))

    def submatrix(self, keep_rows: Sequence[int], keep_cols: Sequence[int]) -> "Matrix":
        """Matrix restricted to the given row and column indices, in order."""
        if not keep_rows or not keep_cols:
            raise DimensionMismatch("submatrix needs at least one row and one column")
        return Matrix(
            len(keep_rows),
            len(keep_cols),
            [self[i, j] for i in keep_rows for j in keep_cols],
        )

    def minor(self, drop_row: int, drop_col: int) -> "Matrix":
        """Submatrix with one row and one column removed."""
        return self.submatrix(
            [i for i in range(self.rows) if i != drop_row],
            [j for j in range(self.cols) if j != drop_col],
        )

    def with_column(self, j: int, column: "Matrix") -> "Matrix":
        """Copy of self with column j replaced by the given column vector."""
        if column.rows != self.rows or column.cols != 1:
            raise DimensionMismatch("replacement column has the wrong shape")
        entries = list(self._entries)
        for i in range(self.rows):
            entries[i * self.cols + j] = column[i, 0]
        return Matrix(self.rows, self.cols, entries)

    # -- serialization ------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[format_rational(e) for e in self.row_values(i)] for i in range(self.rows)],
        }

    @classmethod
    def from_json(cls, obj) -> "Matrix":
        if not isinstance(obj, dict):
            raise ParseError(f"matrix JSON must be an object, got {type(obj).__name__}")
        try:
            rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
        except KeyError as missing:
            raise ParseError(f"matrix JSON missing key {missing}") from None
        if not isinstance(rows, int) or not isinstance(cols, int):
            raise ParseError("matrix rows/cols must be integers")
        if not isinstance(entries, list) or len(entries) != rows:
            raise ParseError(f"expected {rows} entry rows")
        if any(not isinstance(r, list) or len(r) != cols for r in entries):
            raise ParseError(f"every entry row must have {cols} values")
        return cls(rows, cols, [e for row in entries for e in row])

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(map(str, self.row_values(i))) + "]" for i in range(self.rows))
        return f"Matrix([{body}])"
