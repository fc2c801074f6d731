"""Matrix inverses via the adjugate (Cramer) and the characteristic polynomial.

The characteristic polynomial is computed with the Faddeev-LeVerrier
recurrence, which stays inside rational matrix arithmetic and gives one
natural trace step per iteration:

    M_1 = A,                      c_{n-1} = -tr(M_1) / 1
    M_k = A (M_{k-1} + c_{n-k+1} I),  c_{n-k} = -tr(M_k) / k
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .determinant import det_lu
from .errors import DimensionCapExceeded, NotSquare, ParseError, SingularMatrix
from .limits import DIMENSION_CAP
from .matmul import naive_product_counted
from .matrix import Matrix
from .rational import format_rational, parse_rational
from .trace import OpCounter, TraceBuilder


@dataclass(frozen=True)
class CharPoly:
    """Monic polynomial with coefficients c0..cn in ascending order."""

    coefficients: tuple

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("a polynomial needs at least one coefficient")
        if self.coefficients[-1] != 1:
            raise ValueError(f"polynomial must be monic, leading coefficient {self.coefficients[-1]}")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def evaluate(self, x: Fraction) -> Fraction:
        acc = self.coefficients[-1]
        for c in reversed(self.coefficients[:-1]):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        parts = []
        for power in range(self.degree, -1, -1):
            c = self.coefficients[power]
            if c == 0:
                continue
            if power == 0:
                term = str(abs(c))
            else:
                mag = abs(c)
                coeff = "" if mag == 1 else f"{mag}*"
                term = f"{coeff}x^{power}" if power > 1 else f"{coeff}x"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"coefficients": [format_rational(c) for c in self.coefficients]}

    @classmethod
    def from_json(cls, obj) -> "CharPoly":
        try:
            coeffs = tuple(parse_rational(c) for c in obj["coefficients"])
        except (KeyError, TypeError):
            raise ParseError(f"bad polynomial JSON: {obj!r}") from None
        return cls(coeffs)


def _check_square_capped(a: Matrix, what: str, max_dim: int) -> None:
    if not a.is_square:
        raise NotSquare(f"{what} needs a square matrix, got {a.rows}x{a.cols}")
    if a.rows > max_dim:
        raise DimensionCapExceeded(f"dimension {a.rows} exceeds the trace cap of {max_dim}")


def charpoly(a: Matrix, max_dim: int = DIMENSION_CAP) -> tuple:
    """Monic characteristic polynomial by the Faddeev-LeVerrier recurrence."""
    _check_square_capped(a, "characteristic polynomial", max_dim)
    n = a.rows
    tally = OpCounter()
    builder = TraceBuilder("charpoly", "faddeev_leverrier", {"A": a}, tally=tally)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    m = a
    for k in range(1, n + 1):
        if k > 1:
            shifted = _add_to_diagonal(m, coeffs[n - k + 1], tally)
            m, cost = naive_product_counted(a, shifted)
            tally.absorb(cost)
        t = m.diagonal_sum()
        tally.add(n - 1)
        coeffs[n - k] = -t / k
        tally.mul()
        builder.add("charpoly_recurrence",
                    f"Iteration {k}: trace(M{k}) = {t}, c{n - k} = -trace/{k} = {coeffs[n - k]}",
                    {"M": m}, coeffs[n - k])
    poly = CharPoly(tuple(coeffs))
    builder.add("assemble", f"Characteristic polynomial: {poly}", {}, poly)
    return poly, builder.finish()


def _add_to_diagonal(m: Matrix, c: Fraction, tally: OpCounter) -> Matrix:
    entries = []
    for i in range(m.rows):
        for j in range(m.cols):
            if i == j:
                entries.append(m[i, j] + c)
                tally.add()
            else:
                entries.append(m[i, j])
    return Matrix(m.rows, m.cols, entries)


def inverse_cramer(a: Matrix, max_dim: int = DIMENSION_CAP) -> tuple:
    """Inverse as adjugate over determinant.

    The determinant is delegated to LU elimination (sub-steps inlined); each
    adjugate entry then gets one cofactor step, and a final step divides the
    adjugate by the determinant.
    """
    _check_square_capped(a, "Cramer inverse", max_dim)
    n = a.rows
    tally = OpCounter()
    builder = TraceBuilder("inverse", "cramer", {"A": a}, tally=tally)
    det, det_trace = det_lu(a, max_dim)
    builder.inline(det_trace, "[det] ")
    if det == 0:
        raise SingularMatrix("determinant is 0: the matrix has no inverse")
    adj = [[Fraction(0)] * n for _ in range(n)]
    if n == 1:
        adj[0][0] = Fraction(1)
        builder.add("cofactor", "Adjugate of a 1x1 matrix is [[1]]", {"A": a}, Fraction(1))
    else:
        for i in range(n):
            for j in range(n):
                minor = a.minor(i, j)
                minor_det, minor_trace = det_lu(minor, max_dim)
                tally.absorb(minor_trace.total_cost)
                cof = minor_det if (i + j) % 2 == 0 else -minor_det
                adj[j][i] = cof
                builder.add("cofactor",
                            f"Cofactor C({i + 1},{j + 1}) = (-1)^({i + 1}+{j + 1}) * det(minor) "
                            f"= {cof}; adjugate entry ({j + 1},{i + 1})",
                            {"minor": minor}, cof)
    inverse_entries = []
    for row in adj:
        for value in row:
            inverse_entries.append(value / det)
            tally.mul()
    inv = Matrix(n, n, inverse_entries)
    builder.add("scale", f"Inverse = adjugate / det = adjugate / ({det})",
                {"adjugate": Matrix.from_rows(adj)}, inv)
    return inv, builder.finish()


def inverse_cayley_hamilton(a: Matrix, max_dim: int = DIMENSION_CAP) -> tuple:
    """Inverse from the characteristic polynomial.

    Since p(A) = 0, A^{-1} = -(1/c0) (A^{n-1} + c_{n-1} A^{n-2} + ... + c1 I);
    the bracket is accumulated Horner-style, one step per term, using naive
    matrix products so the trace stays free of block-recursion noise.
    """
    _check_square_capped(a, "Cayley-Hamilton inverse", max_dim)
    n = a.rows
    poly, poly_trace = charpoly(a, max_dim)
    c0 = poly.coefficients[0]
    tally = OpCounter()
    builder = TraceBuilder("inverse", "cayley_hamilton", {"A": a}, tally=tally)
    builder.inline(poly_trace, "[charpoly] ")
    if c0 == 0:
        raise SingularMatrix("constant coefficient of the characteristic polynomial is 0: "
                             "the matrix has no inverse")
    acc = Matrix.identity(n)
    for k in range(n - 1, 0, -1):
        prod, cost = naive_product_counted(a, acc)
        tally.absorb(cost)
        acc = _add_to_diagonal(prod, poly.coefficients[k], tally)
        builder.add("power_accumulate",
                    f"Horner step for c{k}: B <- A*B + ({poly.coefficients[k]})*I",
                    {"B": prod}, acc)
    inverse_entries = []
    for i in range(n):
        for j in range(n):
            inverse_entries.append(-acc[i, j] / c0)
            tally.mul()
    inv = Matrix(n, n, inverse_entries)
    builder.add("scale", f"Inverse = -(1/c0) * B = -(1/({c0})) * B", {"B": acc}, inv)
    return inv, builder.finish()
