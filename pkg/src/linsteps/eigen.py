"""Rational eigenvalues and eigenvectors.

Eigenvalues are the rational roots of the characteristic polynomial, found by
the rational-root theorem on the integer-scaled polynomial and deflated to
full multiplicity.  Anything irrational or complex is left as an unfactored
residual polynomial rather than approximated.  Candidate roots are tested in
ascending absolute value, positive before negative, so traces and results are
deterministic.

Divisor enumeration uses trial division; this is meant for teaching-scale
inputs, not for matrices with enormous entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .elimination import canonical_basis, nullspace_basis, rref
from .errors import DimensionCapExceeded, NotSquare, ParseError
from .inverse import CharPoly, charpoly
from .limits import DIMENSION_CAP
from .matrix import Matrix
from .rational import format_rational, parse_rational
from .trace import OpCounter, TraceBuilder


@dataclass(frozen=True)
class EigenResult:
    """Rational spectrum of a matrix.

    ``eigenvalues`` holds (value, algebraic multiplicity) pairs in discovery
    order; ``residual_factor`` is the monic unfactored remainder (constant 1
    when the polynomial splits over the rationals); ``eigenvectors`` maps each
    rational eigenvalue to a canonical basis of its eigenspace.
    """

    eigenvalues: tuple
    residual_factor: CharPoly
    eigenvectors: dict

    def __str__(self) -> str:
        if not self.eigenvalues:
            return f"no rational eigenvalues; residual {self.residual_factor}"
        values = ", ".join(f"{v} (mult {m}, {len(self.eigenvectors.get(v, ()))} vector(s))"
                           for v, m in self.eigenvalues)
        tail = "" if self.residual_factor.degree == 0 else f"; residual {self.residual_factor}"
        return f"eigenvalues {values}{tail}"

    def to_json(self) -> dict:
        return {
            "eigenvalues": [
                {"value": format_rational(v), "multiplicity": m} for v, m in self.eigenvalues
            ],
            "residual_factor": [format_rational(c) for c in self.residual_factor.coefficients],
            "eigenvectors": {
                format_rational(v): [vec.to_json() for vec in vecs]
                for v, vecs in self.eigenvectors.items()
            },
        }

    @classmethod
    def from_json(cls, obj) -> "EigenResult":
        try:
            values = tuple(
                (parse_rational(e["value"]), int(e["multiplicity"])) for e in obj["eigenvalues"]
            )
            residual = CharPoly(tuple(parse_rational(c) for c in obj["residual_factor"]))
            vectors = {
                parse_rational(v): tuple(Matrix.from_json(m) for m in vecs)
                for v, vecs in obj["eigenvectors"].items()
            }
        except (KeyError, TypeError):
            raise ParseError(f"bad eigen-result JSON: {obj!r}") from None
        return cls(values, residual, vectors)


def _divisors(n: int) -> list:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _root_candidates(poly: CharPoly) -> list:
    """Rational-root candidates of the integer-scaled polynomial, in test order."""
    scale = lcm(*[c.denominator for c in poly.coefficients])
    ints = [int(c * scale) for c in poly.coefficients]
    candidates = []
    first_nonzero = next(i for i, c in enumerate(ints) if c != 0)
    if first_nonzero > 0:
        candidates.append(Fraction(0))
    seen = {Fraction(0)} if candidates else set()
    for p in _divisors(ints[first_nonzero]):
        for q in _divisors(ints[-1]):
            for value in (Fraction(p, q), Fraction(-p, q)):
                if value not in seen:
                    seen.add(value)
                    candidates.append(value)
    candidates.sort(key=lambda v: (abs(v), 0 if v > 0 else 1))
    return candidates


def _deflate(poly: CharPoly, root: Fraction, tally: OpCounter) -> tuple:
    """Synthetic division by (x - root); returns (quotient coefficients, remainder)."""
    coeffs = poly.coefficients
    degree = len(coeffs) - 1
    quotient = [Fraction(0)] * degree
    carry = coeffs[degree]
    for k in range(degree - 1, -1, -1):
        quotient[k] = carry
        carry = coeffs[k] + root * carry
        tally.mul()
        tally.add()
    return quotient, carry


def _horner_eval(poly: CharPoly, x: Fraction, tally: OpCounter) -> Fraction:
    acc = poly.coefficients[-1]
    for c in reversed(poly.coefficients[:-1]):
        acc = acc * x + c
        tally.mul()
        tally.add()
    return acc


def eigen_rational(a: Matrix, max_dim: int = DIMENSION_CAP) -> tuple:
    """Rational eigenpairs with a full trace; returns (EigenResult, Trace)."""
    if not a.is_square:
        raise NotSquare(f"eigen decomposition needs a square matrix, got {a.rows}x{a.cols}")
    if a.rows > max_dim:
        raise DimensionCapExceeded(f"dimension {a.rows} exceeds the trace cap of {max_dim}")
    n = a.rows
    poly, poly_trace = charpoly(a, max_dim)
    tally = OpCounter()
    builder = TraceBuilder("eigen", "rational", {"A": a}, tally=tally)
    builder.inline(poly_trace, "[charpoly] ")

    candidates = _root_candidates(poly)
    shown = ", ".join(format_rational(c) for c in candidates[:16])
    if len(candidates) > 16:
        shown += f", ... ({len(candidates)} total)"
    builder.add("candidates",
                f"Rational-root candidates (ascending |value|, positive first): {shown}",
                {}, poly)

    current = poly
    found = []
    for candidate in candidates:
        if current.degree == 0:
            break
        if _horner_eval(current, candidate, tally) != 0:
            continue
        builder.add("root_found",
                    f"{candidate} is a root of the remaining factor {current}",
                    {"polynomial": current}, candidate)
        multiplicity = 0
        while current.degree >= 1:
            quotient, remainder = _deflate(current, candidate, tally)
            if remainder != 0:
                break
            current = CharPoly(tuple(quotient))
            multiplicity += 1
            builder.add("deflation",
                        f"Deflate by (x - ({candidate})): remaining factor {current}",
                        {}, current)
        found.append((candidate, multiplicity))

    if current.degree >= 1:
        builder.add("residual",
                    f"No further rational roots; unfactored residual {current}",
                    {}, current)

    vectors = {}
    for value, _mult in found:
        shifted = _shift_diagonal(a, value, tally)
        builder.add("shift", f"Form A - ({value})*I for eigenvalue {value}",
                    {"A": a}, shifted)
        rows = shifted.to_row_lists()
        pivots = rref(rows, n, tally=tally, builder=builder,
                      prefix=f"[eigenspace {value}] ")
        basis = canonical_basis(nullspace_basis(rows, n, pivots))
        vectors[value] = tuple(basis)
        for idx, vec in enumerate(basis):
            builder.add("eigenvector",
                        f"Eigenspace basis vector {idx + 1} for eigenvalue {value}",
                        {"shifted": shifted}, vec)

    result = EigenResult(tuple(found), current, vectors)
    builder.add("summary",
                f"{len(found)} rational eigenvalue(s); residual factor degree {current.degree}",
                {}, result)
    return result, builder.finish()


def _shift_diagonal(a: Matrix, value: Fraction, tally: OpCounter) -> Matrix:
    entries = []
    for i in range(a.rows):
        for j in range(a.cols):
            if i == j:
                entries.append(a[i, j] - value)
                tally.sub()
            else:
                entries.append(a[i, j])
    return Matrix(a.rows, a.cols, entries)
