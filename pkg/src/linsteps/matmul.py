"""Matrix multiplication: naive dot products and 7-product block recursion.

Both entry points return ``(product, trace)`` and count every scalar
operation actually performed.  The block recursion handles arbitrary
conforming shapes by zero-padding to the next power of two and cropping the
result; the padding never leaks into the output.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ConfigInvalid, DimensionCapExceeded, DimensionMismatch, NotPowerOfTwo
from .limits import DIMENSION_CAP
from .matrix import Matrix
from .trace import OpCounter, TraceBuilder

VARIANTS = ("strassen", "winograd")


@dataclass(frozen=True)
class StrassenConfig:
    """Recursion policy: fall back to naive at or below ``threshold``."""

    threshold: int = 2
    variant: str = "winograd"

    def __post_init__(self):
        if not isinstance(self.threshold, int) or self.threshold < 1:
            raise ConfigInvalid(f"threshold must be a positive integer, got {self.threshold!r}")
        if self.variant not in VARIANTS:
            raise ConfigInvalid(f"variant must be one of {VARIANTS}, got {self.variant!r}")


# ---------------------------------------------------------------------------
# The two 7-product schemes, written as straight-line programs over the input
# quadrants A11..A22 and B11..B22.  Each entry either forms a +/- combination
# of previously defined blocks or multiplies two of them (recursively); the
# last four combinations are the output quadrants C11..C22.
#
# "strassen" is the original 1969 construction: 7 products and 18 block
# additions/subtractions.  "winograd" is the 1971 reorganisation of the same
# idea: partial sums are chained (S*/T* before the products, U* after) so the
# 7 products need only 15 block additions.  Winograd is the default because
# its traces carry fewer sum steps.
#
# The tables are data, not code, so the pedagogy module can enumerate the
# exact formula set that the engine runs.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BlockSum:
    name: str
    terms: tuple  # ((+1 | -1, ref), ...); the first term is always +ref


@dataclass(frozen=True)
class BlockProduct:
    name: str
    left: str
    right: str


STRASSEN_SCHEME = (
    BlockSum("S1", ((1, "A11"), (1, "A22"))),
    BlockSum("T1", ((1, "B11"), (1, "B22"))),
    BlockProduct("M1", "S1", "T1"),
    BlockSum("S2", ((1, "A21"), (1, "A22"))),
    BlockProduct("M2", "S2", "B11"),
    BlockSum("T3", ((1, "B12"), (-1, "B22"))),
    BlockProduct("M3", "A11", "T3"),
    BlockSum("T4", ((1, "B21"), (-1, "B11"))),
    BlockProduct("M4", "A22", "T4"),
    BlockSum("S5", ((1, "A11"), (1, "A12"))),
    BlockProduct("M5", "S5", "B22"),
    BlockSum("S6", ((1, "A21"), (-1, "A11"))),
    BlockSum("T6", ((1, "B11"), (1, "B12"))),
    BlockProduct("M6", "S6", "T6"),
    BlockSum("S7", ((1, "A12"), (-1, "A22"))),
    BlockSum("T7", ((1, "B21"), (1, "B22"))),
    BlockProduct("M7", "S7", "T7"),
    BlockSum("C11", ((1, "M1"), (1, "M4"), (-1, "M5"), (1, "M7"))),
    BlockSum("C12", ((1, "M3"), (1, "M5"))),
    BlockSum("C21", ((1, "M2"), (1, "M4"))),
    BlockSum("C22", ((1, "M1"), (-1, "M2"), (1, "M3"), (1, "M6"))),
)

WINOGRAD_SCHEME = (
    BlockSum("S1", ((1, "A21"), (1, "A22"))),
    BlockSum("S2", ((1, "S1"), (-1, "A11"))),
    BlockSum("S3", ((1, "A11"), (-1, "A21"))),
    BlockSum("S4", ((1, "A12"), (-1, "S2"))),
    BlockSum("T1", ((1, "B12"), (-1, "B11"))),
    BlockSum("T2", ((1, "B22"), (-1, "T1"))),
    BlockSum("T3", ((1, "B22"), (-1, "B12"))),
    BlockSum("T4", ((1, "T2"), (-1, "B21"))),
    BlockProduct("M1", "A11", "B11"),
    BlockProduct("M2", "A12", "B21"),
    BlockProduct("M3", "S4", "B22"),
    BlockProduct("M4", "A22", "T4"),
    BlockProduct("M5", "S1", "T1"),
    BlockProduct("M6", "S2", "T2"),
    BlockProduct("M7", "S3", "T3"),
    BlockSum("U2", ((1, "M1"), (1, "M6"))),
    BlockSum("U3", ((1, "U2"), (1, "M7"))),
    BlockSum("U4", ((1, "U2"), (1, "M5"))),
    BlockSum("C11", ((1, "M1"), (1, "M2"))),
    BlockSum("C12", ((1, "U4"), (1, "M3"))),
    BlockSum("C21", ((1, "U3"), (-1, "M4"))),
    BlockSum("C22", ((1, "U3"), (1, "M5"))),
)

SCHEMES = {"strassen": STRASSEN_SCHEME, "winograd": WINOGRAD_SCHEME}


def _check_mul_shapes(a: Matrix, b: Matrix, max_dim: int) -> None:
    if a.cols != b.rows:
        raise DimensionMismatch(
            f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}: inner dimensions differ")
    biggest = max(a.rows, a.cols, b.rows, b.cols)
    if biggest > max_dim:
        raise DimensionCapExceeded(
            f"dimension {biggest} exceeds the trace cap of {max_dim}")


def _naive_entries(a: Matrix, b: Matrix, tally: OpCounter) -> list:
    entries = []
    inner = a.cols
    for i in range(a.rows):
        row = a.row_values(i)
        for j in range(b.cols):
            acc = row[0] * b[0, j]
            for k in range(1, inner):
                acc += row[k] * b[k, j]
            tally.mul(inner)
            tally.add(inner - 1)
            entries.append(acc)
    return entries


def mul_naive(a: Matrix, b: Matrix, max_dim: int = DIMENSION_CAP) -> tuple:
    """Dot-product multiplication; one trace step per output entry."""
    _check_mul_shapes(a, b, max_dim)
    tally = OpCounter()
    builder = TraceBuilder("multiply", "naive", {"A": a, "B": b}, tally=tally)
    inner = a.cols
    entries = []
    for i in range(a.rows):
        row = a.row_values(i)
        for j in range(b.cols):
            acc = row[0] * b[0, j]
            for k in range(1, inner):
                acc += row[k] * b[k, j]
            tally.mul(inner)
            tally.add(inner - 1)
            entries.append(acc)
            builder.add("dot_product",
                        f"C[{i + 1},{j + 1}] = (row {i + 1} of A) . (column {j + 1} of B) = {acc}",
                        {"row": a.row_matrix(i), "col": b.col_matrix(j)}, acc)
    product = Matrix(a.rows, b.cols, entries)
    builder.add("assemble", f"Assemble the {a.rows}x{b.cols} product from its entries",
                {}, product)
    return product, builder.finish()


def naive_product_counted(a: Matrix, b: Matrix) -> tuple:
    """Naive product without a trace; returns (matrix, OpCount)."""
    if a.cols != b.rows:
        raise DimensionMismatch(
            f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}: inner dimensions differ")
    tally = OpCounter()
    entries = _naive_entries(a, b, tally)
    return Matrix(a.rows, b.cols, entries), tally.snapshot()


def next_power_of_two(n: int) -> int:
    return 1 << max(0, n - 1).bit_length() if n > 1 else 1


def _pad(m: Matrix, size: int) -> Matrix:
    if m.rows == size and m.cols == size:
        return m
    entries = []
    zero = Fraction(0)
    for i in range(size):
        if i < m.rows:
            entries.extend(m.row_values(i))
            entries.extend([zero] * (size - m.cols))
        else:
            entries.extend([zero] * size)
    return Matrix(size, size, entries)


def _split(m: Matrix) -> tuple:
    h = m.rows // 2
    idx = list(range(h)), list(range(h, m.rows))
    return (m.submatrix(idx[0], idx[0]), m.submatrix(idx[0], idx[1]),
            m.submatrix(idx[1], idx[0]), m.submatrix(idx[1], idx[1]))


def _join(c11: Matrix, c12: Matrix, c21: Matrix, c22: Matrix) -> Matrix:
    h = c11.rows
    entries = []
    for i in range(h):
        entries.extend(c11.row_values(i))
        entries.extend(c12.row_values(i))
    for i in range(h):
        entries.extend(c21.row_values(i))
        entries.extend(c22.row_values(i))
    return Matrix(2 * h, 2 * h, entries)


def _combine(env: dict, terms, tally: OpCounter) -> Matrix:
    acc = env[terms[0][1]]
    size = acc.rows * acc.cols
    for sign, ref in terms[1:]:
        if sign > 0:
            acc = acc + env[ref]
            tally.add(size)
        else:
            acc = acc - env[ref]
            tally.sub(size)
    return acc


def _terms_text(terms) -> str:
    out = terms[0][1]
    for sign, ref in terms[1:]:
        out += f" {'+' if sign > 0 else '-'} {ref}"
    return out


def _label(path: str) -> str:
    return f"[{path[:-1]}] " if path else ""


def _sw_recursive(a: Matrix, b: Matrix, cfg: StrassenConfig, tally: OpCounter,
                  rec: TraceBuilder | None, path: str, root: bool = False) -> Matrix:
    n = a.rows
    if n <= cfg.threshold:
        entries = _naive_entries(a, b, tally)
        product = Matrix(n, n, entries)
        if rec is not None:
            rec.add("block_product",
                    f"{_label(path)}Base case: naive {n}x{n} block product",
                    {"left": a, "right": b}, product)
        return product
    a11, a12, a21, a22 = _split(a)
    b11, b12, b21, b22 = _split(b)
    env = {"A11": a11, "A12": a12, "A21": a21, "A22": a22,
           "B11": b11, "B12": b12, "B21": b21, "B22": b22}
    for entry in SCHEMES[cfg.variant]:
        if isinstance(entry, BlockSum):
            value = _combine(env, entry.terms, tally)
            env[entry.name] = value
            if rec is not None:
                kind = "recombine" if entry.name.startswith("C") else "block_sum"
                rec.add(kind, f"{_label(path)}{entry.name} = {_terms_text(entry.terms)}",
                        {ref: env[ref] for _, ref in entry.terms}, value)
        else:
            value = _sw_recursive(env[entry.left], env[entry.right], cfg, tally, rec,
                                  path + entry.name + ".")
            env[entry.name] = value
            if rec is not None:
                half = n // 2
                rec.add("block_product",
                        f"{_label(path)}{entry.name} = {entry.left} x {entry.right} "
                        f"({half}x{half} blocks)",
                        {"left": env[entry.left], "right": env[entry.right]}, value)
    product = _join(env["C11"], env["C12"], env["C21"], env["C22"])
    if rec is not None and root:
        rec.add("assemble", "Assemble the product from quadrants C11, C12, C21, C22",
                {q: env[q] for q in ("C11", "C12", "C21", "C22")}, product)
    return product


def mul_strassen(a: Matrix, b: Matrix, cfg: StrassenConfig | None = None,
                 max_dim: int = DIMENSION_CAP) -> tuple:
    """7-product block multiplication with a step trace.

    Non-square and non-power-of-two inputs are zero-padded up to the next
    power of two that covers rows, inner dimension and columns, then the
    result is cropped back.
    """
    if cfg is None:
        cfg = StrassenConfig()
    _check_mul_shapes(a, b, max_dim)
    tally = OpCounter()
    builder = TraceBuilder("multiply", cfg.variant, {"A": a, "B": b}, tally=tally)
    size = next_power_of_two(max(a.rows, a.cols, b.cols))
    padded = not (a.rows == a.cols == b.rows == b.cols == size)
    ap, bp = _pad(a, size), _pad(b, size)
    if padded:
        builder.add("pad", f"Pad A from {a.rows}x{a.cols} to {size}x{size} with zeros",
                    {"A": a}, ap)
        builder.add("pad", f"Pad B from {b.rows}x{b.cols} to {size}x{size} with zeros",
                    {"B": b}, bp)
    full = _sw_recursive(ap, bp, cfg, tally, builder, "", root=True)
    if padded:
        product = full.submatrix(list(range(a.rows)), list(range(b.cols)))
        builder.add("unpad", f"Crop the result from {size}x{size} back to {a.rows}x{b.cols}",
                    {"padded": full}, product)
    else:
        product = full
    return product, builder.finish()


def strassen_product_counted(a: Matrix, b: Matrix, cfg: StrassenConfig | None = None) -> tuple:
    """Trace-free 7-product multiplication for benchmarking; counts only."""
    if cfg is None:
        cfg = StrassenConfig()
    if a.cols != b.rows:
        raise DimensionMismatch(
            f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}: inner dimensions differ")
    tally = OpCounter()
    size = next_power_of_two(max(a.rows, a.cols, b.cols))
    full = _sw_recursive(_pad(a, size), _pad(b, size), cfg, tally, None, "")
    if full.rows != a.rows or full.cols != b.cols:
        full = full.submatrix(list(range(a.rows)), list(range(b.cols)))
    return full, tally.snapshot()


def strassen_mult_count(n: int, threshold: int = 1) -> int:
    """Predicted scalar multiplications of the block recursion on n x n.

    With full recursion (threshold 1) this is 7**k for n = 2**k; tests compare
    it against the counters recorded in actual traces.
    """
    if not isinstance(n, int) or n < 1 or n & (n - 1):
        raise NotPowerOfTwo(f"n must be a positive power of two, got {n!r}")
    if threshold < 1:
        raise ConfigInvalid("threshold must be >= 1")
    if n <= threshold:
        return n ** 3
    return 7 * strassen_mult_count(n // 2, threshold)
