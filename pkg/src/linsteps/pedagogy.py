"""Correctness of the 7-product schemes on 2x2 inputs via linearity.

The product A x B is linear in B, and so is every block scheme in this
package (each formula only adds, subtracts and multiplies fixed blocks of B).
A scheme that is linear in B and correct on the four basis matrices E11, E12,
E21, E22 is therefore correct on every 2x2 B.  This module runs exactly that
program: the four basis-matrix checks plus randomized additivity and
homogeneity checks, all in exact arithmetic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConfigInvalid, NotTwoByTwo
from .matmul import (SCHEMES, BlockProduct, StrassenConfig, mul_strassen,
                     naive_product_counted)
from .matrix import Matrix
from .rational import format_rational
from .trace import Trace, TraceBuilder

# (label, source column i, target column j): A x E_ij moves column i of A
# into column j of the product and zeroes the other column.
BASIS = (("E11", 0, 0), ("E12", 0, 1), ("E21", 1, 0), ("E22", 1, 1))

_SYMBOLS = (("a", "b"), ("c", "d"))


def basis_matrix(i: int, j: int) -> Matrix:
    entries = [Fraction(0)] * 4
    entries[2 * i + j] = Fraction(1)
    return Matrix(2, 2, entries)


def expected_basis_product(a: Matrix, i: int, j: int) -> Matrix:
    """The product A x E_ij, derived by index permutation from the E11 case."""
    entries = [Fraction(0)] * 4
    for r in range(2):
        entries[2 * r + j] = a[r, i]
    return Matrix(2, 2, entries)


def symbolic_pattern(i: int, j: int) -> tuple:
    """Entry pattern of [[a,b],[c,d]] x E_ij as symbol strings."""
    pattern = [["0", "0"], ["0", "0"]]
    for r in range(2):
        pattern[r][j] = _SYMBOLS[r][i]
    return tuple(tuple(row) for row in pattern)


def scheme_formulas(variant: str = "winograd") -> tuple:
    """The exact straight-line formula set the checked scheme runs, one
    assignment per line, read straight off the multiplication table."""
    lines = []
    for entry in SCHEMES[variant]:
        if isinstance(entry, BlockProduct):
            lines.append(f"{entry.name} = {entry.left} * {entry.right}")
        else:
            rhs = entry.terms[0][1]
            for sign, ref in entry.terms[1:]:
                rhs += f" {'+' if sign > 0 else '-'} {ref}"
            lines.append(f"{entry.name} = {rhs}")
    return tuple(lines)


@dataclass(frozen=True)
class BasisCheck:
    label: str
    basis: Matrix
    pattern: tuple
    example_input: Matrix
    example_product: Matrix
    samples: int
    passed: bool

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "basis": self.basis.to_json(),
            "expected_pattern": [list(row) for row in self.pattern],
            "example_input": self.example_input.to_json(),
            "example_product": self.example_product.to_json(),
            "samples": self.samples,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class LinearityCheck:
    kind: str  # "additivity" or "homogeneity"
    a: Matrix
    b1: Matrix
    b2: Matrix | None
    scalar: Fraction | None
    passed: bool

    def to_json(self) -> dict:
        out = {"kind": self.kind, "A": self.a.to_json(), "B1": self.b1.to_json()}
        if self.b2 is not None:
            out["B2"] = self.b2.to_json()
        if self.scalar is not None:
            out["scalar"] = format_rational(self.scalar)
        out["pass"] = self.passed
        return out


@dataclass(frozen=True)
class BasisCheckReport:
    variant: str
    samples: int
    seed: int
    checks: tuple
    bilinearity_checks: tuple
    overall_pass: bool

    def to_json(self) -> dict:
        return {
            "variant": self.variant,
            "samples": self.samples,
            "seed": self.seed,
            "checks": [c.to_json() for c in self.checks],
            "bilinearity_checks": [c.to_json() for c in self.bilinearity_checks],
            "overall_pass": self.overall_pass,
        }


def _random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def _random_2x2(rng: random.Random) -> Matrix:
    return Matrix(2, 2, [_random_rational(rng) for _ in range(4)])


def verify_sw_basis(variant: str = "winograd", samples: int = 50, seed: int = 0) -> BasisCheckReport:
    """Run the four basis-matrix checks plus linearity checks at threshold 1."""
    if samples < 1:
        raise ConfigInvalid(f"samples must be >= 1, got {samples}")
    cfg = StrassenConfig(threshold=1, variant=variant)
    rng = random.Random(seed)

    checks = []
    for label, i, j in BASIS:
        basis = basis_matrix(i, j)
        passed = True
        example_input = example_product = None
        for s in range(samples):
            a = _random_2x2(rng)
            product, _ = mul_strassen(a, basis, cfg)
            if product != expected_basis_product(a, i, j):
                passed = False
            if s == 0:
                example_input, example_product = a, product
        checks.append(BasisCheck(label, basis, symbolic_pattern(i, j),
                                 example_input, example_product, samples, passed))

    linearity = []
    for _ in range(samples):
        a, b1, b2 = _random_2x2(rng), _random_2x2(rng), _random_2x2(rng)
        lhs, _ = mul_strassen(a, b1 + b2, cfg)
        r1, _ = mul_strassen(a, b1, cfg)
        r2, _ = mul_strassen(a, b2, cfg)
        linearity.append(LinearityCheck("additivity", a, b1, b2, None, lhs == r1 + r2))
    for _ in range(samples):
        a, b1 = _random_2x2(rng), _random_2x2(rng)
        c = _random_rational(rng)
        lhs, _ = mul_strassen(a, b1.scale(c), cfg)
        rhs, _ = mul_strassen(a, b1, cfg)
        linearity.append(LinearityCheck("homogeneity", a, b1, None, c, lhs == rhs.scale(c)))

    overall = all(c.passed for c in checks) and all(c.passed for c in linearity)
    return BasisCheckReport(variant, samples, seed, tuple(checks), tuple(linearity), overall)


DEFAULT_DEMO_A = Matrix(2, 2, [1, 2, 3, 4])


def basis_decomposition_demo(b: Matrix, sample_a: Matrix | None = None,
                             variant: str = "winograd") -> Trace:
    """Trace showing B = sum of b_ij * E_ij and the product rebuilt by linearity.

    The four basis products A x E_ij come from the block scheme at threshold 1
    (each recorded as a single step); the final step confirms the linear
    reconstruction against the naive product.
    """
    if b.rows != 2 or b.cols != 2:
        raise NotTwoByTwo(f"the decomposition demo works on 2x2 matrices, got {b.rows}x{b.cols}")
    a = DEFAULT_DEMO_A if sample_a is None else sample_a
    if a.rows != 2 or a.cols != 2:
        raise NotTwoByTwo("the sample left factor must be 2x2")
    cfg = StrassenConfig(threshold=1, variant=variant)

    builder = TraceBuilder("multiply", "basis_decomposition", {"A": a, "B": b})
    bases = {label: basis_matrix(i, j) for label, i, j in BASIS}
    terms = " + ".join(f"({b[i, j]})*{label}" for label, i, j in BASIS)
    builder.add("decompose", f"B = {terms}", dict(bases), b)

    products = {}
    for label, i, j in BASIS:
        product, sub_trace = mul_strassen(a, bases[label], cfg)
        products[label] = product
        builder.add("basis_product",
                    f"Verified basis product A x {label} (7 scalar multiplications)",
                    {"A": a, label: bases[label]}, product, cost=sub_trace.total_cost)

    tally = builder.tally
    combined = Matrix.zeros(2, 2)
    for label, i, j in BASIS:
        combined = combined + products[label].scale(b[i, j])
        tally.mul(4)
        tally.add(4)
    builder.add("recombine",
                "A x B = " + " + ".join(f"({b[i, j]})*(A x {label})" for label, i, j in BASIS),
                dict(products), combined)

    direct, cost = naive_product_counted(a, b)
    tally.absorb(cost)
    builder.add("verify",
                "Linear reconstruction matches the naive product A x B exactly",
                {"direct": direct}, combined)
    return builder.finish()
