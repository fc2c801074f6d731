"""Independent brute-force oracles used to replay-check engine traces.

Everything here is implemented from scratch on purpose: permutation-sum
determinants, a plain triple-loop product, Gauss-Jordan inversion and a
standalone RREF.  None of it shares code with the package's traced paths.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from math import lcm

from linsteps import EigenResult, CharPoly, Matrix, SolveResult


def perm_sign(perm) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm))
                     if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def perm_det(a: Matrix) -> Fraction:
    """Signed sum over all permutation products; factorial time, n <= ~7."""
    n = a.rows
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        product = Fraction(1)
        for i in range(n):
            product *= a[i, perm[i]]
        total += perm_sign(perm) * product
    return total


def plain_matmul(a: Matrix, b: Matrix) -> Matrix:
    rows = []
    for i in range(a.rows):
        row = []
        for j in range(b.cols):
            row.append(sum((a[i, k] * b[k, j] for k in range(a.cols)), Fraction(0)))
        rows.append(row)
    return Matrix.from_rows(rows)


def oracle_rref(rows, pivot_limit):
    """In-place RREF restricted to the first pivot_limit columns; returns pivots."""
    n_rows = len(rows)
    n_cols = len(rows[0])
    pivots = []
    r = 0
    for c in range(pivot_limit):
        if r == n_rows:
            break
        hit = None
        for i in range(r, n_rows):
            if rows[i][c] != 0:
                hit = i
                break
        if hit is None:
            continue
        rows[r], rows[hit] = rows[hit], rows[r]
        p = rows[r][c]
        rows[r] = [x / p for x in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return pivots


def gj_inverse(a: Matrix) -> Matrix:
    """Gauss-Jordan on [A|I]; raises ValueError on singular input."""
    n = a.rows
    rows = [list(a.row_values(i)) + [Fraction(1) if j == i else Fraction(0) for j in range(n)]
            for i in range(n)]
    pivots = oracle_rref(rows, n)
    if len(pivots) != n:
        raise ValueError("singular matrix")
    return Matrix.from_rows([row[n:] for row in rows])


def charpoly_coeffs(a: Matrix) -> tuple:
    """Coefficients of det(xI - A), ascending, via polynomial permutation sum."""
    n = a.rows

    def poly_mul(p, q):
        out = [Fraction(0)] * (len(p) + len(q) - 1)
        for i, pi in enumerate(p):
            if pi:
                for j, qj in enumerate(q):
                    out[i + j] += pi * qj
        return out

    total = [Fraction(0)] * (n + 1)
    for perm in itertools.permutations(range(n)):
        product = [Fraction(perm_sign(perm))]
        for i in range(n):
            if perm[i] == i:
                product = poly_mul(product, [-a[i, i], Fraction(1)])
            else:
                product = poly_mul(product, [-a[i, perm[i]]])
        for k, c in enumerate(product):
            total[k] += c
    return tuple(total)


def _divisors(n: int):
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


def rational_roots(coeffs) -> list:
    """(root, multiplicity) pairs in the engine's deterministic order, plus residual."""
    scale = lcm(*[c.denominator for c in coeffs])
    ints = [int(c * scale) for c in coeffs]
    first_nonzero = next(i for i, c in enumerate(ints) if c != 0)
    candidates = []
    if first_nonzero > 0:
        candidates.append(Fraction(0))
    seen = set(candidates)
    for p in _divisors(ints[first_nonzero]):
        for q in _divisors(ints[-1]):
            for value in (Fraction(p, q), Fraction(-p, q)):
                if value not in seen:
                    seen.add(value)
                    candidates.append(value)
    candidates.sort(key=lambda v: (abs(v), 0 if v > 0 else 1))

    def evaluate(cs, x):
        acc = cs[-1]
        for c in reversed(cs[:-1]):
            acc = acc * x + c
        return acc

    def divide(cs, root):
        degree = len(cs) - 1
        quotient = [Fraction(0)] * degree
        carry = cs[degree]
        for k in range(degree - 1, -1, -1):
            quotient[k] = carry
            carry = cs[k] + root * carry
        return quotient, carry

    current = list(coeffs)
    found = []
    for cand in candidates:
        if len(current) == 1:
            break
        if evaluate(current, cand) != 0:
            continue
        mult = 0
        while len(current) > 1:
            q, rem = divide(current, cand)
            if rem != 0:
                break
            current = q
            mult += 1
        found.append((cand, mult))
    return found, tuple(current)


def eigen_oracle(a: Matrix) -> EigenResult:
    coeffs = charpoly_coeffs(a)
    found, residual = rational_roots(coeffs)
    vectors = {}
    n = a.rows
    for value, _mult in found:
        rows = [[a[i, j] - (value if i == j else 0) for j in range(n)] for i in range(n)]
        pivots = oracle_rref(rows, n)
        free = [c for c in range(n) if c not in pivots]
        basis_rows = []
        for f in free:
            v = [Fraction(0)] * n
            v[f] = Fraction(1)
            for r, pc in enumerate(pivots):
                v[pc] = -rows[r][f]
            basis_rows.append(v)
        oracle_rref(basis_rows, n)
        vectors[value] = tuple(Matrix.column(r) for r in basis_rows if any(x != 0 for x in r))
    return EigenResult(tuple(found), CharPoly(residual), vectors)


def solve_oracle(a: Matrix, b: Matrix) -> SolveResult:
    n_vars = a.cols
    rows = [list(a.row_values(i)) + [b[i, 0]] for i in range(a.rows)]
    pivots = oracle_rref(rows, n_vars)
    rank = len(pivots)
    if any(rows[r][n_vars] != 0 for r in range(rank, a.rows)):
        return SolveResult("inconsistent", None, ())
    solution = [Fraction(0)] * n_vars
    for r, pc in enumerate(pivots):
        solution[pc] = rows[r][n_vars]
    particular = Matrix.column(solution)
    if rank == n_vars:
        return SolveResult("unique", particular, ())
    basis = []
    for f in [c for c in range(n_vars) if c not in pivots]:
        v = [Fraction(0)] * n_vars
        v[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][f]
        basis.append(Matrix.column(v))
    return SolveResult("infinite", particular, tuple(basis))


def minor_rank(a: Matrix) -> int:
    """Rank as the largest k with a nonzero k x k minor (n <= 4)."""
    best = 0
    max_k = min(a.rows, a.cols)
    for k in range(1, max_k + 1):
        for rows in itertools.combinations(range(a.rows), k):
            for cols in itertools.combinations(range(a.cols), k):
                if perm_det(a.submatrix(list(rows), list(cols))) != 0:
                    best = k
                    break
            if best == k:
                break
    return best


def recompute(task: str, inputs: dict):
    """Recompute a task's final value from trace inputs, independently."""
    if task == "multiply":
        return plain_matmul(inputs["A"], inputs["B"])
    if task == "determinant":
        return perm_det(inputs["A"])
    if task == "inverse":
        return gj_inverse(inputs["A"])
    if task == "eigen":
        return eigen_oracle(inputs["A"])
    if task == "solve":
        return solve_oracle(inputs["A"], inputs["b"])
    if task == "charpoly":
        return CharPoly(charpoly_coeffs(inputs["A"]))
    raise ValueError(f"no oracle for task {task!r}")


def oracle_for(task: str):
    return lambda inputs: recompute(task, inputs)


# -- seeded random inputs ---------------------------------------------------------


def rand_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def rand_matrix(rng: random.Random, rows: int, cols: int) -> Matrix:
    return Matrix(rows, cols, [rand_rational(rng) for _ in range(rows * cols)])


def rand_nonsingular(rng: random.Random, n: int) -> Matrix:
    while True:
        m = rand_matrix(rng, n, n)
        if perm_det(m) != 0:
            return m
