from fractions import Fraction

from hypothesis import strategies as st

from linsteps import Matrix

small_rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 9))


def matrices(rows: int, cols: int):
    return st.lists(small_rationals, min_size=rows * cols, max_size=rows * cols).map(
        lambda entries: Matrix(rows, cols, entries))


@st.composite
def square_matrices(draw, max_n: int = 4):
    n = draw(st.integers(1, max_n))
    return draw(matrices(n, n))


@st.composite
def matmul_pairs(draw, max_n: int = 5):
    r = draw(st.integers(1, max_n))
    k = draw(st.integers(1, max_n))
    c = draw(st.integers(1, max_n))
    return draw(matrices(r, k)), draw(matrices(k, c))
