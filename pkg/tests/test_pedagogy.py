import random

import pytest

from linsteps import (ConfigInvalid, Matrix, NotTwoByTwo,
                      basis_decomposition_demo, mul_naive, verify_sw_basis,
                      verify_trace)
from linsteps.pedagogy import (BASIS, basis_matrix, expected_basis_product,
                               scheme_formulas, symbolic_pattern)

from _oracles import oracle_for, rand_matrix


def test_seeded_run_passes():
    report = verify_sw_basis("winograd", 50, 7)
    assert report.overall_pass
    assert len(report.checks) == 4
    assert [c.label for c in report.checks] == ["E11", "E12", "E21", "E22"]
    assert all(c.passed for c in report.bilinearity_checks)


@pytest.mark.parametrize("variant", ["strassen", "winograd"])
@pytest.mark.parametrize("seed", [0, 1, 99])
def test_both_variants_any_seed(variant, seed):
    assert verify_sw_basis(variant, 10, seed).overall_pass


def test_e11_instance():
    a = Matrix.from_rows([[1, 2], [3, 4]])
    assert expected_basis_product(a, 0, 0) == Matrix.from_rows([[1, 0], [3, 0]])


def test_zero_matrix_annihilates():
    z = Matrix.zeros(2, 2)
    for _, i, j in BASIS:
        assert expected_basis_product(z, i, j) == z


def test_symbolic_patterns_are_permutations_of_e11():
    assert symbolic_pattern(0, 0) == (("a", "0"), ("c", "0"))
    assert symbolic_pattern(0, 1) == (("0", "a"), ("0", "c"))
    assert symbolic_pattern(1, 0) == (("b", "0"), ("d", "0"))
    assert symbolic_pattern(1, 1) == (("0", "b"), ("0", "d"))


def test_basis_matrices():
    assert basis_matrix(0, 0) == Matrix.from_rows([[1, 0], [0, 0]])
    assert basis_matrix(1, 1) == Matrix.from_rows([[0, 0], [0, 1]])


def test_expected_pattern_matches_naive_product():
    rng = random.Random(3)
    for _ in range(20):
        a = rand_matrix(rng, 2, 2)
        for _, i, j in BASIS:
            direct, _ = mul_naive(a, basis_matrix(i, j))
            assert expected_basis_product(a, i, j) == direct


def test_samples_validated():
    with pytest.raises(ConfigInvalid):
        verify_sw_basis("winograd", 0, 1)


def test_report_json_shape():
    doc = verify_sw_basis("winograd", 3, 5).to_json()
    assert doc["overall_pass"] is True
    assert len(doc["checks"]) == 4
    assert doc["checks"][0]["expected_pattern"] == [["a", "0"], ["c", "0"]]
    assert {c["kind"] for c in doc["bilinearity_checks"]} == {"additivity", "homogeneity"}


def test_demo_identity_decomposition():
    trace = basis_decomposition_demo(Matrix.identity(2))
    decompose = trace.steps[0]
    assert decompose.kind == "decompose"
    assert "(1)*E11" in decompose.description and "(0)*E12" in decompose.description


def test_demo_single_term_right_factor():
    trace = basis_decomposition_demo(Matrix.from_rows([[1, 0], [0, 0]]))
    assert trace.final_result == Matrix.from_rows([[1, 0], [3, 0]])


def test_demo_reconstruction_matches_naive():
    rng = random.Random(11)
    for _ in range(10):
        a, b = rand_matrix(rng, 2, 2), rand_matrix(rng, 2, 2)
        trace = basis_decomposition_demo(b, sample_a=a)
        direct, _ = mul_naive(a, b)
        assert trace.final_result == direct
        assert verify_trace(trace, oracle_for("multiply")).passed


def test_demo_rejects_other_shapes():
    with pytest.raises(NotTwoByTwo):
        basis_decomposition_demo(Matrix.identity(3))


@pytest.mark.parametrize("variant,n_sums", [("strassen", 14), ("winograd", 15)])
def test_scheme_formulas_enumerate_the_table(variant, n_sums):
    lines = scheme_formulas(variant)
    products = [line for line in lines if " * " in line]
    assert [p.split(" = ")[0] for p in products] == [f"M{k}" for k in range(1, 8)]
    assert len(lines) - len(products) == n_sums
    assert sum(line.startswith("C") for line in lines) == 4
