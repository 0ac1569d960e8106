import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hadamard6.linalg import (MatrixFormatError, circulant, dephase, format_matrix, fourier_matrix,
                              hadamard_residual, load_matrix, max_entry_dist, parse_matrix,
                              save_matrix)

from conftest import random_phase

finite = st.floats(-10, 10, allow_nan=False, allow_infinity=False)
complexes = st.builds(complex, finite, finite)


def test_fourier_small_cases():
    assert np.allclose(fourier_matrix(1), [[1]])
    assert np.allclose(fourier_matrix(2), np.array([[1, 1], [1, -1]]) / np.sqrt(2), atol=1e-15)
    f3 = fourier_matrix(3)
    assert max_entry_dist(f3 @ f3.conj().T, np.eye(3)) <= 1e-14


@pytest.mark.parametrize("m", range(1, 9))
def test_fourier_unitary(m):
    f = fourier_matrix(m)
    assert max_entry_dist(f @ f.conj().T, np.eye(m)) <= 1e-13


def test_fourier_rejects_zero():
    with pytest.raises(ValueError):
        fourier_matrix(0)


def test_circulant_orientation_is_pinned():
    assert np.array_equal(circulant([1, 2, 3]), [[1, 2, 3], [3, 1, 2], [2, 3, 1]])
    assert np.array_equal(circulant([7]), [[7]])
    d, e, f = 4, 5, 6
    assert np.array_equal(circulant([d, e, f])[1], [f, d, e])


def test_circulant_empty():
    with pytest.raises(ValueError):
        circulant([])


@settings(max_examples=50, deadline=None)
@given(st.lists(complexes, min_size=3, max_size=3), st.lists(complexes, min_size=3, max_size=3))
def test_circulants_commute(a, b):
    A, B = circulant(a), circulant(b)
    assert max_entry_dist(A @ B, B @ A) <= 1e-12


@settings(max_examples=50, deadline=None)
@given(st.lists(complexes, min_size=3, max_size=3))
def test_adjoint_of_circulant(row):
    d, e, f = row
    expected = circulant([np.conj(d), np.conj(f), np.conj(e)])
    assert max_entry_dist(circulant(row).conj().T, expected) == 0.0


def test_hadamard_residual_examples():
    assert hadamard_residual(np.sqrt(6) * fourier_matrix(6)) <= 1e-12
    assert hadamard_residual(np.ones((2, 2))) == pytest.approx(2.0)
    with pytest.raises(ValueError):
        hadamard_residual(np.ones((2, 3)))


def test_dephase_already_dephased_is_fixed():
    f = np.sqrt(6) * fourier_matrix(6)
    n, d1, d2 = dephase(f)
    assert max_entry_dist(n, f) <= 1e-15
    assert np.allclose(d1, 1) and np.allclose(d2, 1)


def test_dephase_exact_ones_and_reconstruction(rng):
    f = np.sqrt(6) * fourier_matrix(6)
    m = random_phase(rng, 6)[:, None] * f * random_phase(rng, 6)[None, :]
    n, d1, d2 = dephase(m)
    assert np.all(n[0] == 1) and np.all(n[:, 0] == 1)
    assert max_entry_dist(d1[:, None] * m * d2[None, :], n) <= 1e-14
    assert np.allclose(np.abs(d1), 1) and np.allclose(np.abs(d2), 1)
    assert np.array_equal(dephase(n)[0], n)
    assert hadamard_residual(n) <= hadamard_residual(m) + 1e-12


def test_dephase_zero_entry():
    with pytest.raises(ValueError, match="zero entry"):
        dephase(np.array([[1, 0], [1, 1]]))


def test_max_entry_dist():
    a = np.arange(4).reshape(2, 2)
    assert max_entry_dist(a, a) == 0
    assert max_entry_dist([[0]], [[3 + 4j]]) == 5.0
    f3 = fourier_matrix(3)
    assert max_entry_dist(f3, f3.T) == 0.0
    with pytest.raises(ValueError):
        max_entry_dist(np.zeros((2, 2)), np.zeros((3, 3)))


def test_text_roundtrip_is_exact(tmp_path, rng):
    m = rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6))
    path = tmp_path / "m.mat"
    save_matrix(m, path)
    back = load_matrix(path)
    assert back.shape == (6, 6)
    assert max_entry_dist(back, m) == 0.0


def test_text_format_comments_and_layout():
    text = "# comment\n2 1\n1 0\n# inner\n0.5 -2\n"
    m = parse_matrix(text)
    assert m.shape == (2, 1)
    assert m[1, 0] == 0.5 - 2j
    assert format_matrix(np.array([[1 + 2j]])) == "1 1\n1 2\n"


@pytest.mark.parametrize("text,line", [
    ("2 2\n1 0 1 0\n1 0 1\n", 3),
    ("2 2\n1 0 1 0\n1 0 x 0\n", 3),
    ("2\n", 1),
])
def test_malformed_matrix_names_line(text, line):
    with pytest.raises(MatrixFormatError) as exc:
        parse_matrix(text)
    assert exc.value.line == line
    assert f"line {line}" in str(exc.value)


def test_missing_rows():
    with pytest.raises(MatrixFormatError, match="expected 3 rows"):
        parse_matrix("3 1\n1 0\n")
