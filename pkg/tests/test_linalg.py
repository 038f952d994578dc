import numpy as np
import pytest
from hypothesis import given, strategies as st

from extremal import linalg
from extremal.errors import DimensionError, DomainError

from conftest import random_hermitian_pd

fields = st.sampled_from(["real", "complex"])
dims = st.integers(1, 7)
seeds = st.integers(0, 2**32 - 1)


def _hermitian(seed, n, field):
    rng = np.random.default_rng(seed)
    M = rng.standard_normal((n, n))
    if field == "complex":
        M = M + 1j * rng.standard_normal((n, n))
    return M + M.conj().T


@given(seeds, dims, fields)
def test_diagonalize_reconstructs_and_matches_lapack(seed, n, field):
    A = _hermitian(seed, n, field)
    U, lam = linalg.unitary_diagonalize(A)
    assert np.allclose(U.conj().T @ U, np.eye(n), atol=1e-12)
    assert np.allclose((U * lam) @ U.conj().T, A, atol=1e-11 * max(1, np.abs(A).max()))
    # independent oracle: LAPACK eigh
    assert np.allclose(lam, np.sort(np.linalg.eigvalsh(A))[::-1], atol=1e-11 * max(1, np.abs(A).max()))
    assert np.all(np.diff(lam) <= 0)
    assert U.dtype == (complex if field == "complex" else float)


def test_negative_off_diagonal_real():
    A = np.array([[2.0, -1.0, 0.3], [-1.0, 1.0, -0.7], [0.3, -0.7, 0.5]])
    U, lam = linalg.unitary_diagonalize(A)
    assert np.allclose((U * lam) @ U.T, A, atol=1e-14)


def test_phase_fixing_is_canonical():
    rng = np.random.default_rng(3)
    A = random_hermitian_pd(rng, 4, "complex")
    U, lam = linalg.unitary_diagonalize(A)
    for k in range(4):
        j = np.argmax(np.abs(U[:, k]))
        assert abs(U[j, k].imag) < 1e-12 and U[j, k].real > 0
    # a unitary change of basis followed by its inverse reproduces the frame
    V = np.diag(np.exp(1j * rng.uniform(0, 6, 4)))
    U2, lam2 = linalg.unitary_diagonalize(V @ A @ V.conj().T)
    assert np.allclose(lam, lam2)
    assert np.allclose(linalg._fix_phases(V.conj().T @ U2), U, atol=1e-10)


def test_diagonal_input_and_identity():
    U, lam = linalg.unitary_diagonalize(np.diag([1.0, 3.0, 2.0]))
    assert np.allclose(lam, [3, 2, 1])
    assert np.allclose(np.abs(U), np.eye(3)[:, [1, 2, 0]])


def test_rejects_non_hermitian_and_non_square():
    with pytest.raises(DomainError):
        linalg.unitary_diagonalize(np.array([[1.0, 2.0], [0.0, 1.0]]))
    with pytest.raises(DimensionError):
        linalg.unitary_diagonalize(np.ones((2, 3)))


@given(seeds, dims, fields)
def test_hermitian_sqrt_squares_back(seed, n, field):
    A = random_hermitian_pd(np.random.default_rng(seed), n, field)
    B = linalg.hermitian_sqrt(A)
    assert linalg.is_hermitian(B)
    assert np.allclose(B @ B, A, atol=1e-10 * np.abs(A).max())
    assert np.all(np.linalg.eigvalsh(B) > 0)


@given(seeds, dims, fields)
def test_norm_identity(seed, n, field):
    rng = np.random.default_rng(seed)
    A = random_hermitian_pd(rng, n, field)
    B = linalg.hermitian_sqrt(A)
    x = rng.standard_normal(n) + (1j * rng.standard_normal(n) if field == "complex" else 0)
    assert np.isclose(np.linalg.norm(B @ np.conj(x)) ** 2, linalg.form(A, x), rtol=1e-10)
    if field == "real":
        assert np.isclose(np.linalg.norm(B @ x) ** 2, linalg.form(A, x), rtol=1e-10)


def test_sqrt_rejects_indefinite():
    with pytest.raises(DomainError):
        linalg.hermitian_sqrt(np.diag([1.0, -1.0]))
    with pytest.raises(DomainError):
        linalg.hermitian_pd(np.diag([1.0, 0.0]))


def test_form_vectorized_and_real():
    A = np.array([[2.0, 1j], [-1j, 3.0]])
    X = np.array([[1.0, 0.0], [0.0, 1.0], [1.0, 1j]])
    vals = linalg.form(A, X)
    assert vals.dtype == float
    assert np.allclose(vals, [2.0, 3.0, 2 + 3 + 2 * np.real(1j * np.conj(1j))])
    with pytest.raises(DimensionError):
        linalg.form(A, np.ones(3))


def test_hadamard():
    assert np.allclose(linalg.hadamard([1, 2], [3, 4]), [3, 8])
    with pytest.raises(DimensionError):
        linalg.hadamard([1, 2], [1, 2, 3])


def test_as_field():
    assert linalg.as_field([1, 2], "complex").dtype == complex
    assert linalg.as_field(np.array([1 + 0j]), "real").dtype == float
    with pytest.raises(DomainError):
        linalg.as_field([1j], "real")


def test_complex_structure():
    for n in (1, 2, 3):
        J = linalg.complex_structure(n)
        assert J.dtype.kind == "i"
        assert np.array_equal(J @ J, -np.eye(2 * n, dtype=int))
        z = np.arange(n) + 1j * np.arange(n, 2 * n)
        assert np.allclose(J @ linalg.realify(z), linalg.realify(1j * z))


@given(seeds, st.integers(1, 4))
def test_realify_form_represents_the_hermitian_form(seed, n):
    rng = np.random.default_rng(seed)
    A = random_hermitian_pd(rng, n, "complex")
    R = linalg.realify_form(A)
    z = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    r = linalg.realify(z)
    assert np.isclose(r @ R @ r, linalg.form(A, z))
    assert np.allclose(R, R.T)
    assert linalg.commutator_norm(R) < 1e-12
    assert np.allclose(linalg.unrealify_form(R), A)
    assert np.allclose(linalg.unrealify(r), z)


def test_circle_rotation_is_multiplication_by_phase():
    z = np.array([1 + 2j, -0.5j])
    R = linalg.circle_rotation(2, 0.7)
    assert np.allclose(R @ linalg.realify(z), linalg.realify(np.exp(0.7j) * z))
    assert np.allclose(R @ linalg.circle_rotation(2, -0.7), np.eye(4))


def test_unrealify_odd_length():
    with pytest.raises(DimensionError):
        linalg.unrealify(np.ones(3))
    with pytest.raises(DimensionError):
        linalg.commutator_norm(np.eye(3))
