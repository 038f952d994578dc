"""Field-generic dense linear algebra over R or C.

Vectors and matrices are plain numpy arrays; the field is read off the dtype
(``complexfloating`` means C, anything else R).  Quadratic forms follow the
convention ``x^T A conj(x)``, so for a Hermitian ``A`` the real form agrees
with ``x^H conj(A) x``.

The eigensolver is a cyclic Jacobi iteration with a fixed sweep order, which
makes every downstream canonical form reproducible bit for bit.
"""
from __future__ import annotations

from typing import Literal

import numpy as np

from .errors import DimensionError, DomainError

Field = Literal["real", "complex"]

HERMITIAN_TOL = 1e-12
PD_RATIO = 1e-10


def field_of(x) -> Field:
    return "complex" if np.iscomplexobj(x) else "real"


def as_field(x, field: Field) -> np.ndarray:
    """Return ``x`` as a float or complex array according to ``field``."""
    if field == "complex":
        return np.asarray(x, dtype=complex)
    if field == "real":
        x = np.asarray(x)
        if np.iscomplexobj(x):
            if np.any(x.imag != 0):
                raise DomainError("complex entries supplied for a real-field object")
            x = x.real
        return np.asarray(x, dtype=float)
    raise ValueError(f"unknown field {field!r}")


def hadamard(x, y) -> np.ndarray:
    """Coordinatewise product ``x ⊙ y``."""
    x = np.asarray(x)
    y = np.asarray(y)
    if x.shape != y.shape:
        raise DimensionError(f"hadamard: shapes {x.shape} and {y.shape} differ")
    return x * y


def form(A, x) -> np.ndarray:
    """Evaluate ``x^T A conj(x)`` (real part) for a vector or a stack of row vectors."""
    A = np.asarray(A)
    x = np.asarray(x)
    if x.shape[-1] != A.shape[0]:
        raise DimensionError(f"form: vector length {x.shape[-1]} vs matrix size {A.shape[0]}")
    return np.real(np.einsum("...i,ij,...j->...", x, A, np.conj(x)))


def is_hermitian(A, tol: float = HERMITIAN_TOL) -> bool:
    A = np.asarray(A)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        return False
    return bool(np.max(np.abs(A - A.conj().T), initial=0.0) <= tol * max(1.0, np.max(np.abs(A), initial=0.0)))


def _require_square_hermitian(A) -> np.ndarray:
    A = np.asarray(A)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {A.shape}")
    if not is_hermitian(A):
        raise DomainError("matrix is not Hermitian")
    return A


def _rotation(a_pp: float, a_qq: float, a_pq: complex, complex_field: bool):
    """2x2 unitary V with V^H [[a_pp, a_pq], [conj(a_pq), a_qq]] V diagonal."""
    r = abs(a_pq)
    theta = (a_qq - a_pp) / (2.0 * r)
    t = np.copysign(1.0, theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c
    if complex_field:
        phase = a_pq / r
        return np.array([[c, s], [-s * np.conj(phase), c * np.conj(phase)]], dtype=complex)
    sign = np.sign(a_pq)
    return np.array([[c, s], [-s * sign, c * sign]], dtype=float)


def _jacobi(A: np.ndarray, max_sweeps: int = 100):
    A = np.array(A, dtype=complex if np.iscomplexobj(A) else float)
    n = A.shape[0]
    complex_field = np.iscomplexobj(A)
    U = np.eye(n, dtype=A.dtype)
    scale = max(np.max(np.abs(A), initial=0.0), np.finfo(float).tiny)
    for _ in range(max_sweeps):
        off = np.linalg.norm(A - np.diag(np.diag(A)))
        if off <= 1e-15 * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                a_pq = A[p, q]
                if abs(a_pq) <= 1e-300:
                    continue
                V = _rotation(A[p, p].real, A[q, q].real, a_pq, complex_field)
                idx = [p, q]
                A[:, idx] = A[:, idx] @ V
                A[idx, :] = V.conj().T @ A[idx, :]
                A[q, p] = 0.0
                A[p, q] = 0.0
                U[:, idx] = U[:, idx] @ V
    return np.real(np.diag(A)).copy(), U


def unitary_diagonalize(A):
    """Diagonalize a Hermitian matrix by a unitary frame.

    Returns ``(U, lam)`` with ``U @ diag(lam) @ U^H == A`` and ``lam`` sorted in
    descending order (stable on ties).  Columns of ``U`` are phase fixed: the
    entry of largest modulus in each column is real and positive.
    """
    A = _require_square_hermitian(A)
    lam, U = _jacobi(A)
    order = np.argsort(-lam, kind="stable")
    lam = lam[order]
    U = U[:, order]
    return _fix_phases(U), lam


def _fix_phases(U: np.ndarray) -> np.ndarray:
    U = U.copy()
    for k in range(U.shape[1]):
        j = int(np.argmax(np.abs(U[:, k]).round(12)))
        z = U[j, k]
        if z != 0:
            U[:, k] *= np.conj(z) / abs(z)
    if not np.iscomplexobj(U):
        return U.real
    return U


def check_pd(lam) -> None:
    lam = np.asarray(lam)
    top = np.max(lam)
    if top <= 0 or np.min(lam) <= PD_RATIO * top:
        raise DomainError(
            f"matrix is not positive definite (eigenvalues in [{np.min(lam):.3g}, {top:.3g}])"
        )


def hermitian_sqrt(A) -> np.ndarray:
    """Principal Hermitian square root ``B`` of a Hermitian PD matrix, ``B @ B == A``.

    Under the ``x^T A conj(x)`` convention the norm identity reads
    ``||B conj(x)||^2 == x^T A conj(x)``; for real ``A`` this is ``||Bx||^2``.
    """
    U, lam = unitary_diagonalize(A)
    check_pd(lam)
    B = (U * np.sqrt(lam)) @ U.conj().T
    return 0.5 * (B + B.conj().T)


def hermitian_pd(A) -> np.ndarray:
    """Validate a Hermitian PD matrix and return it symmetrized."""
    A = _require_square_hermitian(A)
    lam = np.linalg.eigvalsh(A)
    check_pd(lam)
    return 0.5 * (A + A.conj().T)


def complex_structure(n: int) -> np.ndarray:
    """The integer matrix ``J`` on R^{2n} representing multiplication by ``i``.

    Coordinates are stacked as ``(Re z, Im z)``, so ``J = [[0, -I], [I, 0]]``.
    """
    J = np.zeros((2 * n, 2 * n), dtype=int)
    J[:n, n:] = -np.eye(n, dtype=int)
    J[n:, :n] = np.eye(n, dtype=int)
    return J


def realify(z) -> np.ndarray:
    """Map ``x + iy`` in C^n to ``(x, y)`` in R^{2n}; works row-wise on stacks."""
    z = np.asarray(z, dtype=complex)
    return np.concatenate([z.real, z.imag], axis=-1)


def unrealify(v) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    if v.shape[-1] % 2:
        raise DimensionError("realified vectors have even length")
    n = v.shape[-1] // 2
    return v[..., :n] + 1j * v[..., n:]


def realify_form(A) -> np.ndarray:
    """Real symmetric 2n x 2n matrix of the Hermitian form ``z^T A conj(z)``."""
    A = np.asarray(A, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {A.shape}")
    P, Q = A.real, A.imag
    return np.block([[P, Q], [-Q, P]])


def unrealify_form(R) -> np.ndarray:
    """Inverse of :func:`realify_form` for J-commuting matrices."""
    R = np.asarray(R, dtype=float)
    if R.shape[0] % 2 or R.shape[0] != R.shape[1]:
        raise DimensionError("realified forms are square with even size")
    n = R.shape[0] // 2
    return R[:n, :n] + 1j * R[:n, n:]


def commutator_norm(R, J=None) -> float:
    """Max-norm of ``RJ - JR``."""
    R = np.asarray(R)
    if J is None:
        if R.shape[0] % 2:
            raise DimensionError("complex structure needs even dimension")
        J = complex_structure(R.shape[0] // 2)
    return float(np.max(np.abs(R @ J - J @ R), initial=0.0))


def circle_rotation(n: int, theta: float) -> np.ndarray:
    """``cos(theta) I + sin(theta) J`` on R^{2n}: multiplication by ``exp(i theta)``."""
    return np.cos(theta) * np.eye(2 * n) + np.sin(theta) * complex_structure(n)
