"""Ellipsoids over R^n and C^n.

An :class:`Ellipsoid` stores a center ``c`` and a Hermitian positive-definite
shape ``A`` and denotes the set ``{x : (x-c)^T A conj(x-c) <= 1}``.  The
equivalent axis form is ``c + U (lam ⊙ u)`` with ``u`` in the unit ball and
``U`` unitary (:class:`AxisForm`).

Volumes are normalized: :func:`nvol` returns the product of the semi-axes,
i.e. the volume divided by the volume of the unit ball of the same space.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import DimensionError, DomainError
from .linalg import Field

EQUALITY_RTOL = 1e-8
EQUALITY_ATOL = 1e-8


@dataclass(frozen=True, eq=False)
class Ellipsoid:
    center: np.ndarray
    shape: np.ndarray

    def __post_init__(self):
        shape = np.asarray(self.shape)
        center = np.asarray(self.center)
        field: Field = "complex" if (np.iscomplexobj(shape) or np.iscomplexobj(center)) else "real"
        shape = linalg.hermitian_pd(linalg.as_field(shape, field))
        center = linalg.as_field(center, field).reshape(-1)
        if center.shape[0] != shape.shape[0]:
            raise DimensionError(f"center has length {center.shape[0]}, shape is {shape.shape}")
        shape.flags.writeable = False
        center.flags.writeable = False
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "center", center)

    @property
    def field(self) -> Field:
        return linalg.field_of(self.shape)

    @property
    def dim(self) -> int:
        return self.shape.shape[0]

    def translate(self, t) -> "Ellipsoid":
        return Ellipsoid(self.center + np.asarray(t), self.shape)

    def __repr__(self):
        return f"Ellipsoid(field={self.field!r}, center={self.center!r}, shape={self.shape!r})"


@dataclass(frozen=True, eq=False)
class AxisForm:
    """``center + frame @ (semi_axes ⊙ u)`` for ``u`` in the unit ball."""

    semi_axes: np.ndarray
    frame: np.ndarray
    center: np.ndarray

    def __post_init__(self):
        lam = np.asarray(self.semi_axes, dtype=float)
        if np.any(lam <= 0):
            raise DomainError("semi-axes must be positive")
        U = np.asarray(self.frame)
        if np.max(np.abs(U.conj().T @ U - np.eye(U.shape[0]))) > 1e-10:
            raise DomainError("axis frame is not unitary")
        object.__setattr__(self, "semi_axes", lam)


def unit_ball(n: int, field: Field = "real") -> Ellipsoid:
    dtype = complex if field == "complex" else float
    return Ellipsoid(np.zeros(n, dtype=dtype), np.eye(n, dtype=dtype))


def ball(center, radius: float) -> Ellipsoid:
    center = np.asarray(center)
    n = center.shape[0]
    dtype = complex if np.iscomplexobj(center) else float
    return Ellipsoid(center, np.eye(n, dtype=dtype) / radius**2)


def _check_points(E: Ellipsoid, x) -> np.ndarray:
    x = np.asarray(x)
    if x.shape[-1] != E.dim:
        raise DimensionError(f"point dimension {x.shape[-1]} does not match ellipsoid dimension {E.dim}")
    if np.iscomplexobj(x) and E.field == "real" and np.any(np.imag(x) != 0):
        raise DimensionError("complex point tested against a real ellipsoid")
    return x


def gauge(E: Ellipsoid, x) -> np.ndarray:
    """``(x-c)^T A conj(x-c)`` for a point or a stack of points."""
    x = _check_points(E, x)
    return linalg.form(E.shape, x - E.center)


def contains(E: Ellipsoid, x, tol: float = 0.0):
    """Membership test; vectorized over rows of ``x``."""
    g = gauge(E, x) <= 1.0 + tol
    return bool(g) if np.ndim(g) == 0 else g


def nvol(E: Ellipsoid) -> float:
    """Product of semi-axes, ``det(A)^(-1/2)`` over the ellipsoid's field."""
    sign, logdet = np.linalg.slogdet(E.shape)
    return float(np.exp(-0.5 * logdet))


def log_nvol(E: Ellipsoid) -> float:
    return float(-0.5 * np.linalg.slogdet(E.shape)[1])


def to_axis_form(E: Ellipsoid) -> AxisForm:
    # conj(A) plays the role of the usual x^H M x matrix under our convention
    U, mu = linalg.unitary_diagonalize(np.conj(E.shape))
    linalg.check_pd(mu)
    lam = mu ** -0.5
    order = np.argsort(-lam, kind="stable")
    return AxisForm(lam[order], U[:, order], E.center.copy())


def from_axis_form(F: AxisForm) -> Ellipsoid:
    U = np.asarray(F.frame)
    M = (U * F.semi_axes**-2.0) @ U.conj().T
    return Ellipsoid(F.center, np.conj(M))


def generator(E: Ellipsoid) -> np.ndarray:
    """Hermitian ``G`` with ``E = {c + G u : ||u|| <= 1}``."""
    return linalg.hermitian_sqrt(np.linalg.inv(np.conj(E.shape)))


def affine_image(E: Ellipsoid, M, t=None) -> Ellipsoid:
    """Image of ``E`` under ``x -> M x + t``."""
    M = np.asarray(M)
    if M.shape != (E.dim, E.dim):
        raise DimensionError(f"map has shape {M.shape}, expected {(E.dim, E.dim)}")
    if np.iscomplexobj(M) and E.field == "real" and np.any(np.imag(M) != 0):
        raise DomainError("complex map applied to a real ellipsoid")
    if np.linalg.cond(M) > 1e12:
        raise DomainError("affine map is singular or numerically singular")
    t = np.zeros(E.dim) if t is None else np.asarray(t)
    Minv = np.linalg.inv(M)
    shape = Minv.T @ E.shape @ np.conj(Minv)
    return Ellipsoid(M @ E.center + t, shape)


def polar_ellipsoid(E: Ellipsoid, atol: float = 1e-12) -> Ellipsoid:
    """Polar ``{x : x.a <= 1 for all a in E}`` of a centered real ellipsoid."""
    if E.field != "real":
        raise DomainError("polarity is only defined over the reals")
    if np.max(np.abs(E.center)) > atol:
        raise DomainError("polar_ellipsoid requires an ellipsoid centered at the origin")
    return Ellipsoid(np.zeros(E.dim), np.linalg.inv(E.shape))


def realified(E: Ellipsoid) -> Ellipsoid:
    """The complex ellipsoid ``E`` viewed as a real ellipsoid of R^{2n}."""
    if E.field != "complex":
        raise DomainError("realified() expects a complex ellipsoid")
    return Ellipsoid(linalg.realify(E.center), linalg.realify_form(E.shape))


def complexified(E: Ellipsoid, tol: float = 1e-8) -> Ellipsoid:
    """Inverse of :func:`realified`; ``E`` must be complex (J-commuting)."""
    if not is_complex(E, tol):
        raise DomainError("ellipsoid shape does not commute with the complex structure")
    return Ellipsoid(linalg.unrealify(E.center), linalg.unrealify_form(E.shape))


def is_complex(E: Ellipsoid, tol: float = 1e-8) -> bool:
    """Whether a real ellipsoid of R^{2n} is a complex ellipsoid of C^n.

    The test is commutation of the shape with the complex structure ``J``,
    which for quadratic forms is equivalent to invariance under every
    rotation ``cos t I + sin t J``.
    """
    if E.field != "real":
        raise DomainError("is_complex() expects a real ellipsoid of even dimension")
    if E.dim % 2:
        raise DimensionError("is_complex() needs an even real dimension")
    scale = max(1.0, float(np.max(np.abs(E.shape))))
    return linalg.commutator_norm(E.shape) <= tol * scale


def canonical_distance(E: Ellipsoid, F: Ellipsoid) -> tuple[float, float]:
    """(relative shape distance, absolute center distance)."""
    if E.dim != F.dim or E.field != F.field:
        raise DimensionError("ellipsoids live in different spaces")
    scale = max(float(np.max(np.abs(E.shape))), float(np.max(np.abs(F.shape))))
    shape_dist = float(np.max(np.abs(E.shape - F.shape))) / scale
    center_dist = float(np.max(np.abs(E.center - F.center)))
    return shape_dist, center_dist


def allclose(E: Ellipsoid, F: Ellipsoid, rtol: float = EQUALITY_RTOL, atol: float = EQUALITY_ATOL) -> bool:
    a, b = to_axis_form(E).semi_axes, to_axis_form(F).semi_axes
    if np.max(np.abs(a - b) / np.maximum(np.abs(a), np.abs(b))) > rtol:
        return False
    shape_dist, center_dist = canonical_distance(E, F)
    return shape_dist <= rtol and center_dist <= atol


def sample_unit_ball(rng: np.random.Generator, k: int, n: int, field: Field = "real", surface_fraction: float = 0.25) -> np.ndarray:
    """``k`` points of the unit ball of K^n: uniform, plus a share on the sphere."""
    real_dim = 2 * n if field == "complex" else n
    g = rng.standard_normal((k, real_dim))
    g /= np.linalg.norm(g, axis=1, keepdims=True)
    r = rng.random(k) ** (1.0 / real_dim)
    r[: int(surface_fraction * k)] = 1.0
    x = g * r[:, None]
    if field == "complex":
        return linalg.unrealify(x)
    return x


def sample(E: Ellipsoid, rng: np.random.Generator, k: int, surface_fraction: float = 0.25) -> np.ndarray:
    u = sample_unit_ball(rng, k, E.dim, E.field, surface_fraction)
    return E.center + u @ generator(E).T
