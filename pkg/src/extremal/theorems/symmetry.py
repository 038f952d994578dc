"""Symmetric ellipsoids are complex, and the centered extremal ellipsoids are polar to each other."""
from __future__ import annotations

import numpy as np

from .. import linalg
from ..bodies import HPolytope, PointCloud, origin_is_interior, polar_vertices
from ..ellipsoid import Ellipsoid, canonical_distance, is_complex, nvol, polar_ellipsoid
from ..errors import DimensionError, DomainError
from ..solvers.centered import centered_maie, centered_mice
from .report import VerificationReport

BM_TOL = 1e-8
POLARITY_TOL = 1e-4


def circle_average(A, m: int = 256) -> np.ndarray:
    """Average of ``R A R^T`` over ``m`` equally spaced rotations ``cos t I + sin t J``.

    For a quadratic form the average equals the full circle average once
    ``m >= 3`` (the integrand is a trigonometric polynomial of degree 2).
    """
    A = np.asarray(A, dtype=float)
    if A.shape[0] % 2:
        raise DimensionError("the complex structure needs an even real dimension")
    n = A.shape[0] // 2
    rots = [linalg.circle_rotation(n, 2 * np.pi * k / m) for k in range(m)]
    S = sum(R @ A @ R.T for R in rots) / m
    return 0.5 * (S + S.T)


def check_bm_symmetric_implies_complex(A, m: int = 256, seed=None) -> VerificationReport:
    """A rotation-invariant (symmetric) real ellipsoid of R^{2n} commutes with ``J``."""
    if m < 3:
        raise DomainError("m must be at least 3")
    A = linalg.hermitian_pd(np.asarray(A, dtype=float))
    S = circle_average(A, m)
    scale = max(1.0, float(np.max(np.abs(S))))
    comm = linalg.commutator_norm(S) / scale
    E = Ellipsoid(np.zeros(len(S)), S)
    details = {"commutator": comm, "is_complex": is_complex(E, BM_TOL), "input_commutator": linalg.commutator_norm(A)}
    return VerificationReport("bm-symmetric-implies-complex", 1, comm, BM_TOL, seed, details=details)


def check_polarity_duality(P: PointCloud, eps: float = 1e-9, seed=None) -> VerificationReport:
    """``polar(MA(conv P)) = MI(polar(conv P))`` and ``nvol(MA) nvol(MI) = 1``.

    MA is the largest origin-centered ellipsoid inside the hull (centered
    MaIE of its H-form); MI the smallest origin-centered ellipsoid around the
    polar, computed from the polar's vertices.
    """
    if P.field != "real":
        raise DomainError("polarity is only defined over the reals")
    if not origin_is_interior(P):
        raise DomainError("the origin is not interior to the convex hull")
    E, _ = centered_maie(HPolytope.from_points(P))
    F, _, _ = centered_mice(polar_vertices(P), eps=eps)
    Estar = polar_ellipsoid(E, atol=1e-6)
    shape_dist, center_dist = canonical_distance(Estar, F)
    product = nvol(E) * nvol(F)
    residual = max(shape_dist, center_dist, abs(product - 1.0))
    details = {"shape_distance": shape_dist, "center_distance": center_dist, "volume_product": product,
               "nvol_ma": nvol(E), "nvol_mi": nvol(F)}
    return VerificationReport("polarity-duality", 1, float(residual), POLARITY_TOL, seed, details=details)
