"""Compact bodies: finite point clouds and real H-polytopes.

Complex bodies enter the inscribed-ellipsoid solver through realification, so
:class:`HPolytope` is real only.  Point clouds may be real or complex.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linprog
from scipy.spatial import ConvexHull, HalfspaceIntersection

from . import linalg
from .ellipsoid import Ellipsoid
from .errors import DimensionError, DomainError
from .linalg import Field

DEFAULT_ORDER = 64
SET_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class PointCloud:
    points: np.ndarray

    def __post_init__(self):
        pts = np.asarray(self.points)
        if pts.ndim == 1:
            pts = pts.reshape(-1, 1)
        if pts.ndim != 2 or pts.shape[0] == 0:
            raise DimensionError("a point cloud needs at least one point given as rows")
        pts = pts.astype(complex if np.iscomplexobj(pts) else float)
        pts.flags.writeable = False
        object.__setattr__(self, "points", pts)

    @classmethod
    def of(cls, points, field: Field) -> "PointCloud":
        return cls(linalg.as_field(points, field))

    @property
    def field(self) -> Field:
        return linalg.field_of(self.points)

    @property
    def dim(self) -> int:
        return self.points.shape[1]

    def __len__(self):
        return self.points.shape[0]

    def transformed(self, M, t=None) -> "PointCloud":
        M = np.asarray(M)
        t = np.zeros(self.dim) if t is None else np.asarray(t)
        return PointCloud(self.points @ M.T + t)

    def realified(self) -> "PointCloud":
        if self.field != "complex":
            raise DomainError("realified() expects a complex cloud")
        return PointCloud(linalg.realify(self.points))


@dataclass(frozen=True, eq=False)
class HPolytope:
    """``{x in R^n : A x <= b}``."""

    A: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        A = np.asarray(self.A, dtype=float)
        b = np.asarray(self.b, dtype=float).reshape(-1)
        if A.ndim != 2 or A.shape[0] != b.shape[0]:
            raise DimensionError(f"constraint matrix {A.shape} and offsets {b.shape} disagree")
        if np.any(np.linalg.norm(A, axis=1) == 0):
            raise DomainError("zero constraint normal")
        A.flags.writeable = False
        b.flags.writeable = False
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)

    @property
    def dim(self) -> int:
        return self.A.shape[1]

    @classmethod
    def box(cls, lo, hi) -> "HPolytope":
        lo = np.asarray(lo, dtype=float)
        hi = np.asarray(hi, dtype=float)
        n = lo.shape[0]
        I = np.eye(n)
        return cls(np.vstack([I, -I]) + 0.0, np.concatenate([hi, -lo]) + 0.0)

    @classmethod
    def from_points(cls, P) -> "HPolytope":
        """H-representation of the convex hull of a real cloud."""
        pts = P.points if isinstance(P, PointCloud) else np.asarray(P, dtype=float)
        if np.iscomplexobj(pts):
            raise DomainError("H-polytopes are real; realify complex clouds first")
        hull = ConvexHull(pts)
        eq = _unique_rows(hull.equations)
        return cls(eq[:, :-1], -eq[:, -1])

    def normalized(self) -> "HPolytope":
        s = np.linalg.norm(self.A, axis=1)
        return HPolytope(self.A / s[:, None], self.b / s)

    def contains(self, x, tol: float = 0.0):
        x = np.asarray(x, dtype=float)
        ok = np.all(x @ self.A.T <= self.b + tol, axis=-1)
        return bool(ok) if np.ndim(ok) == 0 else ok

    def slack(self, x) -> np.ndarray:
        return self.b - np.asarray(x, dtype=float) @ self.A.T

    def chebyshev_ball(self) -> tuple[np.ndarray, float]:
        """Center and radius of the largest inscribed Euclidean ball."""
        norms = np.linalg.norm(self.A, axis=1)
        c = np.zeros(self.dim + 1)
        c[-1] = -1.0
        A_ub = np.hstack([self.A, norms[:, None]])
        res = linprog(c, A_ub=A_ub, b_ub=self.b, bounds=[(None, None)] * self.dim + [(0, None)], method="highs")
        if res.status == 3:
            raise DomainError("polytope is unbounded")
        if res.status != 0:
            raise DomainError(f"Chebyshev-center LP failed: {res.message}")
        r = float(res.x[-1])
        if r <= 1e-12:
            raise DomainError("polytope is empty or has no interior")
        return res.x[:-1], r

    def support(self, direction) -> float:
        """``max_{x in P} direction . x``; ``inf`` when unbounded."""
        res = linprog(-np.asarray(direction, dtype=float), A_ub=self.A, b_ub=self.b,
                      bounds=[(None, None)] * self.dim, method="highs")
        if res.status == 3:
            return math.inf
        if res.status != 0:
            raise DomainError(f"support LP failed: {res.message}")
        return float(-res.fun)

    def is_bounded(self, rng: np.random.Generator | None = None) -> bool:
        rng = np.random.default_rng(0) if rng is None else rng
        I = np.eye(self.dim)
        dirs = np.vstack([I, -I, rng.standard_normal((2 * self.dim, self.dim))])
        return all(math.isfinite(self.support(d)) for d in dirs)

    def vertices(self) -> np.ndarray:
        """Vertex enumeration by halfspace intersection around the Chebyshev center."""
        x0, _ = self.chebyshev_ball()
        hs = HalfspaceIntersection(np.hstack([self.A, -self.b[:, None]]), x0)
        V = hs.intersections
        # drop duplicates produced by degenerate vertices
        return V[ConvexHull(V).vertices] if self.dim > 1 else _unique_rows(V)

    def intersect(self, other: "HPolytope") -> "HPolytope":
        return HPolytope(np.vstack([self.A, other.A]), np.concatenate([self.b, other.b]))

    def symmetrized(self, m: int = 2, complex_structure: bool = False) -> "HPolytope":
        """Intersection of the rotated copies ``zeta Q`` over the sampled unit scalars.

        A centered ellipsoid is contained in ``Q`` iff it is contained in every
        ``zeta Q``, so this is the body whose free inscribed ellipsoid is the
        centered one.
        """
        if not complex_structure:
            return HPolytope(np.vstack([self.A, -self.A]), np.concatenate([self.b, self.b]))
        if self.dim % 2:
            raise DimensionError("complex symmetrization needs even dimension")
        if m < 2:
            raise DomainError("symmetrization order must be at least 2")
        n = self.dim // 2
        blocks = [self.A @ linalg.circle_rotation(n, 2 * np.pi * k / m).T for k in range(m)]
        return HPolytope(np.vstack(blocks), np.tile(self.b, m))


def _unique_rows(X: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    keep = []
    for i, x in enumerate(X):
        if all(np.max(np.abs(x - X[j])) > tol for j in keep):
            keep.append(i)
    return X[keep]


def is_nonflat(P: PointCloud, tol: float = 1e-10) -> bool:
    """Whether the affine hull of the cloud is all of K^n."""
    if len(P) == 0:
        raise DomainError("empty cloud")
    X = P.points - P.points.mean(axis=0)
    if len(P) <= P.dim:
        return False
    s = np.linalg.svd(X, compute_uv=False)
    if s[0] == 0:
        return False
    return bool(s.shape[0] >= P.dim and s[P.dim - 1] > tol * s[0])


def _dedupe(X: np.ndarray, tol: float) -> np.ndarray:
    R = linalg.realify(X) if np.iscomplexobj(X) else X
    _, idx = np.unique(np.round(R / tol), axis=0, return_index=True)
    return X[np.sort(idx)]


def unit_scalars(m: int, field: Field) -> np.ndarray:
    if field == "real":
        return np.array([1.0, -1.0])
    return np.exp(2j * np.pi * np.arange(m) / m)


def symmetrize(P: PointCloud, m: int = DEFAULT_ORDER) -> PointCloud:
    """Union of ``zeta P`` over ``m`` equally spaced unit scalars (``m = 2`` over R)."""
    if m < 2:
        raise DomainError("symmetrization order must be at least 2")
    zetas = unit_scalars(m, P.field)
    X = np.concatenate([z * P.points for z in zetas], axis=0)
    return PointCloud(_dedupe(X, SET_TOL * max(1.0, float(np.max(np.abs(X))))))


def same_point_set(P: PointCloud, Q: PointCloud, tol: float = 1e-12) -> bool:
    X, Y = P.points, Q.points
    if X.shape[1] != Y.shape[1]:
        return False
    d = np.abs(X[:, None, :] - Y[None, :, :]).max(axis=2)
    return bool(np.all(d.min(axis=1) <= tol) and np.all(d.min(axis=0) <= tol))


def origin_interior_margin(P: PointCloud) -> float:
    """Largest ``t`` with ``0 = sum w_i p_i``, ``sum w_i = 1``, ``w_i >= t``.

    Positive exactly when the origin is in the relative interior of the hull;
    together with non-flatness this certifies an interior origin.
    """
    X = P.points
    N, n = X.shape
    c = np.zeros(N + 1)
    c[-1] = -1.0
    A_eq = np.vstack([np.hstack([X.T, np.zeros((n, 1))]), np.hstack([np.ones((1, N)), [[0.0]]])])
    b_eq = np.concatenate([np.zeros(n), [1.0]])
    A_ub = np.hstack([-np.eye(N), np.ones((N, 1))])
    res = linprog(c, A_ub=A_ub, b_ub=np.zeros(N), A_eq=A_eq, b_eq=b_eq,
                  bounds=[(0, None)] * N + [(None, None)], method="highs")
    if res.status != 0:
        return -math.inf
    return float(res.x[-1])


def origin_is_interior(P: PointCloud) -> bool:
    return is_nonflat(P) and origin_interior_margin(P) > 1e-12


def polar_polytope(P: PointCloud) -> HPolytope:
    """``{x : p . x <= 1 for every p in P}``, the polar of the hull of ``P``."""
    if P.field != "real":
        raise DomainError("there is no polarity over the complex field")
    if not origin_is_interior(P):
        raise DomainError("the origin is not interior to the convex hull")
    return HPolytope(P.points.copy(), np.ones(len(P)))


def polar_vertices(P: PointCloud) -> PointCloud:
    """Vertices of the polar of ``conv P``, read off the facets of the hull."""
    if P.field == "complex":
        raise DomainError("there is no polarity over the complex field")
    if not origin_is_interior(P):
        raise DomainError("the origin is not interior to the convex hull")
    H = HPolytope.from_points(P)
    return PointCloud(H.A / H.b[:, None])


@dataclass(frozen=True)
class Disk:
    center: complex
    radius: float
    support: tuple

    @property
    def flat(self) -> bool:
        return self.radius <= 0.0

    def to_ellipsoid(self, field: Field = "complex") -> Ellipsoid:
        if self.flat:
            raise DomainError("degenerate disk of radius zero is not an ellipsoid")
        if field == "complex":
            return Ellipsoid(np.array([self.center]), np.eye(1, dtype=complex) / self.radius**2)
        return Ellipsoid(np.array([self.center.real, self.center.imag]), np.eye(2) / self.radius**2)


def _disk2(a: complex, b: complex):
    return (a + b) / 2, abs(a - b) / 2


def _disk3(a: complex, b: complex, c: complex):
    # circumcircle; collinear triples fall back to the widest pair
    bx, cx = b - a, c - a
    d = 2 * (bx.real * cx.imag - bx.imag * cx.real)
    if abs(d) <= 1e-14 * max(abs(bx), abs(cx)) ** 2:
        pairs = [(a, b), (a, c), (b, c)]
        p, q = max(pairs, key=lambda pq: abs(pq[0] - pq[1]))
        return _disk2(p, q)
    ux = (cx.imag * abs(bx) ** 2 - bx.imag * abs(cx) ** 2) / d
    uy = (bx.real * abs(cx) ** 2 - cx.real * abs(bx) ** 2) / d
    center = a + complex(ux, uy)
    return center, max(abs(center - a), abs(center - b), abs(center - c))


def min_enclosing_disk(P, seed: int = 0, tol: float = 1e-12) -> Disk:
    """Smallest enclosing disk of a cloud in R^2 or C^1 (randomized incremental)."""
    if isinstance(P, PointCloud):
        X = P.points
    else:
        X = np.asarray(P)
    if np.iscomplexobj(X) or (X.ndim == 2 and X.shape[1] == 1):
        if X.ndim != 1 and X.shape[1] != 1:
            raise DimensionError("min_enclosing_disk expects points of C^1 or R^2")
        z = np.asarray(X, dtype=complex).reshape(-1)
    else:
        if X.ndim != 2 or X.shape[1] != 2:
            raise DimensionError("min_enclosing_disk expects points of C^1 or R^2")
        z = X[:, 0] + 1j * X[:, 1]
    if z.size == 0:
        raise DimensionError("no points")
    rng = np.random.default_rng(seed)
    pts = [complex(w) for w in z[rng.permutation(z.size)]]

    def inside(c, r, p):
        return abs(p - c) <= r * (1 + tol) + tol

    c, r, sup = pts[0], 0.0, (pts[0],)
    for i in range(1, len(pts)):
        p = pts[i]
        if inside(c, r, p):
            continue
        c, r, sup = p, 0.0, (p,)
        for j in range(i):
            q = pts[j]
            if inside(c, r, q):
                continue
            c, r = _disk2(p, q)
            sup = (p, q)
            for k in range(j):
                s = pts[k]
                if inside(c, r, s):
                    continue
                c, r = _disk3(p, q, s)
                sup = (p, q, s)
    r = max(r, max(abs(w - c) for w in pts))
    return Disk(complex(c), float(r), sup)
