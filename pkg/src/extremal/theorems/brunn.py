"""Chord-center loci and the skew reflection behind Brunn's characterization.

A convex body is handed in as a :class:`LineBody`: a vectorized gauge-like
function (``<= 1`` inside) and a bounding ball.  Along a family of parallel
lines the nonempty chords are located by bisection; over the reals a chord is
a segment and its center its midpoint, over the complex numbers a chord is a
planar region and its center is found from two orthogonal real chords, then
cross-checked against a third direction and the equal-radius property of a
disk.  For an ellipsoid the centers lie on one hyperplane; the fit is total
least squares and its worst distance is the residual.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.linalg import null_space

from .. import linalg
from ..ellipsoid import Ellipsoid, gauge, generator
from ..errors import DomainError
from .report import VerificationReport, combine

BISECT_STEPS = 64
DISK_TOL = 1e-6
MIN_CHORD = 1e-3


@dataclass(frozen=True)
class LineBody:
    """Convex body ``{x : phi(x) <= 1}`` inside the ball of ``radius`` around ``center``.

    ``phi`` maps a stack of points ``(k, n)`` to ``k`` values and must be
    strictly below 1 at ``center``.
    """

    phi: Callable[[np.ndarray], np.ndarray]
    center: np.ndarray
    radius: float
    field: str = "real"

    @property
    def dim(self) -> int:
        return len(self.center)

    def contains(self, x) -> np.ndarray:
        return self.phi(np.atleast_2d(x)) <= 1.0

    @property
    def bounding_box(self) -> tuple[np.ndarray, np.ndarray]:
        c = linalg.realify(self.center) if self.field == "complex" else self.center
        return c - self.radius, c + self.radius

    @classmethod
    def from_ellipsoid(cls, E: Ellipsoid) -> "LineBody":
        radius = float(np.max(np.linalg.eigvalsh(np.linalg.inv(np.conj(E.shape))))) ** 0.5
        return cls(lambda x: gauge(E, x), E.center.copy(), 1.0001 * radius, E.field)

    @classmethod
    def superellipse(cls, p: float = 4.0) -> "LineBody":
        """``|x|^p + |y|^p <= 1`` in R^2; an ellipse only for ``p = 2``."""
        return cls(lambda x: np.sum(np.abs(x) ** p, axis=-1), np.zeros(2), 2.0 ** 0.5 * 1.0001, "real")


def boundary_between(body: LineBody, inside: np.ndarray, outside: np.ndarray) -> np.ndarray:
    """Boundary points on the segments ``inside[k] -> outside[k]`` by bisection."""
    lo = np.zeros(len(inside))
    hi = np.ones(len(inside))
    d = outside - inside
    for _ in range(BISECT_STEPS):
        mid = 0.5 * (lo + hi)
        ok = body.phi(inside + mid[:, None] * d) <= 1.0
        lo = np.where(ok, mid, lo)
        hi = np.where(ok, hi, mid)
    return inside + (0.5 * (lo + hi))[:, None] * d


def _unit(v, field) -> np.ndarray:
    v = np.asarray(v, dtype=complex if field == "complex" else float)
    norm = np.linalg.norm(v)
    if norm == 0:
        raise DomainError("direction must be nonzero")
    return v / norm


def _chord_through(body, points, v, s_span):
    a = boundary_between(body, points, points - s_span * v)
    b = boundary_between(body, points, points + s_span * v)
    return a, b


def _interior_offsets(body, basis, grid, spread):
    """Interior points ``center + sum t_k rho_k b_k`` with ``sum |t_k| <= spread``.

    ``rho_k`` is the distance from the center to the boundary along ``+-b_k``,
    so by convexity each such point lies inside the body.
    """
    c = body.center
    K = basis.shape[1]
    if K == 0:
        return c[None, :]
    B = basis.T
    far = 2.5 * body.radius
    ends = np.vstack([boundary_between(body, np.tile(c, (K, 1)), c + sgn * far * B) for sgn in (1.0, -1.0)])
    rho = np.linalg.norm(ends - c, axis=1).reshape(2, K).min(axis=0)
    ticks = np.linspace(-spread, spread, grid)
    T = np.array(list(itertools.product(ticks, repeat=K)))
    T = T[np.sum(np.abs(T), axis=1) <= spread + 1e-12]
    return c + (T * rho) @ B


def chord_centers(body: LineBody, direction, grid: int = 9, spread: float = 0.95):
    """Chord centers (and per-chord disk deviations over C) for lines parallel to ``direction``.

    The lines pass through a lattice of interior points spanning the
    complement of the direction (see :func:`_interior_offsets`).  Chords
    shorter than 1e-3 of the bounding radius are skipped.
    """
    v = _unit(direction, body.field)
    if len(v) != body.dim:
        raise DomainError("direction has the wrong dimension")
    comp = null_space(v.conj()[None, :])  # orthonormal complement over the field
    basis = np.concatenate([comp, 1j * comp], axis=1) if body.field == "complex" else comp
    offsets = _interior_offsets(body, basis, grid, spread)
    span = 2.5 * body.radius
    if body.field == "real":
        a, b = _chord_through(body, offsets, v, span)
        keep = np.linalg.norm(b - a, axis=1) > MIN_CHORD * body.radius
        return 0.5 * (a + b)[keep], np.zeros(int(keep.sum()))
    return _complex_chord_centers(body, offsets, v)


def _complex_chord_centers(body, offsets, v):
    span = 2.5 * body.radius

    def chord(s_start, w):
        a, b = _chord_through(body, offsets + s_start[:, None] * v, w * v, span)
        sa, sb = (a - offsets) @ v.conj(), (b - offsets) @ v.conj()
        return 0.5 * (sa + sb), 0.5 * np.abs(sb - sa)

    s0 = np.zeros(len(offsets), dtype=complex)  # each offset is interior
    m1, _ = chord(s0, 1.0)                # horizontal chord: its midpoint has the center's real part
    m2, r_v = chord(m1, 1j)               # vertical chord through it: a diameter
    c = m1.real + 1j * m2.imag
    m3, r_h = chord(c, 1.0)
    d = np.exp(1j * np.pi / 4)
    m4, r_d = chord(c, d)
    deviation = np.max(np.abs(np.vstack([r_h - r_v, r_d - r_v, m3 - c, m4 - c])), axis=0)
    big = r_v > MIN_CHORD * body.radius
    return (offsets + c[:, None] * v)[big], deviation[big]


def fit_hyperplane(Z: np.ndarray):
    """Total-least-squares hyperplane ``{z : (z - p) @ w = 0}``; returns ``(p, w, distances)``."""
    p = Z.mean(axis=0)
    _, _, Vh = np.linalg.svd(Z - p)
    w = Vh[-1].conj()
    return p, w, np.abs((Z - p) @ w)


def brunn_midpoint_locus(body: LineBody, direction, grid: int = 9, tol: float = 1e-6, seed=None) -> VerificationReport:
    """Residual of the best hyperplane through the chord centers along ``direction``.

    A chord that fails the disk test (complex case) counts as a residual of
    its deviation, since such a body is not a puck.  ``details["hyperplane"]``
    holds ``(point, normal)``.
    """
    Z, deviation = chord_centers(body, direction, grid)
    # in dimension 1 there is a single line and the "hyperplane" is a point
    need = body.dim + 1 if body.dim > 1 else 1
    if len(Z) < need:
        raise DomainError("the lines in this direction miss the body (too few nonempty chords)")
    p, w, dist = fit_hyperplane(Z)
    residual = float(max(dist.max(), deviation.max(initial=0.0)))
    details = {
        "chords": len(Z),
        "fit_residual": float(dist.max()),
        "max_disk_deviation": float(deviation.max(initial=0.0)),
        "puck_violations": int(np.sum(deviation > DISK_TOL)),
        "hyperplane": (p, w),
    }
    return VerificationReport("brunn-midpoint-locus", len(Z), residual, tol, seed, details=details)


@dataclass(frozen=True)
class AffineMap:
    """``z -> M z + t``."""

    M: np.ndarray
    t: np.ndarray

    def __call__(self, z):
        return np.asarray(z) @ self.M.T + self.t

    def then(self, other: "AffineMap") -> "AffineMap":
        """``other`` after ``self``."""
        return AffineMap(other.M @ self.M, other.M @ self.t + other.t)


def skew_map(o, v, w, lam) -> AffineMap:
    """Identity on the hyperplane direction ``ker w``, multiplication by ``lam`` along ``v``, fixing ``o``."""
    v = np.asarray(v)
    w = np.asarray(w)
    vw = v @ w
    if abs(vw) < 1e-12 * np.linalg.norm(v) * np.linalg.norm(w):
        raise DomainError("the line is parallel to the hyperplane")
    M = np.eye(len(v), dtype=np.result_type(v, w, lam)) + (lam - 1.0) * np.outer(v, w) / vw
    return AffineMap(M, o - M @ o)


def boundary_samples(body: LineBody, rng: np.random.Generator, k: int) -> np.ndarray:
    real_dim = 2 * body.dim if body.field == "complex" else body.dim
    g = rng.standard_normal((k, real_dim))
    g /= np.linalg.norm(g, axis=1, keepdims=True)
    dirs = linalg.unrealify(g) if body.field == "complex" else g
    start = np.tile(body.center, (k, 1))
    return boundary_between(body, start, start + 2.0 * body.radius * dirs)


def skew_reflection(body: LineBody, x, y, H=None, samples: int = 1000, seed: int = 0, grid: int = 9):
    """The affine symmetry of ``body`` taking boundary point ``x`` to ``y``.

    ``H = (p, w)`` is the chord-center hyperplane for the direction ``y - x``
    (computed when omitted).  With ``o`` the meeting point of the line and
    ``H``, ``f(z) = o + lam (z-o)_line + (z-o)_H`` where ``y - o = lam (x - o)``.
    Returns ``(f, report)``; the report checks ``f(x) = y`` and that
    ``f`` maps sampled boundary points to the boundary and keeps membership of
    sampled points away from the boundary.
    """
    x = np.asarray(x, dtype=body.center.dtype)
    y = np.asarray(y, dtype=body.center.dtype)
    v = y - x
    if H is None:
        H = brunn_midpoint_locus(body, v, grid).details["hyperplane"]
    p, w = H
    vw = v @ w
    if abs(vw) < 1e-12 * np.linalg.norm(v) * np.linalg.norm(w):
        raise DomainError("the line through x and y is parallel to the hyperplane")
    o = x + ((p - x) @ w) / vw * v
    xp, yp = x - o, y - o
    nx, ny = np.linalg.norm(xp), np.linalg.norm(yp)
    if abs(nx - ny) > 1e-8 * max(nx, ny, 1.0):
        raise DomainError(f"|x - o| = {nx:.12g} and |y - o| = {ny:.12g} differ; x, y are not a boundary pair")
    lam = (yp @ xp.conj()) / (xp @ xp.conj())
    if body.field == "real":
        lam = float(np.real(lam))
    f = skew_map(o, v, w, lam)

    rng = np.random.default_rng(seed)
    pair_err = float(np.max(np.abs(f(x) - y)))
    bnd = boundary_samples(body, rng, samples // 2)
    bnd_err = float(np.max(np.abs(body.phi(f(bnd)) - 1.0)))
    lo, hi = body.bounding_box
    U = rng.uniform(lo, hi, (samples - samples // 2, len(lo)))
    pts = linalg.unrealify(U) if body.field == "complex" else U
    before, after = body.phi(pts), body.phi(f(pts))
    mismatch = (before <= 1.0) != (after <= 1.0)
    member_err = float(np.max(np.abs(before[mismatch] - 1.0), initial=0.0))
    fixes = VerificationReport("skew-reflection/maps-x-to-y", 1, pair_err, 1e-10, seed)
    keeps = VerificationReport("skew-reflection/preserves-body", samples, max(bnd_err, member_err), 1e-8, seed,
                               details={"boundary_error": bnd_err, "membership_error": member_err,
                                        "mismatches": int(mismatch.sum())})
    report = combine("skew-reflection", [fixes, keeps], seed, lam=lam, modulus_error=abs(abs(lam) - 1.0),
                     origin=o)
    return f, report
