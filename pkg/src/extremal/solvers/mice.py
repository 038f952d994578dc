"""Minimal circumscribed ellipsoid of a finite cloud over R^n or C^n.

The lifted design problem: homogenize ``q_i = (p_i, 1)``, maximize
``log det M(u)`` with ``M(u) = sum u_i q_i q_i^H`` over the simplex.  Optimal
weights satisfy ``q_i^H M^{-1} q_i <= n + 1`` with equality on the support,
where ``n`` is the dimension over the field (the trace of ``M^{-1} M`` is
``n + 1`` whether the arithmetic is real or complex).
"""
from __future__ import annotations

import time

import numpy as np

from ..bodies import PointCloud, is_nonflat
from ..ellipsoid import Ellipsoid
from ..errors import ConvergenceError, DomainError
from .report import DualWeights, SolveReport

MAX_ITER = 100_000
REFRESH_EVERY = 64


def _inverse_and_scores(Q: np.ndarray, u: np.ndarray):
    M = Q.T @ (u[:, None] * Q.conj())
    Minv = np.linalg.inv(M)
    Minv = 0.5 * (Minv + Minv.conj().T)
    g = np.real(np.einsum("ij,jk,ik->i", Q.conj(), Minv, Q))
    return Minv, g


def design_weights(P: PointCloud, eps: float = 1e-6, u0=None, max_iter: int = MAX_ITER):
    """Run the away-step coordinate ascent; returns ``(u, iterations, gap)``."""
    X = P.points
    N, n = X.shape
    d = n + 1
    Q = np.hstack([X, np.ones((N, 1), dtype=X.dtype)])
    u = np.full(N, 1.0 / N) if u0 is None else np.asarray(u0, dtype=float).copy()
    if u.shape != (N,) or np.any(u < 0) or u.sum() <= 0:
        raise DomainError("initial weights must be a nonnegative vector over the cloud")
    u /= u.sum()
    Minv, g = _inverse_and_scores(Q, u)
    it = 0
    gap = np.inf
    while it < max_iter:
        if it % REFRESH_EVERY == 0:
            Minv, g = _inverse_and_scores(Q, u)
        j = int(np.argmax(g))
        plus = g[j] / d - 1.0
        supp = np.flatnonzero(u > 0)
        k = supp[int(np.argmin(g[supp]))]
        minus = 1.0 - g[k] / d
        gap = max(plus, minus)
        if gap <= eps:
            break
        it += 1
        if plus >= minus:
            i, gi = j, g[j]
            tau = (gi - d) / (d * (gi - 1.0))
        else:
            i, gi = k, g[k]
            if gi <= 1.0 + 1e-15:
                tau = -u[i] / (1.0 - u[i])
            else:
                tau = max((gi - d) / (d * (gi - 1.0)), -u[i] / (1.0 - u[i]))
        u *= 1.0 - tau
        u[i] += tau
        if u[i] < 1e-300:
            u[i] = 0.0
        beta = tau / (1.0 - tau)
        w = Minv @ Q[i]
        h = Q.conj() @ w
        denom = 1.0 + beta * gi
        Minv = (Minv - beta * np.outer(w, w.conj()) / denom) / (1.0 - tau)
        g = (g - beta * np.abs(h) ** 2 / denom) / (1.0 - tau)
    else:
        Minv, g = _inverse_and_scores(Q, u)
        supp = np.flatnonzero(u > 0)
        gap = max(g.max() / d - 1.0, 1.0 - g[supp].min() / d)
    u = np.clip(u, 0.0, None)
    return u / u.sum(), it, float(gap)


def ellipsoid_from_weights(P: PointCloud, u) -> Ellipsoid:
    """Center ``sum u_i p_i`` and shape ``(n Sigma)^{-1}`` rescaled to touch the cloud."""
    X = P.points
    n = X.shape[1]
    u = np.asarray(u, dtype=float)
    c = u @ X
    D = X - c
    Sigma = D.T @ (u[:, None] * D.conj())
    S = np.linalg.inv(Sigma) / n
    A = np.conj(0.5 * (S + S.conj().T))
    vals = np.real(np.einsum("ij,jk,ik->i", D, A, D.conj()))
    return Ellipsoid(c, A / vals.max())


def mice(P: PointCloud, eps: float = 1e-6, u0=None, max_iter: int = MAX_ITER, seed=None):
    """Minimal circumscribed ellipsoid of ``P`` over its own field.

    Returns ``(ellipsoid, DualWeights, SolveReport)``.  The ellipsoid contains
    every point (it is rescaled to touch the farthest one), and its volume is
    within ``(1 + eps)`` per field dimension of the optimum.
    """
    if not 0 < eps < 1:
        raise DomainError("eps must lie in (0, 1)")
    if not is_nonflat(P):
        raise DomainError("point cloud is flat; no circumscribed ellipsoid of positive volume")
    t0 = time.perf_counter()
    u, it, gap = design_weights(P, eps, u0, max_iter)
    report = SolveReport("mice", it, eps, gap, time.perf_counter() - t0, seed, converged=gap <= eps)
    if gap > eps:
        raise ConvergenceError(f"mice: gap {gap:.3g} > eps after {it} iterations", report)
    E = ellipsoid_from_weights(P, u)
    return E, DualWeights(u), report
