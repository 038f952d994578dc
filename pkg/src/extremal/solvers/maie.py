"""Maximal inscribed ellipsoid of an H-polytope.

The ellipsoid is parametrized as ``{B u + d : ||u|| <= 1}`` with ``B``
symmetric positive definite, optionally restricted to the linear subspace of
matrices commuting with the complex structure ``J`` (complex ellipsoids of
C^n viewed in R^{2n}).  Inscription in ``{x : a_i . x <= b_i}`` is the
second-order cone condition ``||B a_i|| + a_i . d <= b_i``.

The log-det objective is maximized with a barrier method (Newton centering,
geometric increase of the barrier weight).  The optimal shape is unique, but
for complex ellipsoids the optimal centers may form a continuum; a barrier
path always lands on its analytic center.  The center is therefore selected
afterwards as the admissible center closest to the starting point, which keeps
the dependence on the initialization that a translate family actually has.
"""
from __future__ import annotations

import time
from functools import lru_cache

import numpy as np
from scipy.optimize import minimize, nnls

from .. import linalg
from ..bodies import HPolytope
from ..ellipsoid import Ellipsoid, complexified
from ..errors import ConvergenceError, DimensionError, DomainError
from .report import SolveReport

MAX_OUTER = 10_000
GAP_TOL = 1e-11
NEWTON_TOL = 1e-12
BARRIER_FACTOR = 10.0


@lru_cache(maxsize=None)
def shape_basis(N: int, complex_constrained: bool) -> np.ndarray:
    """Frobenius-orthonormal basis, shape (K, N, N), of the admissible shape matrices."""
    mats = []
    for i in range(N):
        for j in range(i, N):
            S = np.zeros((N, N))
            if i == j:
                S[i, i] = 1.0
            else:
                S[i, j] = S[j, i] = 1.0 / np.sqrt(2.0)
            mats.append(S)
    S = np.array(mats)
    if complex_constrained:
        J = linalg.complex_structure(N // 2).astype(float)
        S = 0.5 * (S - J @ S @ J)
        V = S.reshape(len(S), -1)
        _, sv, Vt = np.linalg.svd(V, full_matrices=False)
        rank = int(np.sum(sv > 1e-10))
        S = Vt[:rank].reshape(rank, N, N)
        S = 0.5 * (S + S.transpose(0, 2, 1))
    S.flags.writeable = False
    return S


class _Barrier:
    """``t * (-log det B) - sum log s_i`` and its derivatives in ``z = (x, d)``."""

    def __init__(self, A: np.ndarray, b: np.ndarray, basis: np.ndarray):
        self.A = A
        self.b = b
        self.S = basis
        self.K = basis.shape[0]
        self.N = A.shape[1]
        self.G = np.einsum("kpq,iq->ipk", basis, A)
        self.GtG = np.einsum("ipk,ipl->ikl", self.G, self.G)

    def split(self, z):
        return z[: self.K], z[self.K:]

    def shape(self, x):
        return np.tensordot(x, self.S, axes=1)

    def feasible(self, z) -> bool:
        x, d = self.split(z)
        try:
            np.linalg.cholesky(self.shape(x))
        except np.linalg.LinAlgError:
            return False
        return bool(np.all(self.slacks(z) > 0))

    def slacks(self, z):
        x, d = self.split(z)
        y = self.G @ x
        return self.b - self.A @ d - np.linalg.norm(y, axis=1)

    def value(self, z, t):
        x, _ = self.split(z)
        _, logdet = np.linalg.slogdet(self.shape(x))
        return -t * logdet - np.sum(np.log(self.slacks(z)))

    def derivatives(self, z, t):
        x, d = self.split(z)
        K, N = self.K, self.N
        B = self.shape(x)
        Binv = np.linalg.inv(B)
        W = np.einsum("pq,kqr->kpr", Binv, self.S)
        grad = np.zeros(K + N)
        H = np.zeros((K + N, K + N))
        grad[:K] = -t * np.einsum("kpp->k", W)
        H[:K, :K] = t * np.einsum("kpq,lqp->kl", W, W)

        y = self.G @ x
        g = np.linalg.norm(y, axis=1)
        s = self.b - self.A @ d - g
        Gty = np.einsum("ipk,ip->ik", self.G, y)
        dg = Gty / g[:, None]
        ds = np.hstack([-dg, -self.A])
        grad -= np.sum(ds / s[:, None], axis=0)
        H += np.einsum("ia,ib->ab", ds / s[:, None], ds / s[:, None])
        hess_g = (self.GtG - np.einsum("ik,il->ikl", dg, dg)) / g[:, None, None]
        H[:K, :K] += np.einsum("ikl,i->kl", hess_g, 1.0 / s)
        return grad, 0.5 * (H + H.T)


def _center(barrier: _Barrier, z, t, max_newton=200):
    steps = 0
    prev = np.inf
    for _ in range(max_newton):
        grad, H = barrier.derivatives(z, t)
        try:
            dz = -np.linalg.solve(H, grad)
        except np.linalg.LinAlgError:
            dz = -np.linalg.lstsq(H, grad, rcond=None)[0]
        dec = -grad @ dz
        steps += 1
        if dec / 2 <= NEWTON_TOL:
            break
        if dec < 1e-3:
            # quadratic zone: full steps; a stalled decrement means roundoff has won
            if dec > 0.5 * prev:
                break
            if barrier.feasible(z + dz):
                z = z + dz
                prev = dec
                continue
        f0 = barrier.value(z, t)
        alpha = 1.0
        while alpha > 1e-16:
            zn = z + alpha * dz
            if barrier.feasible(zn) and barrier.value(zn, t) <= f0 - 0.25 * alpha * dec:
                break
            alpha *= 0.5
        else:
            break
        z = zn
        prev = dec
    return z, steps


def kkt_residual(barrier: _Barrier, z, active_tol: float = 1e-6) -> float:
    """min over multipliers y >= 0 of ||grad(-log det B) + sum y_i grad(-s_i)|| on near-active constraints."""
    x, d = barrier.split(z)
    K = barrier.K
    Binv = np.linalg.inv(barrier.shape(x))
    f_grad = np.concatenate([-np.einsum("pq,kqp->k", Binv, barrier.S), np.zeros(barrier.N)])
    s = barrier.slacks(z)
    active = np.flatnonzero(s <= active_tol * max(1.0, float(np.max(np.abs(barrier.b)))))
    if active.size == 0:
        return float(np.linalg.norm(f_grad))
    y = barrier.G[active] @ x
    dg = np.einsum("ipk,ip->ik", barrier.G[active], y) / np.linalg.norm(y, axis=1)[:, None]
    C = np.hstack([dg, barrier.A[active]]).T
    _, res = nnls(C, -f_grad)
    return float(res)


def project_center(A, h, d0, d_fallback) -> np.ndarray:
    """Closest point to ``d0`` of ``{d : A d <= h}``; ``d_fallback`` must be strictly feasible."""
    if np.all(A @ d0 <= h):
        d = d0
    else:
        res = minimize(lambda v: 0.5 * np.sum((v - d0) ** 2), d_fallback, jac=lambda v: v - d0,
                       constraints=[{"type": "ineq", "fun": lambda v: h - A @ v, "jac": lambda v: -A}],
                       method="SLSQP", options={"ftol": 1e-16, "maxiter": 500})
        d = res.x
    # pull back onto the feasible set along the segment from the strictly feasible point
    step = A @ (d - d_fallback)
    room = h - A @ d_fallback
    over = step > room
    theta = 1.0 if not np.any(over) else min(1.0, float(np.min(room[over] / step[over])))
    return d_fallback + theta * (d - d_fallback)


def maie(Q: HPolytope, complex_constrained: bool = False, init_center=None, seed=None,
         gap_tol: float = GAP_TOL, max_outer: int = MAX_OUTER):
    """Maximal inscribed ellipsoid of ``Q``; returns ``(ellipsoid, SolveReport)``.

    With ``complex_constrained`` the dimension must be even, the shape is
    restricted to commute with ``J``, and the result is returned as an
    ellipsoid of C^{n/2}.  ``seed`` draws a random start in the Chebyshev
    ball; ``init_center`` fixes the start explicitly.
    """
    t_start = time.perf_counter()
    N = Q.dim
    if complex_constrained and N % 2:
        raise DimensionError("complex-constrained MaIE needs an even real dimension")
    P = Q.normalized()
    xc, r = P.chebyshev_ball()
    if not P.is_bounded():
        raise DomainError("polytope is unbounded")
    A, b = P.A, P.b
    if init_center is not None:
        d0 = np.asarray(init_center, dtype=float)
        if not np.all(A @ d0 < b):
            raise DomainError("initial center is not interior")
    elif seed is not None:
        rng = np.random.default_rng(seed)
        v = rng.standard_normal(N)
        v *= rng.random() ** (1.0 / N) / np.linalg.norm(v)
        d0 = xc + 0.99 * r * v
    else:
        d0 = xc
    room = float(np.min(b - A @ d0))
    basis = shape_basis(N, complex_constrained)
    barrier = _Barrier(A, b, basis)
    x0 = np.einsum("kpq,pq->k", basis, 0.5 * room * np.eye(N))
    z = np.concatenate([x0, d0])
    assert barrier.feasible(z)

    m = A.shape[0]
    t = 1.0
    outer = 0
    newton = 0
    while True:
        z, steps = _center(barrier, z, t)
        newton += steps
        outer += 1
        if m / t <= gap_tol:
            break
        if outer >= max_outer:
            rep = SolveReport("maie", newton, gap_tol, m / t, time.perf_counter() - t_start, seed, converged=False)
            raise ConvergenceError("maie: barrier method hit the outer iteration cap", rep)
        t *= BARRIER_FACTOR

    x, d_bar = barrier.split(z)
    B = barrier.shape(x)
    h = b - np.linalg.norm(barrier.G @ x, axis=1)
    d = project_center(A, h, d0, d_bar)
    Binv = np.linalg.inv(B)
    shape = Binv @ Binv
    E = Ellipsoid(d, 0.5 * (shape + shape.T))
    if complex_constrained:
        E = complexified(E, tol=1e-7)
    stationarity = kkt_residual(barrier, np.concatenate([x, d]))
    report = SolveReport(
        "maie", newton, gap_tol, m / t, time.perf_counter() - t_start, seed,
        converged=True, stationarity=stationarity,
        extra={"outer": outer, "min_slack": float(np.min(h - A @ d)), "start_center": d0.tolist()},
    )
    return E, report


def inscribed_slack(Q: HPolytope, E: Ellipsoid) -> np.ndarray:
    """``b_i - a_i.c - ||G a_i||`` for the real version of ``E``; nonnegative iff inscribed."""
    from ..ellipsoid import generator, realified
    R = realified(E) if E.field == "complex" else E
    G = generator(R)
    return Q.b - Q.A @ R.center - np.linalg.norm(Q.A @ G, axis=1)
