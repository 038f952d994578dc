"""Closed-form replays of the convexity constructions in the uniqueness proofs.

Inscribed case: for a unit ball ``E1`` and a translate-free copy
``E2 = El(lam) + c`` of equal volume, the ellipsoid ``El((lam+1)/2) + c/2``
lies in the convex hull of ``E1 u E2``; every sampled point is exhibited as
the midpoint of ``u in E1`` and ``lam*u + c in E2``.  The real branch places
two unit balls at ``+-alpha e1`` and writes each point of
``El(alpha e1 + 1)`` as ``t y + (1 - t) z`` with ``t = (u1 + 1) / 2``.

Circumscribed case: ``E1 n E2`` sits in the averaged quadric ``E3`` and that
in the ellipsoid ``E4``, whose volume is ``Delta^(-1/2)`` times that of the
unit ball with ``Delta = det((lam+1)/2)``.
"""
from __future__ import annotations

import numpy as np

from ..ellipsoid import Ellipsoid, nvol, sample_unit_ball
from ..errors import DomainError
from .lemmas import volume_margin
from .report import VerificationReport

WITNESS_TOL = 1e-10
DET_TOL = 1e-10


def _check_det_one(lam) -> np.ndarray:
    lam = np.asarray(lam, dtype=float).reshape(-1)
    if np.any(lam <= 0):
        raise DomainError("lambda must be positive")
    if abs(np.sum(np.log(lam))) > DET_TOL:
        raise DomainError(f"det(lambda) = {np.prod(lam):.12g}, expected 1")
    return lam


def _field_of(c) -> str:
    return "complex" if np.iscomplexobj(c) else "real"


def e3_containment_witness(lam=None, c=None, *, alpha=None, n: int = 2, samples: int = 1000,
                           seed: int = 0) -> VerificationReport:
    """Replay the midpoint (complex mode) or segment (real mode, ``alpha``) witnesses.

    Complex mode takes ``lam`` with ``det lam = 1`` and ``c`` over either
    field; real mode takes ``alpha >= 0`` and a dimension ``n``.  Points of
    ``E3`` are drawn from ``E3`` itself (a quarter on its boundary), and the
    witnesses are rebuilt from the point alone.
    """
    rng = np.random.default_rng(seed)
    if alpha is not None:
        return _e3_real(float(alpha), n, samples, seed, rng)
    if lam is None:
        raise DomainError("give either (lam, c) or alpha")
    lam = _check_det_one(lam)
    c = np.zeros(len(lam)) if c is None else np.asarray(c)
    if c.shape != lam.shape:
        raise DomainError("c and lambda must have the same length")
    field = _field_of(c)
    half = (lam + 1.0) / 2.0
    x = half * sample_unit_ball(rng, samples, len(lam), field) + c / 2.0

    u = (x - c / 2.0) / half  # the preimage in E1
    y = lam * u + c
    in_e1 = np.linalg.norm(u, axis=1) - 1.0
    in_e2 = np.linalg.norm((y - c) / lam, axis=1) - 1.0
    midpoint = np.max(np.abs((y + u) / 2.0 - x), axis=1)
    residual = np.maximum(np.maximum(in_e1, in_e2), midpoint)
    details = {
        "mode": field,
        "volume_ratio": float(np.prod(half)),
        "witness_failures": int(np.sum(residual > WITNESS_TOL)),
        "max_membership_excess": float(max(in_e1.max(), in_e2.max())),
        "max_midpoint_error": float(midpoint.max()),
    }
    return VerificationReport("e3-containment-witness", samples, float(max(residual.max(), 0.0)),
                              WITNESS_TOL, seed, details=details)


def _e3_real(alpha: float, n: int, samples: int, seed, rng) -> VerificationReport:
    if alpha < 0:
        raise DomainError("alpha must be nonnegative")
    e1 = np.zeros(n)
    e1[0] = 1.0
    axes = alpha * e1 + 1.0
    x = axes * sample_unit_ball(rng, samples, n, "real")
    u = x / axes
    y = u + alpha * e1  # in the ball centered at +alpha e1
    z = u - alpha * e1  # in the ball centered at -alpha e1
    t = (u[:, 0] + 1.0) / 2.0
    comb = t[:, None] * y + (1.0 - t[:, None]) * z
    in_y = np.linalg.norm(y - alpha * e1, axis=1) - 1.0
    in_z = np.linalg.norm(z + alpha * e1, axis=1) - 1.0
    t_out = np.maximum(-t, t - 1.0)
    comb_err = np.max(np.abs(comb - x), axis=1)
    residual = np.max(np.vstack([in_y, in_z, t_out, comb_err]), axis=0)
    details = {
        "mode": "real",
        "alpha": alpha,
        "volume_ratio": 1.0 + alpha,
        "t_range": [float(t.min()), float(t.max())],
        "witness_failures": int(np.sum(residual > WITNESS_TOL)),
        "max_combination_error": float(comb_err.max()),
    }
    return VerificationReport("e3-containment-witness", samples, float(max(residual.max(), 0.0)),
                              WITNESS_TOL, seed, details=details)


def _quadrics(lam, c, x):
    """Left-hand sides of the defining inequalities of E1..E4 (each set is ``<= rhs``)."""
    ax = np.abs(x) ** 2
    g1 = ax @ lam                           # E1 = El(beta): sum lam |x|^2 <= 1
    g2 = np.sum(np.abs(x - c) ** 2, axis=1)  # E2 = B + c: <= 1
    g3 = g1 + g2                            # E3: <= 2
    z = c / (lam + 1.0)
    g4 = (np.abs(x - z) ** 2) @ (lam + 1.0)  # E4: <= 2
    return g1, g2, g3, g4


def e4_containment(lam, c=None, samples: int = 1000, seed: int = 0) -> VerificationReport:
    """Check ``E1 n E2 in E3 in E4`` on samples and the volume of ``E4``.

    ``lam`` (det 1) is the diagonal of the form of ``E1``, whose semi-axes are
    ``lam^(-1/2)``; ``E2`` is the unit ball at ``c``.  Samples are drawn from
    ``E1``, ``E2`` and a box around ``E4``; each implication is tested on the
    raw quadrics.  When ``lam != 1`` the report also confirms
    ``nvol(E4) = Delta^(-1/2) < 1``.
    """
    lam = _check_det_one(lam)
    n = len(lam)
    c = np.zeros(n) if c is None else np.asarray(c)
    field = _field_of(c)
    rng = np.random.default_rng(seed)
    k = max(samples // 3, 1)
    beta = lam ** -0.5
    z = c / (lam + 1.0)
    e4_axes = np.sqrt(2.0 / (lam + 1.0))
    pts = [beta * sample_unit_ball(rng, k, n, field),
           c + sample_unit_ball(rng, k, n, field),
           z + 1.2 * e4_axes * sample_unit_ball(rng, samples - 2 * k, n, field)]
    x = np.vstack(pts)
    g1, g2, g3, g4 = _quadrics(lam, c, x)

    both = (g1 <= 1.0) & (g2 <= 1.0)
    in3 = g3 <= 2.0
    r13 = np.max(g3[both] - 2.0, initial=-np.inf)
    r34 = np.max(g4[in3] - 2.0, initial=-np.inf)
    # the lemma form of E3: g3 = g4 + sum lam/(lam+1) |c|^2
    shift = np.sum(lam / (lam + 1.0) * np.abs(c) ** 2)
    r_id = float(np.max(np.abs(g3 - g4 - shift)))

    E4 = Ellipsoid(z, np.diag((lam + 1.0) / 2.0).astype(x.dtype))
    delta = float(np.prod((lam + 1.0) / 2.0))
    vol_err = abs(nvol(E4) - delta ** -0.5)
    residual = max(r13, r34, 0.0, r_id, vol_err)
    non_trivial = np.linalg.norm(lam - 1.0) > 1e-6
    details = {
        "mode": field,
        "delta": delta,
        "delta_margin": float(volume_margin(lam)),
        "nvol_e4": nvol(E4),
        "delta_inv_sqrt": delta ** -0.5,
        "intersection_samples": int(both.sum()),
        "e3_samples": int(in3.sum()),
        "witness_failures": int(np.sum(g3[both] > 2.0 + WITNESS_TOL) + np.sum(g4[in3] > 2.0 + WITNESS_TOL)),
        "e3_radius_when_lam_is_one": float(np.sqrt(max(0.0, 1.0 - np.sum(np.abs(c / 2) ** 2)))),
    }
    if non_trivial and not nvol(E4) < 1.0:
        residual = max(residual, 1.0 - nvol(E4) + WITNESS_TOL)
    return VerificationReport("e4-containment", len(x), float(residual), WITNESS_TOL, seed, details=details)
