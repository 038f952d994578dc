"""The two auxiliary inequalities/identities behind the uniqueness proofs."""
from __future__ import annotations

import numpy as np

from ..errors import DomainError
from .report import VerificationReport

SQUARE_TOL = 1e-12
TRIVIAL_TOL = 1e-6


def normalize_det(lam) -> np.ndarray:
    """Rescale a positive vector so that the product of its entries is 1."""
    lam = np.asarray(lam, dtype=float)
    if np.any(lam <= 0) or not np.all(np.isfinite(lam)):
        raise DomainError("entries must be positive and finite")
    return lam / np.exp(np.mean(np.log(lam), axis=-1, keepdims=True))


def volume_margin(lam) -> np.ndarray:
    """``det((lam + 1) / 2) - 1`` for det-normalized rows of ``lam``.

    Evaluated as ``expm1(sum log1p((sqrt(l) - 1)^2 / (2 sqrt(l))))``, which is
    the same quantity when ``det lam = 1`` (the AM-GM factorization) but does
    not cancel when ``lam`` is close to 1.
    """
    r = np.sqrt(np.asarray(lam, dtype=float))
    return np.expm1(np.sum(np.log1p((r - 1.0) ** 2 / (2.0 * r)), axis=-1))


def check_volume_lemma(lam, seed=None) -> VerificationReport:
    """``det((lam+1)/2) > 1`` for det-1 ``lam != 1``; a point or a stack of rows.

    Rows within ``1e-6`` of the all-ones vector are held to the equality case
    instead (``|det - 1| <= 1e-12``).  The residual is the negated smallest
    margin over the strict rows, so the check passes iff it is negative.
    """
    lam = normalize_det(np.atleast_2d(lam))
    margin = volume_margin(lam)
    direct = np.prod((lam + 1.0) / 2.0, axis=-1) - 1.0
    trivial = np.linalg.norm(lam - 1.0, axis=-1) <= TRIVIAL_TOL
    strict = ~trivial
    details = {
        "min_margin": float(margin[strict].min()) if strict.any() else None,
        "equality_cases": int(trivial.sum()),
        "max_equality_error": float(np.abs(direct[trivial]).max()) if trivial.any() else 0.0,
        "max_direct_disagreement": float(np.max(np.abs(direct - margin))),
    }
    if strict.any():
        residual = float(-margin[strict].min())
        if trivial.any() and details["max_equality_error"] > SQUARE_TOL:
            residual = max(residual, details["max_equality_error"])
        return VerificationReport("volume-lemma", len(lam), residual, 0.0, seed, strict=True, details=details)
    return VerificationReport("volume-lemma", len(lam), details["max_equality_error"], SQUARE_TOL, seed, details=details)


def random_det_one(rng: np.random.Generator, trials: int, n_max: int = 8, min_dev: float = TRIVIAL_TOL) -> list:
    """Random det-1 vectors at log-uniform distances from 1, all farther than ``min_dev``."""
    out = []
    while len(out) < trials:
        n = int(rng.integers(2, n_max + 1))
        scale = 10.0 ** rng.uniform(-5, 0.5)
        lam = normalize_det(np.exp(scale * rng.standard_normal(n)))
        if np.linalg.norm(lam - 1.0) > min_dev:
            out.append(lam)
    return out


def volume_lemma_trials(trials: int = 10_000, seed: int = 0) -> VerificationReport:
    rng = np.random.default_rng(seed)
    samples = random_det_one(rng, trials)
    reports = [check_volume_lemma(lam) for lam in _group_by_length(samples)]
    worst = max(reports, key=lambda r: r.max_residual)
    return VerificationReport("volume-lemma", trials, worst.max_residual, 0.0, seed, strict=True,
                              details={"min_margin": min(r.details["min_margin"] for r in reports)})


def _group_by_length(vectors):
    groups = {}
    for v in vectors:
        groups.setdefault(len(v), []).append(v)
    return [np.array(g) for g in groups.values()]


def square_completion_residual(lam, c, x) -> np.ndarray:
    """``|LHS - RHS|`` of ``lam|x|^2 + |x-c|^2 = (lam+1)|x - c/(lam+1)|^2 + lam/(lam+1)|c|^2``.

    Vectorized; scaled by ``max(1, |LHS|)`` so that large inputs are not
    penalized for ordinary rounding.
    """
    lam = np.asarray(lam, dtype=float)
    if np.any(lam <= 0):
        raise DomainError("lambda must be positive")
    c = np.asarray(c, dtype=complex)
    x = np.asarray(x, dtype=complex)
    lhs = lam * np.abs(x) ** 2 + np.abs(x - c) ** 2
    rhs = (lam + 1.0) * np.abs(x - c / (lam + 1.0)) ** 2 + lam / (lam + 1.0) * np.abs(c) ** 2
    return np.abs(lhs - rhs) / np.maximum(1.0, np.abs(lhs))


def check_square_completion(lam, c, x, seed=None) -> VerificationReport:
    res = np.atleast_1d(square_completion_residual(lam, c, x))
    return VerificationReport("square-completion", res.size, float(res.max()), SQUARE_TOL, seed)


def square_completion_trials(trials: int = 10_000, seed: int = 0) -> VerificationReport:
    rng = np.random.default_rng(seed)
    lam = rng.uniform(0.0, 10.0, trials)
    lam[lam == 0] = 1.0
    c = rng.standard_normal(trials) + 1j * rng.standard_normal(trials)
    x = rng.standard_normal(trials) + 1j * rng.standard_normal(trials)
    rep = check_square_completion(lam, c, x, seed)
    return rep
