"""Named verification suites; names match the checking operations one-to-one."""
from __future__ import annotations

from typing import Callable

import numpy as np

from ..bodies import PointCloud
from ..ellipsoid import affine_image, unit_ball
from ..errors import DomainError
from .brunn import LineBody, boundary_samples, brunn_midpoint_locus, fit_hyperplane, skew_reflection
from .constructions import e3_containment_witness, e4_containment
from .lemmas import normalize_det, random_det_one, square_completion_trials, volume_lemma_trials
from .report import VerificationReport, combine
from .symmetry import check_bm_symmetric_implies_complex, check_polarity_duality

SUPERELLIPSE_FAIL = 1e-3


def _rng_for(seed: int, *salt: int) -> np.random.Generator:
    return np.random.default_rng([seed, *salt])


def _random_map(rng, n: int, field: str):
    while True:
        M = rng.standard_normal((n, n))
        if field == "complex":
            M = M + 1j * rng.standard_normal((n, n))
        if np.linalg.cond(M) < 50:
            t = rng.standard_normal(n) * (1 + 1j if field == "complex" else 1)
            return M, t


def _random_c(rng, n: int, field: str, scale: float = 0.5):
    c = scale * rng.standard_normal(n)
    return c + 1j * scale * rng.standard_normal(n) if field == "complex" else c


def suite_volume_lemma(trials: int = 10_000, seed: int = 0) -> VerificationReport:
    return volume_lemma_trials(trials, seed)


def suite_square_completion(trials: int = 10_000, seed: int = 0) -> VerificationReport:
    return square_completion_trials(trials, seed)


def suite_e3(trials: int = 20, seed: int = 0, samples: int = 1000) -> VerificationReport:
    rng = _rng_for(seed, 3)
    parts = []
    for k, lam in enumerate(random_det_one(rng, trials, n_max=4, min_dev=0.0)):
        field = "complex" if k % 2 == 0 else "real"
        parts.append(e3_containment_witness(lam, _random_c(rng, len(lam), field), samples=samples, seed=seed + k))
        parts.append(e3_containment_witness(alpha=float(rng.uniform(0, 2)), n=len(lam), samples=samples, seed=seed + k))
    return combine("e3-containment-witness", parts, seed)


def suite_e4(trials: int = 20, seed: int = 0, samples: int = 1000) -> VerificationReport:
    rng = _rng_for(seed, 4)
    parts = []
    for k, lam in enumerate(random_det_one(rng, trials, n_max=4, min_dev=0.0)):
        field = "complex" if k % 2 == 0 else "real"
        parts.append(e4_containment(lam, _random_c(rng, len(lam), field), samples=samples, seed=seed + k))
    return combine("e4-containment", parts, seed)


def random_symmetric_polygon(rng, k: int | None = None) -> PointCloud:
    k = int(rng.integers(2, 7)) if k is None else k
    ang = np.sort(rng.uniform(0, np.pi, k))
    r = rng.uniform(0.5, 2.0, k)
    X = np.column_stack([r * np.cos(ang), r * np.sin(ang)])
    return PointCloud(np.vstack([X, -X]))


def suite_polarity(trials: int = 10, seed: int = 0) -> VerificationReport:
    rng = _rng_for(seed, 5)
    parts = [check_polarity_duality(random_symmetric_polygon(rng), seed=seed) for _ in range(trials)]
    return combine("polarity-duality", parts, seed)


def suite_bm(trials: int = 50, seed: int = 0, m: int = 256) -> VerificationReport:
    rng = _rng_for(seed, 6)
    parts = []
    for k in range(trials):
        N = 2 * (k % 3 + 1)
        M = rng.standard_normal((N, N))
        parts.append(check_bm_symmetric_implies_complex(M @ M.T + 0.1 * np.eye(N), m, seed))
    return combine("bm-symmetric-implies-complex", parts, seed)


def _random_direction(rng, n: int, field: str):
    v = rng.standard_normal(n)
    return v + 1j * rng.standard_normal(n) if field == "complex" else v


BRUNN_SPACES = [(2, "real"), (3, "real"), (1, "complex"), (2, "complex")]


def suite_brunn(trials: int = 20, seed: int = 0, directions: int = 20) -> VerificationReport:
    """Affine balls pass in every direction; the 4-superellipse fails in some direction."""
    rng = _rng_for(seed, 7)
    parts = []
    for k in range(trials):
        n, field = BRUNN_SPACES[k % len(BRUNN_SPACES)]
        M, t = _random_map(rng, n, field)
        body = LineBody.from_ellipsoid(affine_image(unit_ball(n, field), M, t))
        for _ in range(directions):
            parts.append(brunn_midpoint_locus(body, _random_direction(rng, n, field), seed=seed))
    sup = LineBody.superellipse(4.0)
    sup_res = [brunn_midpoint_locus(sup, _random_direction(rng, 2, "real")).max_residual for _ in range(directions)]
    worst = max(sup_res)
    parts.append(VerificationReport("brunn-midpoint-locus/superellipse-fails", directions,
                                    SUPERELLIPSE_FAIL - worst, 0.0, seed, strict=True,
                                    details={"max_superellipse_residual": worst}))
    return combine("brunn-midpoint-locus", parts, seed, max_superellipse_residual=worst)


def suite_skew(trials: int = 20, seed: int = 0, samples: int = 1000) -> VerificationReport:
    """Boundary pairs on a common line of random affine balls; over C the pair differs by a random phase."""
    rng = _rng_for(seed, 8)
    parts = []
    for k in range(trials):
        n, field = BRUNN_SPACES[k % len(BRUNN_SPACES)]
        M, t = _random_map(rng, n, field)
        body = LineBody.from_ellipsoid(affine_image(unit_ball(n, field), M, t))
        if field == "real":
            x, y = boundary_samples(body, rng, 2)
            H = None
        else:
            x = boundary_samples(body, rng, 1)[0]
            v = _random_direction(rng, n, field)
            H = brunn_midpoint_locus(body, v).details["hyperplane"]
            p, w = H
            o = x + ((p - x) @ w) / (v @ w) * v
            y = o + np.exp(1j * rng.uniform(0.3, 2 * np.pi - 0.3)) * (x - o)
        _, rep = skew_reflection(body, x, y, H=H, samples=samples, seed=seed + k)
        parts.append(rep)
    return combine("skew-reflection", parts, seed)


SUITES: dict[str, Callable[..., VerificationReport]] = {
    "volume-lemma": suite_volume_lemma,
    "square-completion": suite_square_completion,
    "e3-containment-witness": suite_e3,
    "e4-containment": suite_e4,
    "polarity-duality": suite_polarity,
    "bm-symmetric-implies-complex": suite_bm,
    "brunn-midpoint-locus": suite_brunn,
    "skew-reflection": suite_skew,
}


def run_suite(name: str, trials: int | None = None, seed: int = 0) -> list[VerificationReport]:
    """Run one named suite, or every suite for ``"all"``; returns the reports in order."""
    if name == "all":
        return [fn(seed=seed) if trials is None else fn(trials, seed) for fn in SUITES.values()]
    if name not in SUITES:
        raise DomainError(f"unknown suite {name!r}; choose from {', '.join([*SUITES, 'all'])}")
    fn = SUITES[name]
    return [fn(seed=seed) if trials is None else fn(trials, seed)]
