"""Multi-start uniqueness probes.

A probe reruns a solver from randomized starts and measures how far apart the
answers are, with shape and center kept separate: a MiCE must collapse in
both, a complex MaIE of a non-symmetric body may only collapse in shape.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .. import linalg
from ..bodies import HPolytope, PointCloud
from ..ellipsoid import Ellipsoid, canonical_distance, to_axis_form
from ..errors import DomainError
from .maie import maie
from .mice import mice
from .report import SolveReport


@dataclass
class ProbeReport:
    solver: str
    restarts: int
    seed: int
    lambda_spread: float
    shape_spread: float
    center_spread: float
    center_axis_spread: np.ndarray
    radii: np.ndarray
    results: list = field(default_factory=list, repr=False)
    reports: list = field(default_factory=list, repr=False)

    @property
    def centers(self) -> np.ndarray:
        return np.array([E.center for E in self.results])


def spreads(results: list[Ellipsoid]):
    """``(lambda, shape, center)`` maximal pairwise distances and per-axis center ranges."""
    lams = np.array([to_axis_form(E).semi_axes for E in results])
    lam_spread = float(np.max(np.ptp(lams, axis=0) / lams.max(axis=0)))
    shape_spread = 0.0
    center_spread = 0.0
    for E, F in combinations(results, 2):
        s, c = canonical_distance(E, F)
        shape_spread = max(shape_spread, s)
        center_spread = max(center_spread, c)
    C = np.array([E.center for E in results])
    R = linalg.realify(C) if np.iscomplexobj(C) else C
    return lam_spread, shape_spread, center_spread, np.ptp(R, axis=0)


def _restart_seeds(seed: int, restarts: int) -> list[int]:
    return [int(s.generate_state(1)[0]) for s in np.random.SeedSequence(seed).spawn(restarts)]


def uniqueness_probe(problem, restarts: int = 20, seed: int = 0, *, complex_constrained: bool = False,
                     eps: float = 1e-10) -> ProbeReport:
    """Solve ``problem`` from ``restarts`` random initializations.

    A :class:`PointCloud` is handed to :func:`mice` with Dirichlet-random
    starting weights; an :class:`HPolytope` is handed to :func:`maie` with
    random starting centers in the Chebyshev ball.
    """
    if restarts < 2:
        raise DomainError("a uniqueness probe needs at least two restarts")
    results, reports = [], []
    for s in _restart_seeds(seed, restarts):
        if isinstance(problem, PointCloud):
            u0 = np.random.default_rng(s).dirichlet(np.ones(len(problem)))
            E, _, rep = mice(problem, eps=eps, u0=u0, seed=s)
            name = "mice"
        elif isinstance(problem, HPolytope):
            E, rep = maie(problem, complex_constrained=complex_constrained, seed=s)
            name = "maie-complex" if complex_constrained else "maie"
        else:
            raise TypeError(f"cannot probe a {type(problem).__name__}")
        results.append(E)
        reports.append(rep)
    lam, shape, center, axis = spreads(results)
    radii = np.array([to_axis_form(E).semi_axes for E in results])
    return ProbeReport(name, restarts, seed, lam, shape, center, axis, radii, results, reports)
