"""Centered extremal ellipsoids via symmetrization.

The smallest origin-centered ellipsoid containing ``P`` is the free MiCE of the
circled hull ``S(P)``; the largest origin-centered ellipsoid inside ``Q`` is
the free MaIE of the intersection of the rotated copies of ``Q``.
"""
from __future__ import annotations

import numpy as np

from ..bodies import DEFAULT_ORDER, HPolytope, PointCloud, symmetrize
from ..ellipsoid import Ellipsoid
from ..errors import ConvergenceError
from .maie import maie
from .mice import mice

CENTER_TOL = 1e-6
# the MiCE center is a weighted mean whose error tracks the duality gap, so the
# inner solve runs at least this tight to keep the center within CENTER_TOL
INNER_EPS = 1e-9


def _check_center(E: Ellipsoid, report) -> Ellipsoid:
    norm = float(np.linalg.norm(E.center))
    report.extra["center_norm"] = norm
    if norm > CENTER_TOL:
        raise ConvergenceError(f"centered solve drifted off the origin (|c| = {norm:.3g})", report)
    return E


def centered_mice(P: PointCloud, m: int = DEFAULT_ORDER, eps: float = 1e-6):
    """Minimal circumscribed ellipsoid of ``P`` among those centered at 0.

    Returns ``(ellipsoid, DualWeights, SolveReport)``; the weights refer to
    the symmetrized cloud, stored in ``report.extra["cloud"]``.
    """
    S = symmetrize(P, m)
    E, u, report = mice(S, eps=min(eps, INNER_EPS))
    report.solver = "centered-mice"
    report.extra["cloud"] = S
    return _check_center(E, report), u, report


def centered_maie(Q: HPolytope, m: int = DEFAULT_ORDER, complex_constrained: bool = False):
    """Maximal inscribed ellipsoid of ``Q`` among those centered at 0.

    Over the reals only ``Q`` and ``-Q`` matter, so ``m`` is ignored; with
    ``complex_constrained`` the polytope is intersected with ``m`` rotations
    ``cos t I + sin t J``.  Returns ``(ellipsoid, SolveReport)``.
    """
    S = Q.symmetrized(m, complex_structure=complex_constrained)
    E, report = maie(S, complex_constrained=complex_constrained, init_center=np.zeros(Q.dim))
    report.solver = "centered-maie"
    return _check_center(E, report), report
