import numpy as np
import pytest

from extremal.bodies import HPolytope, PointCloud
from extremal.ellipsoid import Ellipsoid, unit_ball
from extremal.errors import DomainError
from extremal.solvers import spreads, uniqueness_probe


def test_mice_probe_collapses():
    P = PointCloud(np.random.default_rng(1).standard_normal((15, 3)))
    probe = uniqueness_probe(P, restarts=20, seed=4)
    assert probe.solver == "mice" and len(probe.results) == 20
    assert probe.shape_spread <= 1e-5 and probe.center_spread <= 1e-5 and probe.lambda_spread <= 1e-5
    # restarts really start from different weights
    assert len({rep.iterations for rep in probe.reports}) > 1


def test_complex_rectangle_spreads_in_center_only():
    probe = uniqueness_probe(HPolytope.box([-2, -1], [2, 1]), restarts=20, seed=3, complex_constrained=True)
    assert probe.solver == "maie-complex"
    assert probe.lambda_spread <= 1e-4
    assert np.all(np.abs(probe.radii - 1.0) <= 1e-4)
    re_spread, im_spread = probe.center_axis_spread
    assert re_spread >= 0.1 and im_spread <= 1e-4
    assert np.all(np.abs(probe.centers.real) <= 1.0 + 1e-8)


def test_real_rectangle_collapses():
    probe = uniqueness_probe(HPolytope.box([-2, -1], [2, 1]), restarts=10, seed=3)
    assert probe.shape_spread <= 1e-5 and probe.center_spread <= 1e-5
    assert np.allclose(probe.radii, [2, 1], atol=1e-3)


def test_probe_is_deterministic():
    Q = HPolytope.box([-2, -1], [2, 1])
    a = uniqueness_probe(Q, restarts=3, seed=9, complex_constrained=True)
    b = uniqueness_probe(Q, restarts=3, seed=9, complex_constrained=True)
    assert np.array_equal(a.centers, b.centers)


def test_spreads_of_translates():
    E = unit_ball(2)
    lam, shape, center, axis = spreads([E, E.translate([0.5, 0.0]), E.translate([0.0, -0.25])])
    assert lam == 0 and shape == 0
    assert center == 0.5 and np.allclose(axis, [0.5, 0.25])
    lam, *_ = spreads([E, Ellipsoid(np.zeros(2), np.diag([1.0, 0.25]))])
    assert np.isclose(lam, 0.5)


def test_errors():
    P = PointCloud(np.eye(3))
    with pytest.raises(DomainError):
        uniqueness_probe(P, restarts=1)
    with pytest.raises(TypeError):
        uniqueness_probe(unit_ball(2), restarts=2)
