import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from extremal.bodies import (
    Disk, HPolytope, PointCloud, is_nonflat, min_enclosing_disk, origin_interior_margin, origin_is_interior,
    polar_polytope, polar_vertices, same_point_set, symmetrize,
)
from extremal.errors import DimensionError, DomainError

from conftest import random_cloud

seeds = st.integers(0, 2**32 - 1)


def brute_force_disk(z):
    """Smallest disk over all pairs and triples that contains everything."""
    from extremal.bodies import _disk2, _disk3
    best = None
    cands = [_disk2(a, b) for a, b in itertools.combinations(z, 2)]
    cands += [_disk3(a, b, c) for a, b, c in itertools.combinations(z, 3)]
    for c, r in cands:
        if np.all(np.abs(z - c) <= r * (1 + 1e-9) + 1e-12) and (best is None or r < best[1]):
            best = (c, r)
    return best


def test_point_cloud_basics():
    P = PointCloud([[1, 2], [3, 4]])
    assert P.field == "real" and P.dim == 2 and len(P) == 2
    assert PointCloud(np.array([1j, 2])).dim == 1
    assert PointCloud.of([[1, 0]], "complex").field == "complex"
    with pytest.raises(DimensionError):
        PointCloud(np.zeros((0, 2)))
    assert PointCloud([[1j, 0]]).realified().points.tolist() == [[0.0, 0.0, 1.0, 0.0]]


def test_nonflat_examples():
    assert is_nonflat(PointCloud(np.array([[0.0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]])))
    assert not is_nonflat(PointCloud(np.ones((5, 2))))
    z = np.array([1, 2 + 1j, -0.5j, 3])
    assert not is_nonflat(PointCloud(np.outer(z, [1, 2 - 1j])))
    assert is_nonflat(PointCloud(np.array([[0, 0], [1, 0], [0, 1j]])))   # C^2 needs 3 points
    assert not is_nonflat(PointCloud(np.array([[0.0, 0], [1, 0]])))


def test_symmetrize_examples():
    S = symmetrize(PointCloud(np.array([[1.0, 0.0]])))
    assert same_point_set(S, PointCloud(np.array([[1.0, 0.0], [-1.0, 0.0]])))
    S = symmetrize(PointCloud(np.array([1.0 + 0j])), m=4)
    assert same_point_set(S, PointCloud(np.array([1, 1j, -1, -1j])))
    # the origin and repeated orbit points are deduplicated
    assert len(symmetrize(PointCloud(np.array([0j, 1, 1j])), m=4)) == 5
    with pytest.raises(DomainError):
        symmetrize(PointCloud(np.array([[1.0]])), m=1)


@given(seeds, st.integers(1, 3))
def test_symmetrized_cloud_is_invariant(seed, n):
    rng = np.random.default_rng(seed)
    P = PointCloud(random_cloud(rng, 4, n, "complex"))
    S = symmetrize(P, m=8)
    assert same_point_set(S, PointCloud(np.exp(2j * np.pi / 8) * S.points), tol=1e-10)


def test_box_and_chebyshev():
    Q = HPolytope.box([-2, -1], [2, 1])
    c, r = Q.chebyshev_ball()
    assert np.isclose(r, 1.0) and abs(c[1]) < 1e-9 and abs(c[0]) <= 1 + 1e-9
    assert Q.contains([1.9, -0.9]) and not Q.contains([0, 1.1])
    assert np.allclose(Q.slack([0, 0]), [2, 1, 2, 1])
    assert np.isclose(Q.support([1, 1]), 3.0)
    assert Q.is_bounded()
    V = Q.vertices()
    assert same_point_set(PointCloud(V), PointCloud(np.array([[2.0, 1], [2, -1], [-2, 1], [-2, -1]])), tol=1e-9)


def test_unbounded_and_empty():
    half = HPolytope(np.array([[1.0, 0.0]]), np.array([1.0]))
    assert not half.is_bounded()
    wedge = HPolytope(np.array([[1.0, 0.0], [-1.0, 0.0], [0.0, 1.0]]), np.array([1.0, 1.0, 1.0]))
    assert not wedge.is_bounded()
    empty = HPolytope(np.array([[1.0], [-1.0]]), np.array([-1.0, -1.0]))
    with pytest.raises(DomainError):
        empty.chebyshev_ball()
    with pytest.raises(DimensionError):
        HPolytope(np.eye(2), np.ones(3))
    with pytest.raises(DomainError):
        HPolytope(np.zeros((1, 2)), np.ones(1))


@given(seeds, st.integers(2, 4))
def test_from_points_contains_the_cloud(seed, n):
    rng = np.random.default_rng(seed)
    X = rng.standard_normal((3 * n + 3, n))
    Q = HPolytope.from_points(PointCloud(X))
    assert np.all(Q.contains(X, tol=1e-9))
    assert np.all(Q.contains(X.mean(axis=0)))
    assert not Q.contains(X.max(axis=0) + 1.0)


def test_symmetrized_polytope():
    T = HPolytope(np.array([[1.0, 0], [0, 1], [-1, -1]]), np.ones(3))
    S = T.symmetrized()
    x = np.array([0.9, -0.9])
    assert S.contains(x) == (T.contains(x) and T.contains(-x))
    C = HPolytope.box([-2, -1], [2, 1]).symmetrized(8, complex_structure=True)
    th = 2 * np.pi / 8
    R = np.array([[np.cos(th), -np.sin(th)], [np.sin(th), np.cos(th)]])
    for y in np.random.default_rng(0).uniform(-1.5, 1.5, (50, 2)):
        assert C.contains(y) == C.contains(R @ y)  # invariant under the sampled rotations
    with pytest.raises(DimensionError):
        HPolytope.box([-1] * 3, [1] * 3).symmetrized(4, complex_structure=True)


def test_polar_examples():
    sq = PointCloud(np.array([[1.0, 1], [1, -1], [-1, 1], [-1, -1]]))
    D = polar_polytope(sq)
    assert D.A.shape == (4, 2)
    for x, inside in [([0.5, 0.5], True), ([1.0, 0.0], True), ([0.6, 0.6], False)]:
        assert D.contains(x, tol=1e-12) == inside
    V = polar_vertices(sq)
    assert same_point_set(V, PointCloud(np.array([[1.0, 0], [-1, 0], [0, 1], [0, -1]])), tol=1e-12)
    with pytest.raises(DomainError):
        polar_polytope(PointCloud(np.array([[1.0, 0], [2, 0], [1, 1]])))
    with pytest.raises(DomainError):
        polar_polytope(PointCloud(np.array([1j, -1j, 1])))


def test_polar_of_ball_sample_shrinks_to_ball(rng):
    prev = None
    for k in (20, 80, 320):
        t = np.linspace(0, 2 * np.pi, k, endpoint=False)
        P = PointCloud(np.column_stack([np.cos(t), np.sin(t)]))
        V = polar_vertices(P).points
        r = np.linalg.norm(V, axis=1).max()
        assert r >= 1.0
        if prev is not None:
            assert r < prev
        prev = r
    assert prev - 1.0 < 1e-3


def test_origin_interior():
    assert origin_is_interior(PointCloud(np.array([[1.0, 0], [-1, 1], [-1, -1]])))
    assert not origin_is_interior(PointCloud(np.array([[1.0, 0], [0, 1], [1, 1]])))
    assert origin_interior_margin(PointCloud(np.array([[1.0, 0], [0, 1], [0, 0]]))) <= 1e-12


def test_disk_examples():
    d = min_enclosing_disk(np.array([0, 2 + 0j]))
    assert np.isclose(d.center, 1) and np.isclose(d.radius, 1)
    tri = np.exp(2j * np.pi * np.arange(3) / 3) / np.sqrt(3)
    assert np.isclose(min_enclosing_disk(tri + 5).radius, 1 / np.sqrt(3))
    one = min_enclosing_disk(np.array([[3.0, 4.0]]))
    assert one.flat and one.center == 3 + 4j
    with pytest.raises(DomainError):
        one.to_ellipsoid()
    E = min_enclosing_disk(np.array([[1.0, 0], [-1, 0]])).to_ellipsoid("real")
    assert np.allclose(E.shape, np.eye(2))
    with pytest.raises(DimensionError):
        min_enclosing_disk(np.zeros((3, 3)))


@given(seeds, st.integers(2, 10))
def test_disk_matches_brute_force(seed, k):
    rng = np.random.default_rng(seed)
    z = rng.standard_normal(k) + 1j * rng.standard_normal(k)
    d = min_enclosing_disk(z, seed=seed)
    c, r = brute_force_disk(z)
    assert np.isclose(d.radius, r, rtol=1e-9)
    assert abs(d.center - c) <= 1e-8 * max(1, r)
    assert isinstance(d, Disk)
