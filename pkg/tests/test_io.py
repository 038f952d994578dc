import json
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, strategies as st

from extremal import io
from extremal.bodies import HPolytope, PointCloud
from extremal.ellipsoid import Ellipsoid
from extremal.solvers import mice

DATA = Path(__file__).parent / "data"


@pytest.mark.parametrize("path", sorted(DATA.glob("*.json")), ids=lambda p: p.name)
def test_data_files_round_trip_bytewise(path):
    text = path.read_text()
    assert io.dumps_instance(io.loads_instance(text)) == text


@given(st.integers(0, 2**32 - 1), st.sampled_from(["real", "complex"]), st.integers(1, 4))
def test_random_clouds_round_trip(seed, field, n):
    rng = np.random.default_rng(seed)
    X = rng.standard_normal((n + 2, n)) * 10.0 ** rng.integers(-5, 5)
    if field == "complex":
        X = X + 1j * rng.standard_normal(X.shape)
    inst = io.Instance("points", PointCloud(X), name="cloud")
    text = io.dumps_instance(inst)
    back = io.loads_instance(text)
    assert np.array_equal(back.body.points, X)
    assert io.dumps_instance(back) == text


def test_polytope_and_ellipsoid_round_trip(tmp_path):
    Q = HPolytope(np.array([[1.0, 0], [-1, 0], [0, 1], [0, -1]]), np.array([2.0, 2, 1, 1]))
    io.write_instance(io.Instance("polytope", Q), tmp_path / "q.json")
    back = io.read_instance(tmp_path / "q.json")
    assert np.array_equal(back.body.A, Q.A) and back.kind == "polytope"
    E = Ellipsoid(np.array([1j, 0]), np.array([[2, 0.5j], [-0.5j, 1]]))
    text = io.dumps_instance(io.Instance("ellipsoid", E))
    assert np.array_equal(io.loads_instance(text).body.shape, E.shape)


@pytest.mark.parametrize("text,msg", [
    ("not json", "not valid JSON"),
    ("[]", "JSON object"),
    ('{"kind": "points", "points": [[1, 2]], "colour": 1}', "unknown keys"),
    ('{"kind": "blob"}', "kind must be"),
    ('{"kind": "points", "field": "quaternion", "points": [[1]]}', "field must be"),
    ('{"kind": "points", "points": [[1, 2], [3]]}', "different lengths"),
    ('{"kind": "points", "field": "complex", "points": [[[1, 2, 3]]]}', "pairs"),
    ('{"kind": "points", "points": [["a"]]}', "real number"),
    ('{"kind": "polytope", "field": "complex", "A": [[1]], "b": [1]}', "polytopes are real"),
    ('{"kind": "ellipsoid", "center": [0, 0], "shape": [[1, 0], [0, -1]]}', "positive definite"),
    ('{"format": "other", "kind": "points", "points": [[1]]}', "unknown format"),
    ('{"version": 9, "kind": "points", "points": [[1]]}', "version"),
])
def test_malformed_instances(text, msg):
    with pytest.raises(io.InstanceError, match=msg):
        io.loads_instance(text)


def test_missing_file():
    with pytest.raises(io.InstanceError, match="cannot read"):
        io.read_instance("/nonexistent/instance.json")


def test_resolve_seed(monkeypatch):
    monkeypatch.delenv(io.SEED_ENV, raising=False)
    assert io.resolve_seed(None) == 0
    monkeypatch.setenv(io.SEED_ENV, "42")
    assert io.resolve_seed(None) == 42
    assert io.resolve_seed(5) == 5
    monkeypatch.setenv(io.SEED_ENV, "x")
    with pytest.raises(io.InstanceError):
        io.resolve_seed(None)


def test_report_is_deterministic_json():
    P = PointCloud(np.array([[1.0, 1], [1, -1], [-1, 1], [-1, -1]]))
    E, u, rep = mice(P)
    doc = {"ellipsoids": [io.ellipsoid_record(E)], "solve_reports": [io.solve_record(rep)], "z": 1 + 2j}
    text = io.dumps_report(doc)
    assert text == io.dumps_report(doc)
    parsed = json.loads(text)
    assert parsed["schema"] == io.REPORT_SCHEMA and parsed["version"] == io.REPORT_VERSION
    assert "wall_time" not in parsed["solve_reports"][0]
    assert parsed["z"] == [1.0, 2.0]
    assert np.isclose(parsed["ellipsoids"][0]["nvol"], 2.0)
