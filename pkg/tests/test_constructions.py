import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from extremal.errors import DomainError
from extremal.theorems import e3_containment_witness, e4_containment, normalize_det

seeds = st.integers(0, 2**32 - 1)


def test_e3_trivial_case():
    r = e3_containment_witness([1.0, 1.0], [0.0, 0.0])
    assert r.passed and r.details["volume_ratio"] == 1.0


def test_e3_example():
    rng = np.random.default_rng(0)
    c = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    r = e3_containment_witness([2.0, 0.5], c, samples=1000)
    assert r.passed and r.details["witness_failures"] == 0
    assert np.isclose(r.details["volume_ratio"], 9 / 8)


def test_e3_real_mode():
    r = e3_containment_witness(alpha=0.5, n=3, samples=1000)
    assert r.passed
    lo, hi = r.details["t_range"]
    assert 0 <= lo <= hi <= 1
    assert r.details["volume_ratio"] == 1.5


def test_e3_errors():
    with pytest.raises(DomainError):
        e3_containment_witness([2.0, 2.0])
    with pytest.raises(DomainError):
        e3_containment_witness(alpha=-1.0)
    with pytest.raises(DomainError):
        e3_containment_witness()


@settings(max_examples=30)
@given(seeds, st.integers(1, 4), st.sampled_from(["real", "complex"]))
def test_e3_random(seed, n, field):
    rng = np.random.default_rng(seed)
    lam = normalize_det(np.exp(rng.standard_normal(n)))
    c = rng.standard_normal(n) + (1j * rng.standard_normal(n) if field == "complex" else 0)
    assert e3_containment_witness(lam, c, samples=300, seed=seed).passed


def test_e4_examples():
    r = e4_containment([1.0, 1.0], [0.0, 0.0])
    assert r.passed and np.isclose(r.details["nvol_e4"], 1.0)
    r = e4_containment([4.0, 0.25], [0.0, 0.0], samples=1000)
    assert r.passed and r.details["nvol_e4"] < 1
    assert np.isclose(r.details["nvol_e4"], r.details["delta_inv_sqrt"])
    c = np.array([0.6, -0.2j])
    r = e4_containment([1.0, 1.0], c)
    assert r.passed
    assert np.isclose(r.details["e3_radius_when_lam_is_one"], np.sqrt(1 - np.sum(np.abs(c / 2) ** 2)))


def test_e4_errors():
    with pytest.raises(DomainError):
        e4_containment([1.0, 2.0])


@settings(max_examples=30)
@given(seeds, st.integers(1, 4), st.sampled_from(["real", "complex"]))
def test_e4_random(seed, n, field):
    rng = np.random.default_rng(seed)
    lam = normalize_det(np.exp(rng.standard_normal(n)))
    c = 0.5 * (rng.standard_normal(n) + (1j * rng.standard_normal(n) if field == "complex" else 0))
    r = e4_containment(lam, c, samples=300, seed=seed)
    assert r.passed and r.details["witness_failures"] == 0
    if np.linalg.norm(lam - 1) > 1e-6:
        assert r.details["nvol_e4"] < 1
