import numpy as np
import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def pytest_addoption(parser):
    parser.addoption("--regen-golden", action="store_true", default=False,
                     help="rewrite the CLI golden files instead of comparing against them")


@pytest.fixture
def regen_golden(request):
    return request.config.getoption("--regen-golden")


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def random_hermitian_pd(rng, n, field="real", cond=100.0):
    M = rng.standard_normal((n, n))
    if field == "complex":
        M = M + 1j * rng.standard_normal((n, n))
    Q, _ = np.linalg.qr(M)
    lam = np.exp(rng.uniform(0, np.log(cond), n))
    A = (Q * lam) @ Q.conj().T
    return 0.5 * (A + A.conj().T)


def random_invertible(rng, n, field="real", max_cond=1e3):
    while True:
        M = rng.standard_normal((n, n))
        if field == "complex":
            M = M + 1j * rng.standard_normal((n, n))
        if np.linalg.cond(M) < max_cond:
            return M


def random_cloud(rng, k, n, field="real"):
    X = rng.standard_normal((k, n))
    if field == "complex":
        X = X + 1j * rng.standard_normal((k, n))
    return X
