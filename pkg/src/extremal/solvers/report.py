from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass
class SolveReport:
    solver: str
    iterations: int
    epsilon: float
    dual_gap: float
    wall_time: float
    seed: int | None = None
    converged: bool = True
    stationarity: float | None = None
    extra: dict = field(default_factory=dict)


@dataclass(frozen=True, eq=False)
class DualWeights:
    """Design weights on the simplex, aligned with the input cloud."""

    u: np.ndarray

    def __post_init__(self):
        u = np.asarray(self.u, dtype=float)
        if np.any(u < 0) or abs(u.sum() - 1.0) > 1e-12:
            raise ValueError("dual weights must be nonnegative and sum to one")
        object.__setattr__(self, "u", u)

    def support(self, threshold: float = 1e-6) -> np.ndarray:
        return np.flatnonzero(self.u > threshold)
