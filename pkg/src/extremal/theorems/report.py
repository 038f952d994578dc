from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class VerificationReport:
    """Outcome of a mechanical check.

    ``passed`` is ``max_residual <= threshold``, or ``<`` when ``strict`` is
    set (used for strict inequalities, where the residual is a negated margin).
    A report built by :func:`combine` passes iff every part does.
    """

    name: str
    trials: int
    max_residual: float
    threshold: float
    seed: int | None = None
    strict: bool = False
    details: dict = field(default_factory=dict)
    parts: list = field(default_factory=list, repr=False)

    @property
    def passed(self) -> bool:
        if self.parts:
            return all(p.passed for p in self.parts)
        if self.strict:
            return bool(self.max_residual < self.threshold)
        return bool(self.max_residual <= self.threshold)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        op = "<" if self.strict else "<="
        return f"{status} {self.name}: trials={self.trials} max_residual={self.max_residual:.3e} {op} {self.threshold:.1e}"


def combine(name: str, reports: list, seed=None, **details) -> VerificationReport:
    """One report over several parts; its residual is the worst excess over threshold."""
    if not reports:
        raise ValueError("nothing to combine")
    excess = max(r.max_residual - r.threshold for r in reports)
    return VerificationReport(name, sum(r.trials for r in reports), float(excess), 0.0, seed,
                              details=details, parts=list(reports))
