from .centered import centered_maie, centered_mice
from .maie import inscribed_slack, maie
from .mice import design_weights, ellipsoid_from_weights, mice
from .probe import ProbeReport, spreads, uniqueness_probe
from .report import DualWeights, SolveReport

__all__ = [
    "DualWeights", "ProbeReport", "SolveReport", "centered_maie", "centered_mice", "design_weights",
    "ellipsoid_from_weights", "inscribed_slack", "maie", "mice", "spreads", "uniqueness_probe",
]
