"""Extremal ellipsoids (minimal circumscribed, maximal inscribed) over R^n and C^n."""
from .bodies import HPolytope, PointCloud, min_enclosing_disk, symmetrize
from .ellipsoid import AxisForm, Ellipsoid, affine_image, contains, nvol, to_axis_form, unit_ball
from .errors import ConvergenceError, DimensionError, DomainError, ExtremalError
from .solvers import centered_maie, centered_mice, maie, mice, uniqueness_probe

__version__ = "0.1.0"

__all__ = [
    "AxisForm", "ConvergenceError", "DimensionError", "DomainError", "Ellipsoid", "ExtremalError",
    "HPolytope", "PointCloud", "affine_image", "centered_maie", "centered_mice", "contains", "maie",
    "mice", "min_enclosing_disk", "nvol", "symmetrize", "to_axis_form", "uniqueness_probe", "unit_ball",
]
