"""Chord centers tell ellipsoids apart from other convex bodies.

For an ellipsoid, the midpoints of all parallel chords lie on one hyperplane,
in every direction.  The body |x|^4 + |y|^4 <= 1 keeps this property only
along its symmetry axes and diagonals; in a generic direction the midpoints
bend away from any line.
"""
import numpy as np

from extremal.ellipsoid import affine_image, unit_ball
from extremal.theorems import LineBody, brunn_midpoint_locus

rng = np.random.default_rng(1)
M = rng.standard_normal((2, 2)) + 2 * np.eye(2)
ellipse = LineBody.from_ellipsoid(affine_image(unit_ball(2), M, [0.3, -0.2]))
superellipse = LineBody.superellipse(4.0)

print(f"{'direction':>12} {'ellipse':>10} {'superellipse':>13}")
for angle in np.linspace(0, np.pi / 2, 7):
    v = np.array([np.cos(angle), np.sin(angle)])
    a = brunn_midpoint_locus(ellipse, v).max_residual
    b = brunn_midpoint_locus(superellipse, v).max_residual
    print(f"{np.degrees(angle):10.1f}deg {a:10.1e} {b:13.1e}")
