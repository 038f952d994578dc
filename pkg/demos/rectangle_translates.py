"""Inscribed ellipsoids of the rectangle [-2, 2] x [-1, 1].

Read as a subset of R^2, the rectangle has exactly one largest inscribed
ellipse: semi-axes 2 and 1, centered at the origin.  Read as a subset of C^1,
the only admissible ellipsoids are disks, the largest have radius 1, and every
horizontal translate of the unit disk that stays inside the rectangle is
optimal.  Random restarts land on different members of that family.
"""
import numpy as np

from extremal import HPolytope
from extremal.solvers import uniqueness_probe

Q = HPolytope.box(np.array([-2.0, -1.0]), np.array([2.0, 1.0]))

real = uniqueness_probe(Q, restarts=8, seed=0)
print("real field:")
print("  semi-axes of every restart:", np.unique(np.round(real.radii, 9), axis=0).tolist())
print(f"  center spread {real.center_spread:.1e}")

cplx = uniqueness_probe(Q, restarts=8, seed=0, complex_constrained=True)
print("complex field:")
print("  radii:", np.round(cplx.radii[:, 0], 9).tolist())
for E in cplx.results:
    c = complex(E.center[0])
    print(f"  center {c.real:+.4f} {c.imag:+.1e}i")
print(f"  real parts of the centers span {cplx.center_axis_spread[0]:.3f}; the imaginary parts {cplx.center_axis_spread[1]:.1e}")
