"""Polarity swaps the two extremal problems for symmetric polygons.

The largest ellipse inside a centrally symmetric polygon and the smallest
ellipse around its polar are polar to each other, so their normalized volumes
multiply to one.  The sweep at the end shows the volume inequality behind the
uniqueness arguments: for semi-axes of product 1 the ellipsoid with semi-axes
(lam_i + 1) / 2 is never smaller, and equal only when every lam_i is 1.
"""
import numpy as np

from extremal.theorems import check_polarity_duality, normalize_det, volume_margin
from extremal.theorems.suites import random_symmetric_polygon

rng = np.random.default_rng(2)
for k in range(5):
    P = random_symmetric_polygon(rng)
    r = check_polarity_duality(P)
    d = r.details
    print(f"polygon {k}: {len(P.points)} vertices, nvol inscribed {d['nvol_ma']:.4f}, "
          f"nvol of polar's circumscribed {d['nvol_mi']:.4f}, product {d['volume_product']:.9f}")

print()
v = np.array([1.0, -0.5, 0.25])
for t in (0.0, 0.1, 0.5, 1.0, 1.5):
    lam = normalize_det(1 + t * v)
    print(f"t={t:3.1f} semi-axes {np.round(lam, 4).tolist()} margin {volume_margin(lam):.6f}")
