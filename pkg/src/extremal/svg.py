"""Deterministic SVG 1.1 plots of planar slices.

The plot is always 800x800 with equal axis scaling; coordinates are printed
with three decimals, so identical inputs give identical bytes.  Bodies of
higher dimension are drawn through their shadow on a coordinate pair of the
realified space.
"""
from __future__ import annotations

import numpy as np
from scipy.spatial import ConvexHull

from . import linalg
from .bodies import HPolytope, PointCloud
from .ellipsoid import Ellipsoid, generator, realified
from .errors import DimensionError

SIZE = 800
MARGIN = 40
OUTLINE_POINTS = 256
COLORS = ["#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"]


def real_dim(body) -> int:
    if isinstance(body, HPolytope):
        return body.dim
    field = body.field
    return 2 * body.dim if field == "complex" else body.dim


def _real_ellipsoid(E: Ellipsoid) -> Ellipsoid:
    return realified(E) if E.field == "complex" else E


def ellipse_outline(E: Ellipsoid, proj=(0, 1), k: int = OUTLINE_POINTS) -> np.ndarray:
    """Boundary of the shadow of ``E`` on the coordinates ``proj``."""
    R = _real_ellipsoid(E)
    G = generator(R)[list(proj), :]
    # the shadow {c + G u} is the ellipse with generator sqrtm(G G^T)
    W = linalg.hermitian_sqrt(G @ G.T)
    t = np.linspace(0.0, 2 * np.pi, k, endpoint=False)
    circle = np.column_stack([np.cos(t), np.sin(t)])
    return R.center[list(proj)] + circle @ W.T


def _cloud_xy(P: PointCloud, proj) -> np.ndarray:
    X = linalg.realify(P.points) if P.field == "complex" else P.points
    return X[:, list(proj)]


def _polygon_xy(Q: HPolytope, proj) -> np.ndarray:
    V = Q.vertices()[:, list(proj)]
    hull = ConvexHull(V)
    return V[hull.vertices]


def _check_proj(body, proj):
    d = real_dim(body)
    if proj is None:
        if d != 2:
            raise DimensionError(f"cannot plot a body of real dimension {d} without a projection (--project i j)")
        return (0, 1)
    i, j = proj
    if not (0 <= i < d and 0 <= j < d) or i == j:
        raise DimensionError(f"projection ({i}, {j}) is invalid for real dimension {d}")
    return (i, j)


def _f(x: float) -> str:
    s = f"{x:.3f}"
    return "0.000" if s == "-0.000" else s


def render(body, ellipsoids=(), proj=None, title: str | None = None) -> str:
    """SVG text for ``body`` (cloud, polytope or ellipsoid) and overlaid ellipsoids."""
    proj = _check_proj(body, proj)
    for E in ellipsoids:
        if real_dim(E) != real_dim(body):
            raise DimensionError("ellipsoid and body live in different spaces")

    shapes = []
    if isinstance(body, PointCloud):
        pts = _cloud_xy(body, proj)
        shapes.append(("points", pts))
    elif isinstance(body, HPolytope):
        shapes.append(("polygon", _polygon_xy(body, proj)))
    else:
        shapes.append(("body-ellipse", ellipse_outline(body, proj)))
    outlines = [ellipse_outline(E, proj) for E in ellipsoids]
    centers = [_real_ellipsoid(E).center[list(proj)] for E in ellipsoids]
    allpts = np.vstack([s[1] for s in shapes] + outlines)
    lo, hi = allpts.min(axis=0), allpts.max(axis=0)
    mid = 0.5 * (lo + hi)
    half = 0.5 * max(float(np.max(hi - lo)), 1e-9) * 1.05
    scale = (SIZE / 2 - MARGIN) / half

    def to_px(X):
        X = np.atleast_2d(X)
        return np.column_stack([SIZE / 2 + (X[:, 0] - mid[0]) * scale, SIZE / 2 - (X[:, 1] - mid[1]) * scale])

    def path(X, closed=True):
        P = to_px(X)
        d = "M " + " L ".join(f"{_f(x)} {_f(y)}" for x, y in P)
        return d + (" Z" if closed else "")

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">',
        f'  <rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="#ffffff"/>',
    ]
    if title:
        out.append(f'  <title>{_escape(title)}</title>')
    # axes through the origin when it is in view
    ox, oy = to_px(np.zeros(2))[0]
    if 0 <= ox <= SIZE:
        out.append(f'  <line x1="{_f(ox)}" y1="0.000" x2="{_f(ox)}" y2="{SIZE}.000" stroke="#dddddd" stroke-width="1"/>')
    if 0 <= oy <= SIZE:
        out.append(f'  <line x1="0.000" y1="{_f(oy)}" x2="{SIZE}.000" y2="{_f(oy)}" stroke="#dddddd" stroke-width="1"/>')
    for kind, X in shapes:
        if kind == "points":
            for x, y in to_px(X):
                out.append(f'  <circle cx="{_f(x)}" cy="{_f(y)}" r="4.000" fill="#000000"/>')
        else:
            out.append(f'  <path d="{path(X)}" fill="#f0f0f0" stroke="#000000" stroke-width="2"/>')
    for k, X in enumerate(outlines):
        color = COLORS[k % len(COLORS)]
        out.append(f'  <path d="{path(X)}" fill="none" stroke="{color}" stroke-width="2"/>')
        cx, cy = to_px(centers[k])[0]
        out.append(f'  <circle cx="{_f(cx)}" cy="{_f(cy)}" r="3.000" fill="{color}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _escape(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
