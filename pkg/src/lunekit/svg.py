"""SVG figures: orthographic or gnomonic projections of bodies and overlays.

Output is deterministic for fixed inputs.  The projection is centered on
the body's anchor direction by default and scaled so the smallest enclosing
cap fits a 450-unit radius inside the 1000x1000 view box.  Under the
gnomonic projection geodesic edges are emitted as straight line segments.
"""

from __future__ import annotations

import math

import numpy as np

from .bodies import Body, boundary_sample_array, edge_table
from .covering import min_enclosing_cap
from .regions import Cap
from .sphere import distance, tangent_frame, vec3

__all__ = ["render_svg"]

_VIEW = 1000.0
_TARGET = 450.0


class _Projection:
    def __init__(self, mode: str, center: np.ndarray):
        if mode not in ("orthographic", "gnomonic"):
            raise ValueError(f"unknown projection: {mode}")
        self.mode = mode
        self.center = center
        self.f1, self.f2 = tangent_frame(center)
        self.scale = 1.0

    def raw(self, pts: np.ndarray) -> np.ndarray:
        pts = np.atleast_2d(pts)
        x = pts @ self.f1
        y = pts @ self.f2
        z = pts @ self.center
        if self.mode == "gnomonic":
            z = np.where(np.abs(z) < 1e-9, 1e-9, z)
            return np.stack([x / z, y / z], axis=1)
        return np.stack([x, y], axis=1)

    def visible(self, pts: np.ndarray) -> np.ndarray:
        return np.atleast_2d(pts) @ self.center > 1e-6

    def to_px(self, pts: np.ndarray) -> np.ndarray:
        xy = self.raw(pts) * self.scale
        out = np.empty_like(xy)
        out[:, 0] = _VIEW / 2 + xy[:, 0]
        out[:, 1] = _VIEW / 2 - xy[:, 1]
        return out


def _fmt(v: float) -> str:
    return f"{v:.4f}"


def _polyline(px: np.ndarray) -> str:
    head = f"M {_fmt(px[0, 0])} {_fmt(px[0, 1])} "
    return head + " ".join(f"L {_fmt(x)} {_fmt(y)}" for x, y in px[1:])


def _edge_path(table, j: int, proj: _Projection, samples: int = 64) -> str:
    if proj.mode == "gnomonic" and abs(table.s[j] - math.pi / 2) < 1e-12:
        ends = table.points_at(np.array([j, j]), np.array([0.0, table.span[j]]))
        px = proj.to_px(ends)
        return _polyline(px)
    th = np.linspace(0.0, table.span[j], samples)
    pts = table.points_at(np.full(samples, j, dtype=int), th)
    return _polyline(proj.to_px(pts))


def _circle_or_path(center: np.ndarray, radius: float, proj: _Projection, cls: str) -> str:
    if (
        proj.mode == "orthographic"
        and distance(center, proj.center) < 1e-9
    ):
        r = math.sin(radius) * proj.scale
        return (
            f'<circle class="{cls}" cx="{_fmt(_VIEW / 2)}" cy="{_fmt(_VIEW / 2)}" '
            f'r="{_fmt(r)}" fill="none"/>'
        )
    e1, e2 = tangent_frame(center)
    th = np.linspace(0.0, 2 * math.pi, 128)
    pts = (
        math.cos(radius) * center[None, :]
        + math.sin(radius)
        * (np.cos(th)[:, None] * e1[None, :] + np.sin(th)[:, None] * e2[None, :])
    )
    vis = proj.visible(pts)
    if not vis.any():
        return ""
    px = proj.to_px(pts[vis])
    return f'<path class="{cls}" d="{_polyline(px)}" fill="none"/>'


def _semicircle_path(pole: np.ndarray, toward: np.ndarray, proj: _Projection, cls: str) -> str:
    """Half of the great circle with the given pole, centered toward a point."""
    c = toward - float(toward @ pole) * pole
    c /= np.linalg.norm(c)
    e2 = np.cross(pole, c)
    th = np.linspace(-math.pi / 2, math.pi / 2, 96)
    pts = np.cos(th)[:, None] * c[None, :] + np.sin(th)[:, None] * e2[None, :]
    vis = proj.visible(pts)
    if not vis.any():
        return ""
    px = proj.to_px(pts[vis])
    return f'<path class="{cls}" d="{_polyline(px)}" fill="none"/>'


def render_svg(
    body: Body,
    projection: str = "orthographic",
    center=None,
    with_lune: tuple | None = None,
    with_cap: bool = False,
) -> str:
    """SVG document: body boundary, optional narrowest-lune and cap overlays.

    with_lune takes the two supporting poles (k, k_star); both bounding
    semicircles are drawn with their centers marked.
    """
    table = edge_table(body)
    proj_center = vec3(center) if center is not None else table.anchor.copy()
    proj = _Projection(projection, proj_center)

    cover = min_enclosing_cap(body)
    rim = boundary_sample_array(Cap(center=cover.center, radius=cover.radius), 64)
    extent = float(np.max(np.linalg.norm(proj.raw(rim), axis=1)))
    proj.scale = _TARGET / max(extent, 1e-9)

    parts = [
        f'<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="0 0 {int(_VIEW)} {int(_VIEW)}">',
        f'<rect width="{int(_VIEW)}" height="{int(_VIEW)}" fill="white"/>',
        '<g stroke="black" stroke-width="2">',
    ]
    kind = {True: "edge-geodesic", False: "edge-arc"}
    for j in range(table.n_edges):
        is_geo = abs(table.s[j] - math.pi / 2) < 1e-12
        cls = kind[is_geo]
        parts.append(f'<path class="{cls}" d="{_edge_path(table, j, proj)}" fill="none"/>')
    parts.append("</g>")

    if with_cap:
        parts.append('<g stroke="crimson" stroke-width="1.5">')
        parts.append(_circle_or_path(vec3(cover.center), cover.radius, proj, "min-cap"))
        parts.append("</g>")

    if with_lune is not None:
        k, k_star = (vec3(with_lune[0]), vec3(with_lune[1]))
        parts.append('<g stroke="steelblue" stroke-width="1.5">')
        c1 = k_star - float(k @ k_star) * k
        c1 /= np.linalg.norm(c1)
        c2 = k - float(k @ k_star) * k_star
        c2 /= np.linalg.norm(c2)
        parts.append(_semicircle_path(k, c1, proj, "lune-semicircle"))
        parts.append(_semicircle_path(k_star, c2, proj, "lune-semicircle"))
        for c in (c1, c2):
            px = proj.to_px(c[None, :])[0]
            parts.append(
                f'<circle class="lune-center" cx="{_fmt(px[0])}" cy="{_fmt(px[1])}" '
                f'r="5" fill="steelblue"/>'
            )
        parts.append("</g>")

    parts.append("</svg>")
    return "\n".join(p for p in parts if p) + "\n"
