"""Smallest enclosing caps, boundary-centered covers, and covering bounds.

The enclosing cap is found combinatorially: the radius of the smallest cap
covering a finite point set equals the largest over all point triples of
the triple's own minimal covering radius (three points always suffice), so
the cap is read off the maximizing triple of boundary determiners.  The
sampled answer is then polished against the exact boundary: violated
farthest points are added as determiners until none remain, which pins the
cap of the full body, arcs included, to convergence tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels as kern
from .bodies import (
    Body,
    ConvexPolygon,
    boundary_sample_array,
    edge_table,
)
from .errors import NotInOpenHemisphere, RegimeUnknown
from .optimize import golden_section
from .regions import Cap
from .sphere import DEFAULT_TOL, SpherePoint, Tolerance
from .width import is_constant_width, reducedness_certificate, thickness

__all__ = [
    "CoverResult",
    "BoundReport",
    "min_enclosing_cap",
    "boundary_centered_cover",
    "covering_bound_report",
    "dekster_radius",
    "reduced_cover_radius",
    "wide_body_cover_radius",
]

_HALF_PI = math.pi / 2


@dataclass(frozen=True, slots=True)
class CoverResult:
    """Smallest enclosing cap and the boundary points determining it."""

    center: SpherePoint
    radius: float
    support: tuple[SpherePoint, ...]


@dataclass(frozen=True, slots=True)
class BoundReport:
    """Measured covering radius against the applicable theoretical bounds."""

    thickness: float
    regime: str
    bounds: dict
    measured_radius: float
    slack: dict
    satisfied: bool


def dekster_radius(width: float) -> float:
    """Covering radius bound for constant width at most 2*pi/3."""
    return math.asin(2.0 / math.sqrt(3.0) * math.sin(width / 2.0))


def wide_body_cover_radius(width: float) -> float:
    """Covering radius bound for constant width at least pi/2."""
    return width + math.asin(2.0 / math.sqrt(3.0) * math.cos(width / 2.0)) - _HALF_PI


def reduced_cover_radius(thickness_value: float) -> float:
    """Covering radius bound for reduced bodies of thickness at most pi/2."""
    return math.atan(math.sqrt(2.0) * math.tan(thickness_value / 2.0))


def min_enclosing_cap(
    body: Body, n_determiners: int = 256, tol: Tolerance = DEFAULT_TOL
) -> CoverResult:
    """Unique smallest cap containing the body.

    Determiners are boundary samples (vertices included); the winning
    triple's cap is then polished exactly: while some boundary point lies
    outside, it joins the determining set and the small-set cap is re-solved.
    """
    if isinstance(body, Cap):
        if body.radius >= _HALF_PI - 1e-12:
            raise NotInOpenHemisphere("a hemisphere admits no covering cap below pi/2")
        return CoverResult(center=body.center, radius=body.radius, support=())

    P = boundary_sample_array(body, n_determiners)
    center, radius, support_idx = kern.min_cap_of_points(np.ascontiguousarray(P))
    S = [P[i] for i in support_idx]

    table = edge_table(body)
    for _ in range(64):
        d, j, th = table.farthest(center[None, :])
        far_d = float(d[0])
        if far_d <= radius + 1e-12:
            break
        y = table.point_at(int(j[0]), float(th[0]))
        S.append(y)
        center, radius, sidx = kern.min_cap_of_points(np.ascontiguousarray(np.array(S)))
        S = [S[i] for i in sidx]
    radius = max(radius, float(table.farthest(center[None, :])[0][0]))
    if radius >= _HALF_PI - 1e-12:
        raise NotInOpenHemisphere("body admits no covering cap below pi/2")
    return CoverResult(
        center=SpherePoint.from_array(center),
        radius=radius,
        support=tuple(SpherePoint.from_array(p) for p in S[:3]),
    )


def boundary_centered_cover(
    body: Body, n: int = 512, tol: Tolerance = DEFAULT_TOL
) -> tuple[SpherePoint, float]:
    """Boundary point whose farthest body point is nearest, and that reach.

    Scans n boundary samples and polishes along the best sample's edge with
    golden-section.
    """
    table = edge_table(body)
    pts, js, ths = table.sample_indexed(n)
    reach, _, _ = table.farthest(pts)
    best = int(np.argmin(reach))
    best_val = float(reach[best])
    best_pt = pts[best]

    j = int(js[best])
    span = table.span[j]
    h = span / max(n // table.n_edges, 2)

    def f(theta: float) -> float:
        p = table.point_at(j, theta)
        return float(table.farthest(p[None, :])[0][0])

    lo = max(0.0, float(ths[best]) - h)
    hi = min(span, float(ths[best]) + h)
    t_best, f_best = golden_section(f, lo, hi, tol=1e-12)
    if f_best < best_val:
        best_val = f_best
        best_pt = table.point_at(j, t_best)
    return SpherePoint.from_array(best_pt), best_val


def covering_bound_report(body: Body, tol: Tolerance = DEFAULT_TOL) -> BoundReport:
    """Measured smallest covering radius against every applicable bound."""
    t, _ = thickness(body, tol)
    bounds: dict[str, float] = {}
    cw = is_constant_width(body, t, tol=tol.eps_claim)
    if cw.passed:
        regime = "constant-width"
        if t <= 2.0 * math.pi / 3.0 + 1e-12:
            bounds["dekster"] = dekster_radius(t)
        if t >= _HALF_PI - 1e-12:
            bounds["constant-width-large"] = wide_body_cover_radius(t)
    elif isinstance(body, ConvexPolygon) and t < _HALF_PI:
        cert = reducedness_certificate(body, tol=tol.eps_claim)
        if cert.verdict != "certified-consistent-with-reduced":
            raise RegimeUnknown("polygon is not certified reduced")
        regime = "reduced-polygon"
        bounds["reduced"] = reduced_cover_radius(t)
    else:
        raise RegimeUnknown("neither constant width nor a certified reduced polygon")

    measured = min_enclosing_cap(body, tol=tol).radius
    slack = {name: b - measured for name, b in bounds.items()}
    satisfied = all(measured <= b + tol.eps_claim for b in bounds.values())
    return BoundReport(
        thickness=t,
        regime=regime,
        bounds=bounds,
        measured_radius=measured,
        slack=slack,
        satisfied=satisfied,
    )
