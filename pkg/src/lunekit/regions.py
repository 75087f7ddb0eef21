"""Hemispheres, caps, and lunes.

A lune is stored by its two hemisphere poles only; its bounding-semicircle
centers and corners are derived on demand, so there is nothing to drift out
of sync.  Thickness uses the identity

    thickness(L) = pi - distance(g, h)

which follows from the center-based definition; the test suite keeps the
explicit center-to-center computation as a permanent oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BadParameters, BadRadius, DegenerateLune
from .sphere import DEFAULT_TOL, SpherePoint, Tolerance, distance, vec3

__all__ = [
    "Hemisphere",
    "Cap",
    "Lune",
    "lune_thickness",
    "lune_bounding_centers",
    "lune_corners",
    "region_contains",
]


@dataclass(frozen=True, slots=True)
class Hemisphere:
    """Closed half-sphere of all points within pi/2 of its pole."""

    pole: SpherePoint


@dataclass(frozen=True, slots=True)
class Cap:
    """Spherical ball of radius in (0, pi/2]; radius pi/2 is a hemisphere."""

    center: SpherePoint
    radius: float

    def __post_init__(self) -> None:
        if not (0.0 < self.radius <= math.pi / 2 + 1e-12):
            raise BadRadius(f"cap radius must lie in (0, pi/2], got {self.radius}")


@dataclass(frozen=True, slots=True)
class Lune:
    """Intersection of two different, non-opposite closed hemispheres."""

    g: SpherePoint
    h: SpherePoint

    def __post_init__(self) -> None:
        d = distance(self.g, self.h)
        if d < DEFAULT_TOL.eps_alg or d > math.pi - DEFAULT_TOL.eps_alg:
            raise DegenerateLune(
                "hemisphere poles must be distinct and not opposite"
            )


def lune_thickness(lune: Lune, tol: Tolerance = DEFAULT_TOL) -> float:
    """Distance between the centers of the two bounding semicircles."""
    d = distance(lune.g, lune.h)
    if d < tol.eps_alg or d > math.pi - tol.eps_alg:
        raise DegenerateLune("hemisphere poles must be distinct and not opposite")
    return math.pi - d


def lune_bounding_centers(
    lune: Lune, tol: Tolerance = DEFAULT_TOL
) -> tuple[SpherePoint, SpherePoint]:
    """Centers of the semicircles bd(G) cap H and bd(H) cap G, in that order."""
    g, h = vec3(lune.g), vec3(lune.h)
    c = float(np.dot(g, h))
    s = math.sqrt(max(1.0 - c * c, 0.0))
    if s < tol.eps_alg:
        raise DegenerateLune("hemisphere poles must be distinct and not opposite")
    c_gh = (h - c * g) / s
    c_hg = (g - c * h) / s
    return SpherePoint.from_array(c_gh), SpherePoint.from_array(c_hg)


def lune_corners(
    lune: Lune, tol: Tolerance = DEFAULT_TOL
) -> tuple[SpherePoint, SpherePoint]:
    """The two (antipodal) corners, ordered by the sign of g x h."""
    g, h = vec3(lune.g), vec3(lune.h)
    n = np.cross(g, h)
    norm = float(np.linalg.norm(n))
    if norm < tol.eps_alg:
        raise DegenerateLune("hemisphere poles must be distinct and not opposite")
    n /= norm
    return SpherePoint.from_array(n), SpherePoint.from_array(-n)


def region_contains(region, p, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Closed membership test for a Hemisphere, Cap, or Lune."""
    pv = vec3(p)
    if isinstance(region, Hemisphere):
        return float(np.dot(pv, vec3(region.pole))) >= -tol.eps_alg
    if isinstance(region, Cap):
        return distance(region.center, pv) <= region.radius + tol.eps_alg
    if isinstance(region, Lune):
        return (
            float(np.dot(pv, vec3(region.g))) >= -tol.eps_alg
            and float(np.dot(pv, vec3(region.h))) >= -tol.eps_alg
        )
    raise BadParameters(f"not a region: {type(region).__name__}")
