"""Numeric primitives for points, arcs, and small circles on the unit sphere.

All angles are radians.  Distances are computed with the two-argument
arctangent of (|a x b|, a.b), which stays accurate near 0 and pi where
arccos of the dot product does not.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import AntipodalEndpoints, BadParameters, DegenerateTriple

__all__ = [
    "SpherePoint",
    "Tolerance",
    "DEFAULT_TOL",
    "distance",
    "antipode",
    "interpolate",
    "orient",
    "circumcircle",
    "tangent_frame",
    "rotation_about",
    "random_rotation",
    "vec3",
]


@dataclass(frozen=True, slots=True)
class Tolerance:
    """Numeric thresholds: algebraic predicates < optimization < claim checks."""

    eps_alg: float = 1e-9
    eps_opt: float = 1e-7
    eps_claim: float = 1e-6

    def __post_init__(self) -> None:
        if not (0.0 < self.eps_alg < self.eps_opt < self.eps_claim < 1e-3):
            raise BadParameters(
                "tolerances must satisfy 0 < eps_alg < eps_opt < eps_claim < 1e-3"
            )


DEFAULT_TOL = Tolerance()

_NORM_TOL = 1e-12


@dataclass(frozen=True, slots=True)
class SpherePoint:
    """A point of the unit sphere stored as a unit 3-vector.

    Coordinates are re-normalized on construction; consumers may assume
    unit norm to within 1e-12.
    """

    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        n = math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)
        if n == 0.0 or not math.isfinite(n):
            raise BadParameters("cannot normalize a zero or non-finite vector")
        scale = 1.0 / n if abs(n - 1.0) > _NORM_TOL else 1.0
        object.__setattr__(self, "x", float(self.x) * scale)
        object.__setattr__(self, "y", float(self.y) * scale)
        object.__setattr__(self, "z", float(self.z) * scale)

    @classmethod
    def from_array(cls, v: np.ndarray) -> "SpherePoint":
        return cls(float(v[0]), float(v[1]), float(v[2]))

    @property
    def vec(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])

    def __iter__(self):
        return iter((self.x, self.y, self.z))


def vec3(p) -> np.ndarray:
    """Coerce a SpherePoint or length-3 sequence to a float ndarray."""
    if isinstance(p, SpherePoint):
        return p.vec
    v = np.asarray(p, dtype=float)
    if v.shape != (3,):
        raise BadParameters(f"expected a 3-vector, got shape {v.shape}")
    return v


def distance(a, b) -> float:
    """Spherical (great circle) distance between two points, in [0, pi]."""
    av, bv = vec3(a), vec3(b)
    return float(np.arctan2(np.linalg.norm(np.cross(av, bv)), np.dot(av, bv)))


def antipode(p) -> SpherePoint:
    """The point diametrically opposite p."""
    v = vec3(p)
    return SpherePoint(-v[0], -v[1], -v[2])


def interpolate(a, b, t: float, tol: Tolerance = DEFAULT_TOL) -> SpherePoint:
    """Unit-speed point on the shorter arc ab: distance(a, result) = t*|ab|."""
    av, bv = vec3(a), vec3(b)
    theta = distance(av, bv)
    if theta > math.pi - tol.eps_alg:
        raise AntipodalEndpoints("arc endpoints are antipodal")
    if theta < 1e-15:
        return SpherePoint.from_array(av)
    s = math.sin(theta)
    v = (math.sin((1.0 - t) * theta) * av + math.sin(t * theta) * bv) / s
    return SpherePoint.from_array(v / np.linalg.norm(v))


def orient(a, b, c, tol: Tolerance = DEFAULT_TOL) -> int:
    """Sign of the scalar triple product a.(b x c); 0 within eps_alg."""
    det = float(np.dot(vec3(a), np.cross(vec3(b), vec3(c))))
    if abs(det) < tol.eps_alg:
        return 0
    return 1 if det > 0.0 else -1


def circumcircle(a, b, c, tol: Tolerance = DEFAULT_TOL) -> tuple[SpherePoint, float]:
    """Center and radius of the small circle through three points.

    Of the two antipodal equidistant candidates the one with the smaller
    radius is returned, so the radius is at most pi/2.
    """
    av, bv, cv = vec3(a), vec3(b), vec3(c)
    if orient(av, bv, cv, tol) == 0:
        raise DegenerateTriple("points lie on one great circle")
    n = np.cross(av - bv, bv - cv)
    n /= np.linalg.norm(n)
    if np.dot(n, av) < 0.0:
        n = -n
    center = SpherePoint.from_array(n)
    return center, distance(n, av)


def tangent_frame(p) -> tuple[np.ndarray, np.ndarray]:
    """Right-handed orthonormal frame (e1, e2) of the tangent plane at p.

    Azimuth atan2(x.e2, x.e1) increases counterclockwise about p as seen
    from outside the sphere.  Deterministic in p.
    """
    v = vec3(p)
    axis = np.zeros(3)
    axis[int(np.argmin(np.abs(v)))] = 1.0
    e1 = np.cross(v, axis)
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(v, e1)
    return e1, e2


def rotation_about(axis, angle: float) -> np.ndarray:
    """Rotation matrix about a (not necessarily unit) axis by angle."""
    u = vec3(axis)
    u = u / np.linalg.norm(u)
    k = np.array([[0.0, -u[2], u[1]], [u[2], 0.0, -u[0]], [-u[1], u[0], 0.0]])
    return np.eye(3) + math.sin(angle) * k + (1.0 - math.cos(angle)) * (k @ k)


def random_rotation(rng: np.random.Generator) -> np.ndarray:
    """Haar-ish random rotation from a normalized random quaternion."""
    q = rng.normal(size=4)
    q /= np.linalg.norm(q)
    w, x, y, z = q
    return np.array(
        [
            [1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)],
            [2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)],
            [2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)],
        ]
    )
