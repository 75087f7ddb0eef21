"""Convex bodies on the sphere: caps, geodesic polygons, and disk-polygons.

Internally every body is normalized to an *edge table*: a list of circle
pieces x(theta) = cos(s) q + sin(s) (cos(theta) e1 + sin(theta) e2),
theta in [0, span], traversed counterclockwise about the axis q.  Geodesic
edges are circle pieces with s = pi/2.  The table also carries an interior
anchor point and the vertex azimuths about it, which turn membership into a
single ray-boundary intersection: a point is inside iff its distance from
the anchor does not exceed the boundary crossing along its azimuth.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

import numpy as np

from . import _kernels as kern
from .errors import (
    BadParameters,
    BadThickness,
    DegenerateInput,
    NoSolution,
    NotInOpenHemisphere,
    NotOnBoundary,
)
from .regions import Cap
from .sphere import (
    DEFAULT_TOL,
    SpherePoint,
    Tolerance,
    distance,
    tangent_frame,
    vec3,
)

__all__ = [
    "Edge",
    "ConvexPolygon",
    "DiskPolygon",
    "Body",
    "SupportSet",
    "convex_hull",
    "body_contains",
    "body_contains_many",
    "boundary_sample",
    "boundary_sample_array",
    "boundary_distance",
    "supporting_poles_at",
    "make_cap",
    "make_quarter_disk",
    "make_reuleaux_odd_gon",
    "make_regular_reduced_polygon",
    "edge_table",
]

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True, slots=True)
class Edge:
    """Boundary piece: a geodesic arc, or a circular arc about ``center``.

    Circular arcs run counterclockwise about their center and must subtend
    less than a full circle.
    """

    start: SpherePoint
    end: SpherePoint
    center: SpherePoint | None = None
    radius: float | None = None

    def __post_init__(self) -> None:
        if (self.center is None) != (self.radius is None):
            raise BadParameters("arc edges need both center and radius")
        if self.center is not None:
            if not (0.0 < self.radius < math.pi):
                raise BadParameters(f"arc radius must lie in (0, pi), got {self.radius}")
            for p in (self.start, self.end):
                if abs(distance(self.center, p) - self.radius) > 1e-9:
                    raise BadParameters("arc endpoint is not at the arc radius")

    @property
    def kind(self) -> str:
        return "geodesic" if self.center is None else "arc"


@dataclass(frozen=True, slots=True)
class ConvexPolygon:
    """Geodesic polygon, vertices counterclockwise, strictly convex."""

    vertices: tuple[SpherePoint, ...]

    def __post_init__(self) -> None:
        n = len(self.vertices)
        if n < 3:
            raise BadParameters("a polygon needs at least 3 vertices")
        V = np.array([vec3(v) for v in self.vertices])
        dets = np.einsum(
            "ij,ij->i", V, np.cross(np.roll(V, -1, axis=0), np.roll(V, -2, axis=0))
        )
        if np.any(dets <= DEFAULT_TOL.eps_alg):
            raise BadParameters("vertex cycle is not strictly convex and positive")
        if _hemisphere_witness(V) is None:
            raise NotInOpenHemisphere("vertices span no open hemisphere")


@dataclass(frozen=True, slots=True)
class DiskPolygon:
    """Convex body bounded by a closed chain of geodesic and circular arcs."""

    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if len(self.edges) < 2:
            raise BadParameters("a disk-polygon needs at least 2 edges")
        for a, b in zip(self.edges, self.edges[1:] + self.edges[:1]):
            if distance(a.end, b.start) > 1e-6:
                raise BadParameters("edges do not chain head to tail")
        table = _build_table(self)
        _validate_star_shape(table)
        _validate_convexity(table)


Body = Union[Cap, ConvexPolygon, DiskPolygon]


@dataclass(frozen=True, slots=True)
class SupportSet:
    """Supporting-hemisphere poles at a boundary point.

    One pole at smooth points; at a corner, the closed arc of poles between
    the two extremes (the incident edges' poles).
    """

    extremes: tuple[SpherePoint, ...]

    @property
    def is_arc(self) -> bool:
        return len(self.extremes) > 1

    @property
    def pole(self) -> SpherePoint:
        return self.extremes[0]


class _EdgeTable:
    """Numeric boundary description shared by the fast kernels."""

    __slots__ = (
        "q", "s", "e1", "e2", "span", "starts", "lengths",
        "anchor", "f1", "f2", "breaks", "perimeter",
    )

    def __init__(self, q, s, e1, e2, span, anchor, starts=None):
        self.q = q
        self.s = s
        self.e1 = e1
        self.e2 = e2
        self.span = span
        if starts is None:
            cs, sn = np.cos(s)[:, None], np.sin(s)[:, None]
            starts = cs * q + sn * e1
        self.starts = starts
        self.lengths = span * np.sin(s)
        self.perimeter = float(self.lengths.sum())
        self.anchor = anchor
        f1, f2 = tangent_frame(anchor)
        # rotate the frame so the first vertex sits at azimuth zero
        a0 = math.atan2(self.starts[0] @ f2, self.starts[0] @ f1)
        c0, s0 = math.cos(a0), math.sin(a0)
        self.f1 = c0 * f1 + s0 * f2
        self.f2 = -s0 * f1 + c0 * f2
        phis = np.arctan2(self.starts @ self.f2, self.starts @ self.f1) % _TWO_PI
        phis[0] = 0.0
        self.breaks = np.concatenate([phis, [_TWO_PI]])

    @property
    def n_edges(self) -> int:
        return len(self.s)

    def point_at(self, j: int, theta: float) -> np.ndarray:
        return np.cos(self.s[j]) * self.q[j] + np.sin(self.s[j]) * (
            math.cos(theta) * self.e1[j] + math.sin(theta) * self.e2[j]
        )

    def points_at(self, j, theta) -> np.ndarray:
        j = np.asarray(j)
        theta = np.asarray(theta, dtype=float)
        return np.cos(self.s[j])[:, None] * self.q[j] + np.sin(self.s[j])[:, None] * (
            np.cos(theta)[:, None] * self.e1[j] + np.sin(theta)[:, None] * self.e2[j]
        )

    def pole_at(self, j: int, theta: float) -> np.ndarray:
        """Pole of the supporting hemisphere tangent at x(j, theta)."""
        return np.sin(self.s[j]) * self.q[j] - np.cos(self.s[j]) * (
            math.cos(theta) * self.e1[j] + math.sin(theta) * self.e2[j]
        )

    def radial(self, X) -> tuple[np.ndarray, np.ndarray]:
        return kern.radial_crossings(
            self.q, self.s, self.e1, self.e2, self.span,
            self.anchor, self.f1, self.f2, self.breaks, X,
        )

    def sample_indexed(self, n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """n boundary points with their (edge, theta) parameters."""
        js, ths = _sample_params(self, n)
        return self.points_at(js, ths), js, ths

    def farthest(self, X) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return kern.farthest_on_edges(self.q, self.s, self.e1, self.e2, self.span, X)

    def closest_boundary(self, x) -> float:
        """Distance from x to the nearest boundary point."""
        xv = vec3(x)
        best = math.inf
        for j in range(self.n_edges):
            d = math.acos(max(-1.0, min(1.0, float(xv @ self.q[j]))))
            theta = math.atan2(xv @ self.e2[j], xv @ self.e1[j]) % _TWO_PI
            if theta <= self.span[j]:
                best = min(best, abs(d - self.s[j]))
            else:
                best = min(best, distance(xv, self.starts[j]))
                endj = self.point_at(j, self.span[j])
                best = min(best, distance(xv, endj))
        return best


def _geodesic_piece(a: np.ndarray, b: np.ndarray) -> tuple:
    n = np.cross(a, b)
    norm = np.linalg.norm(n)
    if norm < 1e-15:
        raise BadParameters("geodesic edge endpoints coincide or are antipodal")
    q = n / norm
    e1 = a.copy()
    e2 = np.cross(q, e1)
    span = math.atan2(float(b @ e2), float(b @ e1)) % _TWO_PI
    return q, math.pi / 2, e1, e2, span


def _arc_piece(a: np.ndarray, b: np.ndarray, q: np.ndarray, s: float) -> tuple:
    e1 = a - (a @ q) * q
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(q, e1)
    span = math.atan2(float(b @ e2), float(b @ e1)) % _TWO_PI
    if span < 1e-15:
        span = _TWO_PI
    return q, s, e1, e2, span


def _build_table(body: Body) -> _EdgeTable:
    if isinstance(body, Cap):
        c = vec3(body.center)
        e1, e2 = tangent_frame(c)
        return _EdgeTable(
            q=c[None, :],
            s=np.array([body.radius]),
            e1=e1[None, :],
            e2=e2[None, :],
            span=np.array([_TWO_PI]),
            anchor=c,
        )
    if isinstance(body, ConvexPolygon):
        V = np.array([vec3(v) for v in body.vertices])
        pieces = [_geodesic_piece(V[i], V[(i + 1) % len(V)]) for i in range(len(V))]
        starts = V
        anchor = V.sum(axis=0)
        anchor /= np.linalg.norm(anchor)
    else:
        pieces = []
        starts = []
        for e in body.edges:
            a, b = vec3(e.start), vec3(e.end)
            starts.append(a)
            if e.center is None:
                pieces.append(_geodesic_piece(a, b))
            else:
                pieces.append(_arc_piece(a, b, vec3(e.center), e.radius))
        starts = np.array(starts)
        anchor = starts.sum(axis=0)
        norm = np.linalg.norm(anchor)
        if norm < 1e-12:
            raise BadParameters("vertex mean is degenerate; no interior anchor")
        anchor /= norm
    q, s, e1, e2, span = (np.array([p[i] for p in pieces]) for i in range(5))
    return _EdgeTable(q=q, s=s, e1=e1, e2=e2, span=span, anchor=anchor, starts=starts)


@lru_cache(maxsize=512)
def edge_table(body: Body) -> _EdgeTable:
    """Cached numeric boundary description of a body."""
    return _build_table(body)


def _validate_star_shape(table: _EdgeTable) -> None:
    """Vertex azimuths about the anchor must wind once, monotonically."""
    br = table.breaks
    if np.any(np.diff(br) <= 0):
        raise BadParameters("boundary does not wind monotonically about the anchor")
    # sample edge interiors: azimuth must stay within the edge's sector
    for j in range(table.n_edges):
        th = np.linspace(0.0, table.span[j], 9)[1:-1]
        pts = table.points_at(np.full(th.shape, j, dtype=int), th)
        phi = np.arctan2(pts @ table.f2, pts @ table.f1) % _TWO_PI
        lo, hi = br[j], br[j + 1]
        if lo > 1e-12 and np.any((phi < lo - 1e-9) | (phi > hi + 1e-9)):
            raise BadParameters("edge leaves its azimuth sector; body not star-shaped")


def _validate_convexity(table: _EdgeTable) -> None:
    """The body must lie inside the tangent hemisphere of every edge midpoint."""
    samples = _sample_table(table, max(48, 8 * table.n_edges))
    for j in range(table.n_edges):
        k = table.pole_at(j, 0.5 * table.span[j])
        if np.min(samples @ k) < -1e-7:
            raise BadParameters("boundary is not convex")


def _sample_params(table: _EdgeTable, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Edge indices and angles of n boundary samples (vertices included)."""
    E = table.n_edges
    if E == 1:
        th = np.linspace(0.0, table.span[0], max(n, 1), endpoint=False)
        return np.zeros(len(th), dtype=int), th
    if n < E:
        raise BadParameters(f"need at least {E} samples for {E} edges")
    extra = n - E
    quota = extra * table.lengths / table.perimeter
    base = np.floor(quota).astype(int)
    rem = extra - int(base.sum())
    order = np.argsort(-(quota - base), kind="stable")
    base[order[:rem]] += 1
    js, ths = [], []
    for j in range(E):
        js.append(j)
        ths.append(0.0)
        k = base[j]
        for i in range(k):
            js.append(j)
            ths.append(table.span[j] * (i + 1) / (k + 1))
    return np.array(js), np.array(ths)


def _sample_table(table: _EdgeTable, n: int) -> np.ndarray:
    """n boundary points: all edge start vertices, rest arc-length spread."""
    js, ths = _sample_params(table, n)
    pts = table.points_at(js, ths)
    at_vertex = ths == 0.0
    pts[at_vertex] = table.starts[js[at_vertex]]
    return pts


def _hemisphere_witness(V: np.ndarray) -> np.ndarray | None:
    """A unit u with u.v > 0 for all rows v, or None if none exists."""
    mean = V.sum(axis=0)
    n = np.linalg.norm(mean)
    if n > 1e-12:
        u = mean / n
        if np.min(V @ u) > 1e-9:
            return u
    from scipy.optimize import linprog

    # maximize t  s.t.  V u >= t, u in [-1,1]^3
    res = linprog(
        c=[0.0, 0.0, 0.0, -1.0],
        A_ub=np.hstack([-V, np.ones((len(V), 1))]),
        b_ub=np.zeros(len(V)),
        bounds=[(-1, 1), (-1, 1), (-1, 1), (None, None)],
        method="highs",
    )
    if not res.success or res.x[3] <= 1e-12:
        return None
    u = res.x[:3]
    u /= np.linalg.norm(u)
    if np.min(V @ u) <= 0:
        return None
    return u


# ---------------------------------------------------------------------------
# constructors


def make_cap(center, radius: float) -> Cap:
    """Spherical ball; radius pi/2 gives a hemisphere."""
    return Cap(center=SpherePoint.from_array(vec3(center)), radius=float(radius))


def make_quarter_disk(center, delta: float, orientation: float = 0.0) -> DiskPolygon:
    """Sector of a cap of radius delta spanned by two orthogonal radii."""
    if not (0.0 < delta < math.pi / 2):
        raise BadThickness(f"quarter-disk thickness must lie in (0, pi/2), got {delta}")
    c = vec3(center)
    c /= np.linalg.norm(c)
    e1, e2 = tangent_frame(c)
    co, so = math.cos(orientation), math.sin(orientation)
    d1 = co * e1 + so * e2
    d2 = -so * e1 + co * e2
    a = math.cos(delta) * c + math.sin(delta) * d1
    b = math.cos(delta) * c + math.sin(delta) * d2
    cp = SpherePoint.from_array(c)
    ap = SpherePoint.from_array(a)
    bp = SpherePoint.from_array(b)
    return DiskPolygon(
        edges=(
            Edge(start=cp, end=ap),
            Edge(start=ap, end=bp, center=cp, radius=delta),
            Edge(start=bp, end=cp),
        )
    )


def _regular_vertices(center: np.ndarray, n: int, circumradius: float) -> np.ndarray:
    e1, e2 = tangent_frame(center)
    ang = _TWO_PI * np.arange(n) / n
    return (
        math.cos(circumradius) * center[None, :]
        + math.sin(circumradius)
        * (np.cos(ang)[:, None] * e1[None, :] + np.sin(ang)[:, None] * e2[None, :])
    )


def _equilateral_circumradius(side: float) -> float:
    return math.asin(2.0 / math.sqrt(3.0) * math.sin(side / 2.0))


def make_reuleaux_odd_gon(center, n: int, width: float) -> DiskPolygon:
    """Body of constant width ``width`` built over a regular odd-gon.

    Up to width pi/2 the boundary consists of circular arcs of radius
    ``width`` centered at the opposite vertices (the arcs degenerate to
    geodesics at exactly pi/2).  Beyond pi/2 (n = 3 only, width <= 2*pi/3)
    the body is the outward parallel set at distance width - pi/2 of the
    core of width pi - width, which is the convex realization; the naive
    opposite-vertex arcs would curve outward there.
    """
    if n < 3 or n % 2 == 0:
        raise BadParameters("vertex count must be odd and at least 3")
    if n == 3:
        if not (0.0 < width <= 2.0 * math.pi / 3.0):
            raise BadParameters("triangle width must lie in (0, 2*pi/3]")
    elif not (0.0 < width <= math.pi / 2):
        raise BadParameters("width must lie in (0, pi/2] for more than 3 vertices")
    c = vec3(center)
    c /= np.linalg.norm(c)

    if width <= math.pi / 2:
        return _reuleaux_classic(c, n, width)
    return _reuleaux_inflated(c, width)


def _reuleaux_classic(c: np.ndarray, n: int, w: float) -> DiskPolygon:
    from scipy.optimize import brentq

    m = (n - 1) // 2
    gamma = math.cos(_TWO_PI * m / n)

    def diag(r: float) -> float:
        return math.cos(r) ** 2 + math.sin(r) ** 2 * gamma - math.cos(w)

    r = brentq(diag, 1e-12, math.pi / 2 - 1e-12, xtol=1e-15)
    V = _regular_vertices(c, n, r)
    pts = [SpherePoint.from_array(v) for v in V]
    edges = []
    geodesic = abs(w - math.pi / 2) < 1e-12
    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        if geodesic:
            edges.append(Edge(start=a, end=b))
        else:
            o = pts[(i + (n + 1) // 2) % n]
            edges.append(Edge(start=a, end=b, center=o, radius=w))
    return DiskPolygon(edges=tuple(edges))


def _reuleaux_inflated(c: np.ndarray, w: float) -> DiskPolygon:
    core_w = math.pi - w
    rim = w - math.pi / 2
    r0 = _equilateral_circumradius(core_w)
    V = _regular_vertices(c, 3, r0)

    def join(i: int, j: int) -> np.ndarray:
        # radial from V[i] through V[j], at distance pi/2 from V[i]
        u = V[j] - (V[i] @ V[j]) * V[i]
        return u / np.linalg.norm(u)

    edges = []
    for i in range(3):
        prev_c, next_c = (i + 1) % 3, (i + 2) % 3
        a = SpherePoint.from_array(join(prev_c, i))
        b = SpherePoint.from_array(join(next_c, i))
        edges.append(Edge(start=a, end=b, center=SpherePoint.from_array(V[i]), radius=rim))
        g_end = SpherePoint.from_array(join(next_c, (i + 1) % 3))
        edges.append(Edge(start=b, end=g_end))
    return DiskPolygon(edges=tuple(edges))


def reduced_polygon_circumradius(n: int, thickness: float) -> float:
    """Circumradius r with vertex-to-opposite-edge-midpoint distance = thickness."""
    from scipy.optimize import brentq

    cos_half = math.cos(math.pi / n)

    def f(r: float) -> float:
        return r + math.atan(math.tan(r) * cos_half) - thickness

    lo, hi = 1e-12, math.pi / 2 - 1e-12
    if f(lo) > 0 or f(hi) < 0:
        raise NoSolution("cannot bracket the circumradius equation")
    return brentq(f, lo, hi, xtol=1e-15)


def make_regular_reduced_polygon(center, n: int, thickness: float) -> ConvexPolygon:
    """Regular odd-gon whose vertex-to-opposite-edge distance equals thickness."""
    if n < 3 or n % 2 == 0:
        raise BadParameters("vertex count must be odd and at least 3")
    if not (0.0 < thickness < math.pi / 2):
        raise BadParameters("thickness must lie in (0, pi/2)")
    c = vec3(center)
    c /= np.linalg.norm(c)
    r = reduced_polygon_circumradius(n, thickness)
    V = _regular_vertices(c, n, r)
    return ConvexPolygon(vertices=tuple(SpherePoint.from_array(v) for v in V))


# ---------------------------------------------------------------------------
# hull


def convex_hull(points, tol: Tolerance = DEFAULT_TOL) -> ConvexPolygon:
    """Spherical convex hull of points lying in some open hemisphere.

    Collinear points interior to hull edges are dropped; the vertex cycle
    starts at the lexicographically smallest vertex and runs CCW.
    """
    P = np.array([vec3(p) for p in points])
    if len(P) < 3:
        raise DegenerateInput("need at least 3 points")
    u = _hemisphere_witness(P)
    if u is None:
        raise NotInOpenHemisphere("points span no open hemisphere")
    e1, e2 = tangent_frame(u)
    proj = np.stack([P @ e1, P @ e2], axis=1) / (P @ u)[:, None]

    order = np.lexsort((proj[:, 1], proj[:, 0]))

    def turn(i: int, j: int, k: int) -> int:
        det = float(np.dot(P[i], np.cross(P[j], P[k])))
        if abs(det) < tol.eps_alg:
            return 0
        return 1 if det > 0 else -1

    def chain(idx) -> list[int]:
        out: list[int] = []
        for i in idx:
            while len(out) >= 2 and turn(out[-2], out[-1], i) <= 0:
                out.pop()
            out.append(i)
        return out

    lower = chain(order)
    upper = chain(order[::-1])
    hull_idx = lower[:-1] + upper[:-1]
    # drop duplicate coordinates (repeated input points)
    seen: list[int] = []
    for i in hull_idx:
        if not any(np.allclose(P[i], P[j], atol=1e-15) for j in seen):
            seen.append(i)
    if len(seen) < 3:
        raise DegenerateInput("all points lie on one great circle")
    V = [SpherePoint.from_array(P[i]) for i in seen]
    return ConvexPolygon(vertices=tuple(V))


# ---------------------------------------------------------------------------
# queries


def body_contains(body: Body, p, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Closed membership test."""
    return bool(body_contains_many(body, vec3(p)[None, :], tol)[0])


def body_contains_many(body: Body, X, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Vectorized membership for an (n, 3) array of unit vectors."""
    X = np.atleast_2d(np.asarray(X, dtype=float))
    if isinstance(body, Cap):
        return X @ vec3(body.center) >= math.cos(
            min(body.radius + tol.eps_alg, math.pi)
        )
    if isinstance(body, ConvexPolygon):
        V = np.array([vec3(v) for v in body.vertices])
        poles = np.cross(V, np.roll(V, -1, axis=0))
        return np.min(X @ poles.T, axis=1) >= -tol.eps_alg
    t, r = edge_table(body).radial(X)
    return r <= t + tol.eps_alg


def boundary_sample_array(body: Body, n: int) -> np.ndarray:
    """Deterministic boundary sample as an (n, 3) array; includes vertices."""
    return _sample_table(edge_table(body), n)


def boundary_sample(body: Body, n: int) -> list[SpherePoint]:
    return [SpherePoint.from_array(v) for v in boundary_sample_array(body, n)]


def boundary_distance(body: Body, p) -> float:
    """Distance from p to the boundary of the body."""
    return edge_table(body).closest_boundary(vec3(p))


def rotate_body(body: Body, R: np.ndarray) -> Body:
    """The body carried along by a rotation matrix."""
    def rot(p: SpherePoint) -> SpherePoint:
        return SpherePoint.from_array(R @ vec3(p))

    if isinstance(body, Cap):
        return Cap(center=rot(body.center), radius=body.radius)
    if isinstance(body, ConvexPolygon):
        return ConvexPolygon(vertices=tuple(rot(v) for v in body.vertices))
    return DiskPolygon(
        edges=tuple(
            Edge(
                start=rot(e.start),
                end=rot(e.end),
                center=None if e.center is None else rot(e.center),
                radius=e.radius,
            )
            for e in body.edges
        )
    )


def supporting_poles_at(body: Body, p, tol: Tolerance = DEFAULT_TOL) -> SupportSet:
    """Poles k of all hemispheres containing the body and touching it at p."""
    pv = vec3(p)
    table = edge_table(body)
    slack = max(tol.eps_alg, 1e-9)
    if table.closest_boundary(pv) > 10 * slack:
        raise NotOnBoundary("point is not on the body boundary")

    E = table.n_edges
    # corner first: within slack of an edge start?
    for j in range(E):
        if distance(pv, table.starts[j]) <= 10 * slack:
            k_in = table.pole_at((j - 1) % E, table.span[(j - 1) % E])
            k_out = table.pole_at(j, 0.0)
            if distance(k_in, k_out) <= 1e-9:
                return SupportSet(extremes=(SpherePoint.from_array(k_out),))
            return SupportSet(
                extremes=(
                    SpherePoint.from_array(k_in),
                    SpherePoint.from_array(k_out),
                )
            )
    # smooth point: find the owning edge
    for j in range(E):
        d = math.acos(max(-1.0, min(1.0, float(pv @ table.q[j]))))
        if abs(d - table.s[j]) > 10 * slack:
            continue
        theta = math.atan2(pv @ table.e2[j], pv @ table.e1[j]) % _TWO_PI
        if theta <= table.span[j] + 1e-9:
            return SupportSet(
                extremes=(SpherePoint.from_array(table.pole_at(j, theta)),)
            )
    raise NotOnBoundary("point is not on the body boundary")
