"""Width engine: polar duals, width, thickness, diameter, constancy tests.

A hemisphere H(k) contains a body B exactly when k lies in the polar body
B°, and supports B when k is on bd(B°).  The narrowest lune K cap K' over
co-supporting K' therefore has thickness

    width_at(B, k) = pi - max_{k' in B°} dist(k, k'),

and minimizing over supporting k turns thickness into

    thickness(B) = pi - diameter(B°),

both of which reduce to farthest-point queries against the polar boundary.
Those queries are exact: per edge the maximum of the distance is attained
at an endpoint or at an analytic critical point, never found by sampling.
A dense-scan oracle (thickness_scan) is kept alongside as an independent
cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .bodies import (
    Body,
    ConvexPolygon,
    DiskPolygon,
    Edge,
    boundary_distance,
    boundary_sample_array,
    edge_table,
    supporting_poles_at,
)
from .errors import (
    BadParameters,
    DiameterMismatch,
    EmptyResult,
    NotConstantWidthOverHalfPi,
    NotInOpenHemisphere,
    NotOnBoundary,
    NotSupporting,
    ThicknessTooLarge,
)
from .optimize import golden_section
from .regions import Cap
from .sphere import DEFAULT_TOL, SpherePoint, Tolerance, distance, vec3

__all__ = [
    "CoSupportPair",
    "WidthProfile",
    "ConstantWidthReport",
    "ConstantDiameterReport",
    "CertificateReport",
    "polar",
    "polar_rho",
    "farthest_point",
    "width_at",
    "width_profile",
    "thickness",
    "thickness_scan",
    "diameter",
    "is_constant_width",
    "is_constant_diameter",
    "reducedness_certificate",
    "inscribed_touching_ball",
]

_TWO_PI = 2.0 * math.pi
_HALF_PI = math.pi / 2


@dataclass(frozen=True, slots=True)
class CoSupportPair:
    """Poles of the two hemispheres forming a narrowest supporting lune."""

    k: SpherePoint
    k_star: SpherePoint


@dataclass(frozen=True, slots=True)
class WidthProfile:
    """Sampled widths over supporting poles, with the sampled minimum."""

    samples: tuple[tuple[SpherePoint, float], ...]
    min_width: float
    argmin_pole: SpherePoint


@dataclass(frozen=True, slots=True)
class ConstantWidthReport:
    passed: bool
    max_deviation: float
    worst_pole: SpherePoint


@dataclass(frozen=True, slots=True)
class ConstantDiameterReport:
    passed: bool
    worst_point: SpherePoint
    worst_reach: float


@dataclass(frozen=True, slots=True)
class VertexCertificate:
    vertex: SpherePoint
    lune_gap: float
    cut_decrease: float
    necessary_ok: bool
    falsification_ok: bool


@dataclass(frozen=True, slots=True)
class CertificateReport:
    """Per-vertex results of the two reducedness gates."""

    thickness: float
    vertices: tuple[VertexCertificate, ...] = field(default_factory=tuple)

    @property
    def necessary_passed(self) -> bool:
        return all(v.necessary_ok for v in self.vertices)

    @property
    def falsification_passed(self) -> bool:
        return all(v.falsification_ok for v in self.vertices)

    @property
    def verdict(self) -> str:
        if not self.necessary_passed:
            return "not reduced"
        if self.falsification_passed:
            return "certified-consistent-with-reduced"
        return "inconclusive"


# ---------------------------------------------------------------------------
# polar duality


def _assert_open_hemisphere(body: Body) -> None:
    if isinstance(body, Cap) and body.radius >= _HALF_PI - 1e-12:
        raise NotInOpenHemisphere("a hemisphere has a degenerate polar")


def polar(body: Body) -> Body:
    """The polar body: poles of all hemispheres containing the body."""
    _assert_open_hemisphere(body)
    if isinstance(body, Cap):
        return Cap(center=body.center, radius=_HALF_PI - body.radius)
    if isinstance(body, ConvexPolygon):
        V = [vec3(v) for v in body.vertices]
        poles = []
        for i in range(len(V)):
            n = np.cross(V[i], V[(i + 1) % len(V)])
            poles.append(SpherePoint.from_array(n / np.linalg.norm(n)))
        return ConvexPolygon(vertices=tuple(poles))
    return _polar_disk_polygon(body)


def _polar_disk_polygon(body: DiskPolygon) -> Body:
    table = edge_table(body)
    E = table.n_edges
    pieces: list[tuple] = []  # ("vertex", k) or ("arc", start, end, center, radius)
    for j in range(E):
        sj = table.s[j]
        if abs(sj - _HALF_PI) < 1e-9:
            pieces.append(("vertex", table.pole_at(j, 0.0)))
        else:
            k0 = table.pole_at(j, 0.0)
            k1 = table.pole_at(j, table.span[j])
            pieces.append(("arc", k0, k1, table.q[j], _HALF_PI - sj))

    edges: list[Edge] = []
    exit_points: list[np.ndarray] = []  # pole at the end of piece j
    entry_points: list[np.ndarray] = []
    for p in pieces:
        if p[0] == "vertex":
            entry_points.append(p[1])
            exit_points.append(p[1])
        else:
            entry_points.append(p[1])
            exit_points.append(p[2])

    for j in range(E):
        p = pieces[j]
        if p[0] == "arc":
            edges.append(
                Edge(
                    start=SpherePoint.from_array(p[1]),
                    end=SpherePoint.from_array(p[2]),
                    center=SpherePoint.from_array(p[3]),
                    radius=float(p[4]),
                )
            )
        nxt = entry_points[(j + 1) % E]
        cur = exit_points[j]
        if distance(cur, nxt) > 1e-7:
            edges.append(
                Edge(
                    start=SpherePoint.from_array(cur),
                    end=SpherePoint.from_array(nxt),
                )
            )
    if len(edges) < 2:
        raise NotInOpenHemisphere("polar degenerates; body is not a proper body")
    return DiskPolygon(edges=tuple(edges))


def polar_rho(body, rho: float, tol: Tolerance = DEFAULT_TOL):
    """Intersection of the balls of radius rho centered at all body points.

    Equivalently the set of centers of rho-caps covering the body, i.e. the
    sublevel set {x : max over body of dist(x, .) <= rho}.  For a point this
    is one cap; for polygons the vertex caps suffice (a hull point is a
    positive combination of the vertices); for disk-polygons the boundary is
    walked exactly: each piece is an arc of radius rho about a vertex or of
    radius rho - s about an arc center, glued where the binding feature of
    the farthest-distance function switches.
    """
    if not (0.0 < rho <= _HALF_PI):
        raise BadParameters("rho must lie in (0, pi/2]")
    if isinstance(body, SpherePoint):
        return Cap(center=body, radius=rho)
    if isinstance(body, Cap):
        if rho <= body.radius + 1e-15:
            raise EmptyResult("rho does not exceed the cap radius")
        return Cap(center=body.center, radius=rho - body.radius)
    if isinstance(body, ConvexPolygon):
        caps = [(vec3(v), rho) for v in body.vertices]
        return caps_intersection(caps, tol)
    return _farthest_sublevel_body(body, rho, tol)


def caps_intersection(caps: list[tuple[np.ndarray, float]], tol: Tolerance = DEFAULT_TOL):
    """Body formed by intersecting caps (center, radius <= pi/2).

    Each cap circle is clipped against all other caps; surviving arcs are
    chained counterclockwise.  Raises EmptyResult when the intersection has
    no interior.
    """
    m = len(caps)
    centers = np.array([vec3(c) for c, _ in caps])
    radii = np.array([r for _, r in caps])

    # drop caps that contain another cap entirely (redundant constraints)
    keep = np.ones(m, dtype=bool)
    for i in range(m):
        for j in range(m):
            if i != j and keep[i] and keep[j]:
                d = distance(centers[i], centers[j])
                if d + radii[j] <= radii[i] + 1e-13:
                    keep[i] = False
                    break
    centers, radii = centers[keep], radii[keep]
    m = len(radii)
    if m == 0:
        raise EmptyResult("no caps")
    if m == 1:
        return Cap(center=SpherePoint.from_array(centers[0]), radius=float(radii[0]))

    from .sphere import tangent_frame

    arcs = []
    for i in range(m):
        e1, e2 = tangent_frame(centers[i])
        lo, hi = 0.0, _TWO_PI  # allowed interval(s) as [lo, hi] after shifting
        intervals = [(0.0, _TWO_PI)]
        for j in range(m):
            if j == i:
                continue
            # x(th) . c_j >= cos r_j  with x(th) on circle i
            A = math.cos(radii[i]) * float(centers[i] @ centers[j])
            B1 = math.sin(radii[i]) * float(e1 @ centers[j])
            B2 = math.sin(radii[i]) * float(e2 @ centers[j])
            R = math.hypot(B1, B2)
            C = math.cos(radii[j]) - A
            if R < 1e-15:
                if C > 0:
                    intervals = []
                    break
                continue
            ratio = C / R
            if ratio > 1.0:
                intervals = []
                break
            if ratio < -1.0:
                continue
            alpha = math.atan2(B2, B1)
            half = math.acos(ratio)
            new = []
            for a, b in intervals:
                new.extend(_interval_clip(a, b, alpha - half, alpha + half))
            intervals = new
            if not intervals:
                break
        # merge a split across the 0/2pi seam back into one arc
        if len(intervals) >= 2:
            intervals.sort()
            first, last = intervals[0], intervals[-1]
            if first[0] <= 1e-12 and last[1] >= _TWO_PI - 1e-12:
                intervals = intervals[1:-1] + [(last[0], first[1] + _TWO_PI)]
        for a, b in intervals:
            if b - a > 1e-10:
                arcs.append((i, a, b, e1, e2))
    if not arcs:
        raise EmptyResult("cap intersection has no interior")

    def pt(i, e1, e2, th):
        return math.cos(radii[i]) * centers[i] + math.sin(radii[i]) * (
            math.cos(th) * e1 + math.sin(th) * e2
        )

    # chain arcs head to tail
    pieces = []
    for i, a, b, e1, e2 in arcs:
        pieces.append((pt(i, e1, e2, a), pt(i, e1, e2, b), i))
    order = [0]
    used = {0}
    while len(order) < len(pieces):
        cur_end = pieces[order[-1]][1]
        best, best_d = None, math.inf
        for idx in range(len(pieces)):
            if idx in used:
                continue
            d = distance(cur_end, pieces[idx][0])
            if d < best_d:
                best, best_d = idx, d
        if best is None or best_d > 1e-6:
            raise EmptyResult("cap intersection boundary does not close")
        order.append(best)
        used.add(best)
    edges = []
    for idx in order:
        start, end, i = pieces[idx]
        edges.append(
            Edge(
                start=SpherePoint.from_array(start),
                end=SpherePoint.from_array(end),
                center=SpherePoint.from_array(centers[i]),
                radius=float(radii[i]),
            )
        )
    return DiskPolygon(edges=tuple(edges))


def _interval_clip(a: float, b: float, lo: float, hi: float) -> list[tuple[float, float]]:
    """Intersect [a, b] with the circular interval [lo, hi] (hi - lo < 2*pi)."""
    width = hi - lo
    lo = lo % _TWO_PI
    hi = lo + width
    out = []
    for shift in (-_TWO_PI, 0.0, _TWO_PI):
        s, e = max(a, lo + shift), min(b, hi + shift)
        if e > s:
            out.append((s, e))
    return out


def _farthest_sublevel_body(body: Body, rho: float, tol: Tolerance):
    """Exact boundary of {x : farthest distance into the body <= rho}.

    Walks directions about the minimax center; along each ray the farthest
    distance is convex, so the level crossing is found by bisection, and the
    binding feature (vertex, or arc center at reduced radius) identifies the
    circle the boundary lies on.  Pieces are merged per feature and joined
    at exact circle-circle intersections.
    """
    from .covering import min_enclosing_cap

    table = edge_table(body)
    cover = min_enclosing_cap(body, tol=tol)
    if cover.radius >= rho - 1e-12:
        raise EmptyResult("no cap of the requested radius covers the body")
    anchor = vec3(cover.center)
    from .sphere import tangent_frame

    f1, f2 = tangent_frame(anchor)

    def reach(x: np.ndarray) -> tuple[float, int, float]:
        d, j, th = table.farthest(x[None, :])
        return float(d[0]), int(j[0]), float(th[0])

    def feature_of(j: int, th: float):
        # an endpoint maximum binds the vertex; an interior maximum binds
        # the supporting circle at reduced radius
        if th <= 1e-9 or th >= table.span[j] - 1e-9:
            v = table.starts[j] if th <= 1e-9 else table.point_at(j, table.span[j])
            return ("vertex", v, rho)
        return ("arc", table.q[j], rho - table.s[j])

    def crossing(phi: float) -> tuple[np.ndarray, tuple]:
        d = math.cos(phi) * f1 + math.sin(phi) * f2
        lo, hi = 0.0, _HALF_PI
        # expand hi until outside (reach > rho); the level is crossed once
        t = 0.4
        while t < _HALF_PI and reach(math.cos(t) * anchor + math.sin(t) * d)[0] <= rho:
            t += 0.3
        hi = min(t, _HALF_PI)
        for _ in range(80):
            mid = 0.5 * (lo + hi)
            x = math.cos(mid) * anchor + math.sin(mid) * d
            if reach(x)[0] <= rho:
                lo = mid
            else:
                hi = mid
        x = math.cos(lo) * anchor + math.sin(lo) * d
        _, j, th = reach(x)
        return x, feature_of(j, th)

    m = 128
    phis = np.linspace(0.0, _TWO_PI, m, endpoint=False)
    probes = [crossing(p) for p in phis]

    def same(f1_, f2_) -> bool:
        return (
            f1_[0] == f2_[0]
            and distance(f1_[1], f2_[1]) < 1e-9
            and abs(f1_[2] - f2_[2]) < 1e-9
        )

    # rotate so a feature switch sits at index 0
    start = 0
    for i in range(m):
        if not same(probes[i][1], probes[(i - 1) % m][1]):
            start = i
            break
    else:
        f = probes[0][1]
        return Cap(center=SpherePoint.from_array(f[1]), radius=float(f[2]))
    probes = probes[start:] + probes[:start]

    groups = []
    for x, f in probes:
        if groups and same(groups[-1][0], f):
            groups[-1][1].append(x)
        else:
            groups.append((f, [x]))
    if len(groups) < 2:
        f = groups[0][0]
        return Cap(center=SpherePoint.from_array(f[1]), radius=float(f[2]))

    # joints: intersections of consecutive feature circles nearest the seam
    edges = []
    joints = []
    for gi in range(len(groups)):
        fa = groups[gi][0]
        fb = groups[(gi + 1) % len(groups)][0]
        seam = groups[gi][1][-1]
        joints.append(_circle_circle_point(fa[1], fa[2], fb[1], fb[2], seam))
    for gi in range(len(groups)):
        f = groups[gi][0]
        start_pt = joints[gi - 1]
        end_pt = joints[gi]
        edges.append(
            Edge(
                start=SpherePoint.from_array(start_pt),
                end=SpherePoint.from_array(end_pt),
                center=SpherePoint.from_array(f[1]),
                radius=float(f[2]),
            )
        )
    return DiskPolygon(edges=tuple(edges))


def _circle_circle_point(c1, r1, c2, r2, near: np.ndarray) -> np.ndarray:
    """Intersection point of two circles nearest to a seed point."""
    c1 = np.asarray(c1, float)
    c2 = np.asarray(c2, float)
    d = float(np.clip(c1 @ c2, -1.0, 1.0))
    n = np.cross(c1, c2)
    nn = float(np.linalg.norm(n))
    if nn < 1e-14:
        raise BadParameters("concentric feature circles cannot intersect")
    # solve x.c1 = cos r1, x.c2 = cos r2 in the (c1, c2, n) basis
    a1, a2 = math.cos(r1), math.cos(r2)
    u = (a1 - a2 * d) / (1 - d * d)
    v = (a2 - a1 * d) / (1 - d * d)
    base = u * c1 + v * c2
    rem = 1.0 - float(base @ base)
    if rem < -1e-12:
        raise BadParameters("feature circles do not intersect")
    w = math.sqrt(max(rem, 0.0)) / nn
    x1, x2 = base + w * n, base - w * n
    return x1 if distance(x1, near) <= distance(x2, near) else x2


# ---------------------------------------------------------------------------
# farthest point, diameter


def farthest_point(body: Body, x) -> tuple[float, SpherePoint]:
    """Maximum distance from x over the body, and an achieving point."""
    table = edge_table(body)
    d, j, th = table.farthest(vec3(x)[None, :])
    y = table.point_at(int(j[0]), float(th[0]))
    return float(d[0]), SpherePoint.from_array(y)


def _pair_candidates(table, i: int, j: int) -> list[tuple[int, float, int, float]]:
    """Candidate (edge, theta) pairs where the boundary-pair distance can peak."""
    out: list[tuple[int, float, int, float]] = []
    if i == j:
        if table.span[i] >= math.pi:
            th = 0.5 * (table.span[i] - math.pi)
            out.append((i, th, i, th + math.pi))
        return out
    qi, qj = table.q[i], table.q[j]
    dot = float(qi @ qj)
    if abs(dot) > 1.0 - 1e-12:
        return _aligned_pair_candidates(table, i, j, anti=dot < 0.0)
    # critical pairs lie on the great circle through both axes
    ti = qj - dot * qi
    ti /= np.linalg.norm(ti)
    tj = qi - dot * qj
    tj /= np.linalg.norm(tj)

    def theta_of(edge: int, p: np.ndarray) -> float:
        return math.atan2(float(p @ table.e2[edge]), float(p @ table.e1[edge])) % _TWO_PI

    for sgn_i in (-1.0, 1.0):
        xi = math.cos(table.s[i]) * qi + sgn_i * math.sin(table.s[i]) * ti
        th_i = theta_of(i, xi)
        if th_i > table.span[i] + 1e-9:
            continue
        for sgn_j in (-1.0, 1.0):
            yj = math.cos(table.s[j]) * qj + sgn_j * math.sin(table.s[j]) * tj
            th_j = theta_of(j, yj)
            if th_j > table.span[j] + 1e-9:
                continue
            out.append((i, th_i, j, th_j))
    return out


def _aligned_pair_candidates(table, i: int, j: int, anti: bool) -> list:
    """Max-distance pair of two arcs about a (anti-)common axis."""
    si = table.s[i]
    sj = (math.pi - table.s[j]) if anti else table.s[j]
    if si + sj >= math.pi - 1e-12:
        return []
    # azimuth of edge-j points measured in edge i's frame: a_j(psi) = d0 +/- psi
    d0 = math.atan2(float(table.e1[j] @ table.e2[i]), float(table.e1[j] @ table.e1[i]))
    sign = -1.0 if anti else 1.0
    # need theta - (d0 + sign*psi) = pi (mod 2pi)
    Si, Sj = table.span[i], table.span[j]
    lo = -sign * Sj if sign > 0 else 0.0
    hi = Si if sign > 0 else Si + Sj
    target = (math.pi + d0) % _TWO_PI
    for shift in (-_TWO_PI, 0.0, _TWO_PI):
        v = target + shift
        if lo - 1e-12 <= v <= hi + 1e-12:
            theta = min(max(v, 0.0), Si)
            psi = sign * (theta - v)
            psi = min(max(psi, 0.0), Sj)
            return [(i, theta, j, psi)]
    return []


def diameter(body: Body) -> tuple[float, tuple[SpherePoint, SpherePoint]]:
    """Largest distance between two body points, with an achieving pair.

    Vertex-to-boundary maxima are scanned exactly; arc-to-arc interior
    maxima are taken at their analytic critical alignments.
    """
    if isinstance(body, Cap):
        table = edge_table(body)
        p = table.point_at(0, 0.0)
        q = table.point_at(0, math.pi)
        return 2.0 * body.radius, (
            SpherePoint.from_array(p),
            SpherePoint.from_array(q),
        )
    table = edge_table(body)
    V = table.starts
    d, j, th = table.farthest(V)
    best = int(np.argmax(d))
    best_d = float(d[best])
    p_best = SpherePoint.from_array(V[best])
    q_best = SpherePoint.from_array(table.point_at(int(j[best]), float(th[best])))

    E = table.n_edges
    for i in range(E):
        for jj in range(i, E):
            for (ei, ti, ej, tj) in _pair_candidates(table, i, jj):
                x = table.point_at(ei, ti)
                y = table.point_at(ej, tj)
                dd = distance(x, y)
                if dd > best_d:
                    best_d = dd
                    p_best = SpherePoint.from_array(x)
                    q_best = SpherePoint.from_array(y)
    return best_d, (p_best, q_best)


# ---------------------------------------------------------------------------
# width


def _polar_body(body: Body) -> Body:
    return polar(body)


def _max_dist_to_body(target: Body, k: np.ndarray) -> tuple[float, SpherePoint]:
    table = edge_table(target)
    d, j, th = table.farthest(k[None, :])
    y = table.point_at(int(j[0]), float(th[0]))
    return float(d[0]), SpherePoint.from_array(y)


def width_at(
    body: Body, k, tol: Tolerance = DEFAULT_TOL
) -> tuple[float, CoSupportPair]:
    """Thickness of the narrowest supporting lune with one pole at k."""
    kv = vec3(k)
    pol = _polar_body(body)
    if boundary_distance(pol, kv) > max(tol.eps_alg, 1e-7):
        raise NotSupporting("pole is not on the polar boundary")
    d, k_star = _max_dist_to_body(pol, kv)
    return math.pi - d, CoSupportPair(k=SpherePoint.from_array(kv), k_star=k_star)


def width_profile(body: Body, n: int = 1024) -> WidthProfile:
    """Widths at n supporting poles spread over the polar boundary."""
    pol = _polar_body(body)
    poles = boundary_sample_array(pol, n)
    table = edge_table(pol)
    d, _, _ = table.farthest(poles)
    widths = math.pi - d
    i = int(np.argmin(widths))
    return WidthProfile(
        samples=tuple(
            (SpherePoint.from_array(p), float(w)) for p, w in zip(poles, widths)
        ),
        min_width=float(widths[i]),
        argmin_pole=SpherePoint.from_array(poles[i]),
    )


def thickness(body: Body, tol: Tolerance = DEFAULT_TOL) -> tuple[float, CoSupportPair]:
    """Smallest width over all supporting hemispheres.

    Equal to pi minus the polar body's diameter: the minimum over poles k
    of the narrowest-lune width is attained where the polar pair (k, k*)
    is farthest apart.
    """
    pol = _polar_body(body)
    d, (k, k_star) = diameter(pol)
    return math.pi - d, CoSupportPair(k=k, k_star=k_star)


def thickness_scan(body: Body, n_support: int = 2000, n_co: int = 2000) -> float:
    """Brute-force thickness oracle: dense lune scan over polar samples."""
    pol = _polar_body(body)
    A = boundary_sample_array(pol, n_support)
    B = boundary_sample_array(pol, n_co)
    G = A @ B.T
    i, j = np.unravel_index(int(np.argmin(G)), G.shape)
    d = distance(A[i], B[j])
    return math.pi - d


def is_constant_width(
    body: Body, w: float, tol: float = DEFAULT_TOL.eps_claim, n: int = 1024
) -> ConstantWidthReport:
    """Whether every sampled supporting width equals w within tol.

    Scans n poles over the polar boundary and refines around the worst one.
    """
    pol = _polar_body(body)
    table = edge_table(pol)
    poles = boundary_sample_array(pol, n)
    d, ej, th = table.farthest(poles)
    dev = np.abs((math.pi - d) - w)
    worst = int(np.argmax(dev))
    worst_dev = float(dev[worst])
    worst_pole = poles[worst]

    # refine within the polar edge carrying the worst pole
    t_pole, _ = table.radial(poles[worst][None, :])
    phis = np.arctan2(poles @ table.f2, poles @ table.f1) % _TWO_PI
    j = int(np.clip(np.searchsorted(table.breaks, phis[worst], side="right") - 1, 0, table.n_edges - 1))

    def dev_at(theta: float) -> float:
        p = table.point_at(j, theta)
        dd, _, _ = table.farthest(p[None, :])
        return -abs((math.pi - float(dd[0])) - w)

    span = table.span[j]
    theta0 = math.atan2(
        float(poles[worst] @ table.e2[j]), float(poles[worst] @ table.e1[j])
    ) % _TWO_PI
    if theta0 <= span + 1e-9:
        h = span / max(n // table.n_edges, 2)
        lo, hi = max(0.0, theta0 - h), min(span, theta0 + h)
        t_best, f_best = golden_section(dev_at, lo, hi, tol=1e-10)
        if -f_best > worst_dev:
            worst_dev = -f_best
            worst_pole = table.point_at(j, t_best)
    return ConstantWidthReport(
        passed=worst_dev <= tol,
        max_deviation=worst_dev,
        worst_pole=SpherePoint.from_array(worst_pole),
    )


def is_constant_diameter(
    body: Body, w: float, tol: float = DEFAULT_TOL.eps_claim, n: int = 512
) -> ConstantDiameterReport:
    """Whether every boundary point has a partner at distance w.

    Requires diameter(body) = w within tol; then checks that the farthest
    reach from each of n boundary samples attains w - tol.
    """
    d, _ = diameter(body)
    if abs(d - w) > tol:
        raise DiameterMismatch(f"diameter {d} differs from stated {w}")
    table = edge_table(body)
    pts = boundary_sample_array(body, n)
    reach, _, _ = table.farthest(pts)
    worst = int(np.argmin(reach))
    return ConstantDiameterReport(
        passed=float(reach[worst]) >= w - tol,
        worst_point=SpherePoint.from_array(pts[worst]),
        worst_reach=float(reach[worst]),
    )


# ---------------------------------------------------------------------------
# lune through a boundary point; reducedness certificate


def _lune_center_on_bd_k(k: np.ndarray, k_star: np.ndarray) -> np.ndarray:
    """Center of the bounding semicircle of lune H(k) cap H(k*) lying on bd H(k)."""
    c = k_star - float(k @ k_star) * k
    return c / np.linalg.norm(c)


def supporting_lune_through(
    body: Body, e, tol: Tolerance = DEFAULT_TOL, grid: int = 96
) -> tuple[float, float, CoSupportPair]:
    """Search supporting poles at e for a narrowest lune centered at e.

    Returns (gap, width, pair) minimizing over the normal cone at e the
    larger of |width - thickness| and the distance from e to the lune's
    bounding-semicircle center on bd(H(k)).
    """
    ev = vec3(e)
    thick, _ = thickness(body, tol)
    pol = _polar_body(body)
    pol_table = edge_table(pol)
    support = supporting_poles_at(body, ev, tol)
    if not support.is_arc:
        ks = [vec3(support.pole)]
    else:
        a, b = vec3(support.extremes[0]), vec3(support.extremes[1])
        ts = np.linspace(0.0, 1.0, grid)
        ang = distance(a, b)
        ks = []
        for t in ts:
            v = (math.sin((1 - t) * ang) * a + math.sin(t * ang) * b) / math.sin(ang)
            ks.append(v / np.linalg.norm(v))

    def gap_of(kv: np.ndarray) -> tuple[float, float, CoSupportPair]:
        d, j, th = pol_table.farthest(kv[None, :])
        k_star = pol_table.point_at(int(j[0]), float(th[0]))
        wid = math.pi - float(d[0])
        c = _lune_center_on_bd_k(kv, k_star)
        g = max(abs(wid - thick), distance(c, ev))
        return g, wid, CoSupportPair(
            k=SpherePoint.from_array(kv), k_star=SpherePoint.from_array(k_star)
        )

    best = None
    for kv in ks:
        g = gap_of(kv)
        if best is None or g[0] < best[0]:
            best = g
    if len(ks) > 2:
        a, b = vec3(support.extremes[0]), vec3(support.extremes[1])
        ang = distance(a, b)

        def f(t: float) -> float:
            v = (math.sin((1 - t) * ang) * a + math.sin(t * ang) * b) / math.sin(ang)
            return gap_of(v / np.linalg.norm(v))[0]

        i0 = int(np.argmin([gap_of(kv)[0] for kv in ks]))
        lo = max(0.0, (i0 - 1) / (grid - 1))
        hi = min(1.0, (i0 + 1) / (grid - 1))
        t_best, _ = golden_section(f, lo, hi, tol=1e-12)
        v = (math.sin((1 - t_best) * ang) * a + math.sin(t_best * ang) * b) / math.sin(ang)
        g = gap_of(v / np.linalg.norm(v))
        if g[0] < best[0]:
            best = g
    return best


def _cut_corner(poly: ConvexPolygon, idx: int, depth: float) -> ConvexPolygon:
    from .sphere import interpolate

    V = list(poly.vertices)
    n = len(V)
    prev_v, v, next_v = V[(idx - 1) % n], V[idx], V[(idx + 1) % n]
    d_prev = distance(v, prev_v)
    d_next = distance(v, next_v)
    a = interpolate(v, prev_v, min(depth / d_prev, 0.45))
    b = interpolate(v, next_v, min(depth / d_next, 0.45))
    W = V[:idx] + [a, b] + V[idx + 1 :]
    return ConvexPolygon(vertices=tuple(W))


def reducedness_certificate(
    poly: ConvexPolygon,
    tol: float = DEFAULT_TOL.eps_claim,
    cut_depth: float = 0.02,
) -> CertificateReport:
    """Two-gate numeric certificate that a polygon is consistent with reducedness.

    NECESSARY: through every vertex there is a supporting lune of thickness
    equal to the polygon's, centered at the vertex (within tol).
    FALSIFICATION: truncating any corner strictly decreases the thickness.
    Passing both yields "certified-consistent-with-reduced"; failing the
    necessary gate yields "not reduced".
    """
    if not isinstance(poly, ConvexPolygon):
        raise BadParameters("certificate applies to geodesic polygons only")
    thick, _ = thickness(poly)
    if thick >= _HALF_PI:
        raise ThicknessTooLarge("certificate requires thickness below pi/2")
    results = []
    for idx, v in enumerate(poly.vertices):
        gap, _, _ = supporting_lune_through(poly, v)
        cut = _cut_corner(poly, idx, cut_depth)
        thick_cut, _ = thickness(cut)
        decrease = thick - thick_cut
        results.append(
            VertexCertificate(
                vertex=v,
                lune_gap=gap,
                cut_decrease=decrease,
                necessary_ok=gap <= tol,
                falsification_ok=decrease >= DEFAULT_TOL.eps_claim,
            )
        )
    return CertificateReport(thickness=thick, vertices=tuple(results))


def inscribed_touching_ball(
    body: Body, p, tol: Tolerance = DEFAULT_TOL
) -> Cap:
    """The unique inscribed ball touching a constant-width body at p.

    Requires constant width w > pi/2; the ball has radius w - pi/2 and its
    center lies at that distance from p toward the supporting pole.
    """
    w, _ = thickness(body, tol)
    if w <= _HALF_PI:
        raise NotConstantWidthOverHalfPi(f"width {w} is not above pi/2")
    if not is_constant_width(body, w, tol=tol.eps_claim).passed:
        raise NotConstantWidthOverHalfPi("body is not of constant width")
    pv = vec3(p)
    if boundary_distance(body, pv) > 10 * max(tol.eps_alg, 1e-9):
        raise NotOnBoundary("point is not on the body boundary")
    support = supporting_poles_at(body, pv, tol)
    k = vec3(support.pole)
    tau = w - _HALF_PI
    center = math.cos(tau) * pv + math.sin(tau) * k
    return Cap(center=SpherePoint.from_array(center), radius=tau)
