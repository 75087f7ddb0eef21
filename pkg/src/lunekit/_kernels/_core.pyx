# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; semantics mirror ``pure.py`` exactly.

Edge tables describe boundaries as circle pieces
x(theta) = cos(s) q + sin(s)(cos(theta) e1 + sin(theta) e2), theta in
[0, span], counterclockwise about q; geodesics have s = pi/2.
"""

from libc.math cimport NAN, atan2, acos, cos, fabs, fmod, hypot, pi, sin, sqrt

import numpy as np

BACKEND = "compiled"

cdef double TWO_PI = 2.0 * pi


cdef inline double _clip1(double x) nogil:
    if x > 1.0:
        return 1.0
    if x < -1.0:
        return -1.0
    return x


def farthest_on_edges(q, s, e1, e2, span, X):
    """Farthest boundary point from each query point: (dist, edge, theta)."""
    cdef double[:, ::1] qv = np.ascontiguousarray(q, dtype=np.float64)
    cdef double[::1] sv = np.ascontiguousarray(s, dtype=np.float64)
    cdef double[:, ::1] e1v = np.ascontiguousarray(e1, dtype=np.float64)
    cdef double[:, ::1] e2v = np.ascontiguousarray(e2, dtype=np.float64)
    cdef double[::1] spv = np.ascontiguousarray(span, dtype=np.float64)
    Xa = np.ascontiguousarray(np.atleast_2d(np.asarray(X, dtype=np.float64)))
    cdef double[:, ::1] Xv = Xa
    cdef Py_ssize_t n = Xv.shape[0], E = sv.shape[0]

    dist = np.empty(n, dtype=np.float64)
    eidx = np.empty(n, dtype=np.int64)
    theta = np.empty(n, dtype=np.float64)
    cdef double[::1] dv = dist
    cdef long long[::1] ev = eidx
    cdef double[::1] tv = theta

    cdef Py_ssize_t i, j, bj
    cdef double cs, sn, xq, u, v, d0, d1, h, thf, dotf, best, btheta, cl, sl
    cdef double yx, yy, yz, cx, cy, cz, dd
    for i in range(n):
        best = 2.0
        bj = 0
        btheta = 0.0
        for j in range(E):
            cs = cos(sv[j])
            sn = sin(sv[j])
            xq = Xv[i, 0] * qv[j, 0] + Xv[i, 1] * qv[j, 1] + Xv[i, 2] * qv[j, 2]
            u = Xv[i, 0] * e1v[j, 0] + Xv[i, 1] * e1v[j, 1] + Xv[i, 2] * e1v[j, 2]
            v = Xv[i, 0] * e2v[j, 0] + Xv[i, 1] * e2v[j, 1] + Xv[i, 2] * e2v[j, 2]
            cl = cos(spv[j])
            sl = sin(spv[j])
            d0 = cs * xq + sn * u
            d1 = cs * xq + sn * (u * cl + v * sl)
            if d0 <= d1:
                if d0 < best:
                    best = d0
                    bj = j
                    btheta = 0.0
            else:
                if d1 < best:
                    best = d1
                    bj = j
                    btheta = spv[j]
            h = hypot(u, v)
            thf = fmod(atan2(-v, -u), TWO_PI)
            if thf < 0:
                thf += TWO_PI
            if thf <= spv[j]:
                dotf = cs * xq - sn * h
                if dotf < best:
                    best = dotf
                    bj = j
                    btheta = thf
        cs = cos(sv[bj])
        sn = sin(sv[bj])
        cl = cos(btheta)
        sl = sin(btheta)
        yx = cs * qv[bj, 0] + sn * (cl * e1v[bj, 0] + sl * e2v[bj, 0])
        yy = cs * qv[bj, 1] + sn * (cl * e1v[bj, 1] + sl * e2v[bj, 1])
        yz = cs * qv[bj, 2] + sn * (cl * e1v[bj, 2] + sl * e2v[bj, 2])
        cx = Xv[i, 1] * yz - Xv[i, 2] * yy
        cy = Xv[i, 2] * yx - Xv[i, 0] * yz
        cz = Xv[i, 0] * yy - Xv[i, 1] * yx
        dd = Xv[i, 0] * yx + Xv[i, 1] * yy + Xv[i, 2] * yz
        dv[i] = atan2(sqrt(cx * cx + cy * cy + cz * cz), dd)
        ev[i] = bj
        tv[i] = btheta
    return dist, eidx, theta


def radial_crossings(q, s, e1, e2, span, anchor, f1, f2, breaks, X):
    """Boundary crossing distance t along the anchor ray through each point,
    and the point's own anchor distance r."""
    cdef double[:, ::1] qv = np.ascontiguousarray(q, dtype=np.float64)
    cdef double[::1] sv = np.ascontiguousarray(s, dtype=np.float64)
    cdef double[:, ::1] e1v = np.ascontiguousarray(e1, dtype=np.float64)
    cdef double[:, ::1] e2v = np.ascontiguousarray(e2, dtype=np.float64)
    cdef double[::1] spv = np.ascontiguousarray(span, dtype=np.float64)
    cdef double[::1] av = np.ascontiguousarray(anchor, dtype=np.float64)
    cdef double[::1] f1v = np.ascontiguousarray(f1, dtype=np.float64)
    cdef double[::1] f2v = np.ascontiguousarray(f2, dtype=np.float64)
    cdef double[::1] bv = np.ascontiguousarray(breaks, dtype=np.float64)
    Xa = np.ascontiguousarray(np.atleast_2d(np.asarray(X, dtype=np.float64)))
    cdef double[:, ::1] Xv = Xa
    cdef Py_ssize_t n = Xv.shape[0], E = sv.shape[0]

    t_out = np.empty(n, dtype=np.float64)
    r_out = np.empty(n, dtype=np.float64)
    cdef double[::1] tv = t_out
    cdef double[::1] rv = r_out

    cdef Py_ssize_t i, j, lo_i, hi_i, mid, trial
    cdef double pa, p1, p2, phi, dx, dy, dz, t, vtx_x, vtx_y, vtx_z, cs, sn
    cdef Py_ssize_t jj
    for i in range(n):
        pa = Xv[i, 0] * av[0] + Xv[i, 1] * av[1] + Xv[i, 2] * av[2]
        p1 = Xv[i, 0] * f1v[0] + Xv[i, 1] * f1v[1] + Xv[i, 2] * f1v[2]
        p2 = Xv[i, 0] * f2v[0] + Xv[i, 1] * f2v[1] + Xv[i, 2] * f2v[2]
        rv[i] = atan2(hypot(p1, p2), pa)
        phi = fmod(atan2(p2, p1), TWO_PI)
        if phi < 0:
            phi += TWO_PI
        # searchsorted(breaks, phi, side='right') - 1
        lo_i = 0
        hi_i = E + 1
        while lo_i < hi_i:
            mid = (lo_i + hi_i) // 2
            if bv[mid] <= phi:
                lo_i = mid + 1
            else:
                hi_i = mid
        j = lo_i - 1
        if j < 0:
            j = 0
        if j > E - 1:
            j = E - 1
        dx = cos(phi) * f1v[0] + sin(phi) * f2v[0]
        dy = cos(phi) * f1v[1] + sin(phi) * f2v[1]
        dz = cos(phi) * f1v[2] + sin(phi) * f2v[2]
        t = _solve_edge(qv, sv, e1v, e2v, spv, av, j, dx, dy, dz)
        if t != t:  # NaN: try neighbours, then the vertex distance
            for trial in range(2):
                jj = (j - 1 + E) % E if trial == 0 else (j + 1) % E
                t = _solve_edge(qv, sv, e1v, e2v, spv, av, jj, dx, dy, dz)
                if t == t:
                    break
            if t != t:
                cs = cos(sv[j])
                sn = sin(sv[j])
                vtx_x = cs * qv[j, 0] + sn * e1v[j, 0]
                vtx_y = cs * qv[j, 1] + sn * e1v[j, 1]
                vtx_z = cs * qv[j, 2] + sn * e1v[j, 2]
                t = acos(_clip1(av[0] * vtx_x + av[1] * vtx_y + av[2] * vtx_z))
        tv[i] = t
    return t_out, r_out


cdef double _solve_edge(
    double[:, ::1] qv, double[::1] sv, double[:, ::1] e1v, double[:, ::1] e2v,
    double[::1] spv, double[::1] av, Py_ssize_t j,
    double dx, double dy, double dz,
) noexcept nogil:
    cdef double A, B, C, R, beta, alpha, tc, best, yx, yy, yz, th
    cdef int c
    A = av[0] * qv[j, 0] + av[1] * qv[j, 1] + av[2] * qv[j, 2]
    B = dx * qv[j, 0] + dy * qv[j, 1] + dz * qv[j, 2]
    C = cos(sv[j])
    R = hypot(A, B)
    if R < fabs(C) - 1e-15:
        return NAN
    beta = acos(_clip1(C / (R if R > 0 else 1.0)))
    alpha = atan2(B, A)
    best = NAN
    for c in range(2):
        tc = alpha - beta if c == 0 else alpha + beta
        tc = fmod(tc, TWO_PI)
        if tc < 0:
            tc += TWO_PI
        if tc <= 1e-12 or tc >= pi - 1e-12:
            continue
        yx = cos(tc) * av[0] + sin(tc) * dx
        yy = cos(tc) * av[1] + sin(tc) * dy
        yz = cos(tc) * av[2] + sin(tc) * dz
        th = atan2(
            yx * e2v[j, 0] + yy * e2v[j, 1] + yz * e2v[j, 2],
            yx * e1v[j, 0] + yy * e1v[j, 1] + yz * e1v[j, 2],
        )
        th = fmod(th, TWO_PI)
        if th < 0:
            th += TWO_PI
        if th <= spv[j] + 1e-9 or th >= TWO_PI - 1e-9:
            if best != best or tc < best:
                best = tc
    return best


def min_cap_of_points(P):
    """Smallest enclosing cap of a point set: (center, radius, support).

    The radius equals the largest over all triples of the triple's minimal
    covering radius; the maximizing triple determines the cap.
    """
    Pa = np.ascontiguousarray(np.asarray(P, dtype=np.float64))
    cdef double[:, ::1] Pv = Pa
    cdef Py_ssize_t m = Pv.shape[0]
    if m == 1:
        return Pa[0].copy(), 0.0, (0,)

    G = np.clip(Pa @ Pa.T, -1.0, 1.0)
    D = np.arccos(G)
    cdef double[:, ::1] Dv = D
    cdef Py_ssize_t i, j, k
    cdef double dij, dik, djk, lng, half, mx0, mx1, mx2, nrm
    cdef double cenx, ceny, cenz, ox, oy, oz, rad, val
    cdef double best_val = -1.0
    cdef double bx = 0, by = 0, bz = 0
    cdef Py_ssize_t s0 = 0, s1 = 0, s2 = -1
    cdef int which, covered

    if m == 2:
        cenx = Pv[0, 0] + Pv[1, 0]
        ceny = Pv[0, 1] + Pv[1, 1]
        cenz = Pv[0, 2] + Pv[1, 2]
        nrm = sqrt(cenx * cenx + ceny * ceny + cenz * cenz)
        return (
            np.array([cenx / nrm, ceny / nrm, cenz / nrm]),
            0.5 * Dv[0, 1],
            (0, 1),
        )

    for i in range(m):
        for j in range(i + 1, m):
            dij = Dv[i, j]
            for k in range(j + 1, m):
                dik = Dv[i, k]
                djk = Dv[j, k]
                lng = dij
                which = 0
                if dik > lng:
                    lng = dik
                    which = 1
                if djk > lng:
                    lng = djk
                    which = 2
                if which == 0:
                    cenx = Pv[i, 0] + Pv[j, 0]
                    ceny = Pv[i, 1] + Pv[j, 1]
                    cenz = Pv[i, 2] + Pv[j, 2]
                    ox = Pv[k, 0]
                    oy = Pv[k, 1]
                    oz = Pv[k, 2]
                elif which == 1:
                    cenx = Pv[i, 0] + Pv[k, 0]
                    ceny = Pv[i, 1] + Pv[k, 1]
                    cenz = Pv[i, 2] + Pv[k, 2]
                    ox = Pv[j, 0]
                    oy = Pv[j, 1]
                    oz = Pv[j, 2]
                else:
                    cenx = Pv[j, 0] + Pv[k, 0]
                    ceny = Pv[j, 1] + Pv[k, 1]
                    cenz = Pv[j, 2] + Pv[k, 2]
                    ox = Pv[i, 0]
                    oy = Pv[i, 1]
                    oz = Pv[i, 2]
                nrm = sqrt(cenx * cenx + ceny * ceny + cenz * cenz)
                if nrm > 0:
                    cenx /= nrm
                    ceny /= nrm
                    cenz /= nrm
                covered = (
                    cenx * ox + ceny * oy + cenz * oz >= cos(0.5 * lng) - 1e-14
                )
                if covered:
                    val = 0.5 * lng
                else:
                    val, cenx, ceny, cenz = _circumcap(Pv, i, j, k)
                if val > best_val:
                    best_val = val
                    bx = cenx
                    by = ceny
                    bz = cenz
                    if covered:
                        if which == 0:
                            s0, s1, s2 = i, j, -1
                        elif which == 1:
                            s0, s1, s2 = i, k, -1
                        else:
                            s0, s1, s2 = j, k, -1
                    else:
                        s0, s1, s2 = i, j, k
    if s2 < 0:
        return np.array([bx, by, bz]), best_val, (s0, s1)
    return np.array([bx, by, bz]), best_val, (s0, s1, s2)


cdef (double, double, double, double) _circumcap(
    double[:, ::1] Pv, Py_ssize_t i, Py_ssize_t j, Py_ssize_t k
) noexcept nogil:
    cdef double ax, ay, az, bx, by, bz, nx, ny, nz, nrm, dot
    ax = Pv[i, 0] - Pv[j, 0]
    ay = Pv[i, 1] - Pv[j, 1]
    az = Pv[i, 2] - Pv[j, 2]
    bx = Pv[j, 0] - Pv[k, 0]
    by = Pv[j, 1] - Pv[k, 1]
    bz = Pv[j, 2] - Pv[k, 2]
    nx = ay * bz - az * by
    ny = az * bx - ax * bz
    nz = ax * by - ay * bx
    nrm = sqrt(nx * nx + ny * ny + nz * nz)
    if nrm == 0:
        nrm = 1.0
    nx /= nrm
    ny /= nrm
    nz /= nrm
    dot = nx * Pv[i, 0] + ny * Pv[i, 1] + nz * Pv[i, 2]
    if dot < 0:
        nx = -nx
        ny = -ny
        nz = -nz
        dot = -dot
    return acos(_clip1(dot)), nx, ny, nz
