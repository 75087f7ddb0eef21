"""Pure numpy implementations of the hot kernels.

Mirrors (and is the fallback for) the compiled extension in ``_core.pyx``.
Every function is vectorized but allocates intermediates; the compiled
version streams the same arithmetic in C loops.

Edge tables describe a boundary as circle pieces: edge ``j`` is the set of
points  x(theta) = cos(s_j) q_j + sin(s_j)(cos(theta) e1_j + sin(theta) e2_j)
for theta in [0, span_j], traversed counterclockwise about q_j.  Geodesic
edges have s_j = pi/2.
"""

from __future__ import annotations

import numpy as np

BACKEND = "pure"

_TWO_PI = 2.0 * np.pi


def farthest_on_edges(q, s, e1, e2, span, X):
    """Farthest boundary point from each query point.

    Returns (dist, edge_idx, theta): for each row x of X the spherical
    distance to the farthest point of the edge table, the edge it lies on
    and its angle parameter.  Exact: per edge the maximum is attained at an
    endpoint or at the analytic far point on the circle.
    """
    X = np.atleast_2d(np.asarray(X, dtype=float))
    n = X.shape[0]
    cs, sn = np.cos(s), np.sin(s)

    xq = X @ q.T                          # (n, E)
    u = X @ e1.T
    v = X @ e2.T

    dot0 = cs * xq + sn * u
    dot1 = cs * xq + sn * (u * np.cos(span) + v * np.sin(span))
    best_dot = np.minimum(dot0, dot1)
    best_theta = np.where(dot0 <= dot1, 0.0, span[None, :])

    # interior candidate: azimuth pointing away from the query point
    h = np.hypot(u, v)
    theta_far = np.arctan2(-v, -u) % _TWO_PI
    in_range = theta_far <= span[None, :]
    dot_far = cs * xq - sn * h
    use_far = in_range & (dot_far < best_dot)
    best_dot = np.where(use_far, dot_far, best_dot)
    best_theta = np.where(use_far, theta_far, best_theta)

    eidx = np.argmin(best_dot, axis=1)
    rows = np.arange(n)
    theta = best_theta[rows, eidx]

    # recompute the winning distance stably via atan2(|x x y|, x.y)
    y = (
        np.cos(s[eidx])[:, None] * q[eidx]
        + np.sin(s[eidx])[:, None]
        * (np.cos(theta)[:, None] * e1[eidx] + np.sin(theta)[:, None] * e2[eidx])
    )
    cross = np.cross(X, y)
    dist = np.arctan2(np.linalg.norm(cross, axis=1), np.einsum("ij,ij->i", X, y))
    return dist, eidx, theta


def radial_crossings(q, s, e1, e2, span, anchor, f1, f2, breaks, X):
    """Boundary distance along the ray from the anchor through each point.

    ``breaks`` are the unwrapped vertex azimuths about the anchor
    (breaks[0] = 0, breaks[E] = 2*pi); the azimuth of each query point
    selects the edge its anchor ray crosses.  Returns (t, r): the boundary
    crossing distance and the query point's own distance from the anchor.
    A point is inside the body iff r <= t (up to tolerance).
    """
    X = np.atleast_2d(np.asarray(X, dtype=float))
    n = X.shape[0]
    E = len(s)

    pa = X @ anchor
    p1 = X @ f1
    p2 = X @ f2
    r = np.arctan2(np.hypot(p1, p2), pa)
    phi = np.arctan2(p2, p1) % _TWO_PI

    eidx = np.clip(np.searchsorted(breaks, phi, side="right") - 1, 0, E - 1)

    t = np.full(n, np.nan)
    d = np.cos(phi)[:, None] * f1[None, :] + np.sin(phi)[:, None] * f2[None, :]

    def _solve(idx, j):
        A = float(anchor @ q[j])
        B = d[idx] @ q[j]
        C = np.cos(s[j])
        R = np.hypot(A, B)
        ok = R >= abs(C) - 1e-15
        beta = np.arccos(np.clip(C / np.where(R > 0, R, 1.0), -1.0, 1.0))
        alpha = np.arctan2(B, A)
        out = np.full(idx.shape, np.nan)
        for cand in (alpha - beta, alpha + beta):
            tc = cand % _TWO_PI
            y = np.cos(tc)[:, None] * anchor[None, :] + np.sin(tc)[:, None] * d[idx]
            th = np.arctan2(y @ e2[j], y @ e1[j]) % _TWO_PI
            on_edge = (th <= span[j] + 1e-9) | (th >= _TWO_PI - 1e-9)
            good = ok & on_edge & (tc > 1e-12) & (tc < np.pi - 1e-12)
            take = good & (np.isnan(out) | (tc < out))
            out[take] = tc[take]
        return out

    for j in np.unique(eidx):
        sel = np.where(eidx == j)[0]
        tj = _solve(sel, j)
        t[sel] = tj

    # unresolved points (azimuth ties at vertices): try neighbor edges
    bad = np.where(np.isnan(t))[0]
    for i in bad:
        for j in ((eidx[i] - 1) % E, (eidx[i] + 1) % E):
            tj = _solve(np.array([i]), j)
            if not np.isnan(tj[0]):
                t[i] = tj[0]
                break
        else:
            # degenerate ray through a vertex: use the vertex distance
            j = eidx[i]
            vtx = np.cos(s[j]) * q[j] + np.sin(s[j]) * e1[j]
            t[i] = np.arccos(np.clip(anchor @ vtx, -1.0, 1.0))
    return t, r


def min_cap_of_points(P):
    """Smallest enclosing cap via the three-point covering identity.

    The radius of the smallest cap covering a finite set equals the largest
    over all point triples of the triple's own minimal covering radius, and
    the maximizing triple determines the cap.  O(m^3) over all triples,
    enumerated flat in chunks; deterministic.  Returns
    (center, radius, support_indices).
    """
    P = np.asarray(P, dtype=float)
    m = P.shape[0]
    if m == 1:
        return P[0].copy(), 0.0, (0,)

    G = np.clip(P @ P.T, -1.0, 1.0)
    D = np.arccos(G)
    if m == 2:
        c = P[0] + P[1]
        c /= np.linalg.norm(c)
        return c, 0.5 * D[0, 1], (0, 1)

    # flat triple ids: pair (i < j) followed by every k > j
    iu, ju = np.triu_indices(m, k=1)
    counts = m - 1 - ju
    offsets = np.concatenate([[0], np.cumsum(counts)])
    total = int(offsets[-1])

    best_val = -1.0
    best = None
    chunk = 400_000
    for lo in range(0, total, chunk):
        ids = np.arange(lo, min(lo + chunk, total))
        pid = np.searchsorted(offsets, ids, side="right") - 1
        i, j = iu[pid], ju[pid]
        k = j + 1 + (ids - offsets[pid])

        dij, dik, djk = D[i, j], D[i, k], D[j, k]
        lng = np.maximum(dij, np.maximum(dik, djk))
        case_ij = dij >= lng - 1e-15
        case_ik = ~case_ij & (dik >= lng - 1e-15)

        a = np.where(case_ij, i, np.where(case_ik, i, j))
        b = np.where(case_ij, j, k)
        o = np.where(case_ij, k, np.where(case_ik, j, i))
        cen = P[a] + P[b]
        cen /= np.linalg.norm(cen, axis=1)[:, None]
        covered = np.einsum("ij,ij->i", cen, P[o]) >= np.cos(0.5 * lng) - 1e-14

        val = np.where(covered, 0.5 * lng, -1.0)
        uc = np.flatnonzero(~covered)
        if uc.size:
            nrm = np.cross(P[i[uc]] - P[j[uc]], P[j[uc]] - P[k[uc]])
            ln = np.linalg.norm(nrm, axis=1)
            ln[ln == 0.0] = 1.0
            nrm /= ln[:, None]
            sgn = np.sign(np.einsum("ij,ij->i", nrm, P[i[uc]]))
            sgn[sgn == 0.0] = 1.0
            nrm *= sgn[:, None]
            val[uc] = np.arccos(
                np.clip(np.einsum("ij,ij->i", nrm, P[i[uc]]), -1.0, 1.0)
            )
            cen[uc] = nrm

        t = int(np.argmax(val))
        if val[t] > best_val:
            best_val = float(val[t])
            if covered[t]:
                sup = (int(a[t]), int(b[t]))
            else:
                sup = (int(i[t]), int(j[t]), int(k[t]))
            best = (cen[t].copy(), best_val, sup)

    return best
