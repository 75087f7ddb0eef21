"""Acceptance gate: one test per numbered criterion, at stated tolerances.

Run with ``pytest -s tests/test_acceptance.py`` to see one line per
criterion.  Criterion 6 is implemented exactly as stated and is expected to
fail: the stated target pi/2 - w contradicts the width definitions the rest
of the criteria pin down; the dual of a constant-width-w body measures
constant width pi - w (see the criterion's printed line for the numbers).
"""

import math
import time

import numpy as np
import pytest

from lunekit.bodies import (
    boundary_sample_array,
    edge_table,
    make_cap,
    make_quarter_disk,
    make_regular_reduced_polygon,
    make_reuleaux_odd_gon,
    rotate_body,
)
from lunekit.covering import dekster_radius, min_enclosing_cap, reduced_cover_radius
from lunekit.sphere import SpherePoint, distance, random_rotation
from lunekit.verify import run_suite
from lunekit.width import (
    diameter,
    inscribed_touching_ball,
    is_constant_diameter,
    polar,
    thickness,
    thickness_scan,
    width_profile,
)

NORTH = SpherePoint(0, 0, 1)
HALF_PI = math.pi / 2


def report(num, name, ok, detail, elapsed, budget):
    flag = "PASS" if ok else "FAIL"
    print(f"[criterion {num:02d}] {flag} {name}: {detail} ({elapsed:.2f}s / {budget:.0f}s)")


def test_criterion_01_lune_thickness_identity():
    t0 = time.time()
    rng = np.random.default_rng(1)
    n = 100_000
    G = rng.normal(size=(n + 20_000, 3))
    G /= np.linalg.norm(G, axis=1)[:, None]
    H = rng.normal(size=(n + 20_000, 3))
    H /= np.linalg.norm(H, axis=1)[:, None]
    dots = np.einsum("ij,ij->i", G, H)
    keep = np.abs(dots) < 1.0 - 1e-6
    G, H, dots = G[keep][:n], H[keep][:n], dots[keep][:n]
    assert len(G) == n
    cross = np.cross(G, H)
    d = np.arctan2(np.linalg.norm(cross, axis=1), dots)
    thick = np.pi - d

    # center-based oracle: distance between the two semicircle centers
    s = np.sqrt(1.0 - dots**2)
    c_gh = (H - dots[:, None] * G) / s[:, None]
    c_hg = (G - dots[:, None] * H) / s[:, None]
    oracle = np.arctan2(
        np.linalg.norm(np.cross(c_gh, c_hg), axis=1),
        np.einsum("ij,ij->i", c_gh, c_hg),
    )
    worst = float(np.max(np.abs(thick - oracle)))
    elapsed = time.time() - t0
    report(1, "lune thickness identity", worst < 1e-9 and elapsed < 1, f"worst {worst:.2e} over {n} lunes", elapsed, 1)
    assert worst < 1e-9
    assert elapsed < 1.0


def test_criterion_02_ball_width():
    t0 = time.time()
    worst = 0.0
    for rho in (0.2, math.pi / 6, 0.7, math.pi / 4, 1.2, HALF_PI - 0.01):
        t, _ = thickness(make_cap(NORTH, rho))
        worst = max(worst, abs(t - 2 * rho))
    elapsed = time.time() - t0
    report(2, "ball width = 2*radius", worst < 1e-7 and elapsed < 1, f"worst {worst:.2e}", elapsed, 1)
    assert worst < 1e-7
    assert elapsed < 1.0


def test_criterion_03_reuleaux_constancy():
    t0 = time.time()
    worst_w, worst_d = 0.0, 0.0
    for n in (3, 5):
        for w in (0.6, 1.0, HALF_PI):
            body = make_reuleaux_odd_gon(NORTH, n, w)
            prof = width_profile(body, 1024)
            dev = max(abs(wd - w) for _, wd in prof.samples)
            worst_w = max(worst_w, dev)
            d, _ = diameter(body)
            worst_d = max(worst_d, abs(d - w))
    elapsed = time.time() - t0
    ok = worst_w < 1e-6 and worst_d < 1e-6 and elapsed < 10
    report(3, "reuleaux constancy", ok, f"width dev {worst_w:.2e}, diam dev {worst_d:.2e}", elapsed, 10)
    assert worst_w < 1e-6
    assert worst_d < 1e-6
    assert elapsed < 10.0


def test_criterion_04_dekster_sharpness():
    t0 = time.time()
    worst = 0.0
    for w in (0.5, 1.0, HALF_PI):
        res = min_enclosing_cap(make_reuleaux_odd_gon(NORTH, 3, w))
        worst = max(worst, abs(res.radius - dekster_radius(w)))
    elapsed = time.time() - t0
    report(4, "covering radius sharp on reuleaux", worst < 1e-6 and elapsed < 5, f"worst {worst:.2e}", elapsed, 5)
    assert worst < 1e-6
    assert elapsed < 5.0


def test_criterion_05_quarter_disk_extremals():
    t0 = time.time()
    worst = 0.0
    for delta in (0.4, 0.8, 1.2):
        qd = make_quarter_disk(NORTH, delta)
        t, _ = thickness(qd)
        d, _ = diameter(qd)
        r = min_enclosing_cap(qd).radius
        worst = max(
            worst,
            abs(t - delta),
            abs(d - math.acos(math.cos(delta) ** 2)),
            abs(r - reduced_cover_radius(delta)),
        )
    elapsed = time.time() - t0
    report(5, "quarter-disk extremal values", worst < 1e-6 and elapsed < 5, f"worst {worst:.2e}", elapsed, 5)
    assert worst < 1e-6
    assert elapsed < 5.0


@pytest.mark.xfail(
    strict=True,
    reason=(
        "stated target pi/2 - w is inconsistent with the width definitions: "
        "the polar dual of a constant-width-w body has constant width pi - w "
        "(checked against an independent dense lune scan); kept as stated"
    ),
)
def test_criterion_06_polar_reciprocity_as_stated():
    t0 = time.time()
    worst = 0.0
    values = []
    for w in (0.5, 0.9, 1.2):
        t, _ = thickness(polar(make_reuleaux_odd_gon(NORTH, 3, w)))
        values.append((w, t, HALF_PI - w, math.pi - w))
        worst = max(worst, abs(t - (HALF_PI - w)))
    elapsed = time.time() - t0
    detail = "; ".join(
        f"w={w}: measured {t:.6f}, stated target {st:.6f}, pi-w {alt:.6f}"
        for w, t, st, alt in values
    )
    report(6, "polar reciprocity (as stated)", worst < 1e-5, detail, elapsed, 5)
    assert worst < 1e-5
    assert elapsed < 5.0


def test_criterion_06_supplement_measured_duality():
    # companion record: the measured duality, pinned at the same tolerance
    t0 = time.time()
    worst = 0.0
    for w in (0.5, 0.9, 1.2):
        t, _ = thickness(polar(make_reuleaux_odd_gon(NORTH, 3, w)))
        worst = max(worst, abs(t - (math.pi - w)))
    elapsed = time.time() - t0
    report(6, "polar duality, measured relation pi - w", worst < 1e-5, f"worst {worst:.2e}", elapsed, 5)
    assert worst < 1e-5
    assert elapsed < 5.0


def test_criterion_07_boundary_centered_cover():
    from lunekit.covering import boundary_centered_cover

    t0 = time.time()
    worst = -math.inf
    for n in (3, 5, 7):
        for delta in (0.3, 0.7, 1.1, 1.4):
            poly = make_regular_reduced_polygon(NORTH, n, delta)
            _, radius = boundary_centered_cover(poly)
            worst = max(worst, radius - delta)
    elapsed = time.time() - t0
    ok = worst <= 1e-6 and elapsed < 20
    report(7, "cover centered at a boundary point", ok, f"worst excess {worst:.2e}", elapsed, 20)
    assert worst <= 1e-6
    assert elapsed < 20.0


def test_criterion_08_minimal_lune_suites():
    t0 = time.time()
    main = run_suite("T_I_main", {"cases": 20}, seed=1)
    seg = run_suite("T_I_segment", {"cases": 20}, seed=1)
    elapsed = time.time() - t0
    ok = main.passed and seg.passed and main.worst_violation <= 1e-5 and seg.worst_violation <= 1e-6 and elapsed < 30
    report(
        8,
        "adjacent minimal lunes + edge centers",
        ok,
        f"arc equality worst {main.worst_violation:.2e}, center-on-edge worst {seg.worst_violation:.2e}",
        elapsed,
        30,
    )
    assert main.passed and main.worst_violation <= 1e-5
    assert seg.passed and seg.worst_violation <= 1e-6
    assert elapsed < 30.0


def test_criterion_09_constant_width_diameter():
    t0 = time.time()
    ok = True
    for w in (0.8, HALF_PI, 1.8):
        for body in (make_cap(NORTH, w / 2), make_reuleaux_odd_gon(NORTH, 3, w)):
            rep = is_constant_diameter(body, w, tol=1e-5)
            ok = ok and rep.passed
    qd = make_quarter_disk(NORTH, 0.9)
    d, _ = diameter(qd)
    negative = not is_constant_diameter(qd, d, tol=1e-5).passed
    elapsed = time.time() - t0
    report(
        9,
        "constant width gives constant diameter",
        ok and negative and elapsed < 20,
        f"families pass: {ok}; quarter-disk negative control fails: {negative}",
        elapsed,
        20,
    )
    assert ok
    assert negative
    assert elapsed < 20.0


def test_criterion_10_touching_ball():
    t0 = time.time()
    worst_violation = 0.0
    worst_dist = 0.0
    for body, w in (
        (make_reuleaux_odd_gon(NORTH, 3, 1.8), 1.8),
        (make_cap(NORTH, 0.95), 1.9),
    ):
        table = edge_table(body)
        for p in boundary_sample_array(body, 64):
            ball = inscribed_touching_ball(body, p)
            worst_dist = max(
                worst_dist, abs(distance(p, ball.center) - (w - HALF_PI))
            )
            probe = boundary_sample_array(ball, 1000)
            t, r = table.radial(probe)
            worst_violation = max(worst_violation, float(np.max(r - t)))
    elapsed = time.time() - t0
    ok = worst_violation <= 1e-7 and worst_dist <= 1e-9 and elapsed < 10
    report(
        10,
        "inscribed touching ball",
        ok,
        f"containment excess {worst_violation:.2e}, center distance err {worst_dist:.2e}",
        elapsed,
        10,
    )
    assert worst_violation <= 1e-7
    assert worst_dist <= 1e-9
    assert elapsed < 10.0


def test_criterion_11_thickness_oracle_equivalence():
    t0 = time.time()
    rng = np.random.default_rng(11)
    bodies = [
        make_cap(NORTH, 0.4),
        make_cap(NORTH, 1.2),
        make_quarter_disk(NORTH, 0.5),
        make_quarter_disk(NORTH, 1.0),
        make_reuleaux_odd_gon(NORTH, 3, 0.8),
        make_reuleaux_odd_gon(NORTH, 5, 1.0),
        make_reuleaux_odd_gon(NORTH, 3, 1.8),
        make_regular_reduced_polygon(NORTH, 3, 0.7),
        make_regular_reduced_polygon(NORTH, 7, 1.3),
        polar(make_reuleaux_odd_gon(NORTH, 3, 0.9)),
    ]
    worst = 0.0
    for body in bodies:
        body = rotate_body(body, random_rotation(rng))
        t, _ = thickness(body)
        scan = thickness_scan(body, 2000, 2000)
        worst = max(worst, abs(t - scan))
    elapsed = time.time() - t0
    report(
        11,
        "thickness vs dense lune scan",
        worst < 1e-4 and elapsed < 60,
        f"worst {worst:.2e} over {len(bodies)} bodies",
        elapsed,
        60,
    )
    assert worst < 1e-4
    assert elapsed < 60.0


def test_criterion_12_rolled_ball_containment():
    t0 = time.time()
    rep = run_suite("T_II_convexhull", {"cases": 50, "samples": 200}, seed=1)
    elapsed = time.time() - t0
    ok = rep.passed and rep.worst_violation <= 1e-7 and elapsed < 10
    report(
        12,
        "rolled ball inside hull of end balls",
        ok,
        f"worst containment violation {rep.worst_violation:.2e} over {rep.cases_run} configs",
        elapsed,
        10,
    )
    assert rep.passed and rep.worst_violation <= 1e-7
    assert elapsed < 10.0
