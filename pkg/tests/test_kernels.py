"""Cross-checks between the compiled kernel core and the numpy fallback."""

import math

import numpy as np
import pytest

from lunekit._kernels import backend_name, pure
from lunekit.bodies import (
    boundary_sample_array,
    edge_table,
    make_cap,
    make_quarter_disk,
    make_regular_reduced_polygon,
    make_reuleaux_odd_gon,
)
from lunekit.sphere import SpherePoint

NORTH = SpherePoint(0, 0, 1)

try:
    from lunekit._kernels import _core
except ImportError:
    _core = None

needs_core = pytest.mark.skipif(_core is None, reason="compiled core not built")


def bodies():
    return [
        make_cap(NORTH, 0.7),
        make_quarter_disk(NORTH, 0.8),
        make_reuleaux_odd_gon(NORTH, 3, 1.0),
        make_reuleaux_odd_gon(NORTH, 3, 1.8),
        make_regular_reduced_polygon(NORTH, 7, 1.2),
    ]


def random_points(n=400, seed=5):
    rng = np.random.default_rng(seed)
    X = rng.normal(size=(n, 3))
    return X / np.linalg.norm(X, axis=1)[:, None]


def test_backend_is_reported():
    assert backend_name() in ("pure", "compiled")


@needs_core
def test_farthest_values_agree():
    X = random_points()
    for body in bodies():
        t = edge_table(body)
        d1, j1, th1 = pure.farthest_on_edges(t.q, t.s, t.e1, t.e2, t.span, X)
        d2, j2, th2 = _core.farthest_on_edges(t.q, t.s, t.e1, t.e2, t.span, X)
        assert float(np.max(np.abs(d1 - d2))) < 1e-12
        # winners reproduce their own claimed distance
        for j, th, d, Xrow in zip(j2, th2, d2, X):
            y = t.point_at(int(j), float(th))
            got = math.atan2(np.linalg.norm(np.cross(Xrow, y)), float(Xrow @ y))
            assert abs(got - d) < 1e-12


@needs_core
def test_radial_values_agree():
    X = random_points()
    for body in bodies():
        t = edge_table(body)
        a1, r1 = pure.radial_crossings(
            t.q, t.s, t.e1, t.e2, t.span, t.anchor, t.f1, t.f2, t.breaks, X
        )
        a2, r2 = _core.radial_crossings(
            t.q, t.s, t.e1, t.e2, t.span, t.anchor, t.f1, t.f2, t.breaks, X
        )
        assert float(np.max(np.abs(a1 - a2))) < 1e-10
        assert float(np.max(np.abs(r1 - r2))) < 1e-14


@needs_core
def test_min_cap_agrees():
    for body in bodies():
        P = boundary_sample_array(body, 80)
        c1, r1, _ = pure.min_cap_of_points(P)
        c2, r2, _ = _core.min_cap_of_points(P)
        assert abs(r1 - r2) < 1e-12
        assert float(np.linalg.norm(c1 - c2)) < 1e-12


@needs_core
def test_min_cap_tiny_inputs():
    P = random_points(1)
    for backend in (pure, _core):
        c, r, s = backend.min_cap_of_points(P)
        assert r == 0.0 and s == (0,)
    P2 = np.array([[1.0, 0, 0], [0, 1.0, 0]])
    for backend in (pure, _core):
        c, r, s = backend.min_cap_of_points(P2)
        assert r == pytest.approx(math.pi / 4)
