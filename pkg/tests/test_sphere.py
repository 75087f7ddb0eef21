import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lunekit.errors import AntipodalEndpoints, BadParameters, DegenerateTriple
from lunekit.sphere import (
    SpherePoint,
    Tolerance,
    antipode,
    circumcircle,
    distance,
    interpolate,
    orient,
    random_rotation,
    rotation_about,
    tangent_frame,
)

EX = SpherePoint(1, 0, 0)
EY = SpherePoint(0, 1, 0)
EZ = SpherePoint(0, 0, 1)


unit_vectors = st.builds(
    lambda x, y, z: SpherePoint(x, y, z),
    *[st.floats(-1, 1).filter(lambda v: abs(v) > 1e-3) for _ in range(3)],
)


class TestDistance:
    def test_coincident(self):
        assert distance(EX, EX) == 0.0

    def test_antipodes(self):
        assert distance(EX, SpherePoint(-1, 0, 0)) == pytest.approx(math.pi)

    def test_orthogonal(self):
        assert distance(EX, EY) == pytest.approx(math.pi / 2)

    def test_near_zero_is_accurate(self):
        # atan2 form resolves tiny separations that arccos cannot
        p = SpherePoint(1, 1e-9, 0)
        assert distance(EX, p) == pytest.approx(1e-9, rel=1e-6)

    @given(unit_vectors, unit_vectors, unit_vectors)
    @settings(max_examples=200, deadline=None)
    def test_triangle_inequality(self, a, b, c):
        assert distance(a, c) <= distance(a, b) + distance(b, c) + 1e-12

    @given(unit_vectors, unit_vectors, st.integers(0, 2**32 - 1))
    @settings(max_examples=100, deadline=None)
    def test_rotation_invariance(self, a, b, seed):
        R = random_rotation(np.random.default_rng(seed))
        assert distance(R @ a.vec, R @ b.vec) == pytest.approx(
            distance(a, b), abs=1e-12
        )


class TestAntipode:
    def test_flip(self):
        assert antipode(EZ) == SpherePoint(0, 0, -1)

    @given(unit_vectors)
    @settings(max_examples=50, deadline=None)
    def test_involution(self, p):
        q = antipode(antipode(p))
        assert distance(p, q) < 1e-15

    @given(unit_vectors)
    @settings(max_examples=50, deadline=None)
    def test_distance_pi(self, p):
        assert distance(p, antipode(p)) == pytest.approx(math.pi)


class TestInterpolate:
    def test_endpoints(self):
        a, b = EX, EY
        assert distance(interpolate(a, b, 0.0), a) < 1e-15
        assert distance(interpolate(a, b, 1.0), b) < 1e-15

    def test_midpoint_symmetry(self):
        m = interpolate(EX, EY, 0.5)
        s = math.sqrt(2) / 2
        assert (m.x, m.y, m.z) == pytest.approx((s, s, 0.0))

    @given(unit_vectors, unit_vectors, st.floats(0, 1))
    @settings(max_examples=200, deadline=None)
    def test_unit_speed(self, a, b, t):
        if distance(a, b) > math.pi - 1e-3:
            return
        p = interpolate(a, b, t)
        assert distance(a, p) == pytest.approx(t * distance(a, b), abs=1e-12)

    def test_antipodal_rejected(self):
        with pytest.raises(AntipodalEndpoints):
            interpolate(EX, SpherePoint(-1, 0, 0), 0.5)


class TestOrient:
    def test_right_handed_frame(self):
        assert orient(EX, EY, EZ) == 1

    def test_midpoint_coplanar(self):
        m = interpolate(EX, EY, 0.5)
        assert orient(EX, EY, m) == 0

    @given(unit_vectors, unit_vectors, unit_vectors)
    @settings(max_examples=100, deadline=None)
    def test_antisymmetry(self, a, b, c):
        assert orient(a, b, c) == -orient(b, a, c)


class TestCircumcircle:
    def equilateral(self, side, rng_seed=0):
        # vertices at a common colatitude; circumradius from the side length
        r = math.asin(2 / math.sqrt(3) * math.sin(side / 2))
        e1, e2 = tangent_frame(EZ)
        pts = []
        for ang in (0, 2 * math.pi / 3, 4 * math.pi / 3):
            v = math.cos(r) * EZ.vec + math.sin(r) * (
                math.cos(ang) * e1 + math.sin(ang) * e2
            )
            pts.append(SpherePoint.from_array(v))
        return pts, r

    def test_equilateral_radius_formula(self):
        # independently derived: sin R = (2/sqrt(3)) sin(side/2)
        for side in (0.4, 0.9, math.pi / 2):
            pts, r_expected = self.equilateral(side)
            center, radius = circumcircle(*pts)
            assert radius == pytest.approx(r_expected, abs=1e-12)
            assert radius == pytest.approx(
                math.asin(2 / math.sqrt(3) * math.sin(side / 2)), abs=1e-12
            )

    def test_half_pi_value(self):
        pts, _ = self.equilateral(math.pi / 2)
        _, radius = circumcircle(*pts)
        assert radius == pytest.approx(0.9553166181245093, abs=1e-9)

    def test_known_small_circle(self, rng):
        # three points constructed on a circle of known center and radius
        for _ in range(20):
            q = rng.normal(size=3)
            q /= np.linalg.norm(q)
            s = rng.uniform(0.05, 1.4)
            e1, e2 = tangent_frame(q)
            angs = np.sort(rng.uniform(0, 2 * math.pi, 3))
            if np.min(np.diff(angs)) < 0.1:
                continue
            pts = [
                SpherePoint.from_array(
                    math.cos(s) * q + math.sin(s) * (math.cos(a) * e1 + math.sin(a) * e2)
                )
                for a in angs
            ]
            center, radius = circumcircle(*pts)
            assert min(distance(center, q), distance(antipode(center), q)) < 1e-9
            assert radius == pytest.approx(min(s, math.pi - s), abs=1e-9)
            for p in pts:
                assert abs(distance(center, p) - radius) < 1e-9

    def test_degenerate(self):
        with pytest.raises(DegenerateTriple):
            circumcircle(EX, EY, interpolate(EX, EY, 0.5))


class TestTolerance:
    def test_ordering_enforced(self):
        with pytest.raises(BadParameters):
            Tolerance(eps_alg=1e-6, eps_opt=1e-7, eps_claim=1e-6)

    def test_defaults(self):
        t = Tolerance()
        assert t.eps_alg < t.eps_opt < t.eps_claim


def test_rotation_about_axis():
    R = rotation_about(EZ.vec, math.pi / 2)
    assert R @ EX.vec == pytest.approx(EY.vec, abs=1e-15)


def test_sphere_point_normalizes():
    p = SpherePoint(0, 0, 2)
    assert p.z == 1.0
