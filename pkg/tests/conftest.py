import numpy as np
import pytest

from lunekit.sphere import SpherePoint

NORTH = SpherePoint(0.0, 0.0, 1.0)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def random_unit(rng, n=1):
    v = rng.normal(size=(n, 3))
    v /= np.linalg.norm(v, axis=1)[:, None]
    return v[0] if n == 1 else v
