import math

import numpy as np
import pytest

from biharmonic_curves.geometry import PlaneZ, QuadricCenter, sphere

SQRT_HALF = 1 / math.sqrt(2)


@pytest.fixture
def unit_sphere():
    return sphere()


@pytest.fixture
def spheroid():
    return QuadricCenter(1.0, 1.0, 2.0)


@pytest.fixture
def circle_point():
    """On the unit sphere and on the plane z = 1/sqrt(2)."""
    return np.array([SQRT_HALF, 0.0, SQRT_HALF])


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def sphere_plane_point(d: float, angle: float = 0.0) -> np.ndarray:
    r = math.sqrt(1 - d * d)
    return np.array([r * math.cos(angle), r * math.sin(angle), d])


def plane(d):
    return PlaneZ(d)
