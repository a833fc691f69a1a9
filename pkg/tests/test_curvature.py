import math

import numpy as np
import pytest

from biharmonic_curves.curvature import (
    curvature_sample,
    decompose_acceleration,
    gauss_curvature,
    geodesic_curvature_sq,
    gradient_angle,
    intersection_curvature_sq,
    intersection_tangent,
    normal_curvature,
)
from biharmonic_curves.errors import (
    DegenerateGradientError,
    NonTangentDirectionError,
    OffSurfaceError,
    TangencyError,
)
from biharmonic_curves.geometry import (
    CandidateEllipsoid,
    PlaneZ,
    QuadricCenter,
    QuadricParaboloid,
)
from biharmonic_curves.parsing import parse_polynomial
from biharmonic_curves.verification import random_intersection_cases, random_point_on_quadric

from conftest import SQRT_HALF, sphere_plane_point

EQUATOR = np.array([1.0, 0.0, 0.0])


# -- gauss_curvature --------------------------------------------------------------


def test_gauss_curvature_examples(unit_sphere, rng):
    for _ in range(20):
        v = rng.normal(size=3)
        assert gauss_curvature(unit_sphere, v / np.linalg.norm(v)) == pytest.approx(1.0, rel=1e-14)
    assert gauss_curvature(QuadricCenter(1, 1, 2), [0, 0, 2]) == pytest.approx(4.0, rel=1e-14)
    assert gauss_curvature(QuadricParaboloid(1, 1, 1), [0, 0, 0]) == pytest.approx(1.0, rel=1e-14)


def test_gauss_curvature_preconditions(unit_sphere):
    with pytest.raises(OffSurfaceError, match="residual"):
        gauss_curvature(unit_sphere, [0, 0, 1.1])
    cone = parse_polynomial("x^2 + y^2 - z^2")
    with pytest.raises(DegenerateGradientError):
        gauss_curvature(cone, [0, 0, 0])


@pytest.mark.parametrize("lam", [-3.0, 0.5, 7.0])
def test_gauss_curvature_scale_invariant(lam, rng):
    for q in (QuadricCenter(1.3, 0.8, 1.7), QuadricCenter(1, 2, 1.5, 1, -1), QuadricParaboloid(1.2, 0.6, -1)):
        for _ in range(20):
            p = random_point_on_quadric(q, rng)
            assert gauss_curvature(q.scaled(lam), p) == pytest.approx(gauss_curvature(q, p), rel=1e-10)


# -- normal_curvature ---------------------------------------------------------------


def test_normal_curvature_examples(unit_sphere, rng):
    for _ in range(10):
        p = rng.normal(size=3)
        p /= np.linalg.norm(p)
        T = np.cross(p, rng.normal(size=3))
        T /= np.linalg.norm(T)
        assert normal_curvature(unit_sphere, p, T) == pytest.approx(-1.0, rel=1e-14)
    assert normal_curvature(PlaneZ(0.3), [4, 5, 0.3], [0.6, 0.8, 0]) == 0.0
    r = 2.5
    cyl = parse_polynomial(f"x^2 + y^2 - {r * r}")
    assert normal_curvature(cyl, [r, 0, 0], [0, 1, 0]) == pytest.approx(-1 / r, rel=1e-14)


def test_normal_curvature_rejects_bad_direction(unit_sphere):
    with pytest.raises(NonTangentDirectionError):
        normal_curvature(unit_sphere, [0, 0, 1], [0, 0, 1])
    with pytest.raises(NonTangentDirectionError):
        normal_curvature(unit_sphere, [0, 0, 1], [2, 0, 0])


def test_normal_curvature_flips_with_F(unit_sphere, circle_point):
    T = np.array([0.0, 1.0, 0.0])
    assert normal_curvature(unit_sphere.scaled(-1), circle_point, T) == -normal_curvature(unit_sphere, circle_point, T)


# -- tangent and angle --------------------------------------------------------------------


def test_intersection_tangent_examples(unit_sphere, circle_point):
    t = intersection_tangent(unit_sphere, PlaneZ(0), EQUATOR)
    np.testing.assert_allclose(np.abs(t), [0, 1, 0], atol=1e-15)
    G = PlaneZ(SQRT_HALF)
    t = intersection_tangent(unit_sphere, G, circle_point)
    np.testing.assert_allclose(np.abs(t), [0, 1, 0], atol=1e-15)
    np.testing.assert_array_equal(intersection_tangent(G, unit_sphere, circle_point), -t)


def test_gradient_angle_examples(unit_sphere):
    for d in (-0.9, -0.2, 0.0, 0.4, 0.95):
        cos, sin_sq = gradient_angle(unit_sphere, PlaneZ(d), sphere_plane_point(d, 0.7))
        assert cos == pytest.approx(d, abs=1e-15)
        assert sin_sq == pytest.approx(1 - d * d, rel=1e-13)
    assert gradient_angle(unit_sphere, PlaneZ(0), EQUATOR) == (0.0, 1.0)
    with pytest.raises(TangencyError):
        gradient_angle(unit_sphere, unit_sphere, EQUATOR)


# -- space curvature, acceleration, geodesic curvature ------------------------------


def test_intersection_curvature_examples(unit_sphere, circle_point):
    assert intersection_curvature_sq(unit_sphere, PlaneZ(0), EQUATOR) == pytest.approx(1.0, rel=1e-15)
    assert intersection_curvature_sq(unit_sphere, PlaneZ(SQRT_HALF), circle_point) == pytest.approx(2.0, rel=1e-14)


def test_orthogonal_reductions():
    # cylinder of radius 2 cut by the plane z = 0: orthogonal gradients
    cyl = parse_polynomial("x^2 + y^2 - 4")
    p = [2, 0, 0]
    s = curvature_sample(cyl, PlaneZ(0), p)
    assert s.cos_theta == 0.0
    assert s.k_sq == pytest.approx(s.kn_F**2 + s.kn_G**2)
    assert geodesic_curvature_sq(PlaneZ(0), cyl, p) == pytest.approx(s.kn_F**2)
    assert geodesic_curvature_sq(cyl, PlaneZ(0), p) == pytest.approx(s.kn_G**2)


def test_decompose_acceleration_examples(unit_sphere):
    alpha, beta = decompose_acceleration(unit_sphere, PlaneZ(0), EQUATOR)
    assert (alpha, beta) == (pytest.approx(-1.0), pytest.approx(0.0))
    # two unit cylinders meeting orthogonally at (1, 0, 1): kn_F = kn_G = -1, cos = 0
    c1 = parse_polynomial("x^2 + y^2 - 1")
    c2 = parse_polynomial("y^2 + z^2 - 1")
    assert decompose_acceleration(c1, c2, [1, 0, 1]) == (pytest.approx(-1.0), pytest.approx(-1.0))
    with pytest.raises(TangencyError):
        decompose_acceleration(parse_polynomial("x^2 + z^2 - 1"), c2, [0, 0, 1])


def test_acceleration_reconstructs_curvature():
    for F, G, p in random_intersection_cases(120, seed=3):
        s = curvature_sample(F, G, p)
        nF = F.gradient(p) / np.linalg.norm(F.gradient(p))
        nG = G.gradient(p) / np.linalg.norm(G.gradient(p))
        acc = s.alpha * nF + s.beta * nG
        assert float(acc @ acc) == pytest.approx(s.k_sq, rel=1e-9, abs=1e-12)
        assert s.alpha**2 + s.beta**2 + 2 * s.alpha * s.beta * s.cos_theta == pytest.approx(s.k_sq, rel=1e-9, abs=1e-12)


def test_geodesic_curvature_sphere_plane_family(unit_sphere):
    for d in np.linspace(-0.98, 0.98, 100):
        k1 = geodesic_curvature_sq(unit_sphere, PlaneZ(d), sphere_plane_point(d, 1.3 * d))
        assert k1 == pytest.approx(d * d / (1 - d * d), rel=1e-10, abs=1e-15)


def test_geodesic_curvature_spheroid_circle(spheroid):
    cut = CandidateEllipsoid(1, 1, 2, math.sqrt(0.5))
    p = [1 / math.sqrt(3), 0, math.sqrt(8 / 3)]
    assert geodesic_curvature_sq(spheroid, cut, p) == pytest.approx(1.0, rel=1e-12)


def test_curvature_sample_examples(unit_sphere, circle_point):
    s = curvature_sample(unit_sphere, PlaneZ(0), EQUATOR)
    assert (s.gauss_F, s.kn_F, s.kn_G, s.cos_theta, s.k_sq, s.k1_sq) == pytest.approx((1, -1, 0, 0, 1, 0))
    s = curvature_sample(unit_sphere, PlaneZ(SQRT_HALF), circle_point)
    assert (s.k_sq, s.k1_sq, s.kn_F) == pytest.approx((2, 1, -1), rel=1e-14)


# -- invariants ---------------------------------------------------------------------


def test_identity_k_sq_split():
    for F, G, p in random_intersection_cases(300, seed=11):
        s = curvature_sample(F, G, p)
        assert s.k_sq >= 0 and s.k1_sq >= 0 and abs(s.cos_theta) < 1
        assert abs(s.k_sq - s.k1_sq - s.kn_F**2) <= 1e-9 * s.k_sq + 1e-15


def test_swap_symmetry():
    for F, G, p in random_intersection_cases(120, seed=5):
        assert intersection_curvature_sq(G, F, p) == pytest.approx(intersection_curvature_sq(F, G, p), rel=1e-12)
        s = curvature_sample(F, G, p)
        swapped = (s.cos_theta * s.kn_G - s.kn_F) ** 2 / (1 - s.cos_theta**2)
        assert geodesic_curvature_sq(G, F, p) == pytest.approx(swapped, rel=1e-9, abs=1e-12)


def test_sign_flips_leave_k1_unchanged():
    for F, G, p in random_intersection_cases(60, seed=9):
        ref = geodesic_curvature_sq(F, G, p)
        for f, g in ((F.scaled(-1), G), (F, G.scaled(-1)), (F.scaled(-1), G.scaled(-1))):
            assert geodesic_curvature_sq(f, g, p) == pytest.approx(ref, rel=1e-12, abs=1e-15)


def test_off_curve_rejected(unit_sphere):
    with pytest.raises(OffSurfaceError):
        geodesic_curvature_sq(unit_sphere, PlaneZ(0.5), [1, 0, 0])
