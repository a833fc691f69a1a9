"""Biharmonic curves on real non-degenerate quadrics.

Along a proper biharmonic curve the Gauss curvature is a positive constant,
so the curve lies on a level set of K. For quadrics those level sets are cut
out by an auxiliary ellipsoid (center quadrics) or cylinder (paraboloids),
and the geodesic curvature of quadric ∩ cut decides the rest.

This module holds the closed forms of that argument and :func:`classify`.
:func:`classify_numerically` reaches the same verdicts by tracing candidate
curves, without using any of the closed forms.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .curvature import check_on_surface, gauss_curvature, geodesic_curvature_sq
from .errors import DomainError, GeometryError, RegimeError
from .geometry import (
    CandidateCylinder,
    CandidateEllipsoid,
    PlaneZ,
    QuadricCenter,
    QuadricParaboloid,
    Surface,
    as_point,
)
from .tracer import constancy_report, project_to_curve, trace


class Verdict(str, enum.Enum):
    EXISTS_SPHERE = "ExistsSphere"
    EXISTS_SPHEROID = "ExistsSpheroid"
    NONE = "None"


class Reason(str, enum.Enum):
    NEGATIVE_CURVATURE = "NegativeCurvature"
    NON_CONSTANT_K1 = "NonConstantK1"
    RESIDUAL_NEVER_ZERO = "ResidualNeverZero"


@dataclass(frozen=True)
class BiharmonicClassification:
    verdict: Verdict
    d_sq: float | None = None
    circle_height_sq: float | None = None
    circle_radius_sq: float | None = None
    reason: Reason | None = None
    # index (0=x, 1=y, 2=z) of the rotation axis of the biharmonic circles
    axis: int | None = None

    @property
    def exists(self) -> bool:
        return self.verdict is not Verdict.NONE

    def as_dict(self) -> dict:
        out: dict = {"verdict": self.verdict.value}
        if self.d_sq is not None:
            out["d_sq"] = self.d_sq
        if self.circle_height_sq is not None:
            out["circle_height_sq"] = self.circle_height_sq
        if self.circle_radius_sq is not None:
            out["circle_radius_sq"] = self.circle_radius_sq
        if self.reason is not None:
            out["reason"] = self.reason.value
        return out


@dataclass(frozen=True)
class ProofConstants:
    A: float
    B: float
    C: float
    D: float


# -- closed forms ------------------------------------------------------------


def gauss_curvature_closed_form(q: Surface, p) -> float:
    p = as_point(p)
    check_on_surface(q, p)
    x, y, z = p
    if isinstance(q, QuadricCenter):
        a, b, c = q.a, q.b, q.c
        s = x * x / a**4 + y * y / b**4 + z * z / c**4
        return q.xi * q.zeta / (a * a * b * b * c * c * s * s)
    if isinstance(q, QuadricParaboloid):
        a, b = q.a, q.b
        s = x * x / a**4 + y * y / b**4 + 1.0
        return q.eta / (a * a * b * b * s * s)
    raise TypeError(f"not a quadric: {q!r}")


def candidate_cut(q: Surface, level: float) -> Surface:
    """Level set of K on ``q``: ellipsoid with parameter d, or cylinder with parameter e.

    On the cut K equals xi*zeta / (a^2 b^2 c^2 d^4), resp. eta / (a^2 b^2 e^4).
    """
    if not math.isfinite(level):
        raise DomainError("level must be finite")
    if isinstance(q, QuadricCenter):
        if level == 0.0:
            raise DomainError("d = 0 gives the empty cut")
        return CandidateEllipsoid(q.a, q.b, q.c, level)
    if isinstance(q, QuadricParaboloid):
        if not level * level > 1.0:
            raise DomainError(f"cylinder cut needs e^2 > 1, got e^2 = {level * level}")
        return CandidateCylinder(q.a, q.b, level)
    raise TypeError(f"not a quadric: {q!r}")


def spheroid_residual(a: float, c: float, d: float) -> float:
    """k1^2 - K on the spheroid (a = b) cut at level d; zero iff d^2 = 1/(a c)."""
    d2 = d * d
    lo, hi = sorted((1.0 / a**2, 1.0 / c**2))
    if not lo < d2 < hi:
        raise RegimeError(f"d^2 = {d2} outside the real-curve range ({lo}, {hi})")
    return (1.0 - a * a * c * c * d2 * d2) / (a**4 * c * c * d2 * d2 * (c * c * d2 - 1.0))


def two_sheet_residual(a: float, c: float, d: float) -> float:
    """k1^2 - K on the two-sheet hyperboloid of revolution (b = c); always positive."""
    d2 = d * d
    if not a * a * d2 > 1.0:
        raise RegimeError(f"need a^2 d^2 > 1, got {a * a * d2}")
    return (a * a * c * c * d2 * d2 + 1.0) / (a * a * c**4 * d2 * d2 * (a * a * d2 - 1.0))


def paraboloid_residual(a: float, e: float) -> float:
    """k1^2 - K on the paraboloid of revolution cut at e; never zero."""
    e2 = e * e
    if not e2 > 1.0:
        raise RegimeError(f"need e^2 > 1, got {e2}")
    return 1.0 / (a**4 * e2 * e2 * (e2 - 1.0))


def proof_constants(a: float, b: float, c: float, d: float) -> ProofConstants:
    d2 = d * d
    a2, b2, c2 = a * a, b * b, c * c
    a4, b4 = a2 * a2, b2 * b2
    A = (
        -8 * a4 * b4 * d2 * d2
        + 8 * a4 * b2 * d2
        + 3 * a4 * c2 * d2
        - 3 * a4
        + 8 * a2 * b4 * d2
        - 6 * a2 * b2 * c2 * d2
        - 2 * a2 * b2
        + 3 * b4 * c2 * d2
        - 3 * b4
    )
    B = a4 * (2 * b2 * d2 - 1) - 2 * a2 * b4 * d2 + b4
    C = (
        -4 * a4 * b2 * d2
        + a4 * c2 * d2
        + 3 * a4
        - 4 * a2 * b4 * d2
        - 2 * a2 * b2 * c2 * d2
        + 2 * a2 * b2
        + b4 * c2 * d2
        + 3 * b4
    )
    D = a4 * (b2 * d2 - 1) - a2 * b4 * d2 + b4
    return ProofConstants(A, B, C, D)


def _lam(n, a, b, c, x2, y2, z2):
    return (
        a**n * y2 * z2 * (b * b - c * c) ** 2
        + b**n * x2 * z2 * (a * a - c * c) ** 2
        + c**n * x2 * y2 * (a * a - b * b) ** 2
    )


def k1_sq_center_closed_form(a: float, b: float, c: float, d: float, p, tol: float = 1e-10) -> float:
    """Geodesic curvature squared of ellipsoid ∩ candidate ellipsoid, in lambda_n form."""
    p = as_point(p)
    check_on_surface(QuadricCenter(a, b, c), p, tol, "ellipsoid")
    check_on_surface(CandidateEllipsoid(a, b, c, d), p, tol, "candidate ellipsoid")
    d2 = d * d
    x2, y2, z2 = p * p
    s6 = x2 / a**6 + y2 / b**6 + z2 / c**6
    s8 = x2 / a**8 + y2 / b**8 + z2 / c**8
    l4, l6, l8 = (_lam(n, a, b, c, x2, y2, z2) for n in (4, 6, 8))
    den = d2 * l8 * l8 * (d2 * s8 - s6 * s6)
    if den == 0.0:
        raise GeometryError(f"closed form denominator vanishes at {p}")
    num = d2 * l4 - s6 * l6
    return num * num / den


def center_curve_radii_sq(a: float, b: float, c: float, d: float) -> tuple[float, float]:
    """``(r1^2, r2^2)`` of the projection x^2/r1^2 + y^2/r2^2 = 1 of ellipsoid ∩ cut.

    Raises RegimeError where r1 or r2 would be imaginary, or where z(u) would
    leave the reals somewhere along the parametrization.
    """
    if a == c or b == c:
        raise RegimeError("parametrization needs a != c and b != c")
    d2 = d * d
    r1s = a**4 * (1.0 - c * c * d2) / (a * a - c * c)
    r2s = b**4 * (1.0 - c * c * d2) / (b * b - c * c)
    if not (r1s > 0 and r2s > 0):
        raise RegimeError(f"imaginary radii: r1^2 = {r1s}, r2^2 = {r2s}")
    if r1s > a * a or r2s > b * b:
        raise RegimeError("z(u) is not real along the whole parametrization")
    return r1s, r2s


def center_parametrization_range(a: float, b: float, c: float) -> tuple[float, float]:
    """Open range of d^2 on which the (x, y)-parametrization of ellipsoid ∩ cut is real.

    It runs from 1/c^2 to the nearer of 1/a^2 and 1/b^2; c must be the
    largest or the smallest semi-axis.
    """
    inv_c = 1 / c**2
    others = (1 / a**2, 1 / b**2)
    if all(v < inv_c for v in others):
        return max(others), inv_c
    if all(v > inv_c for v in others):
        return inv_c, min(others)
    raise RegimeError("c must be the largest or the smallest semi-axis")


def center_curve_point(a: float, b: float, c: float, d: float, u: float) -> np.ndarray:
    r1s, r2s = center_curve_radii_sq(a, b, c, d)
    x = math.sqrt(r1s) * math.cos(u)
    y = math.sqrt(r2s) * math.sin(u)
    z2 = 1.0 - x * x / a**2 - y * y / b**2
    return np.array([x, y, c * math.sqrt(max(z2, 0.0))])


def k1_sq_center_parametrized(a: float, b: float, c: float, d: float, u: float) -> float:
    """Trigonometric k1^2(u) along the parametrized ellipsoid ∩ candidate curve.

    The cos 4u coefficient is (a^2 - b^2)^2 (c^2 d^2 - 1); with a single power
    of (a^2 - b^2) the formula disagrees with the direct computation whenever
    a != b.
    """
    center_curve_radii_sq(a, b, c, d)
    d2 = d * d
    t = c * c * d2 - 1.0
    k = proof_constants(a, b, c, d)
    w4 = (a * a - b * b) ** 2 * t
    c2u, c4u = math.cos(2 * u), math.cos(4 * u)
    num = k.A + 4 * t * k.B * c2u + w4 * c4u
    den = k.C + 4 * k.D * c2u - w4 * c4u
    return 8.0 * num * num / (d2 * t * den**3)


def k1_sq_paraboloid_closed_form(a: float, b: float, e: float, p, tol: float = 1e-10) -> float:
    p = as_point(p)
    e2 = e * e
    if not e2 > 1.0:
        raise RegimeError(f"need e^2 > 1, got {e2}")
    check_on_surface(QuadricParaboloid(a, b, 1), p, tol, "paraboloid")
    check_on_surface(CandidateCylinder(a, b, e), p, tol, "candidate cylinder")
    x2, y2 = p[0] ** 2, p[1] ** 2
    lam = {n: b**n * x2 + a**n * y2 for n in (4, 6, 8)}
    num = lam[6] ** 2 - a**6 * b**6 * e2 * lam[4]
    bracket = lam[8] + x2 * y2 * (a * a - b * b) ** 2
    den = e2 * bracket * bracket * (a**4 * b**4 * e2 * lam[8] - lam[6] ** 2)
    if den == 0.0:
        raise GeometryError(f"closed form denominator vanishes at {p}")
    return num * num / den


def paraboloid_obstruction_points(a: float, b: float, e: float):
    """Points P1 (on the y-z plane) and P2 (on the x-z plane) of paraboloid ∩ cylinder.

    Returns ``(P1, P2, k1_sq_P1, k1_sq_P2)`` with the two values from their
    closed forms; they coincide only when a = b.
    """
    e2 = e * e
    if not e2 > 1.0:
        raise RegimeError(f"need e^2 > 1, got {e2}")
    s = math.sqrt(e2 - 1.0)
    P1 = np.array([0.0, b * b * s, b * b * (e2 - 1.0) / 2])
    P2 = np.array([a * a * s, 0.0, a * a * (e2 - 1.0) / 2])
    k1 = (b * b * e2 - a * a * (e2 - 1.0)) ** 2 / (a**8 * e2 * (e2 - 1.0))
    k2 = (a * a * e2 - b * b * (e2 - 1.0)) ** 2 / (b**8 * e2 * (e2 - 1.0))
    return P1, P2, k1, k2


# -- classification ------------------------------------------------------------


def _circle_geometry(r: float, h: float) -> tuple[float, float]:
    """Height^2 and radius^2 of the biharmonic circle on the spheroid with equal
    semi-axes r and rotation semi-axis h (solving the quadric and the cut
    linearly in rho^2 and height^2 at d^2 = 1/(r h))."""
    return h**3 / (r + h), r**3 / (r + h)


def classify(q: Surface) -> BiharmonicClassification:
    """Decide whether the non-degenerate quadric ``q`` carries a proper biharmonic curve.

    Ellipsoids are symmetric in their axis labels, so any two equal semi-axes
    make a spheroid (the rotation axis is recorded in ``axis``).
    """
    none = Verdict.NONE
    if isinstance(q, QuadricParaboloid):
        if q.eta < 0:
            return BiharmonicClassification(none, reason=Reason.NEGATIVE_CURVATURE)
        if q.a != q.b:
            return BiharmonicClassification(none, reason=Reason.NON_CONSTANT_K1)
        return BiharmonicClassification(none, reason=Reason.RESIDUAL_NEVER_ZERO)
    if not isinstance(q, QuadricCenter):
        raise TypeError(f"not a quadric: {q!r}")
    if q.xi * q.zeta < 0:
        return BiharmonicClassification(none, reason=Reason.NEGATIVE_CURVATURE)
    if q.xi == -1:
        # two sheets, symmetric about the x-axis only when b = c
        if q.b != q.c:
            return BiharmonicClassification(none, reason=Reason.NON_CONSTANT_K1)
        return BiharmonicClassification(none, reason=Reason.RESIDUAL_NEVER_ZERO)
    a, b, c = q.a, q.b, q.c
    if a == b == c:
        half = a * a / 2
        return BiharmonicClassification(
            Verdict.EXISTS_SPHERE, circle_height_sq=half, circle_radius_sq=half, axis=2
        )
    axes = (a, b, c)
    for odd in (2, 0, 1):
        i, j = (k for k in range(3) if k != odd)
        if axes[i] == axes[j]:
            r, h = axes[i], axes[odd]
            height_sq, radius_sq = _circle_geometry(r, h)
            return BiharmonicClassification(
                Verdict.EXISTS_SPHEROID,
                d_sq=1.0 / (r * h),
                circle_height_sq=height_sq,
                circle_radius_sq=radius_sq,
                axis=odd,
            )
    return BiharmonicClassification(none, reason=Reason.NON_CONSTANT_K1)


# -- numerical route -------------------------------------------------------------


def seed_point(q: Surface, cut: Surface) -> np.ndarray:
    """An exact point of ``q ∩ cut`` for the diagonal families handled here.

    Both surfaces are linear in (x^2, y^2, z^2) (plus z for paraboloids), so
    setting one coordinate to zero leaves a 2x2 linear system.
    """
    if isinstance(cut, PlaneZ):
        if not isinstance(q, QuadricCenter):
            raise TypeError("plane cuts are only seeded on center quadrics")
        z = cut.d
        x2 = q.a**2 * (1.0 - q.zeta * z * z / q.c**2)
        if x2 <= 0:
            raise DomainError(f"plane z = {z} misses the quadric")
        return np.array([math.sqrt(x2), 0.0, z])
    if isinstance(q, QuadricParaboloid) and isinstance(cut, CandidateCylinder):
        # the point P2 of the x-z plane
        x2 = q.a**4 * (cut.e_sq - 1.0)
        return np.array([math.sqrt(x2), 0.0, x2 / (2 * q.a**2)])
    if isinstance(q, QuadricCenter) and isinstance(cut, CandidateEllipsoid):
        qd = np.array([1 / q.a**2, q.xi / q.b**2, q.zeta / q.c**2])
        cd = cut.diag
        for zero in (1, 2, 0):
            i, j = (k for k in range(3) if k != zero)
            m = np.array([[qd[i], qd[j]], [cd[i], cd[j]]])
            if abs(np.linalg.det(m)) < 1e-14 * np.abs(m).max() ** 2:
                continue
            si, sj = np.linalg.solve(m, [1.0, cut.d_sq])
            if si >= 0 and sj >= 0 and si + sj > 0:
                p = np.zeros(3)
                p[i], p[j] = math.sqrt(si), math.sqrt(sj)
                return project_to_curve(q, cut, p)
        raise DomainError(f"cut at d^2 = {cut.d_sq} does not meet the quadric in a coordinate plane")
    raise TypeError(f"no seed rule for {type(q).__name__} ∩ {type(cut).__name__}")


def _level_range(q: Surface) -> tuple[float, float, list[float]]:
    """Open range of the squared cut level meeting ``q``, plus singular levels to avoid."""
    if isinstance(q, QuadricParaboloid):
        return 1.0, 1.0 + 4.0, []
    inv = sorted((1 / q.a**2, 1 / q.b**2, 1 / q.c**2))
    if q.xi == q.zeta == 1:
        return inv[0], inv[2], [inv[1]]
    # two sheets: minimum of the cut function at the vertex (a, 0, 0)
    lo = 1 / q.a**2
    return lo, lo + 4.0 * max(inv), []


def _levels(q: Surface, count: int) -> list[float]:
    lo, hi, singular = _level_range(q)
    pts = np.linspace(lo, hi, count + 2)[1:-1]
    span = hi - lo
    return [float(v) for v in pts if all(abs(v - s) > 1e-3 * span for s in singular)]


def _cut_for(q: Surface, level_sq: float) -> Surface:
    if isinstance(q, QuadricCenter) and q.is_sphere:
        return PlaneZ(math.sqrt(level_sq))
    return candidate_cut(q, math.sqrt(level_sq))


@dataclass(frozen=True)
class LevelCheck:
    level_sq: float
    k1_sq_mean: float
    k1_sq_dev: float
    K: float
    max_residual: float
    samples: int

    @property
    def residual(self) -> float:
        return self.k1_sq_mean - self.K


def check_level(q: Surface, level_sq: float, samples: int = 96, max_steps: int = 4000) -> LevelCheck:
    """Trace ``q ∩ cut(level)`` once around and sample k1^2 and K along it."""
    cut = _cut_for(q, level_sq)
    start = seed_point(q, cut)
    # rough perimeter from a short probe keeps the sample count per curve near ``samples``
    scale = float(np.linalg.norm(start[:2])) if isinstance(cut, PlaneZ) else float(np.linalg.norm(start))
    step = 2 * math.pi * max(scale, 1e-3) / samples
    tr = trace(q, cut, start, step, max_steps)
    k1 = [geodesic_curvature_sq(q, cut, s.point) for s in tr.samples]
    K = [gauss_curvature(q, s.point) for s in tr.samples]
    rep = constancy_report(k1)
    res = max(abs(u - v) for u, v in zip(k1, K))
    return LevelCheck(level_sq, rep.mean, rep.max_abs_dev, float(np.mean(K)), res, rep.sample_count)


@dataclass(frozen=True)
class NumericClassification:
    exists: bool
    reason: Reason | None
    level_sq: float | None
    checks: tuple[LevelCheck, ...]


def _point_residual(q: Surface, level_sq: float) -> float:
    cut = _cut_for(q, level_sq)
    p = seed_point(q, cut)
    return geodesic_curvature_sq(q, cut, p) - gauss_curvature(q, p)


def classify_numerically(
    q: Surface, n_levels: int = 8, const_tol: float = 1e-7, residual_tol: float = 1e-7
) -> NumericClassification:
    """Classify by tracing candidate curves instead of using the closed forms.

    1. K at a surface point must be positive.
    2. k1^2 must be constant (within ``const_tol``) along some traced cut.
    3. Among constant cuts, ``k1^2 - K`` must change sign between levels;
       the root is refined by bisection and re-traced for confirmation.
    Spheres are cut by horizontal planes, all other quadrics by their level
    sets of K.
    """
    probe = np.array([0.0, 0.0, 0.0]) if isinstance(q, QuadricParaboloid) else np.array([q.a, 0.0, 0.0])
    if not gauss_curvature(q, probe) > 0:
        return NumericClassification(False, Reason.NEGATIVE_CURVATURE, None, ())
    if isinstance(q, QuadricCenter) and q.is_sphere:
        levels = [float(v) for v in np.linspace(0, q.a**2, n_levels + 2)[1:-1]]
    else:
        levels = _levels(q, n_levels)
    checks = tuple(check_level(q, lv) for lv in levels)
    const = [ch for ch in checks if ch.k1_sq_dev < const_tol]
    if not const:
        return NumericClassification(False, Reason.NON_CONSTANT_K1, None, checks)
    for lo, hi in zip(const, const[1:]):
        if lo.residual * hi.residual > 0:
            continue
        a, b = lo.level_sq, hi.level_sq
        fa = lo.residual
        for _ in range(200):
            mid = 0.5 * (a + b)
            if mid in (a, b):
                break
            fm = _point_residual(q, mid)
            if fm == 0.0:
                a = b = mid
                break
            if (fm < 0) == (fa < 0):
                a, fa = mid, fm
            else:
                b = mid
        root = 0.5 * (a + b)
        final = check_level(q, root)
        if final.max_residual < residual_tol and final.k1_sq_dev < const_tol:
            return NumericClassification(True, None, root, checks + (final,))
    return NumericClassification(False, Reason.RESIDUAL_NEVER_ZERO, None, checks)
