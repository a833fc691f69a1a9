"""Batch cross-checks behind ``biharmonic-curves verify``.

Each suite returns a list of :class:`Check` records; a suite passes when all
of its checks do.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .curvature import curvature_sample, gauss_curvature, geodesic_curvature_sq, gradient_angle
from .geometry import (
    PlaneZ,
    Polynomial,
    QuadricCenter,
    QuadricParaboloid,
    SuperquadricRevolution,
    sphere,
)
from .quadrics import (
    Verdict,
    candidate_cut,
    center_curve_point,
    center_curve_radii_sq,
    center_parametrization_range,
    classify,
    classify_numerically,
    gauss_curvature_closed_form,
    k1_sq_center_closed_form,
    k1_sq_center_parametrized,
    k1_sq_paraboloid_closed_form,
    seed_point,
)
from .revolution import solve_superquadric_parallel, superquadric_parallel_curvatures
from .tracer import fd_geodesic_curvature_sq, trace


@dataclass
class Check:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": bool(self.passed), **self.detail}


def rel_err(x: float, y: float) -> float:
    return abs(x - y) / max(abs(x), abs(y), 1e-300)


# -- formula cross-check -------------------------------------------------------


def center_crosscheck_cases() -> list[tuple[float, float, float, float, float]]:
    """64 ``(a, b, c, d, u)`` combinations in the real-curve regime of the parametrization."""
    shapes = [(1.3, 1.0, 0.7), (1.2, 1.0, 0.5), (1.3, 1.0, 2.0), (1.0, 1.0, 0.5),
              (2.0, 1.5, 1.0), (0.8, 0.6, 1.5), (1.0, 1.0, 2.0), (1.6, 0.9, 0.4)]
    cases = []
    for a, b, c in shapes:
        lo, hi = center_parametrization_range(a, b, c)
        for t in (0.3, 0.7):
            d = math.sqrt(lo + t * (hi - lo))
            for u in (0.1, 0.9, 2.0, 4.0):
                cases.append((a, b, c, d, u))
    return cases


def formula_crosscheck(rtol: float = 1e-8) -> list[Check]:
    checks = []
    worst = 0.0
    for a, b, c, d, u in center_crosscheck_cases():
        center_curve_radii_sq(a, b, c, d)
        p = center_curve_point(a, b, c, d, u)
        q = QuadricCenter(a, b, c)
        cut = candidate_cut(q, d)
        g = geodesic_curvature_sq(q, cut, p)
        cf = k1_sq_center_closed_form(a, b, c, d, p)
        tr = k1_sq_center_parametrized(a, b, c, d, u)
        worst = max(worst, rel_err(g, cf), rel_err(g, tr), rel_err(cf, tr))
    checks.append(Check("center k1^2: lambda form / trigonometric form / generic", worst < rtol,
                        {"cases": 64, "max_rel_err": worst}))

    worst = 0.0
    n = 0
    for a, b, e2 in [(1, 1, 2), (2, 1, 2), (1.3, 0.7, 3.1), (0.8, 1.5, 1.4), (1.0, 2.5, 6.0)]:
        q = QuadricParaboloid(a, b, 1)
        e = math.sqrt(e2)
        cut = candidate_cut(q, e)
        tr = trace(q, cut, seed_point(q, cut), 0.05 * a * a, 40)
        for s in tr.samples[::4]:
            worst = max(worst, rel_err(geodesic_curvature_sq(q, cut, s.point),
                                       k1_sq_paraboloid_closed_form(a, b, e, s.point)))
            n += 1
    checks.append(Check("paraboloid k1^2: closed form vs generic", worst < rtol,
                        {"points": n, "max_rel_err": worst}))

    worst = 0.0
    rng = np.random.default_rng(7)
    for q in [QuadricCenter(1.3, 1.0, 0.7), QuadricCenter(1, 2, 1.5, 1, -1),
              QuadricCenter(1, 2, 1.5, -1, -1), QuadricParaboloid(1.2, 0.6, 1), QuadricParaboloid(1, 2, -1)]:
        for _ in range(50):
            p = random_point_on_quadric(q, rng)
            worst = max(worst, rel_err(gauss_curvature(q, p), gauss_curvature_closed_form(q, p)))
    checks.append(Check("quadric K: closed form vs cofactor formula", worst < 1e-10,
                        {"points": 250, "max_rel_err": worst}))

    worst = 0.0
    for n_, c in itertools.product((1, 2, 3), (0.5, 1.0, 2.0)):
        top = c ** (1 / n_)
        for t in np.linspace(0.05, 0.95, 10):
            d = t * top
            sq = superquadric_parallel_curvatures(n_, c, d)
            p = superquadric_parallel_point(n_, c, d)
            S = SuperquadricRevolution(n_, c)
            worst = max(worst, rel_err(sq.K, gauss_curvature(S, p)),
                        rel_err(sq.k1_sq, geodesic_curvature_sq(S, PlaneZ(d), p)))
    checks.append(Check("superquadric parallel K, k1^2: closed forms vs generic", worst < rtol,
                        {"cases": 90, "max_rel_err": worst}))
    return checks


def superquadric_parallel_point(n: int, c: float, d: float, angle: float = 0.0) -> np.ndarray:
    rho = (1.0 - d ** (2 * n) / c**2) ** (1.0 / (2 * n))
    return np.array([rho * math.cos(angle), rho * math.sin(angle), d])


def random_point_on_quadric(q, rng) -> np.ndarray:
    """A random point exactly on a diagonal quadric (one coordinate solved for)."""
    if isinstance(q, QuadricParaboloid):
        x, y = rng.uniform(-1.5, 1.5, 2)
        return np.array([x, y, (x * x / q.a**2 + q.eta * y * y / q.b**2) / 2])
    diag = q.diag
    # pick a coordinate whose coefficient sign can absorb the remainder
    while True:
        v = rng.normal(size=3)
        v /= np.linalg.norm(v)
        s = float(diag @ (v * v))
        if s > 1e-3:
            return v / math.sqrt(s)


def _sphere_through(p: np.ndarray, rng) -> Polynomial:
    """A random sphere through ``p``, as a general polynomial second surface."""
    c = p + rng.normal(size=3)
    r2 = float((p - c) @ (p - c))
    return Polynomial.from_terms({
        (2, 0, 0): 1.0, (0, 2, 0): 1.0, (0, 0, 2): 1.0,
        (1, 0, 0): -2 * c[0], (0, 1, 0): -2 * c[1], (0, 0, 1): -2 * c[2],
        (0, 0, 0): float(c @ c) - r2,
    })


def random_intersection_cases(count: int, seed: int = 0):
    """``count`` triples ``(F, G, p)`` with ``p`` on both surfaces, cycling over every family.

    F ranges over center quadrics of all signatures, paraboloids, superquadrics
    of revolution, the biharmonic graph profile and a quartic polynomial; G is
    a random sphere through the point, so the angle between the gradients is
    generic. Near-tangent draws are skipped.
    """
    from .revolution import ProfileSpec

    rng = np.random.default_rng(seed)
    quartic = Polynomial.from_terms({(4, 0, 0): 1.0, (0, 4, 0): 1.0, (0, 0, 4): 1.0, (0, 0, 0): -1.0})
    cases = []
    kind = 0
    while len(cases) < count:
        family = kind % 6
        kind += 1
        if family == 0:
            a, b, c = rng.uniform(0.5, 2.0, 3)
            xi, zeta = (int(v) for v in rng.choice([-1, 1], 2))
            F = QuadricCenter(float(a), float(b), float(c), xi, zeta)
            p = random_point_on_quadric(F, rng)
        elif family == 1:
            a, b = rng.uniform(0.5, 2.0, 2)
            F = QuadricParaboloid(float(a), float(b), int(rng.choice([-1, 1])))
            p = random_point_on_quadric(F, rng)
        elif family == 2:
            n, c = int(rng.integers(1, 4)), float(rng.uniform(0.5, 2.0))
            F = SuperquadricRevolution(n, c)
            d = float(rng.uniform(0.05, 0.95)) * c ** (1 / n)
            p = superquadric_parallel_point(n, c, d, float(rng.uniform(0, 2 * math.pi)))
        elif family == 3:
            spec = ProfileSpec(float(rng.uniform(-1, 1)), float(rng.uniform(-1, 1)))
            F = spec.as_surface()
            rho = spec.rho_min * float(rng.uniform(1.05, 3.0))
            t = float(rng.uniform(0, 2 * math.pi))
            p = np.array([rho * math.cos(t), rho * math.sin(t), spec.f(rho)])
        elif family == 4:
            F = quartic
            v = rng.normal(size=3)
            p = v / float(np.sum(v**4)) ** 0.25
        else:
            a, b, c = rng.uniform(0.6, 1.8, 3)
            F = QuadricCenter(float(a), float(b), float(c))
            p = random_point_on_quadric(F, rng)
        G = _sphere_through(p, rng)
        cos, sin_sq = gradient_angle(F, G, p)
        if sin_sq < 1e-4:
            continue
        cases.append((F, G, p))
    return cases


def structural_identity(count: int = 1000, seed: int = 0) -> tuple[float, int]:
    """Worst relative violation of k^2 = k1^2 + kn_F^2 over random valid points."""
    worst = 0.0
    for F, G, p in random_intersection_cases(count, seed):
        s = curvature_sample(F, G, p)
        worst = max(worst, abs(s.k_sq - s.k1_sq - s.kn_F**2) / max(s.k_sq, 1e-12))
    return worst, count


# -- finite-difference oracle ----------------------------------------------------


def fd_errors(F, G, start, step: float, count: int = 40) -> float:
    """Max |fd k1^2 - algebraic k1^2| over the interior of a short traced arc."""
    tr = trace(F, G, start, step, count)
    errs = [abs(fd_geodesic_curvature_sq(F, tr, i) - geodesic_curvature_sq(F, G, tr.samples[i].point))
            for i in range(1, len(tr.samples) - 1)]
    return max(errs)


def fd_oracle_cases():
    d = 1 / math.sqrt(2)
    s = sphere()
    sph = QuadricCenter(1, 1, 2)
    cut = candidate_cut(sph, math.sqrt(0.5))
    prolate = QuadricCenter(1.3, 1.0, 0.7)
    pcut = candidate_cut(prolate, math.sqrt(1.5))
    return [
        ("sphere ∩ plane z=1/sqrt2", s, PlaneZ(d), np.array([d, 0.0, d])),
        ("sphere ∩ plane z=0.5", s, PlaneZ(0.5), np.array([math.sqrt(0.75), 0.0, 0.5])),
        ("spheroid a=b=1,c=2 ∩ cut d^2=1/2", sph, cut, seed_point(sph, cut)),
        ("ellipsoid 1.3,1,0.7 ∩ cut d^2=1.5", prolate, pcut, seed_point(prolate, pcut)),
    ]


def fd_oracle(step: float = 1e-3) -> list[Check]:
    checks = []
    for name, F, G, start in fd_oracle_cases():
        e1 = fd_errors(F, G, start, 2 * step)
        e2 = fd_errors(F, G, start, step)
        ratio = e1 / e2 if e2 > 0 else math.inf
        ok = e2 < 10 * step**2 and 3.0 <= ratio <= 5.0
        checks.append(Check(f"fd oracle: {name}", ok,
                            {"step": step, "err": e2, "err_at_2step": e1, "ratio": ratio}))
    return checks


# -- classification grid ---------------------------------------------------------


def classification_grid():
    grid = []
    axes = (0.5, 1.0, 1.7)
    for a, b, c in itertools.product(axes, repeat=3):
        grid.append(QuadricCenter(a, b, c, 1, 1))
    for (a, b, c), (xi, zeta) in itertools.product([(1, 1, 2), (1.5, 0.7, 1.0), (1, 2, 2)], [(1, -1), (-1, 1)]):
        grid.append(QuadricCenter(a, b, c, xi, zeta))
    for a, b, c in [(1, 1, 1), (1, 2, 2), (2, 0.5, 0.5), (0.7, 1.3, 1.3),
                    (1, 2, 1.3), (1, 0.5, 2), (1, 1, 2), (2, 1.5, 0.8)]:
        grid.append(QuadricCenter(a, b, c, -1, -1))
    for (a, b), eta in itertools.product([(1, 1), (2, 2), (0.6, 0.6), (1, 2), (1.5, 0.7)], (1, -1)):
        grid.append(QuadricParaboloid(a, b, eta))
    return grid


def classification_agreement() -> list[Check]:
    checks = []
    mismatches = []
    grid = classification_grid()
    for q in grid:
        th = classify(q)
        nu = classify_numerically(q)
        same = th.exists == nu.exists and (th.exists or th.reason == nu.reason)
        if same and th.verdict is Verdict.EXISTS_SPHEROID:
            same = rel_err(nu.level_sq, th.d_sq) < 1e-8
        if not same:
            mismatches.append(repr(q))
    checks.append(Check("closed-form classification vs traced numerics", not mismatches,
                        {"quadrics": len(grid), "mismatches": mismatches}))
    return checks


# -- n = 1 consistency -------------------------------------------------------------


def n1_consistency(cs=(0.5, 1.0, 2.0, 5.0)) -> list[Check]:
    checks = []
    for c in cs:
        d0 = solve_superquadric_parallel(1, c).d0
        # for n = 1 the superquadric is the spheroid with semi-axes 1, 1, c
        cl = classify(QuadricCenter(1.0, 1.0, c))
        err = abs(d0 * d0 - cl.circle_height_sq)
        checks.append(Check(f"n=1 parallel vs spheroid classification, c={c}", err < 1e-10,
                            {"d0_sq": d0 * d0, "circle_height_sq": cl.circle_height_sq, "abs_err": err}))
    return checks


SUITES = {
    "formula-crosscheck": formula_crosscheck,
    "fd-oracle": fd_oracle,
    "classification-grid": classification_agreement,
    "n1-consistency": n1_consistency,
}


def run_suite(name: str) -> list[Check]:
    if name == "all":
        return [c for fn in SUITES.values() for c in fn()]
    return SUITES[name]()

