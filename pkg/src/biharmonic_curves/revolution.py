"""Biharmonic parallels on surfaces of revolution.

Two families: the superquadric of revolution z^(2n)/c^2 + (x^2+y^2)^n = 1,
whose parallels z = d are biharmonic at the roots of an explicit residual,
and graphs z = f(rho), including the profile for which every parallel is
biharmonic.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import Callable

from .errors import AxisPointError, BracketNotFoundError, DomainError
from .geometry import RevolutionGraph


@dataclass(frozen=True)
class ParallelSolveResult:
    d0: float
    bracket: tuple[float, float]
    residual_at_root: float
    iterations: int
    all_brackets: tuple[tuple[float, float], ...] = ()

    def as_dict(self) -> dict:
        return {
            "d0": self.d0,
            "residual_at_root": self.residual_at_root,
            "bracket": list(self.bracket),
            "all_brackets": [list(b) for b in self.all_brackets],
            "iterations": self.iterations,
        }


@dataclass(frozen=True)
class SuperquadricParallel:
    A: float
    K: float
    k1_sq: float


def _superquadric_domain(n: int, c: float, d: float) -> float:
    if int(n) != n or n < 1:
        raise DomainError(f"n must be an integer >= 1, got {n}")
    if not c > 0:
        raise DomainError(f"c must be positive, got {c}")
    top = c ** (1.0 / n)
    if not 0.0 <= d < top:
        raise DomainError(f"d = {d} outside [0, {top})")
    return top


def superquadric_parallel_residual(n: int, c: float, d: float) -> float:
    """Residual whose zeros are the biharmonic parallels z = d.

    2 c^4 (1-n) d^(2n) + d^(6n-2) (1 - d^(2n)/c^2)^((1-2n)/n) - c^6 (2n-1) (1 - d^(2n)/c^2)
    """
    _superquadric_domain(n, c, d)
    q = 1.0 - d ** (2 * n) / c**2
    return (
        2 * c**4 * (1 - n) * d ** (2 * n)
        + d ** (6 * n - 2) * q ** ((1 - 2 * n) / n)
        - c**6 * (2 * n - 1) * q
    )


def superquadric_parallel_curvatures(n: int, c: float, d: float) -> SuperquadricParallel:
    """Gauss curvature and squared geodesic curvature along the parallel z = d > 0."""
    _superquadric_domain(n, c, d)
    if d == 0.0:
        raise DomainError("the closed forms are singular on the equator d = 0")
    A = (1.0 - d ** (2 * n) / c**2) ** (1.0 / n)
    base = c**4 * d * d * A ** (2 * n) + A * d ** (4 * n)
    K = c**4 * (2 * n - 1) * A ** (2 * n) * d ** (2 * n + 2) * (c * c * A**n + d ** (2 * n)) / base**2
    k1_sq = c**4 * A ** (2 * n) * d ** (4 * n) / ((c * c - d ** (2 * n)) ** 2 * base)
    return SuperquadricParallel(A, K, k1_sq)


def _bisect(f: Callable[[float], float], lo: float, hi: float, flo: float, tol: float):
    it = 0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fm = f(mid)
        it += 1
        if fm == 0.0:
            return mid, mid, mid, it
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi), lo, hi, it


def solve_superquadric_parallel(
    n: int, c: float, samples: int = 1024, tol: float = 0.0
) -> ParallelSolveResult:
    """First biharmonic parallel height d0 in [0, c^(1/n)).

    Scans ``samples`` uniform heights for sign changes (all of them are
    reported in ``all_brackets``) and bisects the first one. With the default
    ``tol=0`` bisection runs until the bracket is two adjacent floats, well
    below the 1e-12 width the residual tolerance needs for steep residuals.
    """
    top = _superquadric_domain(n, c, 0.0)
    hi_edge = top * (1.0 - 1e-9)
    grid = [hi_edge * i / (samples - 1) for i in range(samples)]

    def f(d):
        return superquadric_parallel_residual(n, c, d)

    vals = [f(d) for d in grid]
    brackets = []
    for (d0, f0), (d1, f1) in zip(zip(grid, vals), zip(grid[1:], vals[1:])):
        if f0 == 0.0:
            brackets.append((d0, d0))
        elif f0 * f1 < 0:
            brackets.append((d0, d1))
    if not brackets:
        raise BracketNotFoundError(
            f"no sign change of the residual on [0, {hi_edge}] (n={n}, c={c}); "
            f"residual at ends: {vals[0]:.6g}, {vals[-1]:.6g}"
        )
    lo, hi = brackets[0]
    if lo == hi:
        return ParallelSolveResult(lo, (lo, hi), 0.0, 0, tuple(brackets))
    root, blo, bhi, it = _bisect(f, lo, hi, f(lo), tol)
    # the endpoint with the smaller residual is at least as good as the midpoint
    cand = min((root, blo, bhi), key=lambda d: abs(f(d)))
    return ParallelSolveResult(cand, (lo, hi), f(cand), it, tuple(brackets))


@dataclass(frozen=True)
class ProfileSpec:
    """The profile with all parallels biharmonic; defined for rho >= exp(-c1)."""

    c1: float = 0.0
    c2: float = 0.0

    @property
    def rho_min(self) -> float:
        return math.exp(-self.c1)

    def _root(self, rho: float) -> float:
        s = math.exp(2 * self.c1) * rho * rho - 1.0
        if s < 0.0:
            raise DomainError(f"rho = {rho} is below the profile domain rho >= {self.rho_min}")
        return math.sqrt(s)

    def f(self, rho: float) -> float:
        r = self._root(rho)
        ec = math.exp(self.c1)
        return 0.5 * (rho * r - math.log(2 * ec * (r + ec * rho)) / ec) + self.c2

    def fprime(self, rho: float) -> float:
        return self._root(rho)

    def fsecond(self, rho: float) -> float:
        r = self._root(rho)
        if r == 0.0:
            raise DomainError("f'' is unbounded at the edge of the profile domain")
        return math.exp(2 * self.c1) * rho / r

    def as_surface(self) -> RevolutionGraph:
        return RevolutionGraph(self.f, self.fprime, self.fsecond, name=f"profile(c1={self.c1}, c2={self.c2})")


def biharmonic_profile(spec: ProfileSpec, rho: float) -> float:
    return spec.f(rho)


def _check_rho(rho: float):
    if not rho > 0:
        raise AxisPointError(f"rho must be positive, got {rho}")


def graph_parallel_curvatures(profile, rho: float) -> tuple[float, float]:
    """``(K, k1_sq)`` on the parallel of radius rho of the graph z = f(rho).

    ``profile`` is anything with ``fprime`` and ``fsecond`` callables
    (a :class:`ProfileSpec` or a :class:`RevolutionGraph`).
    """
    _check_rho(rho)
    fp, fpp = profile.fprime(rho), profile.fsecond(rho)
    w = fp * fp + 1.0
    return fp * fpp / (rho * w * w), 1.0 / (rho * rho * w)


def graph_parallel_residual(profile, rho: float) -> float:
    """f'^2 - rho f' f'' + 1: zero iff the parallel at rho is proper biharmonic."""
    _check_rho(rho)
    fp = profile.fprime(rho)
    return fp * fp - rho * fp * profile.fsecond(rho) + 1.0


def ode_residual(profile, rho: float) -> float:
    """Residual of the ODE f'^2 - rho f' f'' + 1 = 0 for an arbitrary profile."""
    return graph_parallel_residual(profile, rho)


PROFILE_CSV_HEADER = ("rho", "f", "fprime", "K", "k1_sq", "residual")


def profile_rows(spec: ProfileSpec, rho_lo: float, rho_hi: float, count: int):
    if count < 2:
        raise DomainError("need at least two samples")
    if rho_lo > rho_hi:
        raise DomainError("empty rho range")
    if rho_lo < spec.rho_min:
        raise DomainError(f"rho range starts at {rho_lo}, below the profile domain rho >= {spec.rho_min}")
    rows = []
    for i in range(count):
        rho = rho_lo + (rho_hi - rho_lo) * i / (count - 1)
        fp = spec.fprime(rho)
        if fp == 0.0:
            # domain edge: f'' blows up but f' f'' -> exp(2 c1) rho
            prod = math.exp(2 * spec.c1) * rho
            rows.append((rho, spec.f(rho), fp, prod / rho, 1.0 / rho**2, 1.0 - rho * prod))
            continue
        K, k1 = graph_parallel_curvatures(spec, rho)
        rows.append((rho, spec.f(rho), fp, K, k1, graph_parallel_residual(spec, rho)))
    return rows


def write_profile_csv(fh, rows) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(PROFILE_CSV_HEADER)
    for row in rows:
        w.writerow([format(float(v), ".17g") for v in row])
