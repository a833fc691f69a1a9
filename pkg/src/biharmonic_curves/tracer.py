"""Predictor-corrector tracing of {F = 0, G = 0} and a finite-difference oracle.

The oracle recovers the geodesic curvature from traced points alone (second
differences and the unit normal of F), without Hessians or any closed form,
so it can check the algebraic route independently.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass

import numpy as np

from .config import TOL
from .curvature import gauss_curvature, geodesic_curvature_sq
from .errors import ConvergenceError, DomainError, TangencyError
from .geometry import Surface, as_point


@dataclass(frozen=True)
class TraceSample:
    point: np.ndarray
    arclength: float
    residual_F: float
    residual_G: float


@dataclass(frozen=True)
class CurveTrace:
    samples: tuple[TraceSample, ...]
    step: float
    closed: bool
    # chord from the last sample back to the first, for closed traces
    closing_gap: float = 0.0
    # the traced pair (F, G), kept for re-projection by the fd oracle
    surfaces: tuple = ()

    @property
    def points(self) -> np.ndarray:
        return np.array([s.point for s in self.samples])

    @property
    def length(self) -> float:
        return self.samples[-1].arclength + (self.closing_gap if self.closed else 0.0)

    def __len__(self):
        return len(self.samples)


@dataclass(frozen=True)
class ConstancyReport:
    mean: float
    max_abs_dev: float
    sample_count: int

    def as_dict(self) -> dict:
        return {"mean": self.mean, "max_abs_dev": self.max_abs_dev, "sample_count": self.sample_count}


def _newton_step(F: Surface, G: Surface, p: np.ndarray):
    f, g = float(F.value(p)), float(G.value(p))
    gF, gG = F.gradient(p), G.gradient(p)
    # minimum-norm update: delta = s gF + t gG with J delta = -(f, g)
    gram = np.array([[gF @ gF, gF @ gG], [gF @ gG, gG @ gG]])
    det = gram[0, 0] * gram[1, 1] - gram[0, 1] ** 2
    if det <= TOL.tangency_sin_sq * gram[0, 0] * gram[1, 1]:
        raise TangencyError(f"gradients are parallel at {p}")
    s, t = np.linalg.solve(gram, [-f, -g])
    return s * gF + t * gG, max(abs(f), abs(g))


def _residual(F, G, p) -> float:
    return max(abs(float(F.value(p))), abs(float(G.value(p))))


def project_to_curve(
    F: Surface,
    G: Surface,
    guess,
    tol: float = TOL.projection,
    max_iter: int = TOL.projection_max_iter,
) -> np.ndarray:
    """Newton-project ``guess`` onto {F = 0, G = 0}.

    Each update lies in the span of the two gradients at the current iterate.
    After the tolerance is met, at most two polishing steps are taken while
    they keep reducing the residual.
    """
    p = as_point(guess)
    res = _residual(F, G, p)
    it = 0
    while res > tol:
        if it >= max_iter:
            raise ConvergenceError(
                f"projection did not converge in {max_iter} iterations (residual {res:.3e})"
            )
        delta, _ = _newton_step(F, G, p)
        p = p + delta
        res = _residual(F, G, p)
        if not math.isfinite(res):
            raise ConvergenceError("projection diverged")
        it += 1
    for _ in range(2):
        if res == 0.0:
            break
        delta, _ = _newton_step(F, G, p)
        q = p + delta
        rq = _residual(F, G, q)
        if rq >= res:
            break
        p, res = q, rq
    return p


def _tangent(F, G, p, direction) -> np.ndarray:
    t = np.cross(F.gradient(p), G.gradient(p))
    n = np.linalg.norm(t)
    if n == 0.0:
        raise TangencyError(f"gradients are parallel at {p}")
    return direction * t / n


def trace(
    F: Surface,
    G: Surface,
    start,
    step: float,
    max_steps: int,
    direction: int = 1,
    tol: float = TOL.projection,
) -> CurveTrace:
    """Trace the intersection curve from ``start`` with arclength step ``step``.

    The predictor moves along the unit tangent ``gF x gG`` (reversed when
    ``direction`` is -1). Tracing stops after ``max_steps`` steps or when the
    curve comes back within ``step / 2`` of the start after at least 3 steps;
    in that case the trace is flagged closed and the returning point is not
    stored.
    """
    if not step > 0:
        raise DomainError(f"step must be positive, got {step}")
    if direction not in (1, -1):
        raise DomainError("direction must be +1 or -1")
    start = as_point(start)
    if _residual(F, G, start) > TOL.surface_membership:
        raise DomainError(f"start point is not on the curve (residual {_residual(F, G, start):.3e})")
    p = project_to_curve(F, G, start, tol)
    samples = [TraceSample(p, 0.0, float(F.value(p)), float(G.value(p)))]
    s = 0.0
    closed = False
    gap = 0.0
    for i in range(1, max_steps + 1):
        try:
            guess = p + step * _tangent(F, G, p, direction)
            q = project_to_curve(F, G, guess, tol)
        except ConvergenceError as exc:
            raise ConvergenceError(str(exc), step_index=i) from exc
        except TangencyError as exc:
            raise TangencyError(f"step {i}: {exc}") from exc
        chord = float(np.linalg.norm(q - p))
        back = float(np.linalg.norm(q - start))
        if i >= 3 and back < step / 2:
            closed = True
            gap = float(np.linalg.norm(p - start))
            break
        s += chord
        p = q
        samples.append(TraceSample(p, s, float(F.value(p)), float(G.value(p))))
    return CurveTrace(tuple(samples), float(step), closed, gap, (F, G))


def arc_length_between(F: Surface, G: Surface, p: np.ndarray, q: np.ndarray) -> float:
    """Arclength of the short arc from ``p`` to ``q``.

    Chord lengths with and without a projected midpoint, Richardson
    extrapolated: the chord error is O(h^3) and the result is O(h^5).
    """
    m = project_to_curve(F, G, 0.5 * (p + q))
    one = float(np.linalg.norm(q - p))
    two = float(np.linalg.norm(m - p) + np.linalg.norm(q - m))
    return two + (two - one) / 3.0


def fd_geodesic_curvature_sq(F: Surface, tr: CurveTrace, index: int) -> float:
    """Geodesic curvature squared from a three-point second difference.

    ``gamma''`` is the non-uniform second difference in arclength (the local
    steps are arclength estimates, not chords, so the error is a genuine
    O(step^2)); its component along the unit normal of F is then removed.
    Closed traces wrap around; open traces need an interior index.
    """
    n = len(tr.samples)
    if tr.closed:
        if n < 3:
            raise DomainError("closed trace too short for differencing")
        i0, i1, i2 = (index - 1) % n, index % n, (index + 1) % n
    else:
        if not 0 < index < n - 1:
            raise DomainError(f"index {index} has no two neighbours in an open trace of {n} samples")
        i0, i1, i2 = index - 1, index, index + 1
    pm, p0, pp = tr.samples[i0].point, tr.samples[i1].point, tr.samples[i2].point
    if tr.surfaces:
        G = tr.surfaces[1]
        h1 = arc_length_between(F, G, pm, p0)
        h2 = arc_length_between(F, G, p0, pp)
    else:
        h1 = float(np.linalg.norm(p0 - pm))
        h2 = float(np.linalg.norm(pp - p0))
    acc = 2.0 * ((pp - p0) / h2 - (p0 - pm) / h1) / (h1 + h2)
    g = F.gradient(p0)
    nF = g / np.linalg.norm(g)
    tangential = acc - (acc @ nF) * nF
    return float(tangential @ tangential)


def constancy_report(values) -> ConstancyReport:
    v = np.asarray(list(values), dtype=float)
    if v.size < 3:
        raise DomainError(f"constancy needs at least 3 samples, got {v.size}")
    mean = float(v.mean())
    return ConstancyReport(mean, float(np.max(np.abs(v - mean))), int(v.size))


def trace_curvatures(F: Surface, G: Surface, tr: CurveTrace, with_fd: bool = True):
    """Per-sample rows ``(s, x, y, z, k1_sq_algebraic, k1_sq_fd, K)``.

    ``k1_sq_fd`` is NaN where no stencil exists (endpoints of open traces).
    The on-surface check uses the tracer tolerance, already far below the
    default membership tolerance.
    """
    rows = []
    n = len(tr.samples)
    for i, smp in enumerate(tr.samples):
        p = smp.point
        k1 = geodesic_curvature_sq(F, G, p)
        K = gauss_curvature(F, p)
        if with_fd and (tr.closed or 0 < i < n - 1) and n >= 3:
            fd = fd_geodesic_curvature_sq(F, tr, i)
        else:
            fd = math.nan
        rows.append((smp.arclength, float(p[0]), float(p[1]), float(p[2]), k1, fd, K))
    return rows


TRACE_CSV_HEADER = ("s", "x", "y", "z", "k1_sq_algebraic", "k1_sq_fd", "K")


def write_trace_csv(fh, rows) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(TRACE_CSV_HEADER)
    for row in rows:
        w.writerow([format(float(v), ".17g") for v in row])
