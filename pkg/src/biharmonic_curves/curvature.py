"""Curvatures of implicit surfaces and of intersection curves {F = 0, G = 0}.

Nothing here parametrizes the curve: every quantity is an explicit rational
expression in the gradients and Hessians of ``F`` and ``G`` at a point.

Sign convention: the unit normal of ``F`` is ``grad F / |grad F|`` and the
normal curvature carries a leading minus, ``k_n = -T.HF.T / |grad F|``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import TOL
from .errors import (
    DegenerateGradientError,
    NonTangentDirectionError,
    OffSurfaceError,
    TangencyError,
)
from .geometry import Surface, as_point, cofactor


@dataclass(frozen=True)
class CurvatureSample:
    point: np.ndarray
    tangent: np.ndarray
    gauss_F: float
    kn_F: float
    kn_G: float
    cos_theta: float
    k_sq: float
    k1_sq: float
    alpha: float
    beta: float

    def as_dict(self) -> dict:
        return {
            "point": [float(v) for v in self.point],
            "tangent": [float(v) for v in self.tangent],
            "gauss_F": self.gauss_F,
            "kn_F": self.kn_F,
            "kn_G": self.kn_G,
            "cos_theta": self.cos_theta,
            "k_sq": self.k_sq,
            "k1_sq": self.k1_sq,
            "alpha": self.alpha,
            "beta": self.beta,
        }


def check_on_surface(s: Surface, p: np.ndarray, tol: float = TOL.surface_membership, what="surface"):
    r = float(s.value(p))
    if not abs(r) < tol:
        raise OffSurfaceError(r, tol, what)


def _grad_nonzero(s: Surface, p) -> np.ndarray:
    g = s.gradient(p)
    if np.linalg.norm(g) < TOL.degenerate_gradient:
        raise DegenerateGradientError(f"gradient vanishes at {p}")
    return g


def gauss_curvature(F: Surface, p, tol: float = TOL.surface_membership) -> float:
    """Gaussian curvature of ``F^{-1}(0)`` at ``p``: gF.cof(HF).gF / |gF|^4."""
    p = as_point(p)
    check_on_surface(F, p, tol)
    g = _grad_nonzero(F, p)
    n2 = float(g @ g)
    return float(g @ cofactor(F.hessian(p)) @ g) / (n2 * n2)


def normal_curvature(F: Surface, p, T, tol: float = TOL.surface_membership) -> float:
    p = as_point(p)
    T = as_point(T)
    check_on_surface(F, p, tol)
    g = _grad_nonzero(F, p)
    gn = float(np.linalg.norm(g))
    if abs(float(np.linalg.norm(T)) - 1.0) > TOL.tangent_direction:
        raise NonTangentDirectionError(f"direction {T} is not a unit vector")
    if abs(float(T @ g)) / gn > TOL.tangent_direction:
        raise NonTangentDirectionError(f"direction {T} is not tangent to the surface at {p}")
    return -float(T @ F.hessian(p) @ T) / gn


def _pair(F: Surface, G: Surface, p, tol):
    check_on_surface(F, p, tol, "first surface")
    check_on_surface(G, p, tol, "second surface")
    return _grad_nonzero(F, p), _grad_nonzero(G, p)


def _angle(gF, gG) -> tuple[float, float, np.ndarray]:
    nF, nG = float(np.linalg.norm(gF)), float(np.linalg.norm(gG))
    cross = np.cross(gF, gG)
    # sin^2 from the cross product keeps full precision for near-orthogonal gradients
    sin_sq = float(cross @ cross) / (nF * nF * nG * nG)
    if sin_sq < TOL.tangency_sin_sq:
        raise TangencyError("gradients are linearly dependent; the surfaces are tangent")
    cos = float(gF @ gG) / (nF * nG)
    return cos, sin_sq, cross


def gradient_angle(F: Surface, G: Surface, p):
    """Return ``(cos_theta, sin_sq_theta)`` for the angle between the gradients."""
    p = as_point(p)
    gF, gG = _grad_nonzero(F, p), _grad_nonzero(G, p)
    cos, sin_sq, _ = _angle(gF, gG)
    return cos, sin_sq


def intersection_tangent(F: Surface, G: Surface, p, tol: float = TOL.surface_membership) -> np.ndarray:
    """Unit tangent ``gF x gG`` normalized; the order of F and G fixes the orientation."""
    p = as_point(p)
    gF, gG = _pair(F, G, p, tol)
    _, _, cross = _angle(gF, gG)
    return cross / np.linalg.norm(cross)


def _normal_curvatures(F, G, p, tol):
    gF, gG = _pair(F, G, p, tol)
    cos, sin_sq, cross = _angle(gF, gG)
    T = cross / np.linalg.norm(cross)
    knF = -float(T @ F.hessian(p) @ T) / float(np.linalg.norm(gF))
    knG = -float(T @ G.hessian(p) @ T) / float(np.linalg.norm(gG))
    return T, knF, knG, cos, sin_sq


def intersection_curvature_sq(F: Surface, G: Surface, p, tol: float = TOL.surface_membership) -> float:
    p = as_point(p)
    _, knF, knG, cos, sin_sq = _normal_curvatures(F, G, p, tol)
    return (knF * knF + knG * knG - 2.0 * knF * knG * cos) / sin_sq


def decompose_acceleration(F: Surface, G: Surface, p, tol: float = TOL.surface_membership):
    """Coefficients ``(alpha, beta)`` of the curve acceleration on the two unit normals."""
    p = as_point(p)
    _, knF, knG, cos, sin_sq = _normal_curvatures(F, G, p, tol)
    return (knF - knG * cos) / sin_sq, (knG - knF * cos) / sin_sq


def geodesic_curvature_sq(F: Surface, G: Surface, p, tol: float = TOL.surface_membership) -> float:
    """Squared geodesic curvature of {F=0, G=0} seen as a curve in the F-surface."""
    p = as_point(p)
    _, knF, knG, cos, sin_sq = _normal_curvatures(F, G, p, tol)
    num = cos * knF - knG
    return num * num / sin_sq


def curvature_sample(F: Surface, G: Surface, p, tol: float = TOL.surface_membership) -> CurvatureSample:
    p = as_point(p)
    T, knF, knG, cos, sin_sq = _normal_curvatures(F, G, p, tol)
    g = F.gradient(p)
    n2 = float(g @ g)
    K = float(g @ cofactor(F.hessian(p)) @ g) / (n2 * n2)
    num = cos * knF - knG
    return CurvatureSample(
        point=p,
        tangent=T,
        gauss_F=K,
        kn_F=knF,
        kn_G=knG,
        cos_theta=cos,
        k_sq=(knF * knF + knG * knG - 2.0 * knF * knG * cos) / sin_sq,
        k1_sq=num * num / sin_sq,
        alpha=(knF - knG * cos) / sin_sq,
        beta=(knG - knF * cos) / sin_sq,
    )
