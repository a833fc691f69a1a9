"""Curvatures of implicit surfaces and intersection curves, and biharmonic curves on quadrics."""

__version__ = "0.1.0"

from .curvature import (
    CurvatureSample,
    curvature_sample,
    decompose_acceleration,
    gauss_curvature,
    geodesic_curvature_sq,
    gradient_angle,
    intersection_curvature_sq,
    intersection_tangent,
    normal_curvature,
)
from .errors import (
    AxisPointError,
    BracketNotFoundError,
    ConvergenceError,
    DegenerateGradientError,
    DomainError,
    GeometryError,
    NonTangentDirectionError,
    OffSurfaceError,
    RegimeError,
    SpecParseError,
    TangencyError,
)
from .geometry import (
    CandidateCylinder,
    CandidateEllipsoid,
    PlaneZ,
    Polynomial,
    QuadricCenter,
    QuadricParaboloid,
    RevolutionGraph,
    SuperquadricRevolution,
    Surface,
    sphere,
)
from .parsing import parse_surface
from .quadrics import BiharmonicClassification, Reason, Verdict, candidate_cut, classify, classify_numerically
from .revolution import ProfileSpec, biharmonic_profile, solve_superquadric_parallel
from .tracer import CurveTrace, constancy_report, fd_geodesic_curvature_sq, project_to_curve, trace

__all__ = [name for name in dir() if not name.startswith("_")]
