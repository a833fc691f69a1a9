"""Central tolerances shared by all modules."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    surface_membership: float = 1e-10
    derivative_check: float = 1e-6
    degenerate_gradient: float = 1e-12
    tangent_direction: float = 1e-8
    # sin^2 of the angle between the two gradients
    tangency_sin_sq: float = 1e-20
    projection: float = 1e-12
    projection_max_iter: int = 50
    bisection_abs: float = 1e-12
    polynomial_max_degree: int = 8


TOL = Tolerances()
