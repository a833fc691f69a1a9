"""Exception hierarchy.

Everything raised on purpose by the library derives from :class:`GeometryError`
(domain / precondition failures, CLI exit code 1) or :class:`SpecParseError`
(malformed surface specs, CLI exit code 2).
"""


class GeometryError(ValueError):
    """Base class for domain and precondition failures."""


class OffSurfaceError(GeometryError):
    def __init__(self, residual, tol, what="surface"):
        self.residual = residual
        self.tol = tol
        super().__init__(
            f"point is off the {what}: residual {residual:.3e} exceeds tolerance {tol:.1e}"
        )


class DegenerateGradientError(GeometryError):
    pass


class TangencyError(GeometryError):
    """Gradients of the two surfaces are (numerically) parallel."""


class NonTangentDirectionError(GeometryError):
    pass


class AxisPointError(GeometryError):
    """A surface of revolution was evaluated on its axis."""


class DomainError(GeometryError):
    pass


class RegimeError(GeometryError):
    """Parameters outside the regime where a closed form is real."""


class ConvergenceError(GeometryError):
    def __init__(self, message, step_index=None):
        self.step_index = step_index
        if step_index is not None:
            message = f"step {step_index}: {message}"
        super().__init__(message)


class BracketNotFoundError(GeometryError):
    pass


class SpecParseError(ValueError):
    pass
