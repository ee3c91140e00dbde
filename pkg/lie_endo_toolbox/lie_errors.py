"""Exceptions raised by the lie_endo_toolbox library"""


class LieToolboxError(Exception):
    """Base class of every error raised by the library"""


class AlgebraFormatError(LieToolboxError):
    """Raised when an algebra document is malformed"""


class JacobiError(LieToolboxError):
    """Raised when structure constants violate the Jacobi identity"""

    def __init__(self, triple, component, residual):
        self.triple = triple
        self.component = component
        self.residual = residual
        i, j, l = triple
        super().__init__(
            f"Jacobi identity fails for basis triple ({i}, {j}, {l}): "
            f"component {component} of the cyclic sum is {residual}")


class DimensionError(LieToolboxError, ValueError):
    """Raised when vectors, fields or polynomials do not share a dimension"""


class CatalogError(LieToolboxError):
    """Raised for unknown catalog names or unsupported parameters"""


class FieldSyntaxError(LieToolboxError):
    """Raised by the field language parser, positions are 1-based"""

    def __init__(self, message, line, column):
        self.line = line
        self.column = column
        self.reason = message
        super().__init__(f"{line}:{column}: {message}")


class FlowError(LieToolboxError):
    """Raised for invalid integration settings"""


class NonFiniteStateError(FlowError):
    """Raised when the integrator leaves the finite floats.

    `trajectory` holds every sample up to the last finite state."""

    def __init__(self, time, trajectory):
        self.time = time
        self.trajectory = trajectory
        super().__init__(f"Non-finite state reached at t={time!r}")
