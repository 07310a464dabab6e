"""Exception types raised by the solver library."""


class BracketError(ValueError):
    """A monotone scalar inversion was asked for a value outside its bracket."""


class QuadratureError(RuntimeError):
    """Adaptive quadrature failed to reach its tolerance within the depth cap."""


class DegenerateSpeedError(RuntimeError):
    """The maximal wave speed is numerically zero, so no CFL time step exists."""


class StepLimitError(RuntimeError):
    """A time loop exceeded its step-count cap before reaching the end time."""


class CrossingError(ValueError):
    """Level-crossing extraction failed (no crossing, or more than one)."""


class ConfigError(ValueError):
    """Invalid experiment configuration text or field value."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
