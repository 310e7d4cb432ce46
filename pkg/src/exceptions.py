"""Application exceptions."""


class ApplicationError(Exception):
    """Base application error."""

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


class NotFoundError(ApplicationError):
    """Resource not found error."""

    pass


class ValidationError(ApplicationError):
    """Validation error."""

    pass


class InvalidStateError(ApplicationError):
    """Invalid state transition error."""

    pass


class ConfigParseError(ValidationError):
    """Structured-text file could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ScenarioReferenceError(NotFoundError):
    """A mission plan references a target the scenario does not define."""

    pass


class UnknownTopicError(NotFoundError):
    """Bus topic was never registered."""

    pass


class SimulationError(ApplicationError):
    """Numerical failure that aborts a simulation run."""

    pass


class SingularityError(SimulationError):
    """Pitch left the band where Z-Y-X Euler kinematics are defined."""

    pass


class DivergenceError(SimulationError):
    """Body velocity exceeded the configured tripwire."""

    pass


class RankDeficiencyError(ApplicationError):
    """Allocation matrix has lost full row rank."""

    pass


class GeometryError(ValidationError):
    """Invalid sensor or source geometry."""

    pass


class NoPeakError(ApplicationError):
    """Cross-correlation has no usable peak."""

    pass


class InfeasibleDelayError(ApplicationError):
    """Measured delay is longer than the acoustic travel time across the baseline."""

    pass
