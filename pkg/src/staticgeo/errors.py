"""Exception hierarchy shared across the toolkit."""


class StaticGeoError(Exception):
    """Base class for all toolkit errors."""


class DimensionError(StaticGeoError):
    """Ambient dimension outside the supported range 3..7."""


class ParameterError(StaticGeoError):
    """Parameter value outside an operation's admissible range."""


class DomainError(StaticGeoError):
    """Evaluation requested outside a metric's coordinate domain."""


class SingularFlowError(StaticGeoError):
    """Flow speed left the admissible window during integration.

    Carries the flow time at which the threshold was crossed.
    """

    def __init__(self, t: float, message: str = ""):
        self.t = float(t)
        super().__init__(message or f"flow became singular at t={t:.6g}")


class StiffnessError(StaticGeoError):
    """Time step shrank below the hard floor; the problem is too stiff
    for the explicit stepper."""


class ResolutionError(StaticGeoError):
    """A discretized quantity did not converge under refinement."""


class HypothesisError(StaticGeoError):
    """Input data violates the hypothesis an operation relies on."""
