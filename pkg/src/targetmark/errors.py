"""Exception types shared across the package."""


class ParameterError(ValueError):
    """An input violates a documented domain constraint."""


class SolverError(RuntimeError):
    """A root-finder could not produce a valid equilibrium."""


class MarketNotViableError(SolverError):
    """No margin within the search bracket recovers fixed and advertising costs."""
