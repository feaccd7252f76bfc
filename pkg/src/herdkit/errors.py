class HerdkitError(Exception):
    """Base class for all herdkit errors."""


class InputError(HerdkitError):
    """Malformed or incompatible input (shapes, algebras, schema)."""

    def __init__(self, message, location=None):
        if location:
            message = f"{location}: {message}"
        super().__init__(message)
        self.location = location


class NotBalancedError(InputError):
    """A map on representatives does not respect the balancing relations."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InconsistencyError(HerdkitError):
    """Internal consistency failure, usually a violated hypothesis in the data."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class PreconditionError(HerdkitError):
    """A construction was requested whose hypotheses do not hold."""
