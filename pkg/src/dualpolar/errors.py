"""Exception hierarchy shared by every module.

The CLI maps each class to a process exit code.
"""


class PolarError(Exception):
    exit_code = 1


class InvalidParameterError(PolarError, ValueError):
    exit_code = 2


class UnsupportedOperationError(PolarError):
    exit_code = 2


class ResourceError(PolarError):
    """Raised when an enumeration or search would exceed its budget."""

    exit_code = 3


class InvariantViolation(PolarError):
    """A structural property that must hold did not; carries a witness."""

    exit_code = 1

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class CriticalInvariantError(InvariantViolation):
    exit_code = 4
