"""Exceptions raised by YARTS."""


class YartsError(ValueError):
    """Base class for errors caused by the caller's input."""


class ParameterError(YartsError):
    """Field or family parameters are invalid."""


class CapExceeded(YartsError):
    """An exhaustive computation was requested beyond its configured cap."""

    def __init__(self, what, size, cap):
        super().__init__(f"{what}: {size} exceeds the cap of {cap}")
        self.what = what
        self.size = size
        self.cap = cap


class SingularMapError(YartsError):
    """A linearized polynomial is not invertible."""

    def __init__(self, message, kernel_dimension):
        super().__init__(f"{message} (kernel dimension {kernel_dimension})")
        self.kernel_dimension = kernel_dimension


class NonLinearTableError(YartsError):
    """A value table does not describe an F_q-linear map."""


class NotNormalizedError(YartsError):
    """A spread set does not contain the identity matrix."""


class IncompleteLongLines(YartsError):
    """A long-line set was not found exhaustively."""


class InvariantViolation(AssertionError):
    """An internal counting identity failed."""


class ParameterWarning(UserWarning):
    """Parameters fall outside the range where a construction is guaranteed."""
