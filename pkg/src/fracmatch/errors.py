"""Exception types shared across the package."""


class GraphFormatError(ValueError):
    """Malformed graph6 or edge-list input."""


class PreconditionError(ValueError):
    """An operation was called outside its documented preconditions."""


class InternalInconsistencyError(RuntimeError):
    """A structure the algorithms guarantee was found to be absent.

    Raised when a certified-optimal matching admits an improving swap or a
    construction branch is missing a guaranteed complement edge; either one
    means an upstream bug, never bad user input.
    """
