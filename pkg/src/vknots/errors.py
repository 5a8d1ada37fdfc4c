"""Exception hierarchy shared across the package.

Two families matter to callers: input errors (malformed or invalid Gauss
codes) and precondition errors (structurally valid input handed to an
operation outside its domain, e.g. a link fed to a knot invariant).  The
command line maps the former to exit code 2 and the latter to exit code 3.
"""


class VknotsError(Exception):
    """Base class for all package errors."""


class GaussCodeError(VknotsError, ValueError):
    """Malformed Gauss-code text.  Carries the offending position."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class ValidationError(VknotsError, ValueError):
    """Structurally invalid diagram (crossing pairing or sign violations)."""


class InconsistentLabelingError(VknotsError, ValueError):
    """No integer arc labeling exists; names the offending component."""

    def __init__(self, component):
        super().__init__(
            f"component {component} has nonzero net label step; "
            "no arc labeling exists"
        )
        self.component = component


class PreconditionError(VknotsError, ValueError):
    """Operation called outside its stated domain."""


class StaleMoveError(PreconditionError):
    """Move site no longer matches the diagram it is applied to."""
