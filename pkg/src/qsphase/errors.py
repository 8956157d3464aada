"""Exception taxonomy shared across the package.

The CLI maps these onto stable exit codes, so new failure modes should
subclass one of the existing categories rather than raising bare ValueError.
"""


class QsphaseError(Exception):
    """Base class for all package-specific failures."""


class SizingError(QsphaseError, ValueError):
    """Grid or problem size is invalid (non power of two, overflow, ...)."""


class AliasingError(QsphaseError, ValueError):
    """Evaluation grid too small for the Laurent index range."""


class DomainError(QsphaseError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class MarginViolationError(QsphaseError):
    """Sampled |b| exceeds the promised bound 1 - eta.

    Carries the offending grid node so the caller can report where the
    promise failed.
    """

    def __init__(self, node_index, value, limit):
        self.node_index = int(node_index)
        self.value = float(value)
        self.limit = float(limit)
        super().__init__(
            f"|b(z_{self.node_index})| = {self.value:.17g} exceeds "
            f"the margin bound {self.limit:.17g}"
        )


class SingularFactorizationError(QsphaseError):
    """|b| >= 1 somewhere on the grid, so log(1 - |b|^2) is not finite."""

    def __init__(self, node_index, value):
        self.node_index = int(node_index)
        self.value = float(value)
        super().__init__(
            f"|b(z_{self.node_index})| = {self.value:.17g} >= 1; "
            "outer completion does not exist"
        )


class NumericalDegeneracyError(QsphaseError):
    """A positive-definite solve failed after rounding."""

    def __init__(self, message, phase_index=None, leading_minor=None):
        self.phase_index = phase_index
        self.leading_minor = leading_minor
        super().__init__(message)


class InvariantViolationError(QsphaseError):
    """A quantity left its theoretically guaranteed range."""


class PoleError(QsphaseError, ValueError):
    """A phase sits exactly on +-pi/2 where tan has a pole."""


class PhaseSolveError(QsphaseError):
    """One or more per-index phase solves failed.

    ``failures`` is a list of (phase_index, exception) pairs.
    """

    def __init__(self, failures):
        self.failures = list(failures)
        indices = ", ".join(str(k) for k, _ in self.failures)
        first = self.failures[0][1] if self.failures else None
        super().__init__(
            f"phase solve failed at indices [{indices}]; first cause: {first}"
        )


class DimensionMismatchError(QsphaseError, ValueError):
    """Target and phase data disagree on the degree."""
