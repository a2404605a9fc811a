"""Exception hierarchy shared by every module."""


class ZetaLabError(Exception):
    """Base class for all numerical failures raised by zetalab."""


class DomainError(ZetaLabError, ValueError):
    """Argument outside the region where an operation is defined."""


class PoleError(DomainError):
    """Evaluation requested at (or too close to) a pole."""


class OutOfStripError(DomainError):
    """Complex argument outside the validity strip of a representation."""


class ToleranceNotMet(ZetaLabError):
    """Evaluation budget exhausted before the requested accuracy was reached."""


class NonIntegrableSingularity(ZetaLabError):
    """Endpoint blow-up stronger than the declared singularity class."""


class NoConvergence(ZetaLabError):
    """Series transform differences failed to shrink within the budget."""


class NumericalError(ZetaLabError):
    """A non-finite value was produced where a finite one is required."""


class ParseError(ZetaLabError, ValueError):
    """Malformed textual input; ``position`` is the 0-based offending column."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position
