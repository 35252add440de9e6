"""Exception hierarchy.

Every error raised on bad mathematical input derives from :class:`DomainError`,
which the command line maps to exit status 2.
"""


class DomainError(ValueError):
    """Input outside the domain of an operation."""


class ShapeError(DomainError):
    """Matrix or tuple has the wrong shape."""


class GridMismatchError(DomainError):
    """Angle denominator does not divide the grid size."""


class UnsupportedError(DomainError):
    """Input uses a feature the operation does not handle."""


class UnsupportedRankError(UnsupportedError):
    """Polynomial references a generator the representation does not carry."""


class InvalidParametersError(DomainError):
    """Sklyanin parameters violate ``alpha + beta + gamma + alpha*beta*gamma = 0``."""


class SingularParameterError(DomainError):
    """A parameter lands on a pole of a defining formula."""


class UnderdeterminedError(SingularParameterError):
    """The constraint holds for every value of the unknown."""


class PoleError(SingularParameterError):
    """A Jacobi-form coefficient has a vanishing denominator.

    ``which`` lists the offending coefficients, e.g. ``("c1",)``.
    """

    def __init__(self, which, message=None):
        self.which = tuple(which)
        super().__init__(message or f"pole in Jacobi coefficient(s): {', '.join(self.which)}")


class ReducibleError(DomainError):
    """Proposed minimal polynomial factors over Q."""


class NonConvergenceError(ArithmeticError):
    """Iteration cap reached; ``best`` holds the last iterates."""

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class InsufficientDataError(DomainError):
    """Not enough converged samples to form a statistic."""
