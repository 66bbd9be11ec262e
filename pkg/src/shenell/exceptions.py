"""Exception types shared across the package."""


class ShenError(Exception):
    """Base class for every error raised by this package."""


class DomainError(ShenError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class RangeError(DomainError):
    """A value lies outside the invertible range of the phase map."""


class ConvergenceError(ShenError, RuntimeError):
    """An iterative scheme (series or quadrature) failed to reach tolerance."""


class PoleError(ShenError, ArithmeticError):
    """Evaluation was requested inside the exclusion radius of a pole."""


class DegenerateError(ShenError, ArithmeticError):
    """A formula degenerates at the requested point (e.g. wp' vanishes)."""


class ClassificationError(ShenError, RuntimeError):
    """A computed value violates the structure it is certified to have."""
