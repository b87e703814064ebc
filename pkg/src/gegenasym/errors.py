"""Exception hierarchy shared by all evaluators."""


class GegenError(Exception):
    """Base class for every error raised by this package."""


class DomainError(GegenError, ValueError):
    """An argument lies outside the supported parameter range."""


class BranchError(GegenError, ValueError):
    """A branch-dependent quantity was requested at a branch point."""


class PoleError(GegenError, ZeroDivisionError):
    """A coefficient was evaluated at its pole (z = 1, theta = 0)."""


class RegionError(GegenError, ValueError):
    """The point lies outside the region where the method is valid."""


class PathError(GegenError, RuntimeError):
    """No admissible integration path for an error bound."""


class ConvergenceError(GegenError, RuntimeError):
    """An iterative procedure failed to converge."""


class PrecisionError(GegenError, ArithmeticError):
    """Cancellation consumed more digits than the working precision."""
