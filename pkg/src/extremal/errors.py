"""Exception types shared across the package."""


class ExtremalError(Exception):
    """Base class for all errors raised by :mod:`extremal`."""


class DimensionError(ExtremalError, ValueError):
    """Operands have incompatible lengths or shapes."""


class DomainError(ExtremalError, ValueError):
    """An input lies outside the domain of an operation (non-PD form, flat cloud, ...)."""


class ConvergenceError(ExtremalError, RuntimeError):
    """An iterative solver hit its iteration cap.

    The partial :class:`~extremal.solvers.SolveReport` is attached as ``report``.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
