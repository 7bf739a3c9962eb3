"""Exception and warning types shared by the numerical kernels."""


class DomainError(ValueError):
    """An argument lies outside the domain of the requested function."""


class ConvergenceError(ArithmeticError):
    """An iterative scheme exhausted its budget without converging."""


class AccuracyWarning(RuntimeWarning):
    """The returned value is usable but has lost significant digits."""
