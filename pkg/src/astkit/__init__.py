"""Characteristic function of the asymmetric Student's t distribution.

Submodules
----------
specfun
    Bessel I/K, Struve L, exponential integral.
sinetransform
    Closed forms of ``int_0^inf sin(ax) / (b^2 + x^2)^rho dx``.
astdist
    AST density and characteristic function.
oracle
    Independent brute-force quadrature.
verify
    Acceptance checks shared by the CLI and the test suite.
"""
from .errors import AccuracyWarning, ConvergenceError, DomainError

__version__ = "0.1.0"

__all__ = ["AccuracyWarning", "ConvergenceError", "DomainError", "__version__"]
