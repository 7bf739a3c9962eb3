"""Closed forms for ``int_0^inf sin(a x) / (b^2 + x^2)^rho dx``.

* integer exponent ``n``: a finite sum of the scaled exponential-integral
  pair and polynomial terms in ``ab`` (:func:`sine_integral_int`);
* non-integer exponent: the modified Bessel / modified Struve form
  (:func:`sine_integral_frac`);
* :func:`sine_integral` dispatches between the two.

:func:`bessel_struve_limit` gives the integer-order limit of
``(I_{nu-1/2}(x) - L_{1/2-nu}(x)) / sin(pi nu)`` using the integer closed form.
"""
from __future__ import annotations

import math
import operator
import warnings
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from . import specfun
from .errors import AccuracyWarning, DomainError

__all__ = [
    "SineIntegralQuery",
    "sine_integral_int",
    "sine_integral_frac",
    "sine_integral",
    "bessel_struve_limit",
    "INTEGER_SNAP",
]

INTEGER_SNAP = 1e-6
_EXTENDED_ARG = 30.0
_DOUBLE_RTOL = 1e-12
_WARN_RTOL = 1e-8
_EPS = 2.0 ** -52


@dataclass(frozen=True)
class SineIntegralQuery:
    rho: float
    a: float
    b: float

    def __post_init__(self):
        if not (math.isfinite(self.rho) and self.rho > 0.0):
            raise DomainError(f"rho must be > 0, got {self.rho!r}")
        if not (math.isfinite(self.a) and self.a >= 0.0):
            raise DomainError(f"a must be >= 0, got {self.a!r}")
        if not (math.isfinite(self.b) and self.b > 0.0):
            raise DomainError(f"b must be > 0, got {self.b!r}")

    def evaluate(self) -> float:
        return sine_integral(self.rho, self.a, self.b)


def _check_order(n) -> int:
    try:
        n = operator.index(n)
    except TypeError:
        if isinstance(n, float) and n.is_integer():
            n = int(n)
        else:
            raise DomainError(f"n must be a positive integer, got {n!r}") from None
    if n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    return n


def _check_ab(a: float, b: float) -> tuple[float, float]:
    a = float(a)
    b = float(b)
    if not (math.isfinite(a) and a >= 0.0):
        raise DomainError(f"a must be finite and >= 0, got {a!r}")
    if not (math.isfinite(b) and b > 0.0):
        raise DomainError(f"b must be finite and > 0, got {b!r}")
    return a, b


def _coefficients(n: int) -> list[Fraction] | list[float]:
    """``C(2n-k-1, n-1) 2^(k-2n) / (k-1)!`` for ``k = 1..n``."""
    if n <= 33:
        return [
            Fraction(math.comb(2 * n - k - 1, n - 1), 2 ** (2 * n - k) * math.factorial(k - 1))
            for k in range(1, n + 1)
        ]
    out = []
    for k in range(1, n + 1):
        log_c = (
            math.lgamma(2 * n - k)
            - math.lgamma(n)
            - math.lgamma(n - k + 1)
            + (k - 2 * n) * math.log(2.0)
            - math.lgamma(k)
        )
        out.append(math.exp(log_c))
    return out


def _pieces(n: int, x, eneg, epos, coeffs, convert) -> list:
    """Every additive term of the integer-order closed form at ``b = 1``."""
    pieces = []
    for k in range(1, n + 1):
        c = convert(coeffs[k - 1])
        xk = x ** (k - 1)
        pieces.append(c * xk * eneg)
        pieces.append((c if k % 2 == 0 else -c) * xk * epos)
        # 1 + (-1)^(k+j) is 2 for k+j even, 0 otherwise
        for j in range(1, k):
            if (k + j) % 2 == 0:
                pieces.append(-2 * c * math.factorial(j - 1) * x ** (k - j - 1))
    return pieces


def _closed_form_unit(n: int, x: float) -> tuple[float, float]:
    """``int_0^inf sin(x y) / (1 + y^2)^n dy`` and its estimated relative error.

    The sum is first formed in binary64 with ``fsum``.  When the estimate of
    the rounding error relative to the result exceeds ``1e-12`` (large ``x``
    with large ``n``, or very small ``x``), or when ``x > 30``, the whole sum
    is redone in extended precision with enough guard bits to cover the
    observed cancellation.
    """
    coeffs = _coefficients(n)
    pair = specfun.ei_scaled(x)
    pieces = _pieces(n, x, pair.eneg, pair.epos, coeffs, float)
    value = math.fsum(pieces)
    magnitude = math.fsum(abs(p) for p in pieces)
    rel = 8.0 * _EPS * magnitude / abs(value) if value != 0.0 else math.inf
    if rel <= _DOUBLE_RTOL and x <= _EXTENDED_ARG:
        return value, rel

    # guard bits from the cancellation ratio observed in double precision
    ratio = magnitude / abs(value) if value != 0.0 and rel < 0.5 else 2.0**64
    bits = 64 + int(math.log2(max(ratio, 1.0))) + 32
    for _ in range(6):
        with mpmath.workprec(bits):
            xm = mpmath.mpf(x)
            eneg, epos = specfun.ei_scaled_mp(xm)
            exact = all(isinstance(c, Fraction) for c in coeffs)
            convert = (lambda c: mpmath.mpf(c.numerator) / c.denominator) if exact else mpmath.mpf
            mp_pieces = _pieces(n, xm, eneg, epos, coeffs, convert)
            total = mpmath.fsum(mp_pieces)
            mag = mpmath.fsum(abs(p) for p in mp_pieces)
            if total != 0:
                rel_mp = float(8 * mag * mpmath.mp.eps / abs(total))
                if rel_mp <= 1e-17 or bits > 20000:
                    return float(total), max(rel_mp, _EPS)
        bits *= 2
    return float(total), rel_mp


def sine_integral_int(n: int, a: float, b: float) -> float:
    """``int_0^inf sin(a x) / (b^2 + x^2)^n dx`` for a positive integer ``n``.

    ``a >= 0``, ``b > 0``; ``a = 0`` returns 0 without touching Ei.  Emits
    :class:`AccuracyWarning` if the estimated relative error exceeds
    ``1e-8``.
    """
    n = _check_order(n)
    a, b = _check_ab(a, b)
    if a == 0.0:
        return 0.0
    value, rel = _closed_form_unit(n, a * b)
    if rel > _WARN_RTOL:
        warnings.warn(
            f"sine_integral_int({n}, {a}, {b}): estimated relative error {rel:.1e}",
            AccuracyWarning,
            stacklevel=2,
        )
    return value / b ** (2 * n - 1)


def _gamma_one_minus(rho: float) -> float:
    """``Gamma(1 - rho)``, via reflection ``pi / (sin(pi rho) Gamma(rho))`` for ``rho > 1``."""
    if rho < 1.0:
        return math.gamma(1.0 - rho)
    return math.pi / (specfun.sinpi(rho) * math.gamma(rho))


def sine_integral_frac(rho: float, a: float, b: float) -> float:
    """``int_0^inf sin(a x) / (b^2 + x^2)^rho dx`` for non-integer ``rho > 0``.

    Evaluates ``sqrt(pi)/2 Gamma(1-rho) (a/2b)^(rho-1/2) {I_{rho-1/2}(ab) -
    L_{1/2-rho}(ab)}``.  ``rho`` within ``1e-6`` of a positive integer is a
    domain error; use :func:`sine_integral_int` (or :func:`sine_integral`).
    """
    rho = float(rho)
    if not (math.isfinite(rho) and rho > 0.0):
        raise DomainError(f"rho must be finite and > 0, got {rho!r}")
    nearest = round(rho)
    if nearest >= 1 and abs(rho - nearest) <= INTEGER_SNAP:
        raise DomainError(f"rho={rho!r} is within {INTEGER_SNAP} of the integer {nearest}; use the integer path")
    a, b = _check_ab(a, b)
    if a == 0.0:
        return 0.0
    mu = rho - 0.5
    z = a * b
    # (a/2b)^mu {I - L} = b^(-2 mu) (z/2)^mu {I - L}
    scaled, rel = specfun.scaled_bessel_struve_difference(mu, z)
    if rel > 1e-10:
        warnings.warn(
            f"sine_integral_frac({rho}, {a}, {b}): I - L lost more than six digits (rel. error ~{rel:.1e})",
            AccuracyWarning,
            stacklevel=2,
        )
    return 0.5 * math.sqrt(math.pi) * _gamma_one_minus(rho) * scaled * b ** (-2.0 * mu)


def sine_integral(rho: float, a: float, b: float) -> float:
    """Dispatch on ``rho``: integers (to within ``1e-6``) use the integer closed form."""
    rho = float(rho)
    if not (math.isfinite(rho) and rho > 0.0):
        raise DomainError(f"rho must be finite and > 0, got {rho!r}")
    nearest = round(rho)
    if nearest >= 1 and abs(rho - nearest) <= INTEGER_SNAP:
        return sine_integral_int(nearest, a, b)
    return sine_integral_frac(rho, a, b)


def bessel_struve_limit(n: int, x: float) -> float:
    """``lim_{nu -> n} (I_{nu-1/2}(x) - L_{1/2-nu}(x)) / sin(pi nu)`` for ``x > 0``."""
    n = _check_order(n)
    x = float(x)
    if not (math.isfinite(x) and x > 0.0):
        raise DomainError(f"x must be finite and > 0, got {x!r}")
    value, rel = _closed_form_unit(n, x)
    if rel > _WARN_RTOL:
        warnings.warn(
            f"bessel_struve_limit({n}, {x}): estimated relative error {rel:.1e}",
            AccuracyWarning,
            stacklevel=2,
        )
    try:
        prefactor = 2.0 / math.pi**1.5 * math.factorial(n - 1) * (2.0 / x) ** (n - 0.5)
    except OverflowError:
        prefactor = math.inf
    if math.isfinite(prefactor) and prefactor > 0.0:
        return prefactor * value
    log_pref = math.log(2.0) - 1.5 * math.log(math.pi) + math.lgamma(n) + (n - 0.5) * math.log(2.0 / x)
    return specfun.mul_exp(log_pref, value)
