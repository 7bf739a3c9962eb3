"""Asymmetric Student's t (AST) distribution: density and characteristic function.

Parameters are the skewness ``alpha`` in (0, 1) and the left/right tail
parameters ``nu1, nu2 > 0``.  The characteristic function is assembled from
two even terms (a power times a modified Bessel K) and two odd terms (either
a Bessel-minus-Struve difference or, at odd integer tail parameters, the
exponential-integral closed form of the sine integral).
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from . import sinetransform, specfun
from .errors import AccuracyWarning, DomainError

__all__ = [
    "AstParams",
    "LocScaleParams",
    "ComplexValue",
    "student_t_norm",
    "make_params",
    "make_loc_scale",
    "pdf",
    "pdf_loc_scale",
    "cf_a",
    "cf_b",
    "cf",
    "cf_loc_scale",
    "student_t_cf",
    "ODD_SNAP",
    "ODD_WARN",
]

ODD_SNAP = 1e-6
ODD_WARN = 1e-3


def student_t_norm(nu: float) -> float:
    """``K(nu) = Gamma((nu+1)/2) / (sqrt(pi nu) Gamma(nu/2))``."""
    return math.exp(math.lgamma(0.5 * (nu + 1.0)) - math.lgamma(0.5 * nu) - 0.5 * math.log(math.pi * nu))


@dataclass(frozen=True)
class AstParams:
    """Validated AST parameters with the derived constants.

    ``alpha_star`` reweights the skewness by the tail normalisers and
    ``b_const`` is the density height at the origin.  ``alpha_star_c`` is
    ``1 - alpha_star`` computed without cancellation.
    """

    alpha: float
    nu1: float
    nu2: float
    alpha_star: float
    alpha_star_c: float
    k_nu1: float
    k_nu2: float
    b_const: float


@dataclass(frozen=True)
class LocScaleParams:
    base: AstParams
    mu: float
    sigma: float


@dataclass(frozen=True)
class ComplexValue:
    re: float
    im: float

    def __complex__(self) -> complex:
        return complex(self.re, self.im)

    def __abs__(self) -> float:
        return math.hypot(self.re, self.im)

    def conjugate(self) -> ComplexValue:
        return ComplexValue(self.re, -self.im)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise DomainError(message)


def make_params(alpha: float, nu1: float, nu2: float) -> AstParams:
    """Validate ``(alpha, nu1, nu2)`` and derive ``alpha*``, ``K(nu1)``, ``K(nu2)``, ``B``."""
    alpha, nu1, nu2 = float(alpha), float(nu1), float(nu2)
    _require(math.isfinite(alpha) and 0.0 < alpha < 1.0, f"alpha must be in (0,1), got {alpha!r}")
    _require(math.isfinite(nu1) and nu1 > 0.0, f"nu1 must be > 0, got {nu1!r}")
    _require(math.isfinite(nu2) and nu2 > 0.0, f"nu2 must be > 0, got {nu2!r}")
    k1 = student_t_norm(nu1)
    k2 = student_t_norm(nu2)
    left = alpha * k1
    right = (1.0 - alpha) * k2
    b_const = left + right
    return AstParams(
        alpha=alpha,
        nu1=nu1,
        nu2=nu2,
        alpha_star=left / b_const,
        alpha_star_c=right / b_const,
        k_nu1=k1,
        k_nu2=k2,
        b_const=b_const,
    )


def make_loc_scale(alpha: float, nu1: float, nu2: float, mu: float, sigma: float) -> LocScaleParams:
    mu, sigma = float(mu), float(sigma)
    _require(math.isfinite(mu), f"mu must be finite, got {mu!r}")
    _require(math.isfinite(sigma) and sigma > 0.0, f"sigma must be > 0, got {sigma!r}")
    return LocScaleParams(make_params(alpha, nu1, nu2), mu, sigma)


def _log1p_square(u: float) -> float:
    """``log(1 + u^2)`` without overflowing ``u^2``."""
    u = abs(u)
    if u > 1e150:
        return 2.0 * math.log(u) + math.log1p(1.0 / u / u)
    return math.log1p(u * u)


def _check_point(x: float, name: str) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {x!r}")
    return x


def pdf(p: AstParams, x: float) -> float:
    """Density of the AST distribution; ``x <= 0`` uses the left branch."""
    x = _check_point(x, "x")
    if x <= 0.0:
        height = p.alpha / p.alpha_star * p.k_nu1
        u = x / (2.0 * p.alpha_star * math.sqrt(p.nu1))
        nu = p.nu1
    else:
        height = (1.0 - p.alpha) / p.alpha_star_c * p.k_nu2
        u = x / (2.0 * p.alpha_star_c * math.sqrt(p.nu2))
        nu = p.nu2
    return math.exp(math.log(height) - 0.5 * (nu + 1.0) * _log1p_square(u))


def pdf_loc_scale(p: LocScaleParams, y: float) -> float:
    """Density with location ``mu`` and scale ``sigma``; ``y <= mu`` uses the left branch."""
    y = _check_point(y, "y")
    base = p.base
    d = y - p.mu
    if d <= 0.0:
        u = d / (2.0 * base.alpha * p.sigma * base.k_nu1 * math.sqrt(base.nu1))
        nu = base.nu1
    else:
        u = d / (2.0 * (1.0 - base.alpha) * p.sigma * base.k_nu2 * math.sqrt(base.nu2))
        nu = base.nu2
    return math.exp(-math.log(p.sigma) - 0.5 * (nu + 1.0) * _log1p_square(u))


def _check_component(alpha_eff: float, alpha_star_eff: float, nu: float, t: float) -> None:
    _require(math.isfinite(alpha_eff) and 0.0 < alpha_eff < 1.0, f"alpha must be in (0,1), got {alpha_eff!r}")
    _require(
        math.isfinite(alpha_star_eff) and 0.0 < alpha_star_eff < 1.0,
        f"alpha* must be in (0,1), got {alpha_star_eff!r}",
    )
    _require(math.isfinite(nu) and nu > 0.0, f"nu must be > 0, got {nu!r}")
    _require(math.isfinite(t), f"t must be finite, got {t!r}")


def cf_a(alpha_eff: float, alpha_star_eff: float, nu: float, t: float) -> float:
    """Even part ``2 alpha w^(nu/2) K_{nu/2}(2w) / Gamma(nu/2)``, ``w = alpha* sqrt(nu) |t|``.

    Equals ``alpha_eff`` at ``t = 0``.  The power and the Bessel function are
    combined in log space, so large ``|t|`` underflows cleanly to 0.
    """
    _check_component(alpha_eff, alpha_star_eff, nu, t)
    w = alpha_star_eff * math.sqrt(nu) * abs(t)
    if w == 0.0:
        return alpha_eff
    order = 0.5 * nu
    log_k, k_mant = specfun.bessel_k_log_parts(order, 2.0 * w)
    return 2.0 * alpha_eff * specfun.mul_exp(order * math.log(w) + log_k - math.lgamma(order), k_mant)


def _nearest_odd(nu: float) -> int:
    return 2 * max(0, round(0.5 * (nu - 1.0))) + 1


def cf_b(alpha_eff: float, alpha_star_eff: float, nu: float, t: float) -> float:
    """Odd part of one tail's contribution to the imaginary part of the CF.

    Tail parameters within ``1e-6`` of an odd integer use the
    exponential-integral closed form; all others use the Bessel-minus-Struve
    form, with an :class:`AccuracyWarning` inside ``1e-3`` of an odd integer.
    ``cf_b(..., 0) == 0``.
    """
    _check_component(alpha_eff, alpha_star_eff, nu, t)
    if t == 0.0:
        return 0.0
    sign = 1.0 if t > 0.0 else -1.0
    odd = _nearest_odd(nu)
    dist = abs(nu - odd)
    if dist <= ODD_SNAP:
        nu = float(odd)
        z = 2.0 * alpha_star_eff * math.sqrt(nu) * abs(t)
        # 2 alpha sqrt(nu) K(nu) = (2 alpha / sqrt(pi)) Gamma((nu+1)/2) / Gamma(nu/2)
        prefactor = 2.0 * alpha_eff / math.sqrt(math.pi) * math.exp(math.lgamma(0.5 * (nu + 1.0)) - math.lgamma(0.5 * nu))
        return sign * prefactor * sinetransform.sine_integral_int((odd + 1) // 2, z, 1.0)
    if dist <= ODD_WARN:
        warnings.warn(
            f"nu={nu!r} is within {dist:.1e} of the odd integer {odd}; general branch used",
            AccuracyWarning,
            stacklevel=2,
        )
    order = 0.5 * nu
    z = 2.0 * alpha_star_eff * math.sqrt(nu) * abs(t)
    if z == 0.0:
        # the term is O(z) and has underflowed
        return 0.0
    scaled, rel = specfun.scaled_bessel_struve_difference(order, z)
    if rel > 1e-10:
        warnings.warn(f"cf_b: I - L estimated relative error {rel:.1e}", AccuracyWarning, stacklevel=2)
    return sign * math.pi * alpha_eff * scaled / specfun.cospi(order) * math.exp(-math.lgamma(order))


def cf(p: AstParams, t: float) -> ComplexValue:
    """Characteristic function ``E[exp(i t X)]``."""
    t = _check_point(t, "t")
    re = cf_a(p.alpha, p.alpha_star, p.nu1, t) + cf_a(1.0 - p.alpha, p.alpha_star_c, p.nu2, t)
    im = cf_b(1.0 - p.alpha, p.alpha_star_c, p.nu2, t) - cf_b(p.alpha, p.alpha_star, p.nu1, t)
    return ComplexValue(re, im)


def cf_loc_scale(p: LocScaleParams, t: float) -> ComplexValue:
    """``exp(i mu t) * cf(base, sigma B t)``."""
    t = _check_point(t, "t")
    base = cf(p.base, p.sigma * p.base.b_const * t)
    c = math.cos(p.mu * t)
    s = math.sin(p.mu * t)
    return ComplexValue(c * base.re - s * base.im, s * base.re + c * base.im)


def student_t_cf(nu: float, t: float) -> float:
    """CF of Student's t with ``nu`` degrees of freedom:
    ``(sqrt(nu)|t|)^(nu/2) K_{nu/2}(sqrt(nu)|t|) / (2^(nu/2-1) Gamma(nu/2))``.
    """
    nu = float(nu)
    _require(math.isfinite(nu) and nu > 0.0, f"nu must be > 0, got {nu!r}")
    t = _check_point(t, "t")
    z = math.sqrt(nu) * abs(t)
    if z == 0.0:
        return 1.0
    order = 0.5 * nu
    log_k, k_mant = specfun.bessel_k_log_parts(order, z)
    log_pref = order * math.log(z) - (order - 1.0) * math.log(2.0) - math.lgamma(order)
    return specfun.mul_exp(log_pref + log_k, k_mant)
