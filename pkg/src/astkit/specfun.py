"""Special-function kernels.

Log-gamma, the modified Bessel functions I and K, the modified Struve
function L, and the exponential integral Ei together with the scaled pair
``(exp(-x) Ei(x), exp(x) Ei(-x))`` that the sine-integral formulas consume.

Everything works in binary64.  Series are accumulated with ``math.fsum``;
the only extended-precision code is :func:`ei_scaled_mp`, which evaluates in
whatever ``mpmath`` working precision the caller has set.
"""
from __future__ import annotations

import math
import sys
import warnings
from dataclasses import dataclass

import mpmath
import numpy as np
from scipy.special import dawsn

from .errors import AccuracyWarning, ConvergenceError, DomainError

__all__ = [
    "EULER_GAMMA",
    "ScaledEiPair",
    "ln_gamma",
    "sinpi",
    "cospi",
    "bessel_i",
    "bessel_i_scaled",
    "bessel_k",
    "bessel_k_scaled",
    "struve_l",
    "bessel_i_minus_struve_l",
    "ei",
    "ei_scaled",
    "ei_scaled_mp",
]

EULER_GAMMA = 0.57721566490153286

_EPS = sys.float_info.epsilon
_LOG_MAX = math.log(sys.float_info.max)
_SQRT_PI = math.sqrt(math.pi)
_MAX_TERMS = 100_000

# positive zero of Ei, as head + tail
_EI_ROOT_HI = 0.3725074107813666
_EI_ROOT_LO = 1.3140183414386028e-17

# Ei regimes
_EI_SERIES_MAX = 40.0


def _check_finite(value: float, name: str) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value!r}")
    return value


def _check_positive(value: float, name: str) -> float:
    value = _check_finite(value, name)
    if value <= 0.0:
        raise DomainError(f"{name} must be > 0, got {value!r}")
    return value


def ln_gamma(x: float) -> float:
    """Natural log of the gamma function for ``x > 0``."""
    x = _check_positive(x, "x")
    return math.lgamma(x)


def sinpi(x: float) -> float:
    """``sin(pi * x)`` with exact argument reduction (exact zeros at integers)."""
    r = math.remainder(x, 2.0)  # exact, in [-1, 1]
    sign = 1.0 if r >= 0.0 else -1.0
    r = abs(r)
    if r <= 0.25:
        return sign * math.sin(math.pi * r)
    if r <= 0.75:
        return sign * math.cos(math.pi * (0.5 - r))
    return sign * math.sin(math.pi * (1.0 - r))


def cospi(x: float) -> float:
    """``cos(pi * x)`` with exact argument reduction (exact zeros at half-integers)."""
    r = abs(math.remainder(x, 2.0))
    if r <= 0.25:
        return math.cos(math.pi * r)
    if r <= 0.75:
        return math.sin(math.pi * (0.5 - r))
    return -math.cos(math.pi * (1.0 - r))


def _is_nonpositive_integer(q: float) -> bool:
    return q <= 0.0 and q == math.floor(q)


def _gamma_sign(q: float) -> float:
    if q > 0.0:
        return 1.0
    return -1.0 if math.ceil(-q) % 2 else 1.0


def mul_exp(log_scale: float, total: float) -> float:
    """Return ``exp(log_scale) * total`` without spurious over/underflow."""
    if total == 0.0:
        return 0.0
    if -700.0 <= log_scale <= 700.0:
        return math.exp(log_scale) * total
    lv = log_scale + math.log(abs(total))
    if lv > _LOG_MAX:
        raise OverflowError("result exceeds the largest finite float")
    return math.copysign(math.exp(lv), total)


def _ascending(p: float, q1: float, q2: float, x: float) -> tuple[float, float, float]:
    """Sum ``(x/2)**(2k+p) / (Gamma(k+q1) Gamma(k+q2))`` over ``k >= 0``.

    Both the modified Bessel and modified Struve ascending series have this
    shape.  The recurrence is anchored at the largest term so that large
    arguments neither overflow nor lose the leading terms to underflow.

    Returns ``(log_scale, total, abs_total)``; the series value is
    ``exp(log_scale) * total`` and ``abs_total`` is the same-scale sum of
    absolute terms (used for cancellation estimates).
    """
    h = 0.5 * x
    h2 = h * h
    lnh = math.log(0.5) + math.log(x)

    # 1/Gamma vanishes at the poles, so those leading terms are exact zeros
    kmin = 0
    for q in (q1, q2):
        if _is_nonpositive_integer(q):
            kmin = max(kmin, int(-q) + 1)

    root = 0.5 * (math.sqrt((q1 - q2) ** 2 + 4.0 * h2) - q1 - q2)
    kpeak = max(kmin, math.ceil(root))

    def lnterm(k: int) -> float:
        return (2 * k + p) * lnh - math.lgamma(k + q1) - math.lgamma(k + q2)

    if kpeak - kmin <= 2000:
        ka = max(range(kmin, kpeak + 1), key=lnterm)
    else:
        ka = kpeak

    log_scale = 0.0
    anchor = 0.0
    try:
        anchor = h ** (2 * ka + p) / (math.gamma(ka + q1) * math.gamma(ka + q2))
    except (OverflowError, ValueError, ZeroDivisionError):
        anchor = 0.0
    if not (math.isfinite(anchor) and abs(anchor) >= 1e-290):
        log_scale = lnterm(ka)
        anchor = _gamma_sign(ka + q1) * _gamma_sign(ka + q2)

    terms = [anchor]
    running = anchor
    u = anchor
    k = ka
    for _ in range(_MAX_TERMS):
        r = h2 / ((k + q1) * (k + q2))
        u *= r
        k += 1
        terms.append(u)
        running += u
        if k + q1 > 0.0 and k + q2 > 0.0 and abs(r) < 1.0 and abs(u) <= 1e-17 * abs(running):
            break
    else:
        raise ConvergenceError(f"ascending series did not converge for x={x!r}")

    if h2 > 0.0:
        u = anchor
        k = ka
        while k > kmin:
            d = (k - 1 + q1) * (k - 1 + q2)
            if d == 0.0:
                break
            u = u * d / h2
            k -= 1
            terms.append(u)

    total = math.fsum(terms)
    abs_total = math.fsum(abs(t) for t in terms)
    return log_scale, total, abs_total


# --------------------------------------------------------------------------
# Modified Bessel function of the first kind
# --------------------------------------------------------------------------

def _bessel_i_asymptotic(nu: float, x: float) -> float:
    """``sqrt(2 pi x) exp(-x) I_nu(x)`` from the large-argument expansion."""
    mu4 = 4.0 * nu * nu
    term = 1.0
    terms = [1.0]
    for k in range(1, 500):
        nxt = -term * (mu4 - (2 * k - 1) ** 2) / (8.0 * k * x)
        if abs(nxt) > abs(term):
            break
        term = nxt
        terms.append(term)
        if abs(term) <= 1e-17:
            break
    return math.fsum(terms)


def _bessel_i_parts(nu: float, x: float) -> tuple[float, float]:
    if nu < 0.0 and nu == math.floor(nu):
        nu = -nu
    if x > 30.0 and x >= nu * nu:
        return x - 0.5 * math.log(2.0 * math.pi * x), _bessel_i_asymptotic(nu, x)
    log_scale, total, _ = _ascending(nu, 1.0, nu + 1.0, x)
    return log_scale, total


def bessel_i(nu: float, x: float) -> float:
    """Modified Bessel function of the first kind ``I_nu(x)``, ``x > 0``.

    Any finite real order is accepted.  Raises ``OverflowError`` when the
    value is not representable; use :func:`bessel_i_scaled` for large ``x``.
    """
    nu = _check_finite(nu, "nu")
    x = _check_positive(x, "x")
    log_scale, total = _bessel_i_parts(nu, x)
    return mul_exp(log_scale, total)


def bessel_i_scaled(nu: float, x: float) -> float:
    """``exp(-x) * I_nu(x)``; finite for every positive ``x``."""
    nu = _check_finite(nu, "nu")
    x = _check_positive(x, "x")
    if nu < 0.0 and nu == math.floor(nu):
        nu = -nu
    if x > 30.0 and x >= nu * nu:
        # skip the exp(x) round trip
        return _bessel_i_asymptotic(nu, x) / math.sqrt(2.0 * math.pi * x)
    log_scale, total = _bessel_i_parts(nu, x)
    return mul_exp(log_scale - x, total)


# --------------------------------------------------------------------------
# Modified Bessel function of the second kind
# --------------------------------------------------------------------------

def _log_cosh(y: np.ndarray) -> np.ndarray:
    y = np.abs(y)
    return y + np.log1p(np.exp(-2.0 * y)) - math.log(2.0)


def _bessel_k_parts(nu: float, x: float) -> tuple[float, float]:
    """``exp(x) K_nu(x) = exp(log_scale) * total``.

    Trapezoidal rule on ``int_0^inf exp(-x (cosh t - 1)) cosh(nu t) dt``.  The
    integrand is entire and decays double-exponentially, so the plain
    trapezoidal sum converges geometrically in the number of nodes; the step
    is halved until two levels agree.
    """

    log_x = math.log(x)

    def phi(t):
        # x (cosh t - 1) = exp(log x + t - log 2 + 2 log1p(-exp(-t))), overflow-free
        t = np.asarray(t, dtype=float)
        with np.errstate(divide="ignore"):
            decay = np.exp(log_x + t - math.log(2.0) + 2.0 * np.log1p(-np.exp(-t)))
        return -decay + _log_cosh(nu * t)

    if nu > 0.0:
        ratio = nu / x
        t_peak = math.asinh(ratio) if math.isfinite(ratio) else math.log(2.0 * nu) - log_x
    else:
        t_peak = 0.0
    log_scale = float(max(phi(0.0), phi(t_peak)))

    t_end = max(t_peak, 1.0)
    while float(phi(t_end)) - log_scale > -50.0:
        t_end += max(1.0, 0.25 * t_end)

    h = min(0.5, t_end / 16.0)
    n = math.ceil(t_end / h)
    nodes = h * np.arange(n + 1)
    f = np.exp(phi(nodes) - log_scale)
    total = h * (math.fsum(f) - 0.5 * float(f[0]))
    for _ in range(14):
        h *= 0.5
        mid = h * (2 * np.arange(n) + 1)
        fm = np.exp(phi(mid) - log_scale)
        new = 0.5 * total + h * math.fsum(fm)
        n *= 2
        converged = abs(new - total) <= 1e-11 * abs(new)
        total = new
        if converged:
            return log_scale, total
    raise ConvergenceError(f"K_nu quadrature did not converge (nu={nu!r}, x={x!r})")


def bessel_k(nu: float, x: float) -> float:
    """Modified Bessel function of the second kind ``K_nu(x)``.

    Requires ``nu >= 0`` (use ``K_{-nu} = K_nu`` upstream) and ``x > 0``.
    Underflows to 0 for very large ``x``.
    """
    nu = _check_finite(nu, "nu")
    if nu < 0.0:
        raise DomainError(f"nu must be >= 0 for bessel_k, got {nu!r}")
    x = _check_positive(x, "x")
    log_scale, total = _bessel_k_parts(nu, x)
    return mul_exp(log_scale - x, total)


def bessel_k_scaled(nu: float, x: float) -> float:
    """``exp(x) * K_nu(x)``."""
    nu = _check_finite(nu, "nu")
    if nu < 0.0:
        raise DomainError(f"nu must be >= 0 for bessel_k_scaled, got {nu!r}")
    x = _check_positive(x, "x")
    log_scale, total = _bessel_k_parts(nu, x)
    return mul_exp(log_scale, total)


def bessel_k_log_parts(nu: float, x: float) -> tuple[float, float]:
    """``K_nu(x) = exp(log_scale) * total`` with ``total`` of order one.

    Lets callers fold large powers of ``x`` into the exponent before
    exponentiating.
    """
    nu = _check_finite(nu, "nu")
    if nu < 0.0:
        raise DomainError(f"nu must be >= 0, got {nu!r}")
    x = _check_positive(x, "x")
    log_scale, total = _bessel_k_parts(nu, x)
    return log_scale - x, total


# --------------------------------------------------------------------------
# Modified Struve function
# --------------------------------------------------------------------------

def struve_l(nu: float, x: float) -> float:
    """Modified Struve function of the first kind ``L_nu(x)``.

    Ascending series, valid for every real order including negative
    non-integers.  Emits :class:`AccuracyWarning` if cancellation among the
    terms is estimated to exceed ``1e-6`` relative.
    """
    nu = _check_finite(nu, "nu")
    x = _check_positive(x, "x")
    if x > 750.0:
        raise OverflowError("struve_l overflows for x > 750")
    log_scale, total, abs_total = _ascending(nu + 1.0, 1.5, nu + 1.5, x)
    if total != 0.0:
        rel = 4.0 * _EPS * abs_total / abs(total)
        if rel > 1e-6:
            warnings.warn(
                f"struve_l({nu}, {x}): estimated relative error {rel:.1e} from cancellation",
                AccuracyWarning,
                stacklevel=2,
            )
    return mul_exp(log_scale, total)


def _sine_kernel_dawson(rho: float, z: float) -> float:
    """``int_0^inf sin(z y) (1 + y^2)^(-rho) dy`` for ``rho > 0``, ``z > 0``.

    Uses ``(1+y^2)^-rho = Gamma(rho)^-1 int_0^inf s^(rho-1) exp(-s(1+y^2)) ds``
    and the Gaussian sine transform, which turns the oscillatory integral into
    ``(z Gamma(rho))^-1 int_0^inf s^rho exp(-s) g(z / (2 sqrt s)) ds / s`` with
    ``g(w) = 2 w F(w)`` and ``F`` Dawson's integral.  The integrand is
    positive, so there is no cancellation; the outer integral uses an
    exp-sinh substitution ``s = exp(pi/2 sinh tau)`` and the trapezoidal rule.
    """
    log_s_lo = -(41.0 + 2.0 * abs(math.log(z))) / rho
    log_s_hi = math.log(60.0 + 2.0 * rho)
    tau_lo = -math.asinh(-log_s_lo / (0.5 * math.pi))
    tau_hi = math.asinh(log_s_hi / (0.5 * math.pi))

    def integrand(tau: np.ndarray) -> np.ndarray:
        u = 0.5 * math.pi * np.sinh(tau)
        s = np.exp(u)
        # far nodes overflow to w = inf or 0, where g is exactly 1 or 0
        with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
            w = 0.5 * z * np.exp(-0.5 * u)
            g = np.where(w > 1e8, 1.0 + 0.5 / (w * w), 2.0 * w * dawsn(np.minimum(w, 1e8)))
        return np.exp(rho * u - s) * g * (0.5 * math.pi) * np.cosh(tau)

    h = 1.0 / 16.0
    nodes = np.arange(tau_lo, tau_hi + h, h)
    total = h * math.fsum(integrand(nodes))
    for _ in range(10):
        h *= 0.5
        mids = nodes[:-1] + h
        new = 0.5 * total + h * math.fsum(integrand(mids))
        nodes = np.sort(np.concatenate([nodes, mids]))
        converged = abs(new - total) <= 1e-10 * abs(new)
        total = new
        if converged:
            return total / (z * math.gamma(rho))
    raise ConvergenceError(f"sine kernel quadrature did not converge (rho={rho!r}, z={z!r})")


def scaled_bessel_struve_difference(mu: float, z: float) -> tuple[float, float]:
    """``(z/2)**mu * (I_mu(z) - L_{-mu}(z))`` and its estimated relative error.

    Both functions grow like ``exp(z)`` while their difference decays, so the
    termwise difference of the two ascending series is used only while its
    cancellation estimate stays below ``1e-14``.  Beyond that, for
    ``mu > -1/2``, the difference is obtained from the sine kernel
    ``int_0^inf sin(z y)(1+y^2)^-(mu+1/2) dy`` via its Dawson-integral form.
    """
    if z <= 60.0:
        ls1, s1, a1 = _ascending(2.0 * mu, 1.0, mu + 1.0, z)
        ls2, s2, a2 = _ascending(1.0, 1.5, 1.5 - mu, z)
        v1 = mul_exp(ls1, s1)
        v2 = mul_exp(ls2, s2)
        diff = v1 - v2
        # rounding in the two sums, amplified by cancellation; the error of
        # exp(log_scale) is inherent to the result's magnitude and kept apart
        bound = 0.0
        for s, a, v in ((s1, a1, v1), (s2, a2, v2)):
            if s != 0.0:
                bound += abs(v) * (8.0 * _EPS * a / abs(s) + _EPS)
        scale_err = (max(abs(ls1), abs(ls2)) + 1.0) * _EPS
        if v1 == 0.0 and v2 == 0.0:
            # both terms underflowed
            return 0.0, 0.0
        if diff != 0.0 and bound <= 1e-14 * abs(diff):
            return diff, bound / abs(diff) + scale_err
        if mu <= -0.5:
            return diff, (bound / abs(diff) + scale_err if diff != 0.0 else math.inf)
    elif mu <= -0.5:
        raise DomainError("I_mu - L_-mu for mu <= -1/2 is only supported for z <= 60")

    if _is_nonpositive_integer(0.5 - mu):
        # I_{n-1/2} = L_{1/2-n} identically
        return 0.0, 0.0
    kernel = _sine_kernel_dawson(mu + 0.5, z)
    try:
        g = math.gamma(0.5 - mu)
        value = 2.0 * kernel / (_SQRT_PI * g)
    except OverflowError:
        value = _gamma_sign(0.5 - mu) * 2.0 * kernel / _SQRT_PI * math.exp(-math.lgamma(0.5 - mu))
    return value, 1e-14


def bessel_i_minus_struve_l(mu: float, x: float) -> float:
    """``I_mu(x) - L_{-mu}(x)`` evaluated without catastrophic cancellation.

    Stable for ``mu > -1/2``; for ``mu <= -1/2`` only the direct series is
    available and an :class:`AccuracyWarning` is raised when it loses more
    than six digits.
    """
    mu = _check_finite(mu, "mu")
    x = _check_positive(x, "x")
    value, rel = scaled_bessel_struve_difference(mu, x)
    if rel > 1e-10:
        warnings.warn(
            f"I_mu - L_-mu at mu={mu}, x={x}: estimated relative error {rel:.1e}",
            AccuracyWarning,
            stacklevel=2,
        )
    if value == 0.0:
        return 0.0
    return mul_exp(-mu * math.log(0.5 * x), value)


# --------------------------------------------------------------------------
# Exponential integral
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ScaledEiPair:
    """``eneg = exp(-x) Ei(x)`` and ``epos = exp(x) Ei(-x)`` for ``x > 0``."""

    eneg: float
    epos: float
    x: float


def _ei_near_root(x: float) -> float:
    """Ei(x) for 0 < x < 1, expanded about the positive zero of Ei.

    ``Ei(x) = ln(x/x0) + sum_k (x^k - x0^k)/(k k!)`` keeps full relative
    accuracy next to the zero, where the textbook series cancels.
    """
    d = (x - _EI_ROOT_HI) - _EI_ROOT_LO
    if abs(d) < 0.5 * _EI_ROOT_HI:
        log_part = math.log1p(d / _EI_ROOT_HI)
    else:
        log_part = math.log(x / _EI_ROOT_HI)
    # (x^k - x0^k)/(x - x0) = sum_{i<k} x^i x0^(k-1-i), built recursively
    poly = 1.0
    x0_pow = 1.0
    fact = 1.0
    terms = []
    for k in range(1, 60):
        fact *= k
        terms.append(poly / (k * fact))
        if poly / (k * fact) < 1e-18 * abs(terms[0]):
            break
        x0_pow *= _EI_ROOT_HI
        poly = x * poly + x0_pow
    return math.fsum([log_part, d * math.fsum(terms)])


def _ei_series_sum(x: float) -> float:
    """``sum_{k>=1} x^k / (k k!)``."""
    term = 1.0
    running = 0.0
    terms = []
    for k in range(1, _MAX_TERMS):
        term *= x / k
        terms.append(term / k)
        running += term / k
        if k > x and term / k < 1e-17 * running:
            break
    return math.fsum(terms)


def _ei_asymptotic_scaled(x: float) -> float:
    """``exp(-x) Ei(x) ~ sum_k k!/x^(k+1)`` truncated at the smallest term."""
    term = 1.0 / x
    terms = [term]
    for k in range(1, 400):
        nxt = term * k / x
        if nxt >= term:
            break
        term = nxt
        terms.append(term)
        if term < 1e-18 * terms[0]:
            break
    return math.fsum(terms)


def _e1_series(x: float) -> float:
    """E1(x) for 0 < x <= 1."""
    term = 1.0
    terms = [-EULER_GAMMA, -math.log(x)]
    for k in range(1, 100):
        term *= -x / k
        terms.append(-term / k)
        if abs(term) / k < 1e-18:
            break
    return math.fsum(terms)


def _e1_scaled_cf(x: float) -> float:
    """``exp(x) E1(x)`` for ``x > 1`` by modified Lentz continued fraction."""
    tiny = 1e-300
    b = x + 1.0
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, _MAX_TERMS):
        an = -float(i) * i
        b += 2.0
        d = 1.0 / (an * d + b)
        c = b + an / c
        delta = c * d
        h *= delta
        if abs(delta - 1.0) <= _EPS:
            return h
    raise ConvergenceError(f"E1 continued fraction did not converge for x={x!r}")


def ei(x: float) -> float:
    """Exponential integral ``Ei(x)`` (principal value for ``x > 0``).

    For ``x < 0`` returns ``-E1(-x)``.  ``x = 0`` is a domain error; values
    beyond ``x ~ 716`` overflow (see :func:`ei_scaled`).
    """
    x = _check_finite(x, "x")
    if x == 0.0:
        raise DomainError("Ei has a logarithmic singularity at x = 0")
    if x < 0.0:
        ax = -x
        if ax <= 1.0:
            return -_e1_series(ax)
        return -math.exp(-ax) * _e1_scaled_cf(ax)
    if x < 1.0:
        return _ei_near_root(x)
    if x <= _EI_SERIES_MAX:
        return math.fsum([EULER_GAMMA, math.log(x), _ei_series_sum(x)])
    scaled = _ei_asymptotic_scaled(x)
    if x <= 700.0:
        return math.exp(x) * scaled
    lv = x + math.log(scaled)
    if lv > _LOG_MAX:
        raise OverflowError(f"Ei({x}) exceeds the largest finite float")
    return math.exp(lv)


def ei_scaled(x: float) -> ScaledEiPair:
    """The pair ``(exp(-x) Ei(x), exp(x) Ei(-x))`` for ``x > 0``.

    No intermediate overflows: the first component uses the power series
    up to ``x = 40`` and the asymptotic series beyond; the second uses the
    series for ``x <= 1`` and the continued fraction for ``exp(x) E1(x)``
    beyond.
    """
    x = _check_positive(x, "x")
    if x < 1.0:
        eneg = _ei_near_root(x) * math.exp(-x)
    elif x <= _EI_SERIES_MAX:
        eneg = math.fsum([EULER_GAMMA, math.log(x), _ei_series_sum(x)]) * math.exp(-x)
    else:
        eneg = _ei_asymptotic_scaled(x)
    if x <= 1.0:
        epos = -math.exp(x) * _e1_series(x)
    else:
        epos = -_e1_scaled_cf(x)
    return ScaledEiPair(eneg=eneg, epos=epos, x=x)


def ei_scaled_mp(x) -> tuple:
    """Extended-precision ``(exp(-x) Ei(x), exp(x) Ei(-x))``.

    ``x`` is an ``mpmath.mpf``; the result carries the caller's working
    precision.  Used where the Ei products feed a sum with heavy
    cancellation.
    """
    ctx = mpmath.mp
    x = ctx.mpf(x)
    if x <= 0:
        raise DomainError("x must be > 0")
    eps = ctx.eps
    prec = ctx.prec

    if x > 0.75 * prec + 20:
        # asymptotic: smallest term ~ exp(-x), below working precision
        term = 1 / x
        eneg = term
        k = 1
        while True:
            term = term * k / x
            eneg += term
            if term < eps * eneg:
                break
            k += 1
    else:
        term = ctx.mpf(1)
        acc = ctx.mpf(0)
        k = 1
        while True:
            term = term * x / k
            acc += term / k
            if k > x and term / k < eps * acc:
                break
            k += 1
        eneg = (ctx.euler + ctx.log(x) + acc) * ctx.exp(-x)

    if x <= 1:
        term = ctx.mpf(1)
        acc = -ctx.euler - ctx.log(x)
        k = 1
        while True:
            term = -term * x / k
            acc -= term / k
            if abs(term) < eps:
                break
            k += 1
        epos = -ctx.exp(x) * acc
    else:
        tiny = ctx.mpf(2) ** (-10 * prec)
        b = x + 1
        c = 1 / tiny
        d = 1 / b
        h = d
        i = 1
        while True:
            an = -(i * i)
            b += 2
            d = 1 / (an * d + b)
            c = b + an / c
            delta = c * d
            h *= delta
            if abs(delta - 1) <= eps:
                break
            i += 1
            if i > 10 * _MAX_TERMS:
                raise ConvergenceError("extended E1 continued fraction did not converge")
        epos = -h
    return eneg, epos
