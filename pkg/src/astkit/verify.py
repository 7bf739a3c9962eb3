"""Acceptance checks C1-C11, shared by ``astkit verify`` and the test suite.

Each check returns one :class:`CheckResult`.  Kernels are always reached
through their module (``sinetransform.sine_integral_int`` and so on), so a
monkeypatched kernel is seen by every check.
"""
from __future__ import annotations

import cmath
import math
import random
import warnings
from dataclasses import dataclass
from typing import Callable

from . import astdist, oracle, sinetransform, specfun
from .errors import AccuracyWarning

__all__ = ["CheckResult", "CHECKS", "run_checks", "component_error", "DEFAULT_TOL"]

DEFAULT_TOL = 1e-6
ORACLE_TOL = 1e-13
# components smaller than this are compared in absolute terms
ZERO_FLOOR = 1e-12

SINE_GRID = [
    (n, a, b)
    for n in range(1, 7)
    for a in (0.1, 1.0, 5.0)
    for b in (0.5, 1.0, 2.0)
]
CF_ALPHAS = (0.1, 0.5, 0.9)
CF_NUS = ((0.7, 4.2), (1.0, 1.0), (2.5, 3.0), (3.0, 1.0))
CF_TS = (0.3, -0.3, 1.0, -1.0, 7.0, -7.0)


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    max_rel_err: float
    tolerance: float
    passed: bool
    description: str


def rel_err(value: float, ref: float) -> float:
    if value == ref:
        return 0.0
    if ref == 0.0:
        return math.inf
    return abs(value - ref) / abs(ref)


def component_error(value: float, ref: float) -> float:
    """Relative error, or absolute error when ``ref`` is numerically zero."""
    if abs(ref) < ZERO_FLOOR:
        return abs(value - ref)
    return rel_err(value, ref)


def _result(check_id: str, errors: list[float], tol: float, description: str) -> CheckResult:
    worst = max(errors) if errors else 0.0
    return CheckResult(check_id, worst, tol, bool(worst <= tol), description)


def _random_params(rng: random.Random) -> astdist.AstParams:
    return astdist.make_params(rng.uniform(0.05, 0.95), rng.uniform(0.3, 10.0), rng.uniform(0.3, 10.0))


# ---------------------------------------------------------------------------


def check_sine_oracle(scale: float) -> CheckResult:
    errs = []
    worst_ratio = 0.0
    for n, a, b in SINE_GRID:
        value = sinetransform.sine_integral_int(n, a, b)
        ref = oracle.quad_sine_kernel(n, a, b, ORACLE_TOL).value
        tol = 1e-6 if a * b * n >= 90.0 else 1e-8
        e = rel_err(value, ref)
        errs.append(e)
        worst_ratio = max(worst_ratio, e / tol)
    res = _result("C1", errs, 1e-8 * scale, "integer sine integral vs quadrature, 54 points")
    # points flagged for cancellation carry the looser bound
    return CheckResult(res.check_id, res.max_rel_err, res.tolerance, worst_ratio <= scale, res.description)


def _golden(n: int, a: float, b: float) -> float:
    x = a * b
    ep = math.exp(-x) * specfun.ei(x)
    em = math.exp(x) * specfun.ei(-x)
    if n == 2:
        return ((1 + x) * ep - (1 - x) * em) / (4 * b**3)
    if n == 3:
        return ((3 + 3 * x + x * x) * ep - (3 - 3 * x + x * x) * em - 2 * x) / (16 * b**5)
    return (
        (15 + 15 * x + 6 * x * x + x**3) * ep - (15 - 15 * x + 6 * x * x - x**3) * em - 14 * x
    ) / (96 * b**7)


def check_golden_forms(scale: float) -> CheckResult:
    errs = [
        rel_err(sinetransform.sine_integral_int(n, a, b), _golden(n, a, b))
        for n, a, b in SINE_GRID
        if n in (2, 3, 4)
    ]
    return _result("C2", errs, 1e-12, "explicit n = 2, 3, 4 expressions")


def check_n1_identity(scale: float) -> CheckResult:
    errs = []
    for a in (0.1, 1.0, 5.0):
        for b in (0.5, 1.0, 2.0):
            x = a * b
            ref = (math.exp(-x) * specfun.ei(x) - math.exp(x) * specfun.ei(-x)) / (2 * b)
            errs.append(rel_err(sinetransform.sine_integral_int(1, a, b), ref))
    return _result("C3", errs, 1e-13, "n = 1 exponential-integral identity")


def check_limit(scale: float) -> CheckResult:
    h = 1e-4
    errs = []
    for n in (1, 2, 3):
        for x in (0.5, 1.0, 5.0):
            quotients = [
                (specfun.bessel_i(nu - 0.5, x) - specfun.struve_l(0.5 - nu, x)) / specfun.sinpi(nu)
                for nu in (n + h, n - h)
            ]
            errs.append(rel_err(sinetransform.bessel_struve_limit(n, x), 0.5 * sum(quotients)))
    return _result("C4", errs, 1e-6 * scale, "Bessel-Struve limit vs symmetric difference at n +- 1e-4")


def check_cf_axioms(scale: float) -> CheckResult:
    rng = random.Random(20240501)
    worst = 0.0
    ok = True
    for _ in range(20):
        p = _random_params(rng)
        c0 = astdist.cf(p, 0.0)
        e0 = max(abs(c0.re - 1.0), abs(c0.im))
        ok &= e0 <= 1e-14
        worst = max(worst, e0)
        for t in (0.1, 1.0, 10.0):
            c = astdist.cf(p, t)
            m = astdist.cf(p, -t)
            eh = max(abs(c.re - m.re), abs(c.im + m.im))
            ok &= eh <= 1e-14 and abs(c) <= 1.0 + 1e-10
            worst = max(worst, eh, abs(c) - 1.0)
    return CheckResult("C5", worst, 1e-14, bool(ok), "cf(0) = 1, Hermitian symmetry, |cf| <= 1")


def check_cf_oracle(scale: float) -> CheckResult:
    errs = []
    for alpha in CF_ALPHAS:
        for nu1, nu2 in CF_NUS:
            p = astdist.make_params(alpha, nu1, nu2)
            for t in CF_TS:
                c = astdist.cf(p, t)
                ref = oracle.quad_cf(p, t, ORACLE_TOL)
                errs.append(component_error(c.re, ref.re))
                errs.append(component_error(c.im, ref.im))
    return _result("C6", errs, 1e-6 * scale, "characteristic function vs quadrature, 72 points")


def check_symmetric_reduction(scale: float) -> CheckResult:
    errs = []
    p = astdist.make_params(0.5, 1.0, 1.0)
    for t in (0.5, 1.0, 3.0):
        c = astdist.cf(p, t)
        errs += [abs(c.re - math.exp(-abs(t))), abs(c.im)]
    for nu in (0.7, 2.5, 4.2, 6.0):
        p = astdist.make_params(0.5, nu, nu)
        for t in (0.5, 1.0, 3.0):
            c = astdist.cf(p, t)
            errs += [abs(c.re - astdist.student_t_cf(nu, t)), abs(c.im)]
    return _result("C7", errs, 1e-12, "alpha = 1/2 reduces to Cauchy and Student t")


def check_loc_scale(scale: float) -> CheckResult:
    rng = random.Random(7)
    errs = []
    for _ in range(10):
        alpha, nu1, nu2 = rng.uniform(0.05, 0.95), rng.uniform(0.3, 10.0), rng.uniform(0.3, 10.0)
        mu, sigma, t = rng.uniform(-5.0, 5.0), rng.uniform(0.1, 5.0), rng.uniform(-10.0, 10.0)
        q = astdist.make_loc_scale(alpha, nu1, nu2, mu, sigma)
        got = astdist.cf_loc_scale(q, t)
        ref = cmath.exp(1j * mu * t) * complex(astdist.cf(q.base, sigma * q.base.b_const * t))
        errs += [component_error(got.re, ref.real), component_error(got.im, ref.imag)]
    return _result("C8", errs, 1e-13, "location-scale cf vs rotated standard cf")


def check_pdf(scale: float) -> CheckResult:
    rng = random.Random(11)
    errs = []
    ok = True
    for _ in range(10):
        p = _random_params(rng)
        mass = abs(oracle.quad_pdf_norm(p, 1e-12).value - 1.0)
        height = rel_err(astdist.pdf(p, 0.0), p.b_const)
        ok &= mass <= 1e-8 and height <= 1e-13
        errs += [mass, height]
    return CheckResult("C9", max(errs), 1e-8, bool(ok), "density integrates to 1, pdf(0) = B")


def check_seams(scale: float) -> CheckResult:
    errs = []
    for rho in (1, 2, 3):
        for a in (0.1, 1.0, 5.0):
            ref = sinetransform.sine_integral_int(rho, a, 1.0)
            for d in (1e-5, -1e-5):
                errs.append(rel_err(sinetransform.sine_integral_frac(rho + d, a, 1.0), ref))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", AccuracyWarning)
        for alpha in CF_ALPHAS:
            for odd in (1.0, 3.0):
                for t in (0.3, 1.0, 7.0):
                    ref = astdist.cf(astdist.make_params(alpha, odd, 2.0), t)
                    for d in (1e-5, -1e-5):
                        c = astdist.cf(astdist.make_params(alpha, odd + d, 2.0), t)
                        errs += [component_error(c.re, ref.re), component_error(c.im, ref.im)]
    return _result("C10", errs, 1e-4, "dispatch seams in rho and odd nu")


def check_text_round_trip(scale: float) -> CheckResult:
    p = astdist.make_params(0.3, 2.5, 4.0)
    bad = 0
    for i in range(101):
        t = -10.0 + 0.2 * i
        c = astdist.cf(p, t)
        for v in (t, c.re, c.im):
            bad += float("%.17g" % v) != v
    return CheckResult("C11", float(bad), 0.0, bad == 0, "17-digit text round trip of cf values")


CHECKS: dict[str, Callable[[float], CheckResult]] = {
    "C1": check_sine_oracle,
    "C2": check_golden_forms,
    "C3": check_n1_identity,
    "C4": check_limit,
    "C5": check_cf_axioms,
    "C6": check_cf_oracle,
    "C7": check_symmetric_reduction,
    "C8": check_loc_scale,
    "C9": check_pdf,
    "C10": check_seams,
    "C11": check_text_round_trip,
}


def run_checks(tol: float = DEFAULT_TOL, only: list[str] | None = None) -> list[CheckResult]:
    """Run the acceptance checks in order.

    ``tol`` rescales the oracle-comparison checks (C1, C4, C6): their
    thresholds are multiplied by ``tol / 1e-6``.  The identity checks keep
    fixed thresholds.
    """
    scale = tol / DEFAULT_TOL
    ids = only if only is not None else list(CHECKS)
    return [CHECKS[i](scale) for i in ids]
