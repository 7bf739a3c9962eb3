import math
import warnings

import pytest

from astkit import astdist, sinetransform
from astkit.errors import AccuracyWarning, DomainError

# 30-digit mpmath quadrature of the density
CF_REF = [
    (0.3, 2.5, 4.0, 1.0, 0.42879890189288988, 0.23551819535603804),
    (0.7, 1.0, 3.0, -2.0, 0.14789835946966673, 0.032150759403237448),
    (0.2, 0.7, 5.5, 0.5, 0.6564083308017204, 0.37553767835727875),
    (0.5, 3.0, 3.0, 4.0, 0.0077677339421019199, 0.0),
    (0.6, 5.0, 1.5, 10.0, 8.9562892631492855e-5, 0.0010615299164039095),
]


def rel(a, b):
    return abs(a - b) / abs(b)


@pytest.mark.parametrize("alpha,nu1,nu2,t,re,im", CF_REF)
def test_cf_frozen(alpha, nu1, nu2, t, re, im):
    c = astdist.cf(astdist.make_params(alpha, nu1, nu2), t)
    assert rel(c.re, re) < 1e-12
    if im == 0.0:
        assert abs(c.im) < 1e-15
    else:
        assert rel(c.im, im) < 1e-11


def test_params_identity():
    p = astdist.make_params(0.3, 1.0, 5.0)
    assert rel(p.alpha / p.alpha_star * p.k_nu1, p.b_const) < 1e-14
    assert rel((1 - p.alpha) / p.alpha_star_c * p.k_nu2, p.b_const) < 1e-14
    assert abs(p.alpha_star + p.alpha_star_c - 1.0) < 1e-15


@pytest.mark.parametrize("args", [(0.0, 1, 1), (1.0, 1, 1), (0.5, 0.0, 1), (0.5, 1, -2), (math.nan, 1, 1)])
def test_params_domain(args):
    with pytest.raises(DomainError):
        astdist.make_params(*args)


def test_pdf_continuous_at_origin():
    p = astdist.make_params(0.2, 1.5, 7.0)
    assert rel(astdist.pdf(p, -1e-300), astdist.pdf(p, 1e-300)) < 1e-14
    assert rel(astdist.pdf(p, 0.0), p.b_const) < 1e-14


def test_pdf_loc_scale():
    # Y = mu + sigma B X
    q = astdist.make_loc_scale(0.4, 2.0, 3.0, 1.5, 2.0)
    b = q.base.b_const
    for y in (-3.0, 1.5, 4.0):
        assert rel(astdist.pdf_loc_scale(q, y), astdist.pdf(q.base, (y - 1.5) / (2.0 * b)) / (2.0 * b)) < 1e-13


def test_pdf_far_tail_underflows_cleanly():
    p = astdist.make_params(0.5, 8.0, 8.0)
    assert astdist.pdf(p, 1e200) == 0.0


def test_cauchy_reduction():
    p = astdist.make_params(0.5, 1.0, 1.0)
    for t in (0.5, 1.0, 3.0):
        c = astdist.cf(p, t)
        assert abs(c.re - math.exp(-t)) < 1e-14
        assert abs(c.im) < 1e-15


def test_student_reduction():
    for nu in (0.6, 2.0, 7.3):
        p = astdist.make_params(0.5, nu, nu)
        for t in (0.2, 2.0):
            assert abs(astdist.cf(p, t).re - astdist.student_t_cf(nu, t)) < 1e-13


def test_student_t_cf_closed_forms():
    # nu = 1 is Cauchy; nu = 3 gives (1 + sqrt3|t|) exp(-sqrt3|t|)
    assert rel(astdist.student_t_cf(1.0, 2.0), math.exp(-2.0)) < 1e-14
    s = math.sqrt(3.0) * 1.5
    assert rel(astdist.student_t_cf(3.0, 1.5), (1 + s) * math.exp(-s)) < 1e-13


def test_cf_components_at_zero():
    assert astdist.cf_a(0.3, 0.4, 2.0, 0.0) == 0.3
    assert astdist.cf_b(0.3, 0.4, 2.0, 0.0) == 0.0


def test_cf_a_small_argument_approaches_alpha():
    # the deficit behaves like z^nu for nu < 2, so it is visible well before z = 1e-8
    v = astdist.cf_a(0.3, 0.4, 0.2, 1e-10)
    assert 0.29 < v < 0.3


def test_odd_branch_prefactor():
    # nu = 1: B term is (2 alpha / pi) * int_0^inf sin(2 alpha* t y) / (1 + y^2) dy
    alpha, a_star, t = 0.3, 0.45, 1.7
    expected = 2 * alpha / math.pi * sinetransform.sine_integral_int(1, 2 * a_star * t, 1.0)
    assert rel(astdist.cf_b(alpha, a_star, 1.0, t), expected) < 1e-14


def test_odd_seam_continuity():
    for alpha in (0.1, 0.5, 0.9):
        ref = astdist.cf(astdist.make_params(alpha, 3.0, 2.0), 1.0)
        for d in (1e-5, -1e-5):
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", AccuracyWarning)
                c = astdist.cf(astdist.make_params(alpha, 3.0 + d, 2.0), 1.0)
            assert rel(c.re, ref.re) < 1e-4
            assert rel(c.im, ref.im) < 1e-4


def test_warning_zone():
    with pytest.warns(AccuracyWarning):
        astdist.cf_b(0.3, 0.4, 3.0 + 1e-4, 1.0)


def test_snap_zone_is_silent():
    with warnings.catch_warnings():
        warnings.simplefilter("error", AccuracyWarning)
        a = astdist.cf_b(0.3, 0.4, 3.0 + 1e-7, 1.0)
    assert a == astdist.cf_b(0.3, 0.4, 3.0, 1.0)


def test_large_t_decays():
    c = astdist.cf(astdist.make_params(0.4, 2.5, 3.5), 1e4)
    assert abs(c) < 1e-6


def test_loc_scale_rotation():
    q = astdist.make_loc_scale(0.3, 2.0, 5.0, 0.7, 1.3)
    got = complex(astdist.cf_loc_scale(q, 2.0))
    ref = complex(math.cos(1.4), math.sin(1.4)) * complex(astdist.cf(q.base, 1.3 * q.base.b_const * 2.0))
    assert abs(got - ref) < 1e-15


def test_complex_value_helpers():
    c = astdist.ComplexValue(3.0, 4.0)
    assert abs(c) == 5.0
    assert complex(c.conjugate()) == complex(3.0, -4.0)


def test_loc_scale_cf_against_quadrature():
    from astkit import oracle

    mu, t = 2.0, 0.8
    q = astdist.make_loc_scale(0.4, 3.0, 2.0, mu, 1.5)
    right = lambda s: astdist.pdf_loc_scale(q, mu + s)  # noqa: E731
    left = lambda s: astdist.pdf_loc_scale(q, mu - s)  # noqa: E731
    re = sum(oracle.oscillatory_integral(f, t, "cos", 1e-12).value for f in (left, right))
    im = oracle.oscillatory_integral(right, t, "sin", 1e-12).value - oracle.oscillatory_integral(left, t, "sin", 1e-12).value
    ref = complex(math.cos(mu * t), math.sin(mu * t)) * complex(re, im)
    got = astdist.cf_loc_scale(q, t)
    assert rel(got.re, ref.real) < 1e-6
    assert rel(got.im, ref.imag) < 1e-6


def test_fourier_inversion_recovers_pdf():
    from scipy import integrate

    p = astdist.make_params(0.3, 2.5, 4.0)
    for x in (-1.0, 0.0, 2.0):
        def integrand(t):
            c = astdist.cf(p, t)
            return c.re * math.cos(t * x) + c.im * math.sin(t * x)

        val = integrate.quad(integrand, 0.0, 80.0, limit=400)[0] / math.pi
        assert abs(val - astdist.pdf(p, x)) < 1e-4
