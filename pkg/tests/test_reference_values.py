"""Worked values for each public operation (closed forms or 30-digit mpmath)."""
import math

import pytest

from astkit import astdist, oracle, sinetransform, specfun


def rel(a, b):
    return abs(a - b) / abs(b)


def test_ln_gamma_values():
    assert specfun.ln_gamma(1.0) == 0.0
    assert rel(specfun.ln_gamma(0.5), math.log(math.sqrt(math.pi))) < 1e-15
    assert rel(specfun.ln_gamma(10.3), 13.4820367861383585926530059808) < 1e-15


def test_bessel_i_values():
    assert rel(specfun.bessel_i(0.5, 1.0), 0.9376748882454876) < 1e-14
    assert rel(specfun.bessel_i(-0.5, 1.0), math.sqrt(2 / math.pi) * math.cosh(1.0)) < 1e-14
    assert rel(specfun.bessel_i(1.25, 2.0), 1.34019675898289722424977354772) < 1e-14


def test_bessel_i_scaled_values():
    assert rel(specfun.bessel_i_scaled(0.5, 1.0), math.exp(-1) * 0.9376748882454876) < 1e-14
    assert abs(specfun.bessel_i_scaled(0.0, 1e-8) - (1 - 1e-8)) < 1e-15
    assert rel(specfun.bessel_i_scaled(2.1, 800.0), 0.0140680920290818917858694750345) < 1e-14


def test_bessel_k_values():
    assert rel(specfun.bessel_k(0.5, 1.0), math.sqrt(math.pi / 2) * math.exp(-1)) < 1e-13
    assert rel(specfun.bessel_k(0.5, 2.0), math.sqrt(math.pi / 4) * math.exp(-2)) < 1e-13
    assert rel(specfun.bessel_k(1.7, 3.4), 0.0318529329457723165630199291952) < 1e-13


def test_struve_l_values():
    assert rel(specfun.struve_l(0.5, 1.0), math.sqrt(2 / math.pi) * (math.cosh(1.0) - 1)) < 1e-14
    assert rel(specfun.struve_l(-0.5, 1.0), 0.9376748882454876) < 1e-14
    assert rel(specfun.struve_l(-1.3, 2.5), 2.19194600739910086178213002135) < 1e-13


def test_ei_values():
    assert rel(specfun.ei(1.0), 1.8951178163559368) < 1e-15
    assert rel(specfun.ei(-1.0), -0.21938393439552026) < 1e-15
    assert specfun.ei(-3.0) < 0.0


def test_ei_scaled_values():
    p = specfun.ei_scaled(1.0)
    assert rel(p.eneg, 0.6971748832350660) < 1e-15
    assert rel(p.epos, -0.5963473623231940) < 1e-15
    p = specfun.ei_scaled(100.0)
    assert rel(p.eneg, 0.0101020625277483571123003599185) < 1e-15
    assert rel(p.epos, -0.00990194228673301840640593181981) < 1e-15
    p = specfun.ei_scaled(1e6)
    assert p.eneg > 0.0 > p.epos


def test_sine_integral_int_values():
    assert sinetransform.sine_integral_int(4, 0.0, 2.0) == 0.0
    assert rel(sinetransform.sine_integral_int(1, 1.0, 1.0), 0.6467611227791301) < 1e-14
    assert rel(sinetransform.sine_integral_int(2, 1.0, 1.0), 0.5 * math.exp(-1) * specfun.ei(1.0)) < 1e-14
    x, b = 1.0, 0.5
    n3 = ((3 + 3 * x + x * x) * math.exp(-x) * specfun.ei(x)
          - (3 - 3 * x + x * x) * math.exp(x) * specfun.ei(-x) - 2 * x) / (16 * b**5)
    assert rel(sinetransform.sine_integral_int(3, 2.0, 0.5), n3) < 1e-13


def test_sine_integral_frac_values():
    assert rel(sinetransform.sine_integral_frac(0.5, 1.0, 1.0), 0.87308424265086754) < 1e-14
    assert rel(sinetransform.sine_integral_frac(1.5, 1.0, 1.0), 0.46845081220429197410968173383) < 1e-14
    assert sinetransform.sine_integral_frac(2.5, 0.0, 1.0) == 0.0


def test_sine_integral_dispatch_values():
    ref = sinetransform.sine_integral_int(2, 1.0, 1.0)
    assert sinetransform.sine_integral(2 + 1e-9, 1.0, 1.0) == ref
    assert sinetransform.sine_integral(2.5, 1.0, 1.0) == sinetransform.sine_integral_frac(2.5, 1.0, 1.0)
    gap = rel(sinetransform.sine_integral(1 - 1e-5, 1.0, 1.0), sinetransform.sine_integral(1.0, 1.0, 1.0))
    assert gap <= 1e-4


def test_limit_values():
    x = 0.7
    pair = specfun.ei_scaled(x)
    single = 2 / math.pi**1.5 * math.sqrt(2 / x) * 0.5 * (pair.eneg - pair.epos)
    assert rel(sinetransform.bessel_struve_limit(1, x), single) < 1e-14
    assert rel(sinetransform.bessel_struve_limit(1, 1.0), 0.32852172212927207) < 1e-14


def test_params_values():
    p = astdist.make_params(0.5, 2.7, 2.7)
    assert p.alpha_star == 0.5 and rel(p.b_const, astdist.student_t_norm(2.7)) < 1e-15
    assert rel(astdist.make_params(0.3, 2.0, 2.0).alpha_star, 0.3) < 1e-15


def test_pdf_values():
    nu = 3.0
    p = astdist.make_params(0.5, nu, nu)
    for x in (-2.0, 0.5, 4.0):
        # alpha* = 1/2: the density is Student t in x / (2 * 1/2) = x
        student = astdist.student_t_norm(nu) * (1 + x * x / nu) ** (-(nu + 1) / 2)
        assert rel(astdist.pdf(p, x), student) < 1e-14
    q = astdist.make_loc_scale(0.3, 2.0, 5.0, 1.2, 2.5)
    assert rel(astdist.pdf_loc_scale(q, 1.2), 1 / 2.5) < 1e-15


def test_cf_values():
    p = astdist.make_params(0.3, 2.5, 4.0)
    assert astdist.cf_a(0.3, p.alpha_star, 2.5, 1.7) > 0.0
    assert astdist.cf_b(0.3, p.alpha_star, 2.5, 0.0) == 0.0
    c = astdist.cf(p, 0.0)
    assert (c.re, c.im) == (1.0, 0.0)
    c = astdist.cf(astdist.make_params(0.5, 1.0, 1.0), 1.0)
    assert abs(c.re - math.exp(-1)) < 1e-15 and c.im == 0.0
    ref = oracle.quad_cf(p, 1.7, 1e-12)
    c = astdist.cf(p, 1.7)
    assert rel(c.re, ref.re) < 1e-6 and rel(c.im, ref.im) < 1e-6


def test_cf_loc_scale_values():
    base = astdist.make_params(0.3, 2.5, 4.0)
    q = astdist.make_loc_scale(0.3, 2.5, 4.0, 0.0, 1.0 / base.b_const)
    for t in (0.4, 3.0):
        a, b = astdist.cf_loc_scale(q, t), astdist.cf(base, t)
        assert rel(a.re, b.re) < 1e-14 and rel(a.im, b.im) < 1e-14
    c = astdist.cf_loc_scale(q, 0.0)
    assert (c.re, c.im) == (1.0, 0.0)


def test_student_t_cf_values():
    assert rel(astdist.student_t_cf(1.0, -2.5), math.exp(-2.5)) < 1e-14
    assert astdist.student_t_cf(4.0, 0.0) == 1.0
    assert rel(astdist.student_t_cf(3.0, 2.0), 2 * astdist.cf_a(0.5, 0.5, 3.0, 2.0)) < 1e-14


def test_oracle_values():
    r = oracle.quad_sine_kernel(1, 1.0, 1.0, 1e-10)
    assert abs(r.value - 0.6467611227791301) < 1e-10
    small = oracle.quad_sine_kernel(1, 1e-6, 1.0, 1e-12).value
    assert 0.0 < small < 1e-4
    r = oracle.quad_sine_kernel(2, 5.0, 0.5, 1e-9)
    assert rel(r.value, sinetransform.sine_integral_int(2, 5.0, 0.5)) < 1e-8
    re, im = oracle.quad_cf_detailed(astdist.make_params(0.5, 2.5, 2.5), 1.3, 1e-10)
    assert abs(im.value) < 1e-10


@pytest.mark.parametrize("v", [0.5, 1.0, 2.3])
@pytest.mark.parametrize("x", [0.5, 2.0])
def test_basset_identity_via_oracle(v, x):
    integral = oracle.oscillatory_integral(lambda u: (1 + u * u) ** -(v + 0.5), x, "cos", 1e-12).value
    closed = math.sqrt(math.pi) * x**v * specfun.bessel_k(v, x) / (2**v * math.gamma(v + 0.5))
    assert rel(integral, closed) < 1e-8


def test_heavy_tail_normalisation():
    assert abs(oracle.quad_pdf_norm(astdist.make_params(0.4, 3.0, 0.3), 1e-12).value - 1.0) < 1e-10
