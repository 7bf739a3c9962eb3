import math

import pytest

from astkit import astdist, oracle
from astkit.errors import DomainError


def test_sine_kernel_unit():
    r = oracle.quad_sine_kernel(1, 1.0, 1.0, 1e-12)
    assert abs(r.value - 0.64676112277913007) < 1e-11
    assert r.n_evals > 0


def test_sine_kernel_fractional():
    r = oracle.quad_sine_kernel(0.5, 1.0, 1.0, 1e-12)
    assert abs(r.value - 0.87308424265086754) < 1e-10


def test_sine_kernel_tolerance_bounds():
    with pytest.raises(DomainError):
        oracle.quad_sine_kernel(1, 1.0, 1.0, 1e-15)
    with pytest.raises(DomainError):
        oracle.quad_sine_kernel(1, 1.0, 1.0, 0.1)


def test_wynn_epsilon_alternating_log2():
    partial = []
    s = 0.0
    for k in range(1, 21):
        s += (-1) ** (k + 1) / k
        partial.append(s)
    value, err = oracle.wynn_epsilon(partial)
    assert abs(value - math.log(2.0)) < 1e-12
    assert err < 1e-8


def test_wynn_epsilon_geometric_is_exact():
    partial = [sum(0.5**j for j in range(k + 1)) for k in range(6)]
    value, _ = oracle.wynn_epsilon(partial)
    assert abs(value - 2.0) < 1e-14


def test_cosine_integral_known():
    # int_0^inf cos(x)/(1+x^2) dx = pi/(2e)
    r = oracle.oscillatory_integral(lambda x: 1.0 / (1.0 + x * x), 1.0, "cos", 1e-12)
    assert abs(r.value - math.pi / (2 * math.e)) < 1e-11


@pytest.mark.parametrize("alpha,nu1,nu2", [(0.5, 1.0, 1.0), (0.2, 0.3, 6.0), (0.9, 8.0, 0.5)])
def test_pdf_norm(alpha, nu1, nu2):
    r = oracle.quad_pdf_norm(astdist.make_params(alpha, nu1, nu2), 1e-12)
    assert abs(r.value - 1.0) < 1e-10


def test_quad_cf_cauchy():
    p = astdist.make_params(0.5, 1.0, 1.0)
    c = oracle.quad_cf(p, 2.0, 1e-12)
    assert abs(c.re - math.exp(-2.0)) < 1e-11
    assert abs(c.im) < 1e-11


def test_quad_cf_at_zero_is_mass():
    re, im = oracle.quad_cf_detailed(astdist.make_params(0.3, 2.0, 4.0), 0.0)
    assert abs(re.value - 1.0) < 1e-10
    assert im.value == 0.0


def test_quad_cf_matches_closed_form():
    p = astdist.make_params(0.3, 2.5, 4.0)
    c = oracle.quad_cf(p, -1.0, 1e-12)
    ref = astdist.cf(p, -1.0)
    assert abs(c.re - ref.re) < 1e-10
    assert abs(c.im - ref.im) < 1e-10


def test_deterministic():
    p = astdist.make_params(0.7, 1.0, 3.0)
    assert oracle.quad_cf(p, 7.0, 1e-10) == oracle.quad_cf(p, 7.0, 1e-10)


def test_tolerance_honesty_and_self_consistency():
    from astkit import sinetransform

    for n in (1, 3, 6):
        for a in (0.1, 1.0, 5.0):
            for b in (0.5, 2.0):
                exact = sinetransform.sine_integral_int(n, a, b)
                coarse = oracle.quad_sine_kernel(n, a, b, 1e-9)
                fine = oracle.quad_sine_kernel(n, a, b, 5e-10)
                assert coarse.abs_err_estimate <= 1e-9
                assert abs(coarse.value - exact) <= coarse.abs_err_estimate + 1e-12 * abs(exact)
                assert abs(fine.value - coarse.value) <= coarse.abs_err_estimate
