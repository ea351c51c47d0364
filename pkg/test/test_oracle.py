"""
tests for nmpoly.oracle

The convolution tests take a few seconds each.
"""
import math
from fractions import Fraction

import pytest

from nmpoly import error
from nmpoly import expansion
from nmpoly import fourier
from nmpoly import oracle
from nmpoly import suites
from nmpoly.expansion import AT_ZERO, Exponent, LogPolynomial

F = Fraction
HALF = F(-1, 2)


def zero(terms):
    return expansion.make(AT_ZERO, terms)


def test_cutoff_plateau():
    c = oracle.Cutoff(0.5, 1.0)
    assert c(0.0) == 1.0
    assert c(0.5) == 1.0
    assert c(1.0) == 0.0
    assert c(3.0) == 0.0
    values = [c(0.5 + 0.05 * i) for i in range(11)]
    assert values == sorted(values, reverse=True)
    assert abs(c(0.75) - 0.5) < 1e-12
    sq = c.squared()
    assert abs(sq(0.6) - c(0.6) ** 2) < 1e-15


@pytest.mark.parametrize('radii', [(0, 1), (1, 0.5), (0.5, 0.5)])
def test_bad_cutoff(radii):
    with pytest.raises(error.OracleError) as exc:
        oracle.Cutoff(*radii)
    assert exc.value.tag == 'BAD_CUTOFF'


def test_strips():
    assert oracle.in_strip(-0.99, 0)
    assert not oracle.in_strip(-1.01, 0)
    assert not oracle.in_strip(-0.5, 0)
    assert oracle.in_strip(-1.5, 1)
    assert not oracle.in_strip(-0.99, 1)


def test_outside_strip():
    with pytest.raises(error.OracleError) as exc:
        oracle.bessel_mellin_integral(-1.01, 0)
    assert exc.value.tag == 'OUTSIDE_STRIP'
    with pytest.raises(error.OracleError):
        oracle.bessel_mellin_integral(-0.99, 1)


def test_bessel_closed_form():
    assert abs(oracle.bessel_closed_form(-1.5, 1) - 1) < 1e-14
    want = 2 ** -0.75 * math.gamma(0.125) / math.gamma(0.875)
    assert abs(oracle.bessel_closed_form(-0.875, 0) - want) < 1e-12 * want


def test_integral_of_j1_over_r():
    assert abs(oracle.bessel_mellin_integral(-1.5, 1) - 1) < 1e-6


@pytest.mark.parametrize('lam,n', [(-0.875, 0), (-0.97, 0), (-0.78, 0),
                                   (-1.75, 1), (-1.3, 1)])
def test_bessel_mellin(lam, n):
    (numeric, closed) = oracle.bessel_mellin_check(lam, n)
    assert abs(numeric - closed) <= 1e-5 * abs(closed)


def test_laurent_simple_pole():
    x = Exponent(HALF, 0, 0)
    got = oracle.numeric_mellin_laurent(x, LogPolynomial(1), 0, 0)
    assert len(got) == 2
    assert abs(got[0] - 1) < 1e-8
    assert abs(got[1]) < 1e-8


def test_laurent_pole_of_order_three():
    x = Exponent(HALF, 0, 0)
    got = oracle.numeric_mellin_laurent(x, LogPolynomial({2: 1}), 0, 0)
    assert abs(got[2] - 0.5) < 1e-8
    for k in (0, 1, 3):
        assert abs(got[k]) < 1e-8


def test_laurent_other_cutoff():
    x = Exponent(F(-1, 3), 1, 1)
    poly = LogPolynomial({1: 2})
    got = oracle.numeric_mellin_laurent(x, poly, 2, 2,
                                        cutoff=oracle.Cutoff(0.25, 0.75))
    assert abs(got[1] + 1) < 1e-8
    assert abs(got[0]) < 1e-8


def test_laurent_squared_cutoff():
    c = oracle.Cutoff().squared()
    assert c.power == 2
    row = suites.mellin_case(F(-1, 3), 1, 0, 2, c, 1e-6)
    assert row.ok
    assert 'power=2' in row.case


def test_laurent_angular_mismatch():
    x = Exponent(HALF, 1, 0)
    got = oracle.numeric_mellin_laurent(x, LogPolynomial(1), 0, 0)
    assert got == [0j, 0j]


def test_laurent_circle_too_wide():
    x = Exponent(HALF, 0, 0)
    circle = oracle.LaurentProbe(-0.5, radius=0.6)
    with pytest.raises(error.OracleError) as exc:
        oracle.numeric_mellin_laurent(x, LogPolynomial(1), 0, 0, circle)
    assert exc.value.tag == 'PROBE_TOO_WIDE'


def test_mellin_suite_case():
    row = suites.mellin_case(F(-5, 6), 2, 0, 1, oracle.Cutoff(), 1e-6)
    assert row.ok


def test_hat_leading_term():
    e = zero({(HALF, 0, 0): 0.5})
    value = oracle.numeric_hat_leading(e, 200.0)
    assert abs(value * 200 - 0.5) < 0.025
    predicted = oracle.predicted_hat_leading(e, 200.0)
    assert abs(value - predicted) < 0.05 * abs(predicted)


def test_hat_leading_term_phase():
    e = zero({(F(-2, 3), 1, 0): 1})
    value = oracle.numeric_hat_leading(e, 200.0, 0.7)
    predicted = oracle.predicted_hat_leading(e, 200.0, 0.7)
    assert abs(value - predicted) < 0.05 * abs(predicted)


def test_hat_leading_term_r_two_thirds():
    e = zero({(F(-2, 3), 0, 0): 1})
    value = oracle.numeric_hat_leading(e, 200.0)
    kappa = fourier.kappa(F(-2, 3), 0, 0).value
    assert abs(value * 200 ** (2. / 3) - kappa) < 0.05 * abs(kappa)


def test_hat_of_smooth_term_decays():
    e = zero({(0, 0, 0): 1})
    value = oracle.numeric_hat_leading(e, 200.0)
    assert abs(value) * 200 ** 2 < 1e-3


def test_hat_needs_a_large_sigma():
    e = zero({(HALF, 0, 0): 0.5})
    with pytest.raises(error.OracleError) as exc:
        oracle.numeric_hat_leading(e, 10.0)
    assert exc.value.tag == 'SIGMA_TOO_SMALL'


def test_hat_needs_a_single_term():
    e = zero({(HALF, 0, 0): 1, (F(-1, 3), 0, 0): 1})
    with pytest.raises(error.DomainError) as exc:
        oracle.numeric_hat_leading(e, 200.0)
    assert exc.value.tag == 'NOT_SINGLE_TERM'


def test_monomial_expansion():
    g = oracle.MonomialGerm
    assert oracle.monomial_expansion(g(2)) == zero({(HALF, 0, 0): 0.5})
    e = oracle.monomial_expansion(g(3))
    assert e.exponents() == [Exponent(F(-2, 3), 0, 0)]
    assert abs(e.get(Exponent(F(-2, 3), 0, 0)).coefficient(0) - 1 / 3.) \
        < 1e-15
    assert oracle.monomial_expansion(g(1)).is_empty()


@pytest.mark.parametrize('a', [0, -2, 1.5, 5])
def test_bad_germ(a):
    with pytest.raises(error.OracleError) as exc:
        oracle.MonomialGerm(a)
    assert exc.value.tag == 'BAD_GERM'


def test_fit_log_coefficient():
    s = [0.1, 0.05, 0.025]
    values = [1 - 0.5 * math.log(x) for x in s]
    (c0, c1) = oracle.fit_log_coefficient(s, values)
    assert abs(c0 - 1) < 1e-12
    assert abs(c1 + 0.5) < 1e-12


def test_fit_power():
    s = [0.1, 0.05, 0.025]
    values = [2 * x ** (-1. / 3) + 5 for x in s]
    (alpha, c) = oracle.fit_power(s, values)
    assert abs(alpha + 1. / 3) < 1e-12
    assert abs(c - 2) < 1e-10


def test_convolution_of_two_quadratics():
    row = suites.ts_log_case(2, 2, oracle.Cutoff(), 0.05)
    assert abs(row.predicted + 0.5) < 1e-12
    assert row.ok


def test_convolution_of_quadratic_and_cubic():
    rows = suites.ts_power_cases(2, 3, oracle.Cutoff(), 0.05)
    assert abs(rows[0].predicted + 1. / 3) < 1e-12
    assert all(row.ok for row in rows)


def test_convolution_depends_on_modulus_only():
    g = oracle.MonomialGerm(2)
    (v1, v2) = oracle.ts_convolution(g, g, [0.1, 0.1j])
    assert abs(v1 - v2) < 1e-12
