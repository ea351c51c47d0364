"""Numerical oracle

Independent numerical evaluation of the quantities the symbolic
modules predict: Weber-Schafheitlin integrals, Laurent coefficients of
Mellin integrals with a genuine smooth cutoff, the Fourier transform of
a model term at large |sigma|, and the plane convolution of monomial
fiber densities.

Everything here is pure and deterministic given the parameters.
"""

import cmath
import math
from fractions import Fraction

import numpy as np
from scipy import integrate

from . import error
from . import expansion
from . import fourier
from . import specfun
from .expansion import AT_ZERO

DEFAULT_SIGMA = 200.0
DEFAULT_PROBE_RADIUS = 0.1
DEFAULT_NODES = 64
TAIL_START = 200.0
EPSABS = 1e-13
EPSREL = 1e-11
NO_CONVERGENCE_TOL = 1e-7
MIN_SIGMA = 50.0
MAX_GERM_EXPONENT = 4

### parameter types

class Cutoff(object):
    """Smooth radial plateau: 1 on [0, inner], 0 on [outer, oo)

    `power` > 1 gives rho^power, a different cutoff with the same
    plateau and support."""

    __slots__ = ('inner', 'outer', 'power')

    def __init__(self, inner=0.5, outer=1.0, power=1):
        if not (0 < inner < outer):
            raise error.OracleError('BAD_CUTOFF', (inner, outer))
        self.inner = float(inner)
        self.outer = float(outer)
        self.power = power

    def __repr__(self):
        return 'Cutoff(%g, %g, power=%d)' % (self.inner, self.outer,
                                             self.power)

    def squared(self):
        return Cutoff(self.inner, self.outer, self.power * 2)

    def value(self, x):
        if x <= self.inner:
            return 1.0
        if x >= self.outer:
            return 0.0
        y = (x - self.inner) / (self.outer - self.inner)
        a = math.exp(-1.0 / (1.0 - y))
        b = math.exp(-1.0 / y)
        return (a / (a + b)) ** self.power

    __call__ = value

class LaurentProbe(object):
    """Circle |lambda - center| = radius sampled at `nodes` points"""

    __slots__ = ('center', 'radius', 'nodes')

    def __init__(self, center, radius=DEFAULT_PROBE_RADIUS,
                 nodes=DEFAULT_NODES):
        self.center = complex(center)
        self.radius = float(radius)
        self.nodes = int(nodes)

    def points(self):
        """(lambda_j, lambda_j - center) for j = 0..nodes-1"""
        result = []
        for j in range(self.nodes):
            z = self.radius * cmath.exp(2j * math.pi * j / self.nodes)
            result.append((self.center + z, z))
        return result

class MonomialGerm(object):
    """f(x) = x^a"""

    __slots__ = ('exponent',)

    def __init__(self, exponent):
        if (int(exponent) != exponent or exponent < 1
                or exponent > MAX_GERM_EXPONENT):
            raise error.OracleError('BAD_GERM', (exponent,))
        self.exponent = int(exponent)

    def __repr__(self):
        return 'MonomialGerm(%d)' % self.exponent

### quadrature helpers

def _quad(f, a, b, **kwargs):
    kwargs.setdefault('epsabs', EPSABS)
    kwargs.setdefault('epsrel', EPSREL)
    kwargs.setdefault('limit', 200)
    res = integrate.quad(f, a, b, full_output=1, **kwargs)
    value, abserr = res[0], res[1]
    if len(res) > 3 and abserr > NO_CONVERGENCE_TOL * max(1.0, abs(value)):
        raise error.OracleError('NO_CONVERGENCE',
                                ('[%g, %g]: %s' % (a, b, res[3]),))
    return value

def _cquad(f, a, b, **kwargs):
    re = _quad(lambda x: f(x).real, a, b, **kwargs)
    im = _quad(lambda x: f(x).imag, a, b, **kwargs)
    return complex(re, im)

### special functions

gamma = specfun.gamma
besselJ = specfun.besselJ

### Weber-Schafheitlin integrals

def in_strip(lam, n):
    x = (complex(lam) + 1).real
    if n == 0:
        return 0 < x < 0.25
    if n == 1:
        return -1 < x < -0.25
    raise error.OracleError('BAD_BESSEL_ORDER', (n,))

def bessel_closed_form(lam, n):
    """2^(2 lambda + 1 + n) Gamma(lambda + 1 + n) / Gamma(-lambda)"""
    lam = complex(lam)
    return (2 ** (2 * lam + 1 + n) * gamma(lam + 1 + n) / gamma(-lam))

def _head(mu, n):
    # int_0^1 r^mu J_n(r) dr from the power series of J_n
    total = 0j
    k = 0
    while True:
        term = ((-1) ** k / (4.0 ** k * 2.0 ** n * math.factorial(k)
                             * math.factorial(k + n))
                / (mu + 2 * k + n + 1))
        total += term
        if abs(term) < 1e-17 and k > 2:
            return total
        k += 1

def _power_tail(a, omega, R, rounds):
    # int_R^oo r^a exp(i omega r) dr by repeated integration by parts
    total = 0j
    falling = 1 + 0j
    for j in range(rounds):
        total += ((-1) ** j * falling * R ** (a - j)
                  / (1j * omega) ** (j + 1))
        falling *= (a - j)
    return -cmath.exp(1j * omega * R) * total

def _tail(mu, n, R, orders=4, rounds=4):
    # J_n(r) ~ sqrt(2/pi) / 2 sum_w exp(-i w phi) sum_k (w i)^k a_k
    #          r^(-k-1/2) exp(i w r),  phi = n pi / 2 + pi / 4
    a = specfun.hankel_coefficients(n, orders)
    phi = n * math.pi / 2 + math.pi / 4
    total = 0j
    for omega in (1, -1):
        part = 0j
        for k in range(orders):
            part += ((omega * 1j) ** k * a[k]
                     * _power_tail(mu - 0.5 - k, omega, R, rounds))
        total += cmath.exp(-1j * omega * phi) * part
    return math.sqrt(2 / math.pi) / 2 * total

def bessel_mellin_integral(lam, n, R=TAIL_START):
    """int_0^oo r^(2 lambda + 1 + n) J_n(r) dr on its strip."""
    if not in_strip(lam, n):
        raise error.OracleError('OUTSIDE_STRIP', (str(lam), n))
    mu = 2 * complex(lam) + 1 + n
    total = _head(mu, n)
    # whole periods from 1 up to at least R
    panels = int(math.ceil((R - 1) / math.pi))
    edges = [1 + j * math.pi for j in range(panels + 1)]
    f = lambda r: r ** mu * besselJ(n, r)
    for a, b in zip(edges[:-1], edges[1:]):
        total += _cquad(f, a, b)
    return total + _tail(mu, n, edges[-1])

def bessel_mellin_check(lam, n):
    """Return (numeric, closed) for int_0^oo r^(2 lambda+1+n) J_n(r) dr."""
    numeric = bessel_mellin_integral(lam, n)
    return (numeric, bessel_closed_form(lam, n))

### Mellin Laurent coefficients

def _plateau(a, ell, c):
    # int_0^c x^(a-1) (log x)^ell dx, continued to all a != 0
    logc = math.log(c)
    total = 0j
    for j in range(ell + 1):
        total += (math.factorial(ell) // (math.factorial(j)
                                          * math.factorial(ell - j))
                  * logc ** (ell - j) * (-1) ** j * math.factorial(j)
                  / a ** (j + 1))
    return c ** a * total

def mellin_integral(term, log_coeffs, nu, lam, cutoff):
    """I(lambda) = (1/pi) int T |t|^(2 lambda) t^-k1 tbar^-k2 rho dA
    for one exponent with k1 - m1 = k2 - m2 = nu."""
    a = 2 * (lam + float(term.r) - nu + 1)
    total = 0j
    for ell, w in log_coeffs.items():
        f = lambda x: (x ** (a - 1) * math.log(x) ** ell
                       * cutoff.value(x))
        part = _plateau(a, ell, cutoff.inner)
        part += _cquad(f, cutoff.inner, cutoff.outer)
        total += w * part
    return 2 * total

def numeric_mellin_laurent(term, log_coeffs, k1, k2, probe=None,
                           cutoff=None):
    """Laurent coefficients P^k, k = 0..degree+1, of the coefficient
    of (lambda - center)^-(k+1), by a trapezoid rule on the probe."""
    count = log_coeffs.degree() + 2
    if k1 - term.m1 != k2 - term.m2:
        return [0j] * count
    nu = k1 - term.m1
    if cutoff is None:
        cutoff = Cutoff()
    if probe is None:
        probe = LaurentProbe(nu - float(term.r) - 1)
    # neighbouring poles are one unit apart
    if 2 * probe.radius >= 1:
        raise error.OracleError('PROBE_TOO_WIDE', (probe.radius,))
    coefs = [0j] * count
    for lam, z in probe.points():
        value = mellin_integral(term, log_coeffs, nu, lam, cutoff)
        for k in range(count):
            coefs[k] += value * z ** (k + 1)
    return [c / probe.nodes for c in coefs]

### Fourier transform of a model term

def _log(t):
    # the end-point weight carries the singularity
    return math.log(t) if t > 0 else 0.0

def _single_term(e):
    if e.side != AT_ZERO or len(e) != 1 or not expansion.is_fiber_class(e):
        raise error.DomainError('NOT_SINGLE_TERM', (len(e),))
    return e.items()[0]

def numeric_hat_leading(e, sigma_modulus, sigma_phase=0.0, cutoff=None):
    """(1/pi) int exp(conj(s sigma) - s sigma) T(s) rho(|s|) dA(s) for a
    single-term expansion T, at sigma = R exp(i beta).

    The angular integral gives 2 pi exp(-i d beta) J_d(2 R x) with
    d = m1 - m2; the radial one runs over panels of a quarter period."""
    if sigma_modulus < MIN_SIGMA:
        raise error.OracleError('SIGMA_TOO_SMALL', (sigma_modulus,
                                                    MIN_SIGMA))
    if cutoff is None:
        cutoff = Cutoff()
    x, poly = _single_term(e)
    d = x.m1 - x.m2
    if abs(d) > 1:
        raise error.OracleError('BAD_BESSEL_ORDER', (d,))
    R = float(sigma_modulus)
    p = 2 * float(x.r) + x.m1 + x.m2 + 1
    width = math.pi / (2 * R)
    panels = int(math.ceil(cutoff.outer / width))
    total = 0.0
    for k, w in poly.items():
        # first panel with the algebraic (and log) end-point weight
        if k == 0:
            g = lambda t: besselJ(d, 2 * R * t) * cutoff.value(t)
            part = _quad(g, 0, width, weight='alg', wvar=(p, 0))
        else:
            g = lambda t: (_log(t) ** (k - 1) * besselJ(d, 2 * R * t)
                           * cutoff.value(t))
            part = _quad(g, 0, width, weight='alg-loga', wvar=(p, 0))
        f = lambda t: (t ** p * math.log(t) ** k * besselJ(d, 2 * R * t)
                       * cutoff.value(t))
        for j in range(1, panels):
            part += _quad(f, j * width, (j + 1) * width)
        total += w * part
    return 2 * cmath.exp(-1j * d * sigma_phase) * total

def predicted_hat_leading(e, sigma_modulus, sigma_phase=0.0):
    """forward(e) evaluated at tau = 1/sigma."""
    sigma = sigma_modulus * cmath.exp(1j * sigma_phase)
    return fourier.predicted_hat_value(e, sigma)

### Thom-Sebastiani by convolution

def monomial_density(a, cutoff):
    """Fiber density of x^a with the plateau cutoff, as a function of
    |u|: (1/a) |u|^(2/a - 2) rho(|u|^(1/a))."""
    a = a.exponent
    return lambda rho: (rho ** (2.0 / a - 2) / a
                        * cutoff.value(rho ** (1.0 / a)))

def _half_plane(a, b, s, cutoff):
    # (1/pi) int_{Re u < s/2} T_a(u) T_b(s - u) dA(u), s > 0, polar about 0
    alpha = 2.0 / a.exponent - 1
    tb = monomial_density(b, cutoff)
    ea = a.exponent

    def inner(theta):
        c = math.cos(theta)
        upper = 1.0
        if c > s / 2:
            upper = min(upper, s / (2 * c))
        g = lambda rho: (cutoff.value(rho ** (1.0 / ea)) / ea
                         * tb(abs(s - rho * cmath.exp(1j * theta))))
        return _quad(g, 0, upper, weight='alg', wvar=(alpha, 0))

    theta0 = math.acos(s / 2)
    value = _quad(inner, 0, math.pi, points=[theta0])
    # symmetric in theta
    return 2 * value / math.pi

def ts_convolution(a, b, s_values, cutoff=None):
    """T_{x^a + y^b}(s) = (1/pi) int T_a(u) T_b(s - u) dA(u).

    The plane is split by the bisector of 0 and s so that each half
    holds one singularity; the result depends only on |s|."""
    if cutoff is None:
        cutoff = Cutoff()
    result = []
    for s in s_values:
        m = abs(s)
        result.append(complex(_half_plane(a, b, m, cutoff)
                              + _half_plane(b, a, m, cutoff)))
    return result

def fit_log_coefficient(s_moduli, values):
    """Least squares c0 + c1 log|s|; returns (c0, c1)."""
    x = np.log(np.asarray(s_moduli, dtype=float))
    y = np.real(np.asarray(values, dtype=complex))
    c1, c0 = np.polyfit(x, y, 1)
    return (float(c0), float(c1))

def fit_power(s_moduli, values):
    """Exponent and coefficient of c |s|^alpha + const from three
    values at geometric |s|; successive differences drop the constant."""
    s = [float(v) for v in s_moduli[:3]]
    v = np.real(np.asarray(values[:3], dtype=complex))
    d1 = v[0] - v[1]
    d2 = v[1] - v[2]
    ratio = s[0] / s[1]
    alpha = math.log(d1 / d2) / math.log(ratio)
    c = d1 / (s[0] ** alpha - s[1] ** alpha)
    return (alpha, c)

def monomial_expansion(a):
    """Singular part of the fiber integral of x^a:
    {(1/a - 1, 0, 0): 1/a} mod smooth."""
    q = Fraction(1, a.exponent)
    e = expansion.make(AT_ZERO, {(q - 1, 0, 0): float(q)})
    return expansion.mod_smooth(e)
