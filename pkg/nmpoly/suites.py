"""Verification suites

Each suite is a list of independent cases; running a case gives a Row
(case, numeric, predicted, relative error, pass).  The oracle suites
compare numerical integrals with the symbolic predictions, the property
suites check the symbolic identities on seeded random inputs.
"""

import collections
import cmath
import math
import random
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import error
from . import expansion
from . import fourier
from . import mellin
from . import newton
from . import oracle
from . import specfun
from .expansion import AT_ZERO, AT_INFINITY

Row = collections.namedtuple('Row', ['case', 'numeric', 'predicted',
                                     'relerr', 'ok'])

class SuiteParams(object):
    """Knobs shared by all suites; None means the suite default."""

    def __init__(self, tol=None, sigma=oracle.DEFAULT_SIGMA,
                 cutoff_inner=0.5, cutoff_outer=1.0, seed=0, count=None):
        self.tol = tol
        self.sigma = sigma
        self.cutoff_inner = cutoff_inner
        self.cutoff_outer = cutoff_outer
        self.seed = seed
        self.count = count

    def tolerance(self, default):
        if self.tol is None:
            return default
        return self.tol

    def cases(self, default):
        if self.count is None:
            return default
        return self.count

    def cutoff(self):
        return oracle.Cutoff(self.cutoff_inner, self.cutoff_outer)

def relerr(numeric, predicted):
    if predicted == 0:
        return abs(numeric)
    return abs(numeric - predicted) / abs(predicted)

def compare(case, numeric, predicted, tol):
    e = relerr(numeric, predicted)
    return Row(case, numeric, predicted, e, e < tol)

### random inputs

FIBER_RS = [Fraction(0), Fraction(-1, 2), Fraction(-1, 3), Fraction(-2, 3),
            Fraction(-5, 6)]

def random_coefficient(rng):
    while True:
        c = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        if abs(c) > 0.1:
            return c

def random_poly(rng, max_degree, min_degree=0):
    degree = rng.randint(min_degree, max_degree)
    coefs = {degree: random_coefficient(rng)}
    for k in range(degree):
        if rng.random() < 0.5:
            coefs[k] = random_coefficient(rng)
    return expansion.LogPolynomial(coefs)

def random_fiber_expansion(rng, max_terms=6, rs=FIBER_RS, max_m=4,
                           max_degree=3):
    """Random fiber-class expansion, nonempty mod smooth."""
    while True:
        terms = {}
        for _i in range(rng.randint(1, max_terms)):
            r = rng.choice(rs)
            x = expansion.Exponent(r, rng.randint(0, max_m),
                                   rng.randint(0, max_m))
            terms[x] = random_poly(rng, max_degree)
        e = expansion.mod_smooth(expansion.Expansion(AT_ZERO, terms))
        if not e.is_empty():
            return e

def random_hat_expansion(rng, max_terms=6, rs=FIBER_RS, max_m=5,
                         max_degree=3):
    """Random expansion at infinity inside the image of forward."""
    terms = {}
    for _i in range(rng.randint(1, max_terms)):
        x = expansion.Exponent(rng.choice(rs), rng.randint(1, max_m),
                               rng.randint(1, max_m))
        terms[x] = random_poly(rng, max_degree)
    return expansion.Expansion(AT_INFINITY, terms)

def random_point_set(rng, max_points=6):
    points = set()
    for _i in range(rng.randint(1, max_points)):
        q = rng.choice([1, 2, 3, 6])
        points.add(newton.Point(Fraction(rng.randint(-12, 12), q),
                                Fraction(rng.randint(-12, 12), q)))
    return points

def _rng(params, salt):
    return random.Random('%s:%s' % (params.seed, salt))

### oracle suites

GAMMA_VALUES = [
    (5, 24.0),
    (0.5, math.sqrt(math.pi)),
    (0.125, 7.5339415987976119),
    (1.5, math.sqrt(math.pi) / 2),
    (-0.5, -2 * math.sqrt(math.pi)),
]

def suite_gamma(params):
    tol = params.tolerance(1e-10)
    cases = []
    for z, value in GAMMA_VALUES:
        cases.append(lambda z=z, value=value:
                     compare('gamma(%g)' % z, oracle.gamma(z), value, tol))
    rng = _rng(params, 'gamma')
    for _i in range(params.cases(100)):
        z = complex(rng.uniform(-5, 5), rng.uniform(-3, 3))

        def reflection(z=z):
            value = (oracle.gamma(z) * oracle.gamma(1 - z)
                     * cmath.sin(math.pi * z) / math.pi)
            return compare('reflection(%.6g%+.6gj)' % (z.real, z.imag),
                           value, 1.0, tol)
        cases.append(reflection)
    for _i in range(params.cases(20)):
        x = rng.uniform(0.05, 20)
        cases.append(lambda x=x: compare('gamma(%.6g) vs libm' % x,
                                         oracle.gamma(x), math.gamma(x),
                                         tol))
    return cases

BESSEL_GRID = {
    0: [-0.97, -0.92, -0.875, -0.83, -0.78],
    1: [-1.9, -1.75, -1.5, -1.4, -1.3],
}

def suite_bessel(params):
    tol = params.tolerance(1e-5)
    cases = []
    for n, grid in sorted(BESSEL_GRID.items()):
        for lam in grid:
            def check(lam=lam, n=n):
                numeric, closed = oracle.bessel_mellin_check(lam, n)
                return compare('n=%d lambda=%g' % (n, lam), numeric,
                               closed, tol)
            cases.append(check)
    exact_tol = params.tolerance(1e-6)
    cases.append(lambda: compare(
        'int J1(r)/r dr', oracle.bessel_mellin_integral(-1.5, 1), 1.0,
        exact_tol))
    cases.append(lambda: Row(
        'J0 first zero', specfun.besselJ(0, 2.404825557695773), 0.0,
        abs(specfun.besselJ(0, 2.404825557695773)),
        abs(specfun.besselJ(0, 2.404825557695773)) < 1e-9))
    return cases

MELLIN_RS = [Fraction(-1, 2), Fraction(-1, 3), Fraction(-5, 6)]

def mellin_case(r, m1, m2, ell, cutoff, tol, atol=1e-8):
    """Compare contour-extracted Laurent coefficients of the model term
    (r, m1, m2) u^ell with the symbolic table."""
    x = expansion.Exponent(r, m1, m2)
    poly = expansion.LogPolynomial({ell: 1.0})
    e = expansion.Expansion(AT_ZERO, {x: poly})
    table = mellin.mellin_coefficients(e)
    numeric = oracle.numeric_mellin_laurent(x, poly, m1, m2, cutoff=cutoff)
    worst = 0.0
    ok = True
    for k, value in enumerate(numeric):
        predicted = table.raw(x, k)
        if predicted == 0:
            err = abs(value)
            ok = ok and err < atol
        else:
            err = relerr(value, predicted)
            ok = ok and err < tol
            worst = max(worst, err)
    return Row('%s u^%d %r' % (x, ell, cutoff), numeric[ell],
               table.raw(x, ell), worst, ok)

def suite_mellin(params):
    tol = params.tolerance(1e-6)
    cutoffs = [params.cutoff(), params.cutoff().squared()]
    cases = []
    for cutoff in cutoffs:
        for r in MELLIN_RS:
            for m1 in range(3):
                for m2 in range(3):
                    for ell in range(3):
                        cases.append(lambda r=r, m1=m1, m2=m2, ell=ell,
                                     cutoff=cutoff:
                                     mellin_case(r, m1, m2, ell, cutoff,
                                                 tol))
    return cases

HAT_CASES = [(Fraction(-1, 2), 0, 0), (Fraction(-1, 2), 1, 0),
             (Fraction(-1, 2), 0, 1), (Fraction(-2, 3), 0, 0),
             (Fraction(-2, 3), 1, 0), (Fraction(-2, 3), 0, 1)]
HAT_PHASES = [0.0, 0.7]

def hat_case(r, m1, m2, sigma, phase, cutoff, tol):
    x = expansion.Exponent(r, m1, m2)
    e = expansion.Expansion(AT_ZERO, {x: 0.5})
    numeric = oracle.numeric_hat_leading(e, sigma, phase, cutoff)
    predicted = oracle.predicted_hat_leading(e, sigma, phase)
    return compare('%s |sigma|=%g arg=%g' % (x, sigma, phase), numeric,
                   predicted, tol)

def smooth_hat_case(sigma, cutoff, tol):
    x = expansion.Exponent(Fraction(0), 0, 0)
    e = expansion.Expansion(AT_ZERO, {x: 1.0})
    numeric = oracle.numeric_hat_leading(e, sigma, 0.0, cutoff)
    scaled = abs(numeric) * sigma ** 2
    return Row('smooth |sigma|=%g' % sigma, numeric, 0.0, scaled,
               scaled < tol)

def suite_hat(params):
    tol = params.tolerance(0.05)
    cutoff = params.cutoff()
    cases = []
    for r, m1, m2 in HAT_CASES:
        for phase in HAT_PHASES:
            cases.append(lambda r=r, m1=m1, m2=m2, phase=phase:
                         hat_case(r, m1, m2, params.sigma, phase, cutoff,
                                  tol))
    cases.append(lambda: smooth_hat_case(params.sigma, cutoff, 1e-3))
    return cases

TS_MODULI = [0.1, 0.05, 0.025]
# finer moduli for the coefficient of a power law
TS_POWER_MODULI = [0.05, 0.025, 0.0125]

def ts_log_case(a, b, cutoff, tol):
    ga, gb = oracle.MonomialGerm(a), oracle.MonomialGerm(b)
    values = oracle.ts_convolution(ga, gb, TS_MODULI, cutoff)
    _c0, c1 = oracle.fit_log_coefficient(TS_MODULI, values)
    combined = fourier.thom_sebastiani(oracle.monomial_expansion(ga),
                                       oracle.monomial_expansion(gb))
    x = expansion.Exponent(Fraction(0), 0, 0)
    predicted = combined.get(x).coefficient(1).real
    return compare('x^%d+y^%d log coefficient' % (a, b), c1, predicted,
                   tol)

def ts_power_cases(a, b, cutoff, tol):
    ga, gb = oracle.MonomialGerm(a), oracle.MonomialGerm(b)
    values = oracle.ts_convolution(ga, gb, TS_POWER_MODULI, cutoff)
    alpha, c = oracle.fit_power(TS_POWER_MODULI, values)
    combined = fourier.thom_sebastiani(oracle.monomial_expansion(ga),
                                       oracle.monomial_expansion(gb))
    x, poly = combined.items()[0]
    exponent = 2 * float(x.r)
    return [compare('x^%d+y^%d exponent' % (a, b), alpha, exponent, tol),
            compare('x^%d+y^%d coefficient' % (a, b), c,
                    poly.coefficient(0).real, tol)]

def ts_smooth_case(a, b, cutoff, bound):
    ga, gb = oracle.MonomialGerm(a), oracle.MonomialGerm(b)
    values = oracle.ts_convolution(ga, gb, TS_MODULI, cutoff)
    jump = max(abs(values[0] - values[1]), abs(values[1] - values[2]))
    return Row('x^%d+y^%d continuous' % (a, b), jump, 0.0, jump,
               jump < bound)

def suite_ts(params):
    tol = params.tolerance(0.05)
    cutoff = params.cutoff()
    return [lambda: ts_log_case(2, 2, cutoff, tol),
            lambda: ts_power_cases(2, 3, cutoff, tol),
            lambda: ts_smooth_case(2, 1, cutoff, 0.05)]

### property suites

def suite_theorem(params):
    tol = params.tolerance(newton.DECORATION_RTOL)
    rng = _rng(params, 'theorem')
    cases = []
    for i in range(params.cases(500)):
        e1 = random_fiber_expansion(rng)
        e2 = random_fiber_expansion(rng)

        def check(i=i, e1=e1, e2=e2):
            report = fourier.theorem_check(e1, e2, tol)
            return Row('pair %d' % i, report.max_deviation, 0.0,
                       report.max_deviation, report.verdict)
        cases.append(check)
    return cases

def suite_prop_nn(params):
    tol = params.tolerance(newton.DECORATION_RTOL)
    rng = _rng(params, 'prop-nn')
    cases = []
    for i in range(params.cases(300)):
        e = random_fiber_expansion(rng)

        def check(i=i, e=e):
            lhs = fourier.tilde_polygon(fourier.forward(e))
            rhs = newton.translate(fourier.hat_polygon(e), fourier.ONE_ONE)
            ok, dev = lhs.compare(rhs, tol)
            return Row('expansion %d' % i, dev, 0.0, dev, ok)
        cases.append(check)
    return cases

def lemma_case(i, s1, s2):
    p1 = newton.staircase_hull(s1)
    p2 = newton.staircase_hull(s2)
    total = newton.minkowski(p1, p2)
    worst = 0
    ok = True
    for v in total:
        try:
            newton.decompose_vertex(p1, p2, v)
        except error.UniquenessViolation:
            ok = False
        count = len([1 for a in s1 for b in s2 if a + b == v])
        worst = max(worst, count)
        ok = ok and count == 1
    return Row('point sets %d' % i, worst, 1, abs(worst - 1), ok)

def suite_lemma(params):
    rng = _rng(params, 'lemma')
    cases = []
    for i in range(params.cases(1000)):
        s1 = random_point_set(rng)
        s2 = random_point_set(rng)
        cases.append(lambda i=i, s1=s1, s2=s2: lemma_case(i, s1, s2))
    return cases

def _roundtrip_row(case, got, want, tol):
    ok = expansion.equal(got, want, tol)
    return Row(case, len(got), len(want), 0.0 if ok else 1.0, ok)

def suite_roundtrip(params):
    tol = params.tolerance(1e-9)
    rng = _rng(params, 'roundtrip')
    cases = []
    for i in range(params.cases(500)):
        e = random_fiber_expansion(rng)
        cases.append(lambda i=i, e=e: _roundtrip_row(
            'inverse(forward) %d' % i,
            fourier.inverse(fourier.forward(e)), expansion.mod_smooth(e),
            tol))
    for i in range(params.cases(500)):
        h = random_hat_expansion(rng)
        cases.append(lambda i=i, h=h: _roundtrip_row(
            'forward(inverse) %d' % i,
            fourier.forward(fourier.inverse(h)), h, tol))
    return cases

def suite_cor4(params):
    tol = params.tolerance(1e-10)
    rng = _rng(params, 'cor4')
    cases = []
    for _i in range(params.cases(200)):
        q = rng.randint(2, 12)
        r = Fraction(-rng.randint(1, q - 1), q)
        m1, m2, nu = rng.randint(0, 4), rng.randint(0, 4), rng.randint(0, 3)
        cases.append(lambda r=r, m1=m1, m2=m2, nu=nu: compare(
            'r=%s m1=%d m2=%d nu=%d' % (r, m1, m2, nu),
            fourier.gamma_ratio_prefactor(r, m1, m2, nu),
            fourier.kappa(r, m1, m2).value.real, tol))
    return cases

def suite_newton_mellin(params):
    tol = params.tolerance(newton.DECORATION_RTOL)
    rng = _rng(params, 'newton-mellin')
    cases = []
    for i in range(params.cases(500)):
        e = random_fiber_expansion(rng)

        def check(i=i, e=e):
            ok, dev = mellin.nm_decorated_polygon(e).compare(
                mellin.newton_decorated_polygon(e), tol)
            return Row('expansion %d' % i, dev, 0.0, dev, ok)
        cases.append(check)
    return cases

suites = collections.OrderedDict([
    ('gamma', suite_gamma),
    ('bessel', suite_bessel),
    ('mellin', suite_mellin),
    ('hat', suite_hat),
    ('ts', suite_ts),
    ('theorem', suite_theorem),
    ('prop-nn', suite_prop_nn),
    ('lemma', suite_lemma),
    ('roundtrip', suite_roundtrip),
    ('cor4', suite_cor4),
    ('newton-mellin', suite_newton_mellin),
])

def _run_case(case):
    try:
        result = case()
    except error.NmpolyError as e:
        return [Row('error: %s' % e, None, None, None, False)]
    if isinstance(result, Row):
        return [result]
    return result

def run_suite(name, params=None, threads=1, verbose=False):
    """Run the suite `name`; returns the list of rows."""
    if name not in suites:
        raise error.DomainError('UNKNOWN_SUITE',
                                (name, ', '.join(suites.keys())))
    if params is None:
        params = SuiteParams()
    start = time.time()
    cases = suites[name](params)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_run_case, cases))
    else:
        results = [_run_case(case) for case in cases]
    rows = [row for result in results for row in result]
    if verbose:
        sys.stderr.write('# suite %s: %d cases, %.1fs\n'
                         % (name, len(rows), time.time() - start))
    return rows

def failures(rows):
    return [row for row in rows if not row.ok]
