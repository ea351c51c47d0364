"""Local Fourier transform (0, infinity) at the level of expansions

The transform uses the kernel exp(conj(s sigma) - s sigma) and the area
measure divided by pi.  A term of a fiber-class expansion at s = 0 maps
to a term at tau = 1/sigma with both indices raised by one:

  r != 0:  a |s|^(2r) s^m1 sbar^m2 u^k
             -> kappa(r, m1, m2) a |tau|^(2r) tau^(m1+1) taubar^(m2+1) u^k
  r == 0:  a s^m1 sbar^m2 u^k, k >= 1
             -> L(m1, m2, k) a tau^(m1+1) taubar^(m2+1) u^(k-1)

with L(m1, m2, k) = (-1)^(m2+1) (k/2) m1! m2!.  Smooth content (r = 0,
k = 0) maps to flat content and disappears.
"""

import math

from . import error
from . import expansion
from . import newton
from . import mellin
from . import specfun
from .expansion import AT_ZERO, AT_INFINITY, Exponent

ONE_ONE = newton.Point(1, 1)

class TransferFactor(object):
    """The constant kappa(r, m1, m2) relating c(T~) and c(T^)"""

    __slots__ = ('value',)

    def __init__(self, value):
        self.value = complex(value)

    def __repr__(self):
        return 'TransferFactor(%r)' % self.value

    def __complex__(self):
        return self.value

class TheoremReport(object):
    __slots__ = ('lhs', 'rhs', 'verdict', 'max_deviation')

    def __init__(self, lhs, rhs, rtol=newton.DECORATION_RTOL):
        self.lhs = lhs
        self.rhs = rhs
        (self.verdict, self.max_deviation) = lhs.compare(rhs, rtol)

    def __repr__(self):
        return 'TheoremReport(verdict=%s, max_deviation=%g)' % (
            self.verdict, self.max_deviation)

def _rising(a, n):
    result = 1
    for j in range(n):
        result *= a + j
    return result

def kappa(r, m1, m2):
    """(-1)^(m2+1) (1/pi) Gamma(r+m1+1) Gamma(r+m2+1) sin(pi r)

    Evaluated as (-1)^m2 (r+1)_m1 (r+1)_m2 Gamma(r+1) / Gamma(-r), with
    exact rising factorials."""
    r = expansion.checked(r)
    if not (-1 < r < 0) or m1 < 0 or m2 < 0:
        raise error.DomainError('KAPPA_UNDEFINED',
                                (expansion.rat_str(r), m1, m2))
    x = float(r)
    rising = _rising(r + 1, m1) * _rising(r + 1, m2)
    value = ((-1) ** m2 * float(rising) * specfun.gamma(x + 1)
             / specfun.gamma(-x))
    return TransferFactor(value)

def log_factor(m1, m2, k):
    """Factor taking the u^k coefficient at (0, m1, m2) to the u^(k-1)
    coefficient at (0, m1+1, m2+1)."""
    return (-1) ** (m2 + 1) * (k / 2.0) * math.factorial(m1) \
        * math.factorial(m2)

def gamma_ratio_prefactor(r, m1, m2, nu):
    """Gamma-ratio prefactor of the Mellin transform of T^ at its pole,
    times Gamma(-lambda_o).

    With k1 = m1 + nu, k2 = m2 + nu and lambda_o = nu - r - 1 this is

      (-1)^k1 Gamma(lambda_o+1) Gamma(-lambda_o)
        / (Gamma(lambda_o+1-k1) Gamma(lambda_o+1-k2))

    and equals kappa(r, m1, m2) by the reflection formula."""
    k1 = m1 + nu
    k2 = m2 + nu
    lo = nu - float(r) - 1
    g = specfun.gamma
    return ((-1) ** k1 * g(lo + 1) * g(-lo)
            / (g(lo + 1 - k1) * g(lo + 1 - k2)))

def _require_fiber_class(e, what):
    if e.side != AT_ZERO:
        raise error.DomainError('WRONG_SIDE', (what, AT_ZERO, e.side))
    bad = expansion.first_non_fiber(e)
    if bad is not None:
        raise error.DomainError('NOT_FIBER_CLASS', (str(bad),))

def forward(e):
    """Local Fourier transform (0, infinity) of a fiber-class expansion,
    taken mod smooth."""
    _require_fiber_class(e, 'forward')
    e = expansion.mod_smooth(e)
    terms = {}
    for x, poly in e.items():
        target = Exponent(x.r, x.m1 + 1, x.m2 + 1)
        if x.r != 0:
            terms[target] = poly.scale(kappa(x.r, x.m1, x.m2).value)
        else:
            terms[target] = expansion.LogPolynomial(
                dict((k - 1, log_factor(x.m1, x.m2, k) * a)
                     for (k, a) in poly.items() if k >= 1))
    return expansion.Expansion(AT_INFINITY, terms)

def inverse(h):
    """Inverse of forward on its image (m1, m2 >= 1 at infinity)."""
    if h.side != AT_INFINITY:
        raise error.DomainError('WRONG_SIDE', ('inverse', AT_INFINITY,
                                               h.side))
    terms = {}
    for x, poly in h.items():
        if x.m1 < 1 or x.m2 < 1:
            raise error.DomainError('OUTSIDE_IMAGE', (str(x),))
        m1, m2 = x.m1 - 1, x.m2 - 1
        target = Exponent(x.r, m1, m2)
        if x.r != 0:
            terms[target] = poly.scale(1 / kappa(x.r, m1, m2).value)
        else:
            terms[target] = expansion.LogPolynomial(
                dict((k + 1, a / log_factor(m1, m2, k + 1))
                     for (k, a) in poly.items()))
    return expansion.Expansion(AT_ZERO, terms)

def edge_coefficients(e):
    """Hat-side terms at (m1 >= 1, 0) and (0, m2 >= 1) fed by r = 0
    coefficients of index -1; empty for fiber-class input."""
    if e.side != AT_ZERO:
        raise error.DomainError('WRONG_SIDE', ('edge_coefficients',
                                               AT_ZERO, e.side))
    terms = {}
    for x, poly in e.items():
        if x.r != 0:
            continue
        if x.m2 == -1 and x.m1 >= 0:
            terms[Exponent(x.r, x.m1 + 1, 0)] = \
                poly.scale(math.factorial(x.m1))
        elif x.m1 == -1 and x.m2 >= 0:
            terms[Exponent(x.r, 0, x.m2 + 1)] = \
                poly.scale((-1) ** (x.m2 + 1) * math.factorial(x.m2))
    return expansion.Expansion(AT_INFINITY, terms)

def predicted_hat_value(e, sigma):
    """forward(e) evaluated at tau = 1/sigma."""
    return forward(e).evaluate(1 / complex(sigma))

def tilde_polygon(e):
    """Decorated polygon with the dominant monomial at each vertex."""
    return mellin.newton_decorated_polygon(e)

def hat_polygon(e):
    _require_fiber_class(e, 'hat_polygon')
    e = expansion.mod_smooth(e)
    candidates = {}
    for x, poly in e.items():
        c, k = poly.dominant()
        p = newton.Point(*x.bidegree())
        if x.r != 0:
            d = newton.Decoration(kappa(x.r, x.m1, x.m2).value * c, k)
        else:
            # degree 0 was removed by mod_smooth, so k >= 1
            d = newton.Decoration(log_factor(x.m1, x.m2, k) * c, k - 1)
        candidates[p] = d
    return newton.decorated_hull(candidates)

def thom_sebastiani(e1, e2):
    """Singular part of the Thom-Sebastiani combination: the inverse
    transform of the product of the transforms."""
    return inverse(expansion.multiply(forward(e1), forward(e2)))

def prop_nn_check(e, rtol=newton.DECORATION_RTOL):
    lhs = tilde_polygon(forward(e))
    rhs = newton.translate(hat_polygon(e), ONE_ONE)
    return lhs.compare(rhs, rtol)[0]

def theorem_check(e1, e2, rtol=newton.DECORATION_RTOL):
    lhs = hat_polygon(thom_sebastiani(e1, e2))
    rhs = newton.translate(
        newton.decorated_minkowski(hat_polygon(e1), hat_polygon(e2)),
        ONE_ONE)
    return TheoremReport(lhs, rhs, rtol)
