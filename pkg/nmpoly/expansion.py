"""Finite log-power expansions

An expansion is a finite sum of terms

    P(u) |t|^(2r) t^m1 tbar^m2,    u = log|t|,  -1 < r <= 0

where P is a polynomial in u with complex coefficients.  Exponents are
exact rationals, coefficients are complex doubles.  All values are
immutable once built.
"""

import collections
import math
from fractions import Fraction

from . import error

AT_ZERO = 'zero'
"""Side tag: the variable s lives near 0"""
AT_INFINITY = 'infinity'
"""Side tag: the variable is tau = 1/sigma, sigma near infinity"""

sides = (AT_ZERO, AT_INFINITY)

PRUNE_RTOL = 1e-12

INT64_MAX = 2 ** 63 - 1

### exact rationals

def checked(q):
    """Return `q` as a Fraction, raising RationalOverflow if its
    numerator or denominator does not fit in 64 bits."""
    q = Fraction(q)
    if abs(q.numerator) > INT64_MAX or q.denominator > INT64_MAX:
        raise error.RationalOverflow('RATIONAL_OVERFLOW', (str(q),))
    return q

def checked_int(n):
    if abs(n) > INT64_MAX:
        raise error.RationalOverflow('RATIONAL_OVERFLOW', (str(n),))
    return n

def rat_str(q):
    """Format a rational as p/q, also when it is integral."""
    q = Fraction(q)
    return '%d/%d' % (q.numerator, q.denominator)

### exponents

class Exponent(collections.namedtuple('Exponent', ['r', 'm1', 'm2'])):
    """Canonical exponent |t|^(2r) t^m1 tbar^m2 with r in (-1,0]"""
    __slots__ = ()

    def bidegree(self):
        return (self.r + self.m1, self.r + self.m2)

    def __str__(self):
        return '(%s,%d,%d)' % (rat_str(self.r), self.m1, self.m2)

def sort_key(exponent):
    """Deterministic order: lexicographic on the bidegree."""
    return exponent.bidegree()

def canonicalize(rho, a, b):
    """Fold |t|^(2 rho) t^a tbar^b into the canonical Exponent.

    With nu = ceil(rho) the result is (rho - nu, a + nu, b + nu); the
    bidegree (rho + a, rho + b) is preserved."""
    rho = checked(rho)
    nu = math.ceil(rho)
    r = checked(rho - nu)
    return Exponent(r, checked_int(a + nu), checked_int(b + nu))

### log polynomials

def _prune(coefs):
    if not coefs:
        return {}
    top = max(1.0, max(abs(c) for c in coefs.values()))
    return dict((k, c) for (k, c) in coefs.items()
                if c != 0 and abs(c) >= PRUNE_RTOL * top)

class LogPolynomial(object):
    """Polynomial in u = log|t|, stored as a map degree -> coefficient"""

    __slots__ = ('coefs',)

    def __init__(self, coefs=None):
        if coefs is None:
            coefs = {}
        elif not isinstance(coefs, dict):
            # a bare number is a constant polynomial
            coefs = {0: coefs}
        for k in coefs:
            if k < 0:
                raise ValueError('negative log degree %s' % k)
        self.coefs = _prune(dict((int(k), complex(c))
                                 for (k, c) in coefs.items()))

    def __repr__(self):
        return 'LogPolynomial(%r)' % self.coefs

    def __str__(self):
        if not self.coefs:
            return '0'
        return ' + '.join(['(%.17g,%.17g)u^%d' % (c.real, c.imag, k)
                           for (k, c) in self.items()])

    def __bool__(self):
        return len(self.coefs) > 0

    __nonzero__ = __bool__

    def __eq__(self, other):
        return isinstance(other, LogPolynomial) and self.coefs == other.coefs

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None

    def items(self):
        return sorted(self.coefs.items())

    def degree(self):
        """Largest stored degree, -1 for the zero polynomial."""
        if not self.coefs:
            return -1
        return max(self.coefs)

    def coefficient(self, k):
        return self.coefs.get(k, 0j)

    def dominant(self):
        """Return (coefficient, degree) of the top monomial."""
        k = self.degree()
        if k < 0:
            return None
        return (self.coefs[k], k)

    def __add__(self, other):
        coefs = dict(self.coefs)
        for k, c in other.coefs.items():
            coefs[k] = coefs.get(k, 0j) + c
        return LogPolynomial(coefs)

    def scale(self, a):
        return LogPolynomial(dict((k, a * c) for (k, c) in self.coefs.items()))

    def __mul__(self, other):
        coefs = {}
        for k1, c1 in self.coefs.items():
            for k2, c2 in other.coefs.items():
                coefs[k1 + k2] = coefs.get(k1 + k2, 0j) + c1 * c2
        return LogPolynomial(coefs)

    def without(self, k):
        coefs = dict(self.coefs)
        coefs.pop(k, None)
        return LogPolynomial(coefs)

    def evaluate(self, u):
        return sum(c * u ** k for (k, c) in self.coefs.items())

    def close(self, other, rtol=1e-9):
        """Same degrees, coefficients equal within `rtol` relative."""
        if set(self.coefs) != set(other.coefs):
            return False
        for k, c in self.coefs.items():
            if not rel_close(c, other.coefs[k], rtol):
                return False
        return True

def rel_close(a, b, rtol):
    return abs(a - b) <= rtol * max(abs(a), abs(b))

### expansions

class Expansion(object):
    """A finite map Exponent -> LogPolynomial on one side"""

    __slots__ = ('side', 'terms')

    def __init__(self, side, terms=None):
        if side not in sides:
            raise ValueError('bad side %r' % (side,))
        self.side = side
        self.terms = {}
        if terms is not None:
            for exponent, poly in terms.items():
                if not isinstance(poly, LogPolynomial):
                    poly = LogPolynomial(poly)
                if poly:
                    self.terms[exponent] = poly

    def __repr__(self):
        return 'Expansion(%r, {%s})' % (
            self.side, ', '.join(['%s: %r' % (str(e), p.coefs)
                                  for (e, p) in self.items()]))

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        return (isinstance(other, Expansion) and self.side == other.side
                and self.terms == other.terms)

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None

    def items(self):
        return sorted(self.terms.items(), key=lambda item: sort_key(item[0]))

    def exponents(self):
        return [e for (e, _p) in self.items()]

    def get(self, exponent):
        return self.terms.get(exponent, LogPolynomial())

    def is_empty(self):
        return len(self.terms) == 0

    def scale(self, a):
        return Expansion(self.side, dict((e, p.scale(a))
                                         for (e, p) in self.terms.items()))

    def evaluate(self, t):
        """Value of the finite sum at the point `t` (t != 0)."""
        t = complex(t)
        mod = abs(t)
        u = math.log(mod)
        total = 0j
        for e, p in self.terms.items():
            total += (p.evaluate(u) * mod ** (2 * float(e.r))
                      * t ** e.m1 * t.conjugate() ** e.m2)
        return total

def make(side, terms):
    """Build an Expansion from raw triples.

    `terms` maps (rho, a, b) to a LogPolynomial, a dict degree ->
    coefficient or a number.  The triples are canonicalized and
    colliding ones are added."""
    result = {}
    for (rho, a, b), poly in terms.items():
        if not isinstance(poly, LogPolynomial):
            poly = LogPolynomial(poly)
        exponent = canonicalize(Fraction(rho), a, b)
        if exponent in result:
            result[exponent] = result[exponent] + poly
        else:
            result[exponent] = poly
    return Expansion(side, result)

def _same_side(e1, e2):
    if e1.side != e2.side:
        raise error.SideMismatch('SIDE_MISMATCH', (e1.side, e2.side))

def accumulate(target, scalar, source):
    """Return target + scalar * source."""
    _same_side(target, source)
    terms = dict(target.terms)
    for exponent, poly in source.terms.items():
        poly = poly.scale(scalar)
        if exponent in terms:
            terms[exponent] = terms[exponent] + poly
        else:
            terms[exponent] = poly
    return Expansion(target.side, terms)

def multiply(e1, e2):
    """Term-by-term product; exponents add then fold back."""
    _same_side(e1, e2)
    terms = {}
    for x1, p1 in e1.terms.items():
        for x2, p2 in e2.terms.items():
            exponent = canonicalize(x1.r + x2.r, x1.m1 + x2.m1,
                                    x1.m2 + x2.m2)
            poly = p1 * p2
            if exponent in terms:
                terms[exponent] = terms[exponent] + poly
            else:
                terms[exponent] = poly
    return Expansion(e1.side, terms)

def is_smooth_exponent(exponent):
    return exponent.r == 0 and exponent.m1 >= 0 and exponent.m2 >= 0

def mod_smooth(e):
    """Drop the smooth content s^m1 sbar^m2 (r = 0, degree 0)."""
    if e.side != AT_ZERO:
        raise error.DomainError('WRONG_SIDE', ('mod_smooth', AT_ZERO, e.side))
    terms = {}
    for exponent, poly in e.terms.items():
        if is_smooth_exponent(exponent):
            poly = poly.without(0)
        terms[exponent] = poly
    return Expansion(e.side, terms)

def is_fiber_class(e):
    if e.side != AT_ZERO:
        return False
    for exponent in e.terms:
        if exponent.m1 < 0 or exponent.m2 < 0:
            return False
    return True

def first_non_fiber(e):
    for exponent in e.exponents():
        if exponent.m1 < 0 or exponent.m2 < 0:
            return exponent
    return None

def equal(e1, e2, rtol=1e-9):
    """Exact exponent sets, coefficients within `rtol` relative."""
    if e1.side != e2.side or set(e1.terms) != set(e2.terms):
        return False
    for exponent, poly in e1.terms.items():
        if not poly.close(e2.terms[exponent], rtol):
            return False
    return True
