"""Mellin coefficients of expansions

For the model term w |t|^(2r) t^m1 tbar^m2 (log|t|)^l, the Mellin
integral

    I(lambda) = int T |t|^(2 lambda) t^(-k1) tbar^(-k2) rho(t)

with k1 - m1 = k2 - m2 = nu has a single pole at lambda_o = nu - r - 1,
of order l + 1, with leading coefficient w (-1)^l l! / 2^l.  With a
cutoff identically 1 on the unit disc the radial integral is exact, so
this is the whole polar part; other cutoffs only add entire functions.
"""

import collections
import math

from . import expansion
from . import newton

class MellinKey(collections.namedtuple('MellinKey',
                                       ['r', 'm1', 'm2', 'k'])):
    __slots__ = ()

    @property
    def exponent(self):
        return expansion.Exponent(self.r, self.m1, self.m2)

def raw_factor(k):
    """Leading Laurent coefficient of the order k+1 pole of a u^k term."""
    return (-1) ** k * math.factorial(k) / 2.0 ** k

def norm_factor(k):
    """(-2)^k / k!, the normalization taking c to C."""
    return (-2.0) ** k / math.factorial(k)

class MellinTable(object):
    """Map (r, m1, m2, k) -> (raw c, normalized C)"""

    __slots__ = ('entries',)

    def __init__(self, entries=None):
        self.entries = {}
        if entries is not None:
            for key, (c_raw, c_norm) in entries.items():
                if c_raw != 0 or c_norm != 0:
                    self.entries[MellinKey(*key)] = (complex(c_raw),
                                                     complex(c_norm))

    def __len__(self):
        return len(self.entries)

    def items(self):
        return sorted(self.entries.items(),
                      key=lambda item: (item[0].exponent.bidegree(),
                                        item[0].k))

    def raw(self, exponent, k):
        return self.entries.get(MellinKey(exponent.r, exponent.m1,
                                          exponent.m2, k), (0j, 0j))[0]

    def norm(self, exponent, k):
        return self.entries.get(MellinKey(exponent.r, exponent.m1,
                                          exponent.m2, k), (0j, 0j))[1]

    def exponents(self):
        return sorted(set(key.exponent for key in self.entries),
                      key=expansion.sort_key)

    def close(self, other, rtol=1e-9, atol=1e-12):
        """Entry-wise comparison; absent entries count as zero."""
        for key in set(self.entries) | set(other.entries):
            a = self.entries.get(key, (0j, 0j))
            b = other.entries.get(key, (0j, 0j))
            for x, y in zip(a, b):
                if abs(x - y) > max(atol, rtol * max(abs(x), abs(y))):
                    return False
        return True

def mellin_coefficients(e):
    entries = {}
    for exponent, poly in e.items():
        for k, a in poly.items():
            c_raw = a * raw_factor(k)
            c_norm = norm_factor(k) * c_raw
            entries[(exponent.r, exponent.m1, exponent.m2, k)] = \
                (c_raw, c_norm)
    return MellinTable(entries)

def shifted_triple(exponent, n=1):
    """The raw triple writing `exponent` with nu -> nu + n.  It
    canonicalizes back to `exponent`."""
    return (exponent.r - n, exponent.m1 + n, exponent.m2 + n)

def _point(exponent):
    return newton.Point(*exponent.bidegree())

def nm_decorated_polygon(e):
    """Decorated Newton-Mellin polygon of `e`.

    Points are the bidegrees with a nonzero C; a vertex carries
    C_{r,m1,m2,l} u^l for the largest such l."""
    table = mellin_coefficients(e)
    candidates = {}
    for key, (_c_raw, c_norm) in table.items():
        if c_norm == 0:
            continue
        p = _point(key.exponent)
        d = candidates.get(p)
        if d is None or key.k > d.degree:
            candidates[p] = newton.Decoration(c_norm, key.k)
    return newton.decorated_hull(candidates)

def newton_decorated_polygon(e):
    """Decorated Newton polygon read off the terms of `e` directly."""
    candidates = {}
    for exponent, poly in e.items():
        c, k = poly.dominant()
        candidates[_point(exponent)] = newton.Decoration(c, k)
    return newton.decorated_hull(candidates)
