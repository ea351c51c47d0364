"""Parser for the expansion text format

    side=zero
    # comment
    r=-1/2 m1=0 m2=0 : 0:0.5,0 1:-2,0.25

One term per line, a mandatory side header, `#` comments.  Exponents
outside the canonical range are folded, repeated exponents are added.
"""

import cmath
from fractions import Fraction

from . import error
from . import expansion
from . import syntax
from .expansion import rat_str

class ExpansionParser(object):
    def __init__(self):
        self.failed = False

    def add_error(self, ctx, pos, tag, args):
        if error.is_error(error.err_level(tag)):
            self.failed = True
        error.err_add(ctx.errors, pos, tag, args)

    def parse(self, ctx, ref, text):
        """Parse `text`, reporting problems in `ctx.errors`.

        Returns the Expansion, or None on error."""
        self.failed = False
        pos = error.Position(ref)
        side = None
        side_line = None
        terms = {}
        for line in text.splitlines():
            pos.line += 1
            if syntax.re_comment.match(line):
                continue
            m = syntax.re_side.match(line)
            if m is not None:
                value = m.group('side')
                if side_line is not None:
                    self.add_error(ctx, pos, 'DUPLICATE_SIDE', side_line)
                elif value not in expansion.sides:
                    self.add_error(ctx, pos, 'BAD_SIDE', value)
                    side_line = pos.line
                else:
                    side = value
                    side_line = pos.line
                continue
            term = self.parse_term(ctx, pos, line)
            if term is None:
                continue
            exponent, poly = term
            if exponent in terms:
                self.add_error(ctx, pos, 'DUPLICATE_TERM', str(exponent))
                terms[exponent] = terms[exponent] + poly
            else:
                terms[exponent] = poly
        if side_line is None:
            pos.line = 1
            self.add_error(ctx, pos, 'MISSING_SIDE', ())
        if self.failed:
            return None
        return expansion.Expansion(side, terms)

    def parse_rational(self, ctx, pos, s):
        if not syntax.re_rational.match(s):
            self.add_error(ctx, pos, 'BAD_RATIONAL', s)
            return None
        if '/' in s:
            num, den = s.split('/')
            if int(den) == 0:
                self.add_error(ctx, pos, 'ZERO_DENOMINATOR', s)
                return None
            return Fraction(int(num), int(den))
        return Fraction(int(s))

    def parse_int(self, ctx, pos, name, s):
        if not syntax.re_integer.match(s):
            self.add_error(ctx, pos, 'SYNTAX_ERROR', (name + '=<int>', s))
            return None
        return int(s)

    def parse_term(self, ctx, pos, line):
        m = syntax.re_term.match(line)
        if m is None:
            self.add_error(ctx, pos, 'SYNTAX_ERROR',
                           (syntax.term_format, line.strip()))
            return None
        rho = self.parse_rational(ctx, pos, m.group('r'))
        m1 = self.parse_int(ctx, pos, 'm1', m.group('m1'))
        m2 = self.parse_int(ctx, pos, 'm2', m.group('m2'))
        coefs = self.parse_coefficients(ctx, pos, m.group('coefs'))
        if rho is None or m1 is None or m2 is None or coefs is None:
            return None
        try:
            exponent = expansion.canonicalize(rho, m1, m2)
        except error.RationalOverflow as e:
            self.add_error(ctx, pos, e.tag, e.args_)
            return None
        if exponent.r != rho:
            self.add_error(ctx, pos, 'NONCANONICAL_EXPONENT',
                           (rat_str(rho), str(exponent)))
        return (exponent, expansion.LogPolynomial(coefs))

    def parse_coefficients(self, ctx, pos, s):
        coefs = {}
        ok = True
        for token in s.split():
            m = syntax.re_coef.match(token)
            if (m is None or not syntax.re_number.match(m.group('re'))
                or not syntax.re_number.match(m.group('im'))):
                self.add_error(ctx, pos, 'BAD_COEFFICIENT', token)
                ok = False
                continue
            k = int(m.group('k'))
            if k in coefs:
                self.add_error(ctx, pos, 'DUPLICATE_DEGREE', k)
                ok = False
                continue
            c = complex(float(m.group('re')), float(m.group('im')))
            if not cmath.isfinite(c):
                # 1e999 and the like
                self.add_error(ctx, pos, 'BAD_COEFFICIENT', token)
                ok = False
                continue
            coefs[k] = c
        if not ok:
            return None
        return coefs
