import copy
import os.path

### struct to keep track of position for error messages

class Position(object):
    __slots__ = (
        'ref',
        'line',
    )

    def __init__(self, ref):
        self.ref = ref
        self.line = 0

    def __str__(self):
        return self.label()

    def label(self, basename=False):
        ref = self.ref
        if basename:
            ref = os.path.basename(ref)
        return ref + ':' + str(self.line)

### Exceptions

class NmpolyError(Exception):
    """Base class for library errors.

    `tag` is a key in `error_codes`, `args` the format arguments."""

    def __init__(self, tag, args=()):
        if not isinstance(args, tuple):
            args = (args,)
        Exception.__init__(self, tag, args)
        self.tag = tag
        self.args_ = args

    def __str__(self):
        return err_to_str(self.tag, self.args_)

class RationalOverflow(NmpolyError, ArithmeticError):
    """raised when an exact rational leaves the 64-bit range"""
    pass

class SideMismatch(NmpolyError):
    pass

class DomainError(NmpolyError):
    """raised when an input lies outside an operation's domain"""
    pass

class PolygonError(NmpolyError):
    pass

class UniquenessViolation(NmpolyError, AssertionError):
    """a Minkowski vertex decomposed in more than one way; this is a bug"""
    pass

class OracleError(NmpolyError):
    """raised by the numerical oracle"""
    pass

class EmitError(Exception):
    """raised by plugins to fail the emit() function"""
    def __init__(self, msg="", exit_code=1):
        self.msg = msg
        self.exit_code = exit_code

### error codes

## level:
##    1: critical error, can not be made into a warning
##    2: major error, can not be made into a warning
##    3: minor error
##    4: warning
error_codes = \
    {
    'READ_ERROR':
      (1,
       'read error: %s'),
    'SYNTAX_ERROR':
      (1,
       'syntax error: expected "%s", got "%s"'),
    'MISSING_SIDE':
      (1,
       'missing "side=zero" or "side=infinity" header'),
    'BAD_SIDE':
      (1,
       'bad side "%s" (should be zero or infinity)'),
    'DUPLICATE_SIDE':
      (2,
       'side already given at line %s'),
    'BAD_RATIONAL':
      (1,
       'bad rational "%s" (should be p/q)'),
    'ZERO_DENOMINATOR':
      (1,
       'zero denominator in "%s"'),
    'BAD_COEFFICIENT':
      (1,
       'bad coefficient "%s" (should be <k>:<re>,<im>)'),
    'DUPLICATE_DEGREE':
      (2,
       'log degree %s given more than once'),
    'DUPLICATE_TERM':
      (4,
       'exponent %s given more than once, coefficients are added'),
    'NONCANONICAL_EXPONENT':
      (4,
       'exponent r=%s outside (-1,0], folded into %s'),

    'RATIONAL_OVERFLOW':
      (1,
       'rational overflow: %s does not fit in 64 bits'),
    'SIDE_MISMATCH':
      (1,
       'side mismatch: %s and %s'),
    'WRONG_SIDE':
      (1,
       '%s requires side %s, got %s'),
    'NOT_FIBER_CLASS':
      (1,
       'expansion is not of fiber class at exponent %s'),
    'OUTSIDE_IMAGE':
      (1,
       'exponent %s outside the invertible image (needs m1, m2 >= 1)'),
    'KAPPA_UNDEFINED':
      (1,
       'transfer factor undefined for r=%s, m1=%s, m2=%s'),
    'EMPTY_HULL':
      (1,
       'staircase hull of an empty point set'),
    'NOT_A_VERTEX':
      (1,
       '%s is not a vertex of the Minkowski sum'),
    'NOT_UNIQUE':
      (1,
       'vertex %s has %s decompositions'),
    'DECORATION_MISMATCH':
      (1,
       'decorations at %s do not match the vertices %s'),

    'GAMMA_POLE':
      (1,
       'gamma has a pole at %s'),
    'BAD_BESSEL_ORDER':
      (1,
       'Bessel order %s not supported'),
    'OUTSIDE_STRIP':
      (1,
       'lambda=%s outside the convergence strip for n=%s'),
    'PROBE_TOO_WIDE':
      (1,
       'probe radius %s encloses another pole'),
    'BAD_CUTOFF':
      (1,
       'bad cutoff radii %s, %s (need 0 < inner < outer)'),
    'BAD_GERM':
      (1,
       'bad monomial germ exponent %s (should be 1 to 4)'),
    'SIGMA_TOO_SMALL':
      (1,
       '|sigma|=%s below %s, the leading term is not yet dominant'),
    'NOT_SINGLE_TERM':
      (1,
       'numeric transform needs one fiber-class term, got %s terms'),
    'NO_CONVERGENCE':
      (1,
       'quadrature did not converge: %s'),

    'BAD_ARITY':
      (1,
       '%s expects %s'),
    'UNKNOWN_SUITE':
      (1,
       'unknown suite "%s", expected one of %s'),
    }

def add_error_code(tag, level, fmt):
    """Add an error code to the framework.

    Can be used by plugins to add special errors."""
    error_codes[tag] = (level, fmt)

def err_level(tag):
    try:
        (level, fmt) = error_codes[tag]
        return level
    except KeyError:
        return 0

def err_to_str(tag, args):
    try:
        (level, fmt) = error_codes[tag]
        return fmt % args
    except KeyError:
        return 'unknown error %s' % tag

def err_add(errors, pos, tag, args):
    error = (copy.copy(pos), tag, args)
    for p, t, a in errors:
        if p.line == pos.line and p.ref == pos.ref and t == tag and a == args:
            return
    errors.append(error)

def is_warning(level):
    return not is_error(level)

def is_error(level):
    return level < 4
