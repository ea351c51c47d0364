"""Gamma and Bessel functions for the oracle

Not a general special-function library: Gamma to about 1e-13 relative
for |z| <= 20, J_0 and J_1 to 1e-10 absolute.
"""

import cmath
import math

from . import error

# Lanczos approximation, g = 7, n = 9
LANCZOS_G = 7
LANCZOS_P = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
]

SERIES_LIMIT = 12.0

def _is_pole(z):
    return z.imag == 0 and z.real <= 0 and z.real == math.floor(z.real)

def _cgamma(z):
    if z.real < 0.5:
        # reflection
        return cmath.pi / (cmath.sin(cmath.pi * z) * _cgamma(1 - z))
    z -= 1
    x = LANCZOS_P[0]
    for i in range(1, LANCZOS_G + 2):
        x += LANCZOS_P[i] / (z + i)
    t = z + LANCZOS_G + 0.5
    return math.sqrt(2 * math.pi) * t ** (z + 0.5) * cmath.exp(-t) * x

def gamma(z):
    """Gamma function; real input gives a float, complex a complex."""
    is_complex = isinstance(z, complex)
    zc = complex(z)
    if _is_pole(zc):
        raise error.OracleError('GAMMA_POLE', (str(z),))
    if zc.imag == 0 and zc.real > 0 and zc.real == math.floor(zc.real) \
       and zc.real <= 21:
        value = complex(math.factorial(int(zc.real) - 1))
    else:
        value = _cgamma(zc)
    if is_complex:
        return value
    return value.real

def hankel_coefficients(nu, count):
    """a_k(nu) = prod_{j=1..k} (4 nu^2 - (2j-1)^2) / (k! 8^k), k < count"""
    a = [1.0]
    mu = 4.0 * nu * nu
    for k in range(1, count):
        a.append(a[-1] * (mu - (2 * k - 1) ** 2) / (k * 8.0))
    return a

def _series(n, x):
    half = x / 2.0
    term = half ** n / math.factorial(n)
    total = term
    k = 0
    while True:
        k += 1
        term *= -half * half / (k * (k + n))
        total += term
        if abs(term) < 1e-17 * max(1.0, abs(total)) and k > half:
            return total

def _asymptotic(n, x):
    a = hankel_coefficients(n, 60)
    p = 0.0
    q = 0.0
    last = None
    for k in range(len(a)):
        term = a[k] / x ** k
        if last is not None and abs(term) > last:
            break
        last = abs(term)
        if k % 2 == 0:
            p += (-1) ** (k // 2) * term
        else:
            q += (-1) ** ((k - 1) // 2) * term
        if last < 1e-17:
            break
    omega = x - n * math.pi / 2 - math.pi / 4
    return math.sqrt(2 / (math.pi * x)) * (p * math.cos(omega)
                                           - q * math.sin(omega))

def besselJ(n, x):
    """J_n(x) for n in {-1, 0, 1}; J_-1 = -J_1."""
    if n == -1:
        return -besselJ(1, x)
    if n not in (0, 1):
        raise error.OracleError('BAD_BESSEL_ORDER', (n,))
    x = float(x)
    if x < 0:
        return (-1) ** n * besselJ(n, -x)
    if x <= SERIES_LIMIT:
        return _series(n, x)
    return _asymptotic(n, x)
