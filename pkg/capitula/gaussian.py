#!/usr/bin/env python
#
# This library is free software, distributed under the terms of
# the GNU Lesser General Public License Version 3, or any later version.
# See the COPYING file included in this archive
#
# The docstrings in this module contain epytext markup; API documentation
# may be created by processing this file with epydoc: http://epydoc.sf.net

""" Arithmetic in the Gaussian integers Z[i]

Besides the ring operations this module provides the Euclidean gcd, the
decomposition p = e**2 + 4*f**2 of a prime p = 1 (mod 4) and exact square
roots. The Gaussian primes over p1 and p2 are always normalized with
e, f, g, h > 0, which fixes the labels::

    pi1 = e + 2fi, pi2 = e - 2fi, pi3 = g + 2hi, pi4 = g - 2hi

Exchanging a prime with its conjugate exchanges H1 and H2 (or H3 and H4)
in every reported class word.
"""

import gmpy2

from capitula import numtheory
from capitula.numtheory import DomainError, InconsistencyError


class GaussianInt(object):
    """ An element re + im*i of Z[i]; instances are immutable """
    __slots__ = ('re', 'im')

    def __init__(self, re, im=0):
        object.__setattr__(self, 're', int(re))
        object.__setattr__(self, 'im', int(im))

    def __setattr__(self, name, value):
        raise AttributeError('GaussianInt is immutable')

    @staticmethod
    def coerce(value):
        if isinstance(value, GaussianInt):
            return value
        return GaussianInt(value, 0)

    def conjugate(self):
        return GaussianInt(self.re, -self.im)

    def norm(self):
        return self.re * self.re + self.im * self.im

    def isZero(self):
        return self.re == 0 and self.im == 0

    def __add__(self, other):
        other = GaussianInt.coerce(other)
        return GaussianInt(self.re + other.re, self.im + other.im)
    __radd__ = __add__

    def __sub__(self, other):
        other = GaussianInt.coerce(other)
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussianInt.coerce(other) - self

    def __neg__(self):
        return GaussianInt(-self.re, -self.im)

    def __mul__(self, other):
        other = GaussianInt.coerce(other)
        return GaussianInt(self.re * other.re - self.im * other.im,
                           self.re * other.im + self.im * other.re)
    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = GaussianInt(other)
        if isinstance(other, GaussianInt):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return 'GaussianInt(%d, %d)' % (self.re, self.im)

    def __str__(self):
        if self.im == 0:
            return '%d' % self.re
        if self.re == 0:
            return '%di' % self.im
        return '%d%+di' % (self.re, self.im)


#: The four units of Z[i]
UNITS = (GaussianInt(1, 0), GaussianInt(0, 1), GaussianInt(-1, 0), GaussianInt(0, -1))
#: The prime above 2
ONE_PLUS_I = GaussianInt(1, 1)
I = GaussianInt(0, 1)


def gNorm(z):
    """ @return: The norm re**2 + im**2 of a Gaussian integer
    @rtype: int
    """
    return GaussianInt.coerce(z).norm()

def _roundDiv(num, den):
    # nearest integer to num/den for den > 0
    return (2 * num + den) // (2 * den)

def exactQuotient(z, w):
    """ Divides z by w in Z[i]

    @return: q with z = w*q, or C{None} if w does not divide z
    @rtype: GaussianInt or None

    @raise DomainError: If w is zero
    """
    z, w = GaussianInt.coerce(z), GaussianInt.coerce(w)
    n = w.norm()
    if n == 0:
        raise DomainError('division by zero in Z[i]')
    t = z * w.conjugate()
    if t.re % n or t.im % n:
        return None
    return GaussianInt(t.re // n, t.im // n)

def divides(w, z):
    """ Tests whether w divides z in Z[i]

    @type w: GaussianInt
    @type z: GaussianInt
    @rtype: bool

    @raise DomainError: If w is zero
    """
    return exactQuotient(z, w) is not None

def divmodGaussian(z, w):
    """ Euclidean division with the quotient rounded to the nearest lattice point

    @return: (q, r) with z = q*w + r and N(r) <= N(w)/2
    @rtype: tuple
    """
    z, w = GaussianInt.coerce(z), GaussianInt.coerce(w)
    n = w.norm()
    if n == 0:
        raise DomainError('division by zero in Z[i]')
    t = z * w.conjugate()
    q = GaussianInt(_roundDiv(t.re, n), _roundDiv(t.im, n))
    return q, z - q * w

def normalize(z):
    """ The associate of z in the first quadrant (re > 0, im >= 0)

    @rtype: GaussianInt
    """
    z = GaussianInt.coerce(z)
    if z.isZero():
        return z
    for unit in UNITS:
        w = z * unit
        if w.re > 0 and w.im >= 0:
            return w
    raise InconsistencyError('no first-quadrant associate of %s' % z)

def gaussGcd(a, b):
    """ Greatest common divisor in Z[i], normalized to the first quadrant

    @type a: GaussianInt
    @type b: GaussianInt
    @rtype: GaussianInt

    @raise DomainError: If both arguments are zero
    """
    a, b = GaussianInt.coerce(a), GaussianInt.coerce(b)
    if a.isZero() and b.isZero():
        raise DomainError('gcd(0, 0) is undefined')
    while not b.isZero():
        a, b = b, divmodGaussian(a, b)[1]
    return normalize(a)

def squareRoot(z):
    """ Exact square root in Z[i]

    @return: w with w*w == z, or C{None} if z is not a square in Z[i]
             (equivalently, in Q(i))
    @rtype: GaussianInt or None
    """
    z = GaussianInt.coerce(z)
    if z.isZero():
        return z
    n = z.norm()
    if not gmpy2.is_square(n):
        return None
    r = int(gmpy2.isqrt(n))
    # w = s + ti with s**2 - t**2 = re and s**2 + t**2 = r
    if (r + z.re) % 2:
        return None
    s2, t2 = (r + z.re) // 2, (r - z.re) // 2
    if not (gmpy2.is_square(s2) and gmpy2.is_square(t2)):
        return None
    s, t = int(gmpy2.isqrt(s2)), int(gmpy2.isqrt(t2))
    for w in (GaussianInt(s, t), GaussianInt(s, -t)):
        if w * w == z:
            return w
    return None

def isSquare(z):
    """ @return: True iff z is the square of a Gaussian integer
    @rtype: bool
    """
    return squareRoot(z) is not None


class TwoSquares(object):
    """ The decomposition p = e**2 + 4*f**2 of a prime p = 1 (mod 4)

    Normalized so that e is odd and e, f > 0; under this normalization the
    decomposition is unique.
    """
    def __init__(self, p, e, f):
        if e * e + 4 * f * f != p or e % 2 == 0 or e <= 0 or f <= 0:
            raise InconsistencyError('%d != %d**2 + 4*%d**2 (normalized)' % (p, e, f))
        self.p = p
        self.e = e
        self.f = f

    def prime(self):
        """ @return: The Gaussian prime e + 2fi
        @rtype: GaussianInt
        """
        return GaussianInt(self.e, 2 * self.f)

    def conjugatePrime(self):
        """ @return: The Gaussian prime e - 2fi
        @rtype: GaussianInt
        """
        return GaussianInt(self.e, -2 * self.f)

    def __eq__(self, other):
        if isinstance(other, TwoSquares):
            return (self.p, self.e, self.f) == (other.p, other.e, other.f)
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.e, self.f))

    def __repr__(self):
        return 'TwoSquares(p=%d, e=%d, f=%d)' % (self.p, self.e, self.f)


def _checkSplitPrime(p):
    if p % 4 != 1 or not numtheory.isPrime(p):
        raise DomainError('%d is not a prime congruent to 1 mod 4' % p)

def twoSquares(p):
    """ Writes a prime p = 1 (mod 4) as e**2 + 4*f**2

    A square root t of -1 modulo p is obtained from a quadratic non-residue
    c as c**((p-1)/4); then gcd(p, t + i) is a prime of norm p.

    @type p: int
    @rtype: TwoSquares

    @raise DomainError: If p is not a prime congruent to 1 mod 4
    """
    _checkSplitPrime(p)
    c = 2
    while numtheory.jacobi(c, p) != -1:
        c += 1
    t = int(gmpy2.powmod(c, (p - 1) // 4, p))
    g = gaussGcd(GaussianInt(p), GaussianInt(t, 1))
    a, b = abs(g.re), abs(g.im)
    if a % 2 == 0:
        a, b = b, a
    return TwoSquares(p, a, b // 2)

def twoSquaresBySearch(p):
    """ Exhaustive-search counterpart of C{twoSquares()}, for cross-checking

    @rtype: TwoSquares
    """
    _checkSplitPrime(p)
    e = 1
    while e * e < p:
        rest = p - e * e
        if rest % 4 == 0 and numtheory.isPerfectSquare(rest // 4):
            return TwoSquares(p, e, numtheory.isqrt(rest // 4))
        e += 2
    raise InconsistencyError('%d has no representation e**2 + 4f**2' % p)

def pairPrimes(p1, p2):
    """ The normalized Gaussian primes above p1 and p2

    @return: The tuple (pi1, pi2, pi3, pi4)
    @rtype: tuple
    """
    first, second = twoSquares(p1), twoSquares(p2)
    return (first.prime(), first.conjugatePrime(),
            second.prime(), second.conjugatePrime())
