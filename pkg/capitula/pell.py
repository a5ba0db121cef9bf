#!/usr/bin/env python
#
# This library is free software, distributed under the terms of
# the GNU Lesser General Public License Version 3, or any later version.
# See the COPYING file included in this archive
#
# The docstrings in this module contain epytext markup; API documentation
# may be created by processing this file with epydoc: http://epydoc.sf.net

""" Fundamental units of real quadratic fields

The fundamental unit of Q(sqrt(m)) is read off the first period of the
continued fraction of omega, where omega = sqrt(m) for m = 2, 3 (mod 4) and
omega = (1 + sqrt(m))/2 for m = 1 (mod 4). If the period has length l and
p/q is the convergent built from the partial quotients a0..a(l-1), then::

    eps = p - q * conjugate(omega)

and N(eps) = (-1)**l. Everything runs on exact integers.
"""

import functools

from twisted.logger import Logger

from capitula import constants
from capitula import numtheory
from capitula.numtheory import DomainError, InconsistencyError

log = Logger()


class PeriodCapExceeded(DomainError):
    """ Raised when a continued fraction period is longer than the cap """
    code = 'period-cap'


class QuadUnit(object):
    """ A unit (x + y*sqrt(m))/den of a real quadratic field

    The Pell identity (x**2 - m*y**2)/den**2 == normSign is checked on
    construction.
    """
    def __init__(self, m, x, y, den=1, normSign=None, period=None):
        """
        @param m: The (squarefree) radicand
        @type m: int
        @param x: Rational part numerator
        @type x: int
        @param y: Coefficient of sqrt(m) (numerator)
        @type y: int
        @param den: The common denominator; 1 or 2
        @type den: int
        @param normSign: The expected norm; computed if omitted
        @type normSign: int
        @param period: Length of the continued fraction period, if known
        @type period: int
        """
        if den not in (1, 2):
            raise DomainError('unit denominator must be 1 or 2, got %d' % den)
        num = x * x - m * y * y
        if num % (den * den) or num // (den * den) not in (1, -1):
            raise InconsistencyError('(%d + %d*sqrt(%d))/%d is not a unit' % (x, y, m, den))
        sign = num // (den * den)
        if normSign is not None and normSign != sign:
            raise InconsistencyError('norm of unit of Q(sqrt(%d)) is %d, not %d' % (m, sign, normSign))
        if den == 2 and (m % 4 != 1 or (x - y) % 2):
            raise InconsistencyError('half-integral unit for m=%d with x=%d, y=%d' % (m, x, y))
        self.m = m
        self.x = x
        self.y = y
        self.den = den
        self.normSign = sign
        self.period = period

    def isHalfIntegral(self):
        return self.den == 2

    def __eq__(self, other):
        if isinstance(other, QuadUnit):
            return (self.m, self.x, self.y, self.den) == (other.m, other.x, other.y, other.den)
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.m, self.x, self.y, self.den))

    def __repr__(self):
        return 'QuadUnit(m=%d, x=%d, y=%d, den=%d, normSign=%d)' % (
            self.m, self.x, self.y, self.den, self.normSign)

    def __str__(self):
        if self.den == 1:
            return '%d+%d*sqrt(%d)' % (self.x, self.y, self.m)
        return '(%d+%d*sqrt(%d))/2' % (self.x, self.y, self.m)


def _expand(m, P, Q, periodCap):
    """ Expands (P + sqrt(m))/Q up to the end of its first period

    @return: (p, q, length) where p/q is the last convergent of the period
             (the partial quotient closing the period is not included)
    """
    r = numtheory.isqrt(m)
    a = (P + r) // Q
    pPrev, p = 1, a
    qPrev, q = 0, 1
    P = a * Q - P
    Q = (m - P * P) // Q
    first = (P, Q)
    length = 0
    while True:
        length += 1
        if length > periodCap:
            raise PeriodCapExceeded('continued fraction of sqrt(%d) exceeds %d steps' % (m, periodCap))
        a = (P + r) // Q
        P = a * Q - P
        Q = (m - P * P) // Q
        if (P, Q) == first:
            return p, q, length
        pPrev, p = p, a * p + pPrev
        qPrev, q = q, a * q + qPrev

@functools.lru_cache(maxsize=None)
def _fundamentalUnit(m, periodCap):
    if m % 4 == 1:
        p, q, length = _expand(m, 1, 2, periodCap)
        x, y, den = 2 * p - q, q, 2
        if x % 2 == 0 and y % 2 == 0:
            x, y, den = x // 2, y // 2, 1
    else:
        p, q, length = _expand(m, 0, 1, periodCap)
        x, y, den = p, q, 1
    unit = QuadUnit(m, x, y, den, normSign=(-1) ** length, period=length)
    log.debug('fundamental unit of Q(sqrt({m})): {unit} (period {period})',
              m=m, unit=str(unit), period=length)
    return unit

def fundamentalUnit(m, periodCap=None):
    """ The fundamental unit of Q(sqrt(m))

    Results are memoized per radicand.

    @param m: A squarefree integer > 1
    @type m: int
    @param periodCap: Maximum number of continued fraction steps; defaults
                      to C{constants.periodCap}
    @type periodCap: int

    @rtype: QuadUnit

    @raise DomainError: If m is not a squarefree integer > 1
    @raise PeriodCapExceeded: If the period is longer than the cap
    """
    if m <= 1 or not numtheory.isSquarefree(m):
        raise DomainError('%d is not a squarefree integer > 1' % m)
    if periodCap is None:
        periodCap = constants.periodCap
    return _fundamentalUnit(m, periodCap)

def unitNorm(unit):
    """ The norm of a unit, re-evaluated from its coefficients

    @type unit: QuadUnit
    @rtype: int

    @raise InconsistencyError: If the stored sign disagrees with the coefficients
    """
    num = unit.x * unit.x - unit.m * unit.y * unit.y
    den2 = unit.den * unit.den
    if num % den2 or num // den2 != unit.normSign:
        raise InconsistencyError('stored norm of %s does not match its coefficients' % unit)
    return unit.normSign

def minimalSolutionBySearch(m, limit):
    """ Brute-force search for the smallest unit > 1 of Q(sqrt(m))

    Units are written as (X + Y*sqrt(m))/2 and tried by increasing Y up to
    C{limit}; an odd Y only occurs for half-integral units (m = 1 mod 4).

    @return: The unit found, or None if none exists with Y <= limit
    @rtype: QuadUnit or None
    """
    for Y in range(1, limit + 1):
        if Y % 2:
            if m % 4 != 1:
                continue
            y, den, norms = Y, 2, (-4, 4)
        else:
            y, den, norms = Y // 2, 1, (-1, 1)
        for n in norms:
            t = m * y * y + n
            if t > 0 and numtheory.isPerfectSquare(t):
                return QuadUnit(m, numtheory.isqrt(t), y, den)
    return None
