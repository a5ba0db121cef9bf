#!/usr/bin/env python
#
# This library is free software, distributed under the terms of
# the GNU Lesser General Public License Version 3, or any later version.
# See the COPYING file included in this archive
#
# The docstrings in this module contain epytext markup; API documentation
# may be created by processing this file with epydoc: http://epydoc.sf.net

""" Exact elements of real biquadratic fields and a numeric square-root oracle

An element of F = Q(sqrt(a), sqrt(b)) (a, b coprime squarefree) is stored
by its rational coordinates in the basis 1, sqrt(a), sqrt(b), sqrt(ab).

The oracle decides whether an element is a square in F: it approximates
the four real conjugates of sqrt(u) with mpmath, recovers the coordinates
of each sign pattern, rounds them to multiples of 1/C{constants.oracleGrid}
and squares the candidate exactly. Only the final exact comparison can
answer "yes"; "no" is answered when every sign pattern lands clearly off
the grid, or when some conjugate of u is negative.
"""

import itertools
from fractions import Fraction

from mpmath import mp, mpf, sqrt, nint
from twisted.logger import Logger

from capitula import constants
from capitula.numtheory import DomainError

log = Logger()


class OracleUndecided(Exception):
    """ Raised when the numeric oracle cannot decide within its precision budget """
    code = 'oracle-undecided'


class BiquadraticElement(object):
    """ c0 + c1*sqrt(a) + c2*sqrt(b) + c3*sqrt(ab) with rational c0..c3 """

    def __init__(self, a, b, coefficients):
        """
        @param a: First radicand (squarefree, > 1)
        @type a: int
        @param b: Second radicand (squarefree, > 1, coprime to a)
        @type b: int
        @param coefficients: Four rationals (anything C{Fraction} accepts)
        @type coefficients: sequence
        """
        if len(coefficients) != 4:
            raise DomainError('a biquadratic element needs 4 coordinates')
        self.a = a
        self.b = b
        self.coefficients = tuple(Fraction(c) for c in coefficients)

    @classmethod
    def fromQuadUnit(cls, a, b, unit):
        """ Embeds a unit of Q(sqrt(a)), Q(sqrt(b)) or Q(sqrt(ab)) into F

        @type unit: capitula.pell.QuadUnit
        @rtype: BiquadraticElement
        """
        c = [Fraction(unit.x, unit.den), 0, 0, 0]
        slot = {a: 1, b: 2, a * b: 3}.get(unit.m)
        if slot is None:
            raise DomainError('Q(sqrt(%d)) is not a subfield of Q(sqrt(%d), sqrt(%d))'
                              % (unit.m, a, b))
        c[slot] = Fraction(unit.y, unit.den)
        return cls(a, b, c)

    def _check(self, other):
        if (self.a, self.b) != (other.a, other.b):
            raise DomainError('elements of different fields')

    def __add__(self, other):
        self._check(other)
        return BiquadraticElement(self.a, self.b,
                                  [x + y for x, y in zip(self.coefficients, other.coefficients)])

    def __mul__(self, other):
        self._check(other)
        a, b = self.a, self.b
        x0, x1, x2, x3 = self.coefficients
        y0, y1, y2, y3 = other.coefficients
        return BiquadraticElement(a, b, [
            x0*y0 + a*x1*y1 + b*x2*y2 + a*b*x3*y3,
            x0*y1 + x1*y0 + b*(x2*y3 + x3*y2),
            x0*y2 + x2*y0 + a*(x1*y3 + x3*y1),
            x0*y3 + x3*y0 + x1*y2 + x2*y1])

    def __eq__(self, other):
        if isinstance(other, BiquadraticElement):
            return (self.a, self.b, self.coefficients) == (other.a, other.b, other.coefficients)
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.a, self.b, self.coefficients))

    def __repr__(self):
        return 'BiquadraticElement(%d, %d, %r)' % (self.a, self.b, [str(c) for c in self.coefficients])

    def bitLength(self):
        """ @return: The largest bit length among all numerators and denominators
        @rtype: int
        """
        return max(max(abs(c.numerator).bit_length(), c.denominator.bit_length())
                   for c in self.coefficients)

    def conjugates(self):
        """ The four real embeddings, at the current mpmath precision

        @return: List of (signA, signB, value) triples
        @rtype: list
        """
        ra, rb = sqrt(self.a), sqrt(self.b)
        c = [mpf(x.numerator) / x.denominator for x in self.coefficients]
        result = []
        for sa, sb in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
            result.append((sa, sb, c[0] + sa*c[1]*ra + sb*c[2]*rb + sa*sb*c[3]*ra*rb))
        return result


def product(elements):
    """ @return: The product of a non-empty sequence of elements
    @rtype: BiquadraticElement
    """
    elements = list(elements)
    result = elements[0]
    for element in elements[1:]:
        result = result * element
    return result

def _attempt(u, bits):
    """ One oracle pass at the given precision

    @return: (root, offGrid): root is a verified square root or None;
             offGrid is True when every sign pattern was clearly off the grid
    """
    grid = constants.oracleGrid
    with mp.workprec(bits):
        tolerance = mpf(2) ** (-(bits // 4))
        conj = u.conjugates()
        if any(value < 0 for _, _, value in conj):
            return None, True
        roots = [sqrt(value) for _, _, value in conj]
        ra, rb = sqrt(u.a), sqrt(u.b)
        scale = (1, ra, rb, ra * rb)
        offGrid = True
        # the identity embedding keeps its sign; only the other three vary
        for signs in itertools.product((1, -1), repeat=3):
            s = [roots[0]] + [sg * r for sg, r in zip(signs, roots[1:])]
            coords = []
            for k, (chiA, chiB) in enumerate(((0, 0), (1, 0), (0, 1), (1, 1))):
                total = sum(s[j] * conj[j][0] ** chiA * conj[j][1] ** chiB for j in range(4))
                coords.append(total / (4 * scale[k]))
            scaled = [grid * c for c in coords]
            rounded = [int(nint(x)) for x in scaled]
            distance = max(abs(x - r) for x, r in zip(scaled, rounded))
            if distance < tolerance:
                offGrid = False
                candidate = BiquadraticElement(u.a, u.b, [Fraction(r, grid) for r in rounded])
                if candidate * candidate == u:
                    return candidate, False
    return None, offGrid

def numericSquareRoot(u, precisionBits=None):
    """ Square root of u in its real biquadratic field, if there is one

    @param u: The element to test
    @type u: BiquadraticElement
    @param precisionBits: Minimum working precision; defaults to
                          C{constants.precisionBits}
    @type precisionBits: int

    @return: An exact square root, or None if u is not a square
    @rtype: BiquadraticElement or None

    @raise OracleUndecided: If no decision is reached after
                            C{constants.oracleRetries} doublings
    """
    if precisionBits is None:
        precisionBits = constants.precisionBits
    bits = max(precisionBits, 2 * u.bitLength() + 64)
    for attempt in range(constants.oracleRetries + 1):
        root, offGrid = _attempt(u, bits)
        if root is not None:
            return root
        if offGrid:
            return None
        log.debug('square-root oracle inconclusive at {bits} bits, retrying', bits=bits)
        bits *= 2
    raise OracleUndecided('no decision for %r after %d retries' % (u, constants.oracleRetries))

def isSquareNumerically(u, precisionBits=None):
    """ @return: True iff u is a square in its field (see C{numericSquareRoot()})
    @rtype: bool
    """
    return numericSquareRoot(u, precisionBits) is not None
