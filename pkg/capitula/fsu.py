#!/usr/bin/env python
#
# This library is free software, distributed under the terms of
# the GNU Lesser General Public License Version 3, or any later version.
# See the COPYING file included in this archive
#
# The docstrings in this module contain epytext markup; API documentation
# may be created by processing this file with epydoc: http://epydoc.sf.net

""" Units of the three unramified quadratic extensions of k = Q(sqrt(2p1p2), i)

The extensions are::

    K1 = Q(sqrt(p1), sqrt(2p2), i)    eps1 = eps_p1, eps2 = eps_2p2
    K2 = Q(sqrt(p2), sqrt(2p1), i)    eps1 = eps_p2, eps2 = eps_2p1
    K3 = Q(sqrt(2), sqrt(p1p2), i)    eps1 = eps_2,  eps2 = eps_p1p2

and in all three eps3 = eps_d = x + y*sqrt(d), d = 2p1p2. A fundamental
system of units (F.S.U) is determined by the norms of eps2 and eps3 and by
a few square conditions; C{classifyK1()}, C{classifyK2()} and
C{classifyK3()} return the resulting L{FsuCase}.

Square classes: a unit eps = (a + b*sqrt(m))/den of norm -1 satisfies::

    ((a + i) + b*sqrt(m))**2 = 2(a + i) * eps        (den = 1)
    ((a + 2i) + b*sqrt(m))**2 = 4(a + 2i) * eps      (den = 2)

so modulo squares eps is the Gaussian integer 2(a + i) (resp. a + 2i).
A product of such units is then a square in Q(i, sqrt(m1), sqrt(m2)) iff
the product of these Gaussian integers, times 1, m1, m2 or m1*m2, is a
square in Z[i].
"""

from twisted.logger import Logger

from capitula import gaussian
from capitula import numtheory
from capitula import pell
from capitula.biquadratic import BiquadraticElement, product, isSquareNumerically
from capitula.gaussian import GaussianInt
from capitula.numtheory import DomainError, InconsistencyError

log = Logger()

#: Pairing {pi1*pi3, pi2*pi4} under the square root of a norm -1 unit
P13_24 = 'P13_24'
#: Pairing {pi1*pi4, pi2*pi3}
P14_23 = 'P14_23'

K1, K2, K3 = 'K1', 'K2', 'K3'
TOWERS = (K1, K2, K3)


class SqrtForm(object):
    """ Which conjugate-pair grouping of the Gaussian primes over p1, p2
    appears under the square root of a unit of norm -1
    """
    def __init__(self, pairing):
        if pairing not in (P13_24, P14_23):
            raise DomainError('unknown pairing %r' % pairing)
        self.pairing = pairing

    def __eq__(self, other):
        if isinstance(other, SqrtForm):
            return self.pairing == other.pairing
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self.pairing)

    def __repr__(self):
        return 'SqrtForm(%s)' % self.pairing


class FsuCase(object):
    """ The outcome of the unit classification of one tower K1, K2 or K3

    @ivar tower: 'K1', 'K2' or 'K3'
    @ivar branch: 1 (norms -1, -1), 2 (+1, -1), 3 (-1, +1) or 4 (+1, +1),
                  the norms being those of (eps2, eps3)
    @ivar subcase: 'i', 'ii' or None when the branch has no subcases
    @ivar norms: The pair (N(eps2), N(eps3))
    @ivar hasseIndex: The Hasse unit index Q_K (1 or 2)
    @ivar unitIndex: The unit index q of the real subfield K+ over its
                     three quadratic subfields (2 iff the F.S.U of K+
                     contains a square root)
    @ivar normUnitIndex: [E_k : N(E_K)], which fixes the kernel size
    @ivar kernelSign: The sign s with x+s*1 a square, or None
    @ivar subcaseSign: The sign that decided the subcase through a
                       C{pmSquareTest()}, or None
    @ivar decidedBy: How the subcase was decided ('norms', 'pairing',
                     'square-class' or 'square-test')
    @ivar fsuReal: F.S.U of K+ (readable strings)
    @ivar fsu: F.S.U of K (readable strings)
    @ivar alternatives: Other valid F.S.U systems of K
    """
    def __init__(self, tower, branch, subcase, norms, hasseIndex, unitIndex,
                 normUnitIndex, kernelSign, subcaseSign, decidedBy, fsuReal, fsu,
                 alternatives=()):
        self.tower = tower
        self.branch = branch
        self.subcase = subcase
        self.norms = norms
        self.hasseIndex = hasseIndex
        self.unitIndex = unitIndex
        self.normUnitIndex = normUnitIndex
        self.kernelSign = kernelSign
        self.subcaseSign = subcaseSign
        self.decidedBy = decidedBy
        self.fsuReal = list(fsuReal)
        self.fsu = list(fsu)
        self.alternatives = [list(system) for system in alternatives]

    def label(self):
        """ @return: The branch label, e.g. '4(ii)'
        @rtype: str
        """
        if self.subcase is None:
            return '%d' % self.branch
        return '%d(%s)' % (self.branch, self.subcase)

    def signature(self):
        """ Everything but the tower name, for structural comparison

        @rtype: tuple
        """
        return (self.branch, self.subcase, self.norms, self.hasseIndex, self.unitIndex,
                self.normUnitIndex, self.kernelSign, self.subcaseSign, self.decidedBy,
                tuple(self.fsuReal), tuple(self.fsu),
                tuple(tuple(system) for system in self.alternatives))

    def __repr__(self):
        return 'FsuCase(%s, branch=%s, Q=%d, q=%d, index=%d)' % (
            self.tower, self.label(), self.hasseIndex, self.unitIndex, self.normUnitIndex)


def pmSquareTest(x, m):
    """ Tests whether m*(x+1) or m*(x-1) is a perfect square

    @param x: The rational coordinate of a unit, x > 1
    @type x: int
    @param m: A positive multiplier
    @type m: int

    @return: '+' if m*(x+1) is a square, '-' if m*(x-1) is, None otherwise
    @rtype: str or None

    @raise InconsistencyError: If both signs succeed
    """
    if x <= 1:
        raise DomainError('x must exceed 1, got %d' % x)
    plus = numtheory.isPerfectSquare(m * (x + 1))
    minus = numtheory.isPerfectSquare(m * (x - 1))
    if plus and minus:
        raise InconsistencyError('both %d*(%d+1) and %d*(%d-1) are squares' % (m, x, m, x))
    if plus:
        return '+'
    if minus:
        return '-'
    return None

def qkIndex(p1, p2):
    """ The Hasse unit index Q_k of k = Q(sqrt(2p1p2), i)

    Q_k = 2 iff N(eps_d) = 1 and x+1 or x-1 is a square. The result is
    checked against the divisor rule: a divisor of d congruent to 5 mod 8
    forces Q_k = 1.

    @rtype: int
    """
    pair = numtheory.validatePair(p1, p2)
    eps = pell.fundamentalUnit(pair.d)
    q = 1
    if eps.normSign == 1 and pmSquareTest(eps.x, 1) is not None:
        q = 2
    divisors = (1, 2, p1, p2, 2 * p1, 2 * p2, p1 * p2, pair.d)
    if q == 2 and any(dd % 8 == 5 for dd in divisors):
        raise InconsistencyError('Q_k = 2 for d = %d although a divisor is 5 mod 8' % pair.d)
    return q

def sqrtForm(unit, p1, p2):
    """ The pairing of Gaussian primes appearing under the square root of a unit

    For eps = (a + b*sqrt(m))/den of norm -1 with p1*p2 | m, exactly one of
    pi1, pi2 and exactly one of pi3, pi4 divide a + den*i. The pairing is
    P13_24 when these are {pi1, pi3} or {pi2, pi4}, and P14_23 otherwise.

    @type unit: capitula.pell.QuadUnit
    @rtype: SqrtForm

    @raise DomainError: If the unit has norm +1 or p1*p2 does not divide m
    @raise InconsistencyError: If the divisibility pattern is not the expected one
    """
    if unit.normSign != -1:
        raise DomainError('%s has norm +1; no square-root form' % unit)
    if unit.m % (p1 * p2):
        raise DomainError('%d*%d does not divide the radicand %d' % (p1, p2, unit.m))
    pi1, pi2, pi3, pi4 = gaussian.pairPrimes(p1, p2)
    z = GaussianInt(unit.x, unit.den)
    hits = [gaussian.divides(pi, z) for pi in (pi1, pi2, pi3, pi4)]
    if hits[0] == hits[1] or hits[2] == hits[3]:
        raise InconsistencyError('%s is not divisible by exactly one prime over each of %d, %d'
                                 % (z, p1, p2))
    if hits[0] == hits[2]:
        return SqrtForm(P13_24)
    return SqrtForm(P14_23)

def squareClass(unit):
    """ The Gaussian integer representing a norm -1 unit modulo squares

    @rtype: GaussianInt
    """
    if unit.normSign != -1:
        raise DomainError('%s has norm +1' % unit)
    if unit.den == 1:
        return GaussianInt(2 * unit.x, 2)
    return GaussianInt(unit.x, 2)

def isProductSquare(units, m1, m2):
    """ Tests whether a product of norm -1 quadratic units is a square in
    Q(sqrt(m1), sqrt(m2), i), or equivalently in Q(sqrt(m1), sqrt(m2))

    @param units: Units whose radicands lie in {m1, m2, m1*m2}
    @type units: sequence of capitula.pell.QuadUnit

    @rtype: bool
    """
    z = GaussianInt(1)
    for unit in units:
        z = z * squareClass(unit)
    for t in (1, m1, m2, m1 * m2):
        if gaussian.isSquare(z * t):
            return True
    return False

def towerRadicands(tower, p1, p2):
    """ The radicands (a, b) with K+ = Q(sqrt(a), sqrt(b)) and ab = d

    @rtype: tuple
    """
    if tower == K1:
        return p1, 2 * p2
    if tower == K2:
        return p2, 2 * p1
    if tower == K3:
        return 2, p1 * p2
    raise DomainError('unknown tower %r' % tower)

def towerUnits(tower, p1, p2):
    """ The units (eps1, eps2, eps3) of the quadratic subfields of K+

    @rtype: tuple of capitula.pell.QuadUnit
    """
    a, b = towerRadicands(tower, p1, p2)
    return pell.fundamentalUnit(a), pell.fundamentalUnit(b), pell.fundamentalUnit(a * b)

def tripleProductElement(p1, p2, tower=K3):
    """ eps1*eps2*eps3 as an exact element of K+

    @rtype: capitula.biquadratic.BiquadraticElement
    """
    a, b = towerRadicands(tower, p1, p2)
    return product(BiquadraticElement.fromQuadUnit(a, b, u) for u in towerUnits(tower, p1, p2))

def tripleProductSquare(p1, p2, tower=K3):
    """ Decides whether eps1*eps2*eps3 is a square in K+

    For K3 the square roots of eps2 and eps3 carry the pairings of their
    Gaussian factors; the product is a square exactly when both pairings
    agree. This is cross-checked against the square-class test, which also
    serves K1 and K2, where the pairing alone does not fix the class.

    @param tower: 'K1', 'K2' or 'K3'
    @type tower: str
    @rtype: bool

    @raise DomainError: If eps2 or eps3 has norm +1
    """
    numtheory.validatePair(p1, p2)
    units = towerUnits(tower, p1, p2)
    if any(u.normSign != -1 for u in units):
        raise DomainError('the triple product test needs three units of norm -1 (%s, %d, %d)'
                          % (tower, p1, p2))
    a, b = towerRadicands(tower, p1, p2)
    byClass = isProductSquare(units, a, b)
    if tower != K3:
        return byClass
    byPairing = sqrtForm(units[1], p1, p2) == sqrtForm(units[2], p1, p2)
    if byPairing != byClass:
        raise InconsistencyError('pairing and square-class tests disagree for (%d, %d)' % (p1, p2))
    return byPairing

def tripleProductSquareNumerically(p1, p2, tower=K3, precisionBits=None):
    """ The numeric oracle's answer to C{tripleProductSquare()}

    @rtype: bool
    """
    return isSquareNumerically(tripleProductElement(p1, p2, tower), precisionBits)

def _norms(units):
    return units[1].normSign, units[2].normSign

def _classifyBiquadraticOverP(tower, p, p1, p2):
    # K1 (p = p1) and K2 (p = p2) share one classification
    units = towerUnits(tower, p1, p2)
    eps3 = units[2]
    norms = _norms(units)
    kernelSign = pmSquareTest(eps3.x, 1) if eps3.normSign == 1 else None
    subcaseSign = None
    alternatives = ()
    if norms == (-1, -1):
        branch = 1
        decidedBy = 'square-class'
        if tripleProductSquare(p1, p2, tower):
            subcase, Q, q = 'i', 1, 2
            fsuReal = fsu = ['eps1', 'eps2', 'sqrt(eps1*eps2*eps3)']
        else:
            subcase, Q, q = 'ii', 2, 1
            fsuReal = ['eps1', 'eps2', 'eps3']
            fsu = ['eps1', 'eps2', 'sqrt(i*eps1*eps2*eps3)']
        index = 2
    elif norms == (1, -1):
        branch, subcase, Q, q, decidedBy = 2, None, 2, 1, 'norms'
        fsuReal = ['eps1', 'eps2', 'eps3']
        fsu = ['eps1', 'sqrt(i*eps2)', 'eps3']
        index = 2
    elif norms == (-1, 1):
        branch, decidedBy = 3, 'square-test'
        subcaseSign = pmSquareTest(eps3.x, 2 * p)
        if subcaseSign is not None:
            subcase, Q, q = 'i', 1, 2
            fsuReal = fsu = ['eps1', 'eps2', 'sqrt(eps3)']
        else:
            subcase, Q, q = 'ii', 2, 1
            fsuReal = ['eps1', 'eps2', 'eps3']
            fsu = ['eps1', 'eps2', 'sqrt(i*eps3)']
        index = 4 if kernelSign is not None else 2
    else:
        branch, decidedBy, Q, q = 4, 'square-test', 2, 2
        subcaseSign = pmSquareTest(eps3.x, 2 * p)
        if subcaseSign is not None:
            subcase = 'i'
            fsuReal = ['eps1', 'eps2', 'sqrt(eps3)']
            fsu = ['eps1', 'sqrt(i*eps2)', 'sqrt(eps3)']
        else:
            subcase = 'ii'
            fsuReal = ['eps1', 'eps2', 'sqrt(eps2*eps3)']
            fsu = ['eps1', 'sqrt(eps2*eps3)', 'sqrt(i*eps3)']
            alternatives = (['eps1', 'sqrt(eps2*eps3)', 'sqrt(i*eps2)'],
                            ['eps1', 'sqrt(i*eps2)', 'sqrt(i*eps3)'])
        index = 2 if kernelSign is not None else 1
    case = FsuCase(tower, branch, subcase, norms, Q, q, index, kernelSign, subcaseSign,
                   decidedBy, fsuReal, fsu, alternatives)
    log.debug('({p1}, {p2}) {case}', p1=p1, p2=p2, case=repr(case))
    return case

def classifyK1(p1, p2):
    """ Unit classification of K1 = Q(sqrt(p1), sqrt(2p2), i)

    Branches by (N(eps2), N(eps3)):
      1. (-1, -1): Q_K = 1 iff eps1*eps2*eps3 is a square in K+
      2. (+1, -1): Q_K = 2
      3. (-1, +1): Q_K = 1 iff 2p1(x+-1) is a square
      4. (+1, +1): Q_K = 2; the subcase depends on 2p1(x+-1)

    The norm index [E_k : N(E_K1)] is 2 in branches 1 and 2; in branch 3 it
    is 4 if x+-1 is a square and 2 otherwise; in branch 4 it is 2 if x+-1
    is a square and 1 otherwise.

    @rtype: FsuCase
    """
    numtheory.validatePair(p1, p2)
    return _classifyBiquadraticOverP(K1, p1, p1, p2)

def classifyK2(p1, p2):
    """ Unit classification of K2 = Q(sqrt(p2), sqrt(2p1), i)

    This is C{classifyK1()} with the roles of p1 and p2 exchanged.

    @rtype: FsuCase
    """
    numtheory.validatePair(p1, p2)
    return _classifyBiquadraticOverP(K2, p2, p1, p2)

def classifyK3(p1, p2):
    """ Unit classification of K3 = Q(sqrt(2), sqrt(p1p2), i)

    Here Q_K = 1 always, and the unit index q of K3+ is::

        (-1, -1): 2 iff eps1*eps2*eps3 is a square in K3+
        (+1, -1): 1
        (-1, +1): 2 iff x+-1 is a square
        (+1, +1): 2 (sqrt(eps3) or sqrt(eps2*eps3) lies in K3+)

    @rtype: FsuCase
    """
    numtheory.validatePair(p1, p2)
    units = towerUnits(K3, p1, p2)
    eps2, eps3 = units[1], units[2]
    norms = _norms(units)
    if eps2.normSign == 1 and eps2.den == 1 and pmSquareTest(eps2.x, 1) is not None:
        raise InconsistencyError('eps_%d has norm 1 but a+-1 is a square' % eps2.m)
    kernelSign = pmSquareTest(eps3.x, 1) if eps3.normSign == 1 else None
    subcaseSign = None
    if norms == (-1, -1):
        branch, decidedBy = 1, 'pairing'
        if tripleProductSquare(p1, p2, K3):
            subcase, q = 'i', 2
            fsuReal = ['eps1', 'eps2', 'sqrt(eps1*eps2*eps3)']
        else:
            subcase, q = 'ii', 1
            fsuReal = ['eps1', 'eps2', 'eps3']
        index = 3 - q
    elif norms == (1, -1):
        branch, subcase, q, decidedBy = 2, None, 1, 'norms'
        fsuReal = ['eps1', 'eps2', 'eps3']
        index = 2
    elif norms == (-1, 1):
        branch, decidedBy = 3, 'square-test'
        subcaseSign = kernelSign
        if kernelSign is not None:
            subcase, q = 'i', 2
            fsuReal = ['eps1', 'eps2', 'sqrt(eps3)']
        else:
            subcase, q = 'ii', 1
            fsuReal = ['eps1', 'eps2', 'eps3']
        index = 2
    else:
        branch, q, decidedBy = 4, 2, 'square-test'
        subcaseSign = kernelSign
        if kernelSign is not None:
            subcase = 'i'
            fsuReal = ['eps1', 'eps2', 'sqrt(eps3)']
            index = 2
        else:
            subcase = 'ii'
            fsuReal = ['eps1', 'eps2', 'sqrt(eps2*eps3)']
            index = 1
    case = FsuCase(K3, branch, subcase, norms, 1, q, index, kernelSign, subcaseSign,
                   decidedBy, fsuReal, fsuReal)
    log.debug('({p1}, {p2}) {case}', p1=p1, p2=p2, case=repr(case))
    return case

def classify(tower, p1, p2):
    """ Dispatches to C{classifyK1()}, C{classifyK2()} or C{classifyK3()}

    @rtype: FsuCase
    """
    return {K1: classifyK1, K2: classifyK2, K3: classifyK3}[tower](p1, p2)
