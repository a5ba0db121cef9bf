#!/usr/bin/env python
#
# This library is free software, distributed under the terms of
# the GNU Lesser General Public License Version 3, or any later version.
# See the COPYING file included in this archive
#
# The docstrings in this module contain epytext markup; API documentation
# may be created by processing this file with epydoc: http://epydoc.sf.net

""" Strongly ambiguous classes of k = Q(sqrt(2p1p2), i) over Q(i)

The ramified primes of k/Q(i) give ideals H0..H4 with H0**2 = (1 + i) and
Hj**2 = (pij) for j = 1..4. Their classes have order dividing 2, so a
product of them is a vector over F2, kept here as a L{ClassWord}. A
L{Subgroup} is a set of generating words together with the words known to
be principal (its relations).
"""

from twisted.logger import Logger

from capitula import fsu
from capitula import gaussian
from capitula import numtheory
from capitula import pell
from capitula.gaussian import GaussianInt
from capitula.numtheory import DomainError, InconsistencyError

log = Logger()

WORD_LENGTH = 5


class PrincipalityUndecided(DomainError):
    """ Raised when the sum-of-squares criterion says nothing about an ideal """
    code = 'principality-undecided'


class ClassWord(object):
    """ A product H0**b0 * ... * H4**b4 with exponents in F2

    Words are immutable; C{+} (or C{*}) is the group law.
    """
    def __init__(self, bits=0):
        """
        @param bits: Either a bit mask (bit j is the exponent of Hj) or a
                     sequence of five 0/1 exponents
        @type bits: int or sequence
        """
        if not isinstance(bits, int):
            bits = list(bits)
            if len(bits) != WORD_LENGTH:
                raise DomainError('a class word has %d coordinates' % WORD_LENGTH)
            bits = sum((b % 2) << j for j, b in enumerate(bits))
        if bits < 0 or bits >= 1 << WORD_LENGTH:
            raise DomainError('bit mask %r out of range' % bits)
        self.mask = bits

    @classmethod
    def fromString(cls, text):
        """ Parses a word such as 'H1*H3'; '1' is the identity

        @rtype: ClassWord
        """
        text = text.strip()
        mask = 0
        if text == '1':
            return cls(0)
        for factor in text.split('*'):
            factor = factor.strip()
            if len(factor) != 2 or factor[0] != 'H' or factor[1] not in '01234':
                raise DomainError('cannot parse class word %r' % text)
            mask ^= 1 << int(factor[1])
        return cls(mask)

    @classmethod
    def generator(cls, j):
        """ @return: The word Hj
        @rtype: ClassWord
        """
        return cls(1 << j)

    def bits(self):
        """ @return: The exponents (b0, ..., b4)
        @rtype: tuple
        """
        return tuple((self.mask >> j) & 1 for j in range(WORD_LENGTH))

    def isIdentity(self):
        return self.mask == 0

    def relabel(self, permutation):
        """ Renames the generators: Hj becomes H(permutation[j])

        @rtype: ClassWord
        """
        mask = 0
        for j in range(WORD_LENGTH):
            if (self.mask >> j) & 1:
                mask |= 1 << permutation[j]
        return ClassWord(mask)

    def __add__(self, other):
        return ClassWord(self.mask ^ other.mask)
    __mul__ = __add__

    def __eq__(self, other):
        if isinstance(other, ClassWord):
            return self.mask == other.mask
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self.mask)

    def __repr__(self):
        return 'ClassWord(%r)' % str(self)

    def __str__(self):
        if self.mask == 0:
            return '1'
        return '*'.join('H%d' % j for j in range(WORD_LENGTH) if (self.mask >> j) & 1)


def words(*texts):
    """ @return: A list of L{ClassWord}s parsed from strings
    @rtype: list
    """
    return [ClassWord.fromString(text) for text in texts]

H0, H1, H2, H3, H4 = [ClassWord.generator(j) for j in range(WORD_LENGTH)]
#: H1*H2*H3*H4 = (sqrt(d)/(1 + i)) is principal in every case
UNIVERSAL_RELATION = H1 + H2 + H3 + H4
#: Exchanges the primes over p1 with those over p2
SWAP_PRIMES = (0, 3, 4, 1, 2)


def _echelon(masks):
    """ Reduced row echelon form over F2; the pivot of a row is its highest bit

    @return: Dictionary mapping pivot position to row
    @rtype: dict
    """
    basis = {}
    for v in masks:
        for p, row in basis.items():
            if (v >> p) & 1:
                v ^= row
        if v:
            pivot = v.bit_length() - 1
            for p in basis:
                if (basis[p] >> pivot) & 1:
                    basis[p] ^= v
            basis[pivot] = v
    return basis

def _reduce(mask, basis):
    for p, row in basis.items():
        if (mask >> p) & 1:
            mask ^= row
    return mask


class Subgroup(object):
    """ The subgroup of the class group generated by some class words,
    presented together with words known to be principal

    @ivar generators: The generating words, in the order given
    @ivar relations: Words equal to the identity class
    @ivar origin: A short note on where the relations come from
    """
    def __init__(self, generators, relations=(), origin=None):
        self.generators = list(generators)
        self.relations = list(relations)
        self.origin = origin
        self._relationBasis = _echelon(w.mask for w in self.relations)

    def rank(self):
        """ @return: The F2 dimension of the group modulo its relations
        @rtype: int
        """
        full = _echelon([w.mask for w in self.generators] + [w.mask for w in self.relations])
        return len(full) - len(self._relationBasis)

    def size(self):
        return 2 ** self.rank()

    def isTrivial(self, word):
        """ @return: True iff the word lies in the span of the relations
        @rtype: bool
        """
        return _reduce(word.mask, self._relationBasis) == 0

    def contains(self, word):
        """ @return: True iff the word lies in the span of generators and relations
        @rtype: bool
        """
        full = _echelon([w.mask for w in self.generators] + [w.mask for w in self.relations])
        return _reduce(word.mask, full) == 0

    def areIndependent(self, wordList):
        """ Tests whether the given words are linearly independent modulo
        the relations of this subgroup

        @rtype: bool
        """
        wordList = list(wordList)
        span = _echelon([w.mask for w in wordList] + [w.mask for w in self.relations])
        return len(span) - len(self._relationBasis) == len(wordList)

    def spanEquals(self, first, second):
        """ Tests whether two lists of words generate the same subgroup
        modulo the relations

        @rtype: bool
        """
        rel = [w.mask for w in self.relations]
        a = _echelon([w.mask for w in first] + rel)
        b = _echelon([w.mask for w in second] + rel)
        return a == b

    def canonical(self, wordList=None):
        """ A canonical basis of the span of some words modulo the relations

        Every returned word is reduced against the relations (it has no
        bit at a relation pivot), and the list is in reduced row echelon
        form ordered by pivot. Pivots are highest bits, so the words keep
        the low-index generators.

        @param wordList: The words to reduce; defaults to the generators
        @type wordList: list of ClassWord
        @rtype: list of ClassWord
        """
        if wordList is None:
            wordList = self.generators
        reduced = [_reduce(w.mask, self._relationBasis) for w in wordList]
        basis = _echelon(reduced)
        return [ClassWord(basis[p]) for p in sorted(basis)]

    def __repr__(self):
        return 'Subgroup(generators=%s, relations=%s)' % (
            [str(w) for w in self.generators], [str(w) for w in self.relations])


class AmbiguousCounts(object):
    """ The ambiguous class numbers of k over F = Q(i)

    @ivar rank: The 2-rank r of the class group of k
    @ivar amSize: |Am(k/F)| = 2**r
    @ivar amsSize: |Am_s(k/F)|
    @ivar normIndex: [E_F cap N(k*) : N(E_k)] = amSize / amsSize
    """
    def __init__(self, rank, amSize, amsSize, normIndex):
        if amSize != 2 ** rank or amSize != amsSize * normIndex:
            raise InconsistencyError('ambiguous class numbers %d, %d, %d do not fit rank %d'
                                     % (amSize, amsSize, normIndex, rank))
        self.rank = rank
        self.amSize = amSize
        self.amsSize = amsSize
        self.normIndex = normIndex

    def __repr__(self):
        return 'AmbiguousCounts(rank=%d, am=%d, ams=%d, index=%d)' % (
            self.rank, self.amSize, self.amsSize, self.normIndex)


def rank2Class(p1, p2):
    """ The 2-rank of the class group of k

    @return: 4 if p1 = p2 = 1 (mod 8), else 3
    @rtype: int
    """
    numtheory.validatePair(p1, p2)
    if p1 % 8 == 1 and p2 % 8 == 1:
        return 4
    return 3

def ambiguousCounts(p1, p2):
    """ Sizes of Am(k/Q(i)) and Am_s(k/Q(i))

    Am_s has 16 elements when both primes are 1 mod 8 and Q_k = 2, and 8
    otherwise.

    @rtype: AmbiguousCounts
    """
    r = rank2Class(p1, p2)
    am = 2 ** r
    if r == 4 and fsu.qkIndex(p1, p2) == 2:
        ams = 16
    else:
        ams = 8
    return AmbiguousCounts(r, am, ams, am // ams)

def _unitSquareClasses(p1, p2):
    """ Representatives in Z[i] of E_k modulo squares of k

    @raise PrincipalityUndecided: When Q_k = 2, where E_k is generated by
                                  sqrt(i*eps_d) and has no such representatives
    """
    eps = pell.fundamentalUnit(2 * p1 * p2)
    if eps.normSign == -1:
        w = GaussianInt(2 * eps.x, 2)
    elif fsu.qkIndex(p1, p2) == 1:
        w = GaussianInt(2 * (eps.x + 1))
    else:
        raise PrincipalityUndecided('Q_k = 2 for d = %d; units of k are not represented in Q(i)'
                                    % (2 * p1 * p2))
    return (GaussianInt(1), gaussian.I, w, w * gaussian.I)

def isPrincipalIdeal(a, b, p1, p2):
    """ Decides whether an ideal H of k with H**2 = (a + ib) is principal

    H = (gamma) exactly when a + ib = gamma**2 * u for a unit u of k, i.e.
    when (a + ib)*u is a square in k for one of the unit square classes u.
    An element z of Q(i) is a square in k iff z or z*d is a square in Z[i].

    @param a: Real part of the generator of H**2
    @type a: int
    @param b: Imaginary part of the generator of H**2
    @type b: int

    @rtype: bool

    @raise PrincipalityUndecided: If Q_k = 2
    """
    d = numtheory.validatePair(p1, p2).d
    z = GaussianInt(a, b)
    if z.isZero():
        raise DomainError('the zero ideal')
    for u in _unitSquareClasses(p1, p2):
        if gaussian.isSquare(z * u) or gaussian.isSquare(z * u * d):
            return True
    return False

def principalBySumOfSquares(a, b, p1, p2):
    """ Principality of an ideal H of k with H**2 = (a + ib), read off a**2 + b**2

      1. If sqrt(a**2 + b**2) is not in Q(sqrt(d)), H is not principal.
      2. If a**2 + b**2 = d and N(eps_d) = 1, H is not principal.
      3. If a**2 + b**2 = d and N(eps_d) = -1, H is principal iff (a + ib)
         times a unit of k is a square in k (see C{isPrincipalIdeal()}).

    @rtype: bool

    @raise PrincipalityUndecided: If a**2 + b**2 is a square, or d times a
                                  square, other than d itself
    """
    d = numtheory.validatePair(p1, p2).d
    n = a * a + b * b
    if n == 0:
        raise DomainError('the zero ideal')
    inField = numtheory.isPerfectSquare(n) or (n % d == 0 and numtheory.isPerfectSquare(n // d))
    if not inField:
        return False
    if n != d:
        raise PrincipalityUndecided('%d**2 + %d**2 = %d has square root in Q(sqrt(%d))'
                                    % (a, b, n, d))
    if pell.fundamentalUnit(d).normSign == 1:
        return False
    return isPrincipalIdeal(a, b, p1, p2)

def principalByRationalPrime(p, p1, p2):
    """ Principality of the ideal of k above p in {p1, p2}: H1*H2 for p1, H3*H4 for p2

    Not principal if N(eps_d) = -1 or Q_k = 2; otherwise principal iff
    p(x+-1) or 2p(x+-1) is a square.

    @rtype: bool
    """
    numtheory.validatePair(p1, p2)
    if p not in (p1, p2):
        raise DomainError('%d is neither %d nor %d' % (p, p1, p2))
    eps = pell.fundamentalUnit(2 * p1 * p2)
    if eps.normSign == -1:
        return False
    if fsu.qkIndex(p1, p2) == 2:
        return False
    return fsu.pmSquareTest(eps.x, p) is not None or fsu.pmSquareTest(eps.x, 2 * p) is not None

def pairingRelations(p1, p2):
    """ The products H0*Hi*Hj made principal by the square root of eps_d

    For the pairing P13_24 these are H0*H1*H3 and H0*H2*H4; for P14_23
    they are H0*H1*H4 and H0*H2*H3.

    @rtype: list of ClassWord

    @raise DomainError: If N(eps_d) = 1
    """
    numtheory.validatePair(p1, p2)
    eps = pell.fundamentalUnit(2 * p1 * p2)
    if eps.normSign != -1:
        raise DomainError('N(eps_%d) = 1; no pairing relations' % eps.m)
    form = fsu.sqrtForm(eps, p1, p2)
    pi1, _, pi3, pi4 = gaussian.pairPrimes(p1, p2)
    if form.pairing == fsu.P13_24:
        relations = [H0 + H1 + H3, H0 + H2 + H4]
        same, other = pi1 * pi3, pi1 * pi4
    else:
        relations = [H0 + H1 + H4, H0 + H2 + H3]
        same, other = pi1 * pi4, pi1 * pi3
    same, other = gaussian.ONE_PLUS_I * same, gaussian.ONE_PLUS_I * other
    if (not isPrincipalIdeal(same.re, same.im, p1, p2)
            or isPrincipalIdeal(other.re, other.im, p1, p2)):
        raise InconsistencyError('pairing %s of eps_%d disagrees with the unit group'
                                 % (form.pairing, eps.m))
    return relations

def amsPresentation(p1, p2):
    """ Am_s(k/Q(i)) as generators and relations

      - N(eps_d) = -1: <H0, H1, H2> with the pairing relations (8 elements)
      - N(eps_d) = 1, Q_k = 1: <H0, H1, H3> with H1*H2 and H3*H4 principal
        (8 elements); both come from C{principalByRationalPrime()}
      - N(eps_d) = 1, Q_k = 2: <H0, H1, H2, H3> (16 elements)

    The relation H1*H2*H3*H4 is always listed.

    @rtype: Subgroup
    """
    numtheory.validatePair(p1, p2)
    eps = pell.fundamentalUnit(2 * p1 * p2)
    if eps.normSign == -1:
        form = fsu.sqrtForm(eps, p1, p2)
        ams = Subgroup([H0, H1, H2], pairingRelations(p1, p2) + [UNIVERSAL_RELATION],
                       origin='pairing:%s' % form.pairing)
    elif fsu.qkIndex(p1, p2) == 1:
        for p in (p1, p2):
            if not principalByRationalPrime(p, p1, p2):
                raise InconsistencyError('the ideal above %d is not principal in k for d = %d'
                                         % (p, eps.m))
        ams = Subgroup([H0, H1, H3], [H1 + H2, H3 + H4, UNIVERSAL_RELATION],
                       origin='rational-prime')
    else:
        ams = Subgroup([H0, H1, H2, H3], [UNIVERSAL_RELATION], origin='hasse-index-2')
    expected = 16 if ams.origin == 'hasse-index-2' else 8
    if ams.size() != expected:
        raise InconsistencyError('|Am_s| = %d, expected %d for (%d, %d)'
                                 % (ams.size(), expected, p1, p2))
    log.debug('Am_s for ({p1}, {p2}): {ams}', p1=p1, p2=p2, ams=repr(ams))
    return ams
