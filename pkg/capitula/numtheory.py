#!/usr/bin/env python
#
# This library is free software, distributed under the terms of
# the GNU Lesser General Public License Version 3, or any later version.
# See the COPYING file included in this archive
#
# The docstrings in this module contain epytext markup; API documentation
# may be created by processing this file with epydoc: http://epydoc.sf.net

""" Exact integer utilities used by every other module

All functions are pure; they operate on (arbitrarily large) Python
integers and delegate the heavy lifting to gmpy2. Results are always
returned as plain C{int} (never C{mpz}) so that they serialize and compare
like ordinary integers.
"""

import random

import gmpy2

from capitula import constants


class DomainError(ValueError):
    """ Raised when an argument lies outside the domain of an operation """
    code = 'domain'


class InvalidPair(DomainError):
    """ Raised by C{validatePair()} when (p1, p2) is not an admissible pair

    Each subclass carries a distinct machine-readable C{code}.
    """
    code = 'invalid-pair'

class NotPrime(InvalidPair):
    """ One of the entries is not a prime number """
    code = 'not-prime'

class ResidueClass(InvalidPair):
    """ One of the primes is not congruent to 1 modulo 4 """
    code = 'residue-class'

class NotDistinct(InvalidPair):
    """ The two primes are equal """
    code = 'not-distinct'


class InconsistencyError(Exception):
    """ Raised when an internal invariant is violated

    This always indicates a bug (or a counterexample to a proven statement);
    it is never used for bad user input.
    """
    code = 'inconsistency'


def isqrt(n):
    """ Integer square root

    @param n: A nonnegative integer
    @type n: int

    @return: The largest r with r*r <= n
    @rtype: int

    @raise DomainError: If C{n} is negative
    """
    if n < 0:
        raise DomainError('isqrt() of negative number %d' % n)
    return int(gmpy2.isqrt(n))

def isPerfectSquare(n):
    """ @return: True iff n >= 0 is the square of an integer
    @rtype: bool
    """
    if n < 0:
        return False
    return bool(gmpy2.is_square(n))

def jacobi(a, n):
    """ The Jacobi symbol (a/n); for prime n this is the Legendre symbol

    @param a: The "numerator"; any integer
    @type a: int
    @param n: The "denominator"; an odd positive integer
    @type n: int

    @rtype: int (-1, 0 or 1)

    @raise DomainError: If C{n} is even or not positive
    """
    if n < 1 or n % 2 == 0:
        raise DomainError('Jacobi symbol needs an odd positive modulus, got %d' % n)
    return int(gmpy2.jacobi(a, n))

def isPrime(n):
    """ Miller-Rabin primality test

    Below C{constants.deterministicPrimeBound} the fixed witness set in
    C{constants.millerRabinWitnesses} makes the answer exact. Above it,
    C{constants.probablePrimeRounds} additional bases (drawn from a
    generator seeded with C{n}, so answers are reproducible) are tried;
    use C{primalityCertainty()} to find out which regime applied.

    @type n: int
    @rtype: bool
    """
    if n < 2:
        return False
    for p in constants.millerRabinWitnesses:
        if n == p:
            return True
        if n % p == 0:
            return False
    for a in constants.millerRabinWitnesses:
        if not gmpy2.is_strong_prp(n, a):
            return False
    if n >= constants.deterministicPrimeBound:
        rng = random.Random(n)
        for _ in range(constants.probablePrimeRounds):
            if not gmpy2.is_strong_prp(n, rng.randint(2, n - 2)):
                return False
    return True

def primalityCertainty(n):
    """ Tells how much a positive answer of C{isPrime(n)} is worth

    @rtype: str
    @return: C{'proven'} below the deterministic bound, C{'probable'} above
    """
    if n < constants.deterministicPrimeBound:
        return 'proven'
    return 'probable'

def squarefreeDecomposition(n):
    """ Writes a positive integer as n = s**2 * t with t squarefree

    Uses trial division, which is adequate for the radicands met here
    (products of two primes, times 2, and their squares).

    @type n: int
    @return: The tuple (s, t)
    @rtype: tuple

    @raise DomainError: If C{n} is not positive
    """
    if n < 1:
        raise DomainError('squarefree decomposition of %d' % n)
    s, t = 1, 1
    rest = n
    q = 2
    while q * q <= rest:
        e = 0
        while rest % q == 0:
            rest //= q
            e += 1
        s *= q ** (e // 2)
        if e % 2:
            t *= q
        q += 1 if q == 2 else 2
    t *= rest
    return s, t

def isSquarefree(n):
    """ @return: True iff n > 0 has no square factor other than 1
    @rtype: bool
    """
    return n > 0 and squarefreeDecomposition(n)[0] == 1

def primesOneModFour(limit):
    """ All primes p <= limit with p = 1 (mod 4), in increasing order

    @rtype: list
    """
    return [p for p in range(5, limit + 1, 4) if isPrime(p)]


class PrimePair(object):
    """ A validated, ordered pair of distinct primes p1, p2 = 1 (mod 4)

    The order matters: K1 is built over p1 and K2 over p2, so (p1, p2) and
    (p2, p1) describe the same field k with the labels H1, H2 and H3, H4
    exchanged.
    """
    def __init__(self, p1, p2):
        self.p1 = p1
        self.p2 = p2
        #: The radicand of k = Q(sqrt(d), i)
        self.d = 2 * p1 * p2
        #: True if primality of an entry is only probable
        self.probable = 'probable' in (primalityCertainty(p1), primalityCertainty(p2))

    def swapped(self):
        """ @return: The pair with p1 and p2 exchanged
        @rtype: PrimePair
        """
        return PrimePair(self.p2, self.p1)

    def __eq__(self, other):
        if isinstance(other, PrimePair):
            return (self.p1, self.p2) == (other.p1, other.p2)
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.p1, self.p2))

    def __repr__(self):
        return 'PrimePair(%d, %d)' % (self.p1, self.p2)


def validatePair(p1, p2):
    """ Checks that (p1, p2) is admissible and wraps it

    @param p1: The first prime
    @type p1: int
    @param p2: The second prime
    @type p2: int

    @rtype: PrimePair

    @raise NotPrime: If either entry is not prime
    @raise ResidueClass: If either prime is not 1 modulo 4
    @raise NotDistinct: If p1 == p2
    """
    for p in (p1, p2):
        if not isPrime(p):
            raise NotPrime('%d is not a prime' % p)
    for p in (p1, p2):
        if p % 4 != 1:
            raise ResidueClass('%d is not congruent to 1 mod 4' % p)
    if p1 == p2:
        raise NotDistinct('the primes must be distinct, got %d twice' % p1)
    return PrimePair(p1, p2)
