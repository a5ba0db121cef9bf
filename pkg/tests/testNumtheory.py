#!/usr/bin/env python
#
# This library is free software, distributed under the terms of
# the GNU Lesser General Public License Version 3, or any later version.
# See the COPYING file included in this archive

import random
import unittest

from capitula import numtheory

class IntegerSquareTest(unittest.TestCase):
    """ Test case for isqrt() and isPerfectSquare() """
    def setUp(self):
        self.cases = ((0, 0), (1, 1), (2, 1), (3, 1), (4, 2), (12544, 112), (12545, 112),
                      (10**40, 10**20), (10**40 - 1, 10**20 - 1))

    def testIsqrt(self):
        """ Tests floor square roots, including values beyond a machine word """
        for n, root in self.cases:
            result = numtheory.isqrt(n)
            self.assertEqual(result, root, 'isqrt(%d) should be %d, got %d' % (n, root, result))
            self.assertTrue(result * result <= n < (result + 1) ** 2)
            self.assertIs(type(result), int, 'isqrt() must return a plain int')
        self.assertRaises(numtheory.DomainError, numtheory.isqrt, -1)

    def testRandomRange(self):
        """ Checks r**2 <= n < (r+1)**2 on random inputs """
        rng = random.Random(1394)
        for _ in range(500):
            n = rng.randrange(0, 2**200)
            r = numtheory.isqrt(n)
            self.assertTrue(r * r <= n < (r + 1) * (r + 1), 'isqrt(%d) = %d is wrong' % (n, r))

    def testPerfectSquare(self):
        """ Tests the square verdicts of the x+1/x-1 columns """
        self.assertTrue(numtheory.isPerfectSquare(12544))
        self.assertFalse(numtheory.isPerfectSquare(12546))
        self.assertFalse(numtheory.isPerfectSquare(-4))
        self.assertTrue(numtheory.isPerfectSquare(0))
        self.assertTrue(numtheory.isPerfectSquare(46656))


class JacobiTest(unittest.TestCase):
    """ Test case for the Jacobi symbol """
    def testKnownValues(self):
        for a, n, expected in ((2, 17, 1), (2, 5, -1), (5, 29, 1), (3, 9, 0), (17, 41, -1)):
            result = numtheory.jacobi(a, n)
            self.assertEqual(result, expected, '(%d/%d) should be %d, got %d' % (a, n, expected, result))

    def testBadModulus(self):
        for n in (0, -3, 4, 10):
            self.assertRaises(numtheory.DomainError, numtheory.jacobi, 2, n)

    def testLegendreAgainstSquares(self):
        """ Compares with the set of quadratic residues for every prime below 1000 """
        for p in range(3, 1000, 2):
            if not numtheory.isPrime(p):
                continue
            residues = set((t * t) % p for t in range(1, p))
            for a in range(1, p):
                expected = 1 if a in residues else -1
                self.assertEqual(numtheory.jacobi(a, p), expected,
                                 '(%d/%d) disagrees with the residue test' % (a, p))

    def testMultiplicativity(self):
        """ (ab/n) = (a/n)(b/n) for random a, b and odd n """
        rng = random.Random(29)
        for _ in range(2000):
            n = rng.randrange(1, 10**4, 2)
            a, b = rng.randrange(-10**4, 10**4), rng.randrange(-10**4, 10**4)
            self.assertEqual(numtheory.jacobi(a * b, n),
                             numtheory.jacobi(a, n) * numtheory.jacobi(b, n),
                             'multiplicativity fails for a=%d, b=%d, n=%d' % (a, b, n))


class PrimalityTest(unittest.TestCase):
    """ Test case for isPrime() and validatePair() """
    def testSmallNumbers(self):
        sieve = [True] * 5000
        sieve[0] = sieve[1] = False
        for i in range(2, 5000):
            if sieve[i]:
                for j in range(i * i, 5000, i):
                    sieve[j] = False
        for n in range(5000):
            self.assertEqual(numtheory.isPrime(n), sieve[n], 'isPrime(%d) is wrong' % n)

    def testKnownValues(self):
        self.assertTrue(numtheory.isPrime(17))
        self.assertFalse(numtheory.isPrime(1394))
        self.assertTrue(numtheory.isPrime(809))
        # strong pseudoprime to bases 2, 3, 5, 7
        self.assertFalse(numtheory.isPrime(3215031751))
        self.assertTrue(numtheory.isPrime(2**61 - 1))
        self.assertFalse(numtheory.isPrime(2**64 + 1))
        self.assertTrue(numtheory.isPrime(2**89 - 1))

    def testCertainty(self):
        self.assertEqual(numtheory.primalityCertainty(809), 'proven')
        self.assertEqual(numtheory.primalityCertainty(2**89 - 1), 'probable')

    def testValidatePair(self):
        pair = numtheory.validatePair(17, 41)
        self.assertEqual(pair.d, 1394)
        self.assertFalse(pair.probable)
        self.assertEqual(pair.swapped(), numtheory.PrimePair(41, 17))
        cases = (((7, 13), numtheory.ResidueClass, 'residue-class'),
                 ((13, 13), numtheory.NotDistinct, 'not-distinct'),
                 ((21, 13), numtheory.NotPrime, 'not-prime'),
                 ((5, 1), numtheory.NotPrime, 'not-prime'))
        for (p1, p2), errorClass, code in cases:
            try:
                numtheory.validatePair(p1, p2)
            except numtheory.InvalidPair as e:
                self.assertIsInstance(e, errorClass, '(%d, %d) raised the wrong error' % (p1, p2))
                self.assertEqual(e.code, code)
                self.assertIsInstance(e, numtheory.DomainError)
            else:
                self.fail('(%d, %d) should have been rejected' % (p1, p2))

    def testPrimesOneModFour(self):
        self.assertEqual(numtheory.primesOneModFour(50), [5, 13, 17, 29, 37, 41])
        self.assertEqual(numtheory.primesOneModFour(4), [])


class SquarefreeTest(unittest.TestCase):
    def testDecomposition(self):
        for n, expected in ((1, (1, 1)), (12, (2, 3)), (1394, (1, 1394)), (72, (6, 2)),
                            (25 * 290, (5, 290))):
            self.assertEqual(numtheory.squarefreeDecomposition(n), expected)
        self.assertTrue(numtheory.isSquarefree(2 * 5 * 29))
        self.assertFalse(numtheory.isSquarefree(18))
        self.assertRaises(numtheory.DomainError, numtheory.squarefreeDecomposition, 0)


def suite():
    suite = unittest.TestSuite()
    loader = unittest.TestLoader()
    for case in (IntegerSquareTest, JacobiTest, PrimalityTest, SquarefreeTest):
        suite.addTest(loader.loadTestsFromTestCase(case))
    return suite

if __name__ == '__main__':
    # If this module is executed from the commandline, run all its tests
    unittest.TextTestRunner().run(suite())
