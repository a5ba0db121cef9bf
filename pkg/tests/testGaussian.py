#!/usr/bin/env python
#
# This library is free software, distributed under the terms of
# the GNU Lesser General Public License Version 3, or any later version.
# See the COPYING file included in this archive

import random
import unittest

from capitula import gaussian
from capitula import numtheory
from capitula.gaussian import GaussianInt

class GaussianIntTest(unittest.TestCase):
    """ Test case for the arithmetic of GaussianInt """
    def testNorm(self):
        for z, norm in ((GaussianInt(1, 1), 2), (GaussianInt(1, 2), 5),
                        (GaussianInt(1, 2) * GaussianInt(1, -2), 25), (GaussianInt(0), 0)):
            self.assertEqual(gaussian.gNorm(z), norm, 'norm of %s should be %d' % (z, norm))

    def testMultiplicativeNorm(self):
        rng = random.Random(5)
        for _ in range(200):
            a = GaussianInt(rng.randint(-999, 999), rng.randint(-999, 999))
            b = GaussianInt(rng.randint(-999, 999), rng.randint(-999, 999))
            self.assertEqual(gaussian.gNorm(a * b), gaussian.gNorm(a) * gaussian.gNorm(b))

    def testEqualityAndImmutability(self):
        self.assertEqual(GaussianInt(5), 5)
        self.assertEqual(gaussian.I * gaussian.I, -1)
        self.assertEqual(str(GaussianInt(3, -11)), '3-11i')
        self.assertEqual(hash(GaussianInt(2, 1)), hash(GaussianInt(2, 1)))
        z = GaussianInt(1, 2)
        self.assertRaises(AttributeError, setattr, z, 're', 3)


class DivisibilityTest(unittest.TestCase):
    """ Test case for divides(), gaussGcd() and squareRoot() """
    def testDivides(self):
        self.assertTrue(gaussian.divides(GaussianInt(1, 2), GaussianInt(5)))
        self.assertFalse(gaussian.divides(GaussianInt(1, 2), GaussianInt(1, -2)))
        for x in range(-15, 17, 2):
            self.assertTrue(gaussian.divides(gaussian.ONE_PLUS_I, GaussianInt(x, 1)),
                            '1+i should divide %d+i' % x)
        self.assertRaises(numtheory.DomainError, gaussian.divides, GaussianInt(0), GaussianInt(3))

    def testGcd(self):
        cases = (((GaussianInt(1, 2), GaussianInt(5)), GaussianInt(1, 2)),
                 ((GaussianInt(3), GaussianInt(7)), GaussianInt(1)),
                 ((GaussianInt(2), GaussianInt(1, 1)), GaussianInt(1, 1)),
                 ((GaussianInt(0), GaussianInt(0, 3)), GaussianInt(3)))
        for (a, b), expected in cases:
            result = gaussian.gaussGcd(a, b)
            self.assertEqual(result, expected, 'gcd(%s, %s) should be %s, got %s'
                             % (a, b, expected, result))
        self.assertRaises(numtheory.DomainError, gaussian.gaussGcd, GaussianInt(0), GaussianInt(0))

    def testGcdProperties(self):
        """ The gcd divides both arguments and is divisible by a planted common factor """
        rng = random.Random(41)
        for _ in range(300):
            g = GaussianInt(rng.randint(-30, 30), rng.randint(1, 30))
            x = GaussianInt(rng.randint(-30, 30), rng.randint(-30, 30))
            y = GaussianInt(rng.randint(-30, 30), rng.randint(1, 30))
            a, b = g * x, g * y
            result = gaussian.gaussGcd(a, b)
            self.assertTrue(gaussian.divides(result, a) and gaussian.divides(result, b),
                            'gcd(%s, %s) = %s does not divide both' % (a, b, result))
            self.assertTrue(gaussian.divides(g, result),
                            'common factor %s does not divide gcd(%s, %s) = %s' % (g, a, b, result))
            self.assertTrue(result.re > 0 and result.im >= 0, '%s is not normalized' % result)

    def testSquareRoot(self):
        for z in (GaussianInt(3, 4), GaussianInt(0, 2), GaussianInt(-1), GaussianInt(-9, 40),
                  GaussianInt(0)):
            w = gaussian.squareRoot(z)
            self.assertIsNotNone(w, '%s is a square' % z)
            self.assertEqual(w * w, z)
        for z in (GaussianInt(0, 1), GaussianInt(2), GaussianInt(1, 2), GaussianInt(5)):
            self.assertFalse(gaussian.isSquare(z), '%s is not a square' % z)


class TwoSquaresTest(unittest.TestCase):
    """ Test case for p = e**2 + 4f**2 """
    def testKnownValues(self):
        for p, e, f in ((5, 1, 1), (13, 3, 1), (17, 1, 2), (29, 5, 1), (41, 5, 2)):
            result = gaussian.twoSquares(p)
            self.assertEqual((result.e, result.f), (e, f), '%d = %d**2 + 4*%d**2 expected, got %r'
                             % (p, e, f, result))
            self.assertEqual(result.prime(), GaussianInt(e, 2 * f))
            self.assertEqual(result.conjugatePrime(), result.prime().conjugate())
            self.assertEqual(gaussian.gNorm(result.prime()), p)

    def testInvalidPrimes(self):
        for p in (2, 7, 21, 25):
            self.assertRaises(numtheory.DomainError, gaussian.twoSquares, p)
        self.assertRaises(numtheory.InconsistencyError, gaussian.TwoSquares, 13, 2, 1)

    def testAgainstSearch(self):
        """ Compares with exhaustive search for every prime p = 1 (mod 4) below 10**5 """
        for p in numtheory.primesOneModFour(10**5):
            result = gaussian.twoSquares(p)
            self.assertEqual(result.e ** 2 + 4 * result.f ** 2, p)
            self.assertEqual(result, gaussian.twoSquaresBySearch(p), 'decomposition of %d' % p)

    def testPairPrimes(self):
        self.assertEqual(gaussian.pairPrimes(5, 13),
                         (GaussianInt(1, 2), GaussianInt(1, -2), GaussianInt(3, 2), GaussianInt(3, -2)))


def suite():
    suite = unittest.TestSuite()
    loader = unittest.TestLoader()
    for case in (GaussianIntTest, DivisibilityTest, TwoSquaresTest):
        suite.addTest(loader.loadTestsFromTestCase(case))
    return suite

if __name__ == '__main__':
    # If this module is executed from the commandline, run all its tests
    unittest.TextTestRunner().run(suite())
