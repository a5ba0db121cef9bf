#!/usr/bin/env python
#
# This library is free software, distributed under the terms of
# the GNU Lesser General Public License Version 3, or any later version.
# See the COPYING file included in this archive

import itertools
import unittest

from capitula import ambiguous
from capitula import numtheory
from capitula.ambiguous import ClassWord, Subgroup, H0, H1, H2, H3, H4

class ClassWordTest(unittest.TestCase):
    """ Test case for class words over H0..H4 """
    def testParsing(self):
        self.assertEqual(ClassWord.fromString('H1*H3'), H1 + H3)
        self.assertEqual(str(ClassWord.fromString(' H3 * H1 ')), 'H1*H3')
        self.assertEqual(ClassWord.fromString('1'), ClassWord())
        self.assertTrue(ClassWord.fromString('H2*H2').isIdentity())
        self.assertEqual(ambiguous.words('H0', 'H1*H2'), [H0, H1 * H2])
        for text in ('H5', 'X1', 'H1H2', ''):
            self.assertRaises(numtheory.DomainError, ClassWord.fromString, text)

    def testBits(self):
        self.assertEqual((H0 + H4).bits(), (1, 0, 0, 0, 1))
        self.assertEqual(ClassWord([0, 1, 1, 0, 0]), H1 + H2)
        self.assertRaises(numtheory.DomainError, ClassWord, [1, 0])
        self.assertRaises(numtheory.DomainError, ClassWord, 32)

    def testRelabel(self):
        self.assertEqual(H1.relabel(ambiguous.SWAP_PRIMES), H3)
        self.assertEqual((H0 + H2).relabel(ambiguous.SWAP_PRIMES), H0 + H4)
        self.assertEqual(ambiguous.UNIVERSAL_RELATION.relabel(ambiguous.SWAP_PRIMES),
                         ambiguous.UNIVERSAL_RELATION)


class SubgroupTest(unittest.TestCase):
    """ Test case for the F2 linear algebra of Subgroup """
    def setUp(self):
        self.group = Subgroup([H0, H1, H2], [H0 + H1 + H3, H0 + H2 + H4,
                                             ambiguous.UNIVERSAL_RELATION])

    def testRank(self):
        self.assertEqual(self.group.rank(), 3)
        self.assertEqual(self.group.size(), 8)
        self.assertEqual(Subgroup([H0, H1, H2, H3], [ambiguous.UNIVERSAL_RELATION]).size(), 16)
        self.assertEqual(Subgroup([H1, H2], [H1 + H2]).size(), 2)

    def testMembership(self):
        self.assertTrue(self.group.isTrivial(H1 + H2 + H3 + H4))
        self.assertTrue(self.group.isTrivial(H0 + H2 + H4))
        self.assertFalse(self.group.isTrivial(H1))
        self.assertTrue(self.group.contains(H3))

    def testIndependence(self):
        group = Subgroup([H1, H3], [H1 + H2])
        self.assertFalse(group.areIndependent([H1, H2]))
        self.assertTrue(group.areIndependent([H1, H3]))
        self.assertTrue(self.group.spanEquals([H0 + H1, H0 + H2], [H0 + H1, H1 + H2]))
        self.assertTrue(self.group.spanEquals([H3], [H0 + H1]))
        self.assertFalse(self.group.spanEquals([H1], [H2]))

    def testCanonicalIsInvariant(self):
        group = Subgroup([H1], [H1 + H2])
        self.assertEqual(group.canonical([H1]), group.canonical([H2]))
        self.assertEqual(self.group.canonical([H0 + H1, H0 + H2]),
                         self.group.canonical([H0 + H1, H1 + H2]))
        self.assertEqual(len(self.group.canonical()), 3)

    def testCanonicalKeepsLowGenerators(self):
        self.assertEqual(self.group.canonical(), [H0, H1, H2])
        self.assertEqual(self.group.canonical([H3]), [H0 + H1])
        self.assertEqual(self.group.canonical([H4, H2 + H3]), [H1, H0 + H2])


class CountsTest(unittest.TestCase):
    """ Test case for the ambiguous class numbers """
    def testRank(self):
        self.assertEqual(ambiguous.rank2Class(17, 41), 4)
        self.assertEqual(ambiguous.rank2Class(5, 29), 3)
        self.assertEqual(ambiguous.rank2Class(17, 13), 3)

    def testCounts(self):
        for (p1, p2), (am, ams, index) in (((17, 41), (16, 16, 1)), ((41, 17), (16, 16, 1)),
                                           ((97, 17), (16, 16, 1)), ((5, 89), (8, 8, 1)),
                                           ((13, 17), (8, 8, 1))):
            counts = ambiguous.ambiguousCounts(p1, p2)
            self.assertEqual((counts.amSize, counts.amsSize, counts.normIndex), (am, ams, index),
                             'ambiguous counts of (%d, %d): %r' % (p1, p2, counts))

    def testSelfCheck(self):
        self.assertRaises(numtheory.InconsistencyError, ambiguous.AmbiguousCounts, 3, 8, 8, 2)
        self.assertEqual(ambiguous.AmbiguousCounts(4, 16, 8, 2).normIndex, 2)


class PrincipalityTest(unittest.TestCase):
    """ Test case for the principality criteria """
    def testPrincipalIdeal(self):
        # 17 + i = (1 + i)*pi2*pi3 for (5, 29), and eps_290 = 17 + sqrt(290)
        self.assertTrue(ambiguous.isPrincipalIdeal(17, 1, 5, 29))
        self.assertFalse(ambiguous.isPrincipalIdeal(1, 2, 5, 29))
        self.assertRaises(ambiguous.PrincipalityUndecided, ambiguous.isPrincipalIdeal, 1, 4, 17, 41)

    def testSumOfSquares(self):
        self.assertTrue(ambiguous.principalBySumOfSquares(17, 1, 5, 29))
        self.assertFalse(ambiguous.principalBySumOfSquares(1, 2, 5, 29))
        self.assertFalse(ambiguous.principalBySumOfSquares(29, 7, 5, 89))
        self.assertRaises(ambiguous.PrincipalityUndecided, ambiguous.principalBySumOfSquares,
                          3, 4, 5, 29)
        self.assertRaises(numtheory.DomainError, ambiguous.principalBySumOfSquares, 0, 0, 5, 29)

    def testRationalPrime(self):
        self.assertTrue(ambiguous.principalByRationalPrime(5, 5, 89))
        self.assertTrue(ambiguous.principalByRationalPrime(89, 5, 89))
        self.assertFalse(ambiguous.principalByRationalPrime(17, 17, 41))
        self.assertFalse(ambiguous.principalByRationalPrime(5, 5, 29))
        self.assertRaises(numtheory.DomainError, ambiguous.principalByRationalPrime, 13, 5, 29)

    def testPairingRelations(self):
        self.assertEqual(ambiguous.pairingRelations(5, 13), [H0 + H1 + H3, H0 + H2 + H4])
        self.assertEqual(ambiguous.pairingRelations(5, 29), [H0 + H1 + H4, H0 + H2 + H3])
        self.assertRaises(numtheory.DomainError, ambiguous.pairingRelations, 5, 89)


class PresentationTest(unittest.TestCase):
    """ Test case for the presentation of the strongly ambiguous classes """
    def testOrigins(self):
        self.assertEqual(ambiguous.amsPresentation(5, 13).origin, 'pairing:P13_24')
        self.assertEqual(ambiguous.amsPresentation(5, 29).origin, 'pairing:P14_23')
        self.assertEqual(ambiguous.amsPresentation(5, 89).origin, 'rational-prime')
        self.assertEqual(ambiguous.amsPresentation(17, 41).origin, 'hasse-index-2')

    def testSizes(self):
        primes = numtheory.primesOneModFour(300)
        for p1, p2 in itertools.permutations(primes, 2):
            ams = ambiguous.amsPresentation(p1, p2)
            counts = ambiguous.ambiguousCounts(p1, p2)
            self.assertEqual(ams.size(), counts.amsSize, 'Am_s of (%d, %d)' % (p1, p2))
            self.assertTrue(ams.isTrivial(ambiguous.UNIVERSAL_RELATION))
            for word in (H0, H1, H2, H3, H4):
                self.assertFalse(ams.isTrivial(word), '%s is trivial for (%d, %d)' % (word, p1, p2))


def suite():
    suite = unittest.TestSuite()
    loader = unittest.TestLoader()
    for case in (ClassWordTest, SubgroupTest, CountsTest, PrincipalityTest, PresentationTest):
        suite.addTest(loader.loadTestsFromTestCase(case))
    return suite

if __name__ == '__main__':
    # If this module is executed from the commandline, run all its tests
    unittest.TextTestRunner().run(suite())
