#!/usr/bin/env python
#
# This library is free software, distributed under the terms of
# the GNU Lesser General Public License Version 3, or any later version.
# See the COPYING file included in this archive

import itertools
import unittest

from capitula import ambiguous
from capitula import capitulation
from capitula import fsu
from capitula import numtheory
from capitula import pell
from capitula.ambiguous import H0, H1, H2, H3

class KernelTest(unittest.TestCase):
    """ Test case for the capitulation kernels in K1, K2 and K3 """
    def testKernelK1(self):
        for (p1, p2), generators in (((41, 17), [H1, H2]),
                                     ((5, 89), [H1]),
                                     ((5, 29), [H1, H2]),
                                     ((13, 17), [H1, H2]),
                                     ((17, 41), [H1, H2, H0 + H3]),
                                     ((5, 41), [H1, H0 + H3]),
                                     ((89, 5), [H1, H0 + H3])):
            report = capitulation.kernelK1(p1, p2)
            self.assertEqual(report.generators, generators, 'ker J_K1 of (%d, %d): %r'
                             % (p1, p2, report))
            self.assertEqual(report.size, 2 ** len(generators))
            self.assertEqual(report.tower, fsu.K1)
            self.assertTrue(report.isWholeKernel)

    def testKernelK3(self):
        for (p1, p2), generators in (((5, 13), [H0]),
                                     ((5, 29), [H0, H1 + H2]),
                                     ((5, 89), [H0, H1 + H3]),
                                     ((5, 41), [H0]),
                                     ((53, 17), [H0, H1 + H3])):
            report = capitulation.kernelK3(p1, p2)
            self.assertEqual(report.generators, generators, 'ker J_K3 of (%d, %d): %r'
                             % (p1, p2, report))

    def testKernelK2IsRelabelledK1(self):
        primes = numtheory.primesOneModFour(300)
        for p1, p2 in itertools.permutations(primes, 2):
            k2 = capitulation.kernelK2(p1, p2)
            k1 = capitulation.kernelK1(p2, p1)
            self.assertEqual(k2.size, k1.size)
            self.assertEqual(k2.generators, [w.relabel(ambiguous.SWAP_PRIMES) for w in k1.generators])

    def testGenusKernel(self):
        for (p1, p2), generators, size in (((13, 17), [H0, H1, H2], 8),
                                           ((41, 17), [H0, H1, H2, H3], 16),
                                           ((5, 89), [H0, H1, H3], 8)):
            report = capitulation.kernel(capitulation.GENUS, p1, p2)
            self.assertEqual(report.generators, generators)
            self.assertEqual(report.size, size)
            self.assertIsNone(report.fsuCase)


class MainTheoremTest(unittest.TestCase):
    """ Test case for the consistency checks over a range of pairs """
    def testSweep(self):
        primes = numtheory.primesOneModFour(300)
        for p1, p2 in itertools.permutations(primes, 2):
            verdict = capitulation.verifyMainTheorem(p1, p2)
            self.assertTrue(verdict.passed(), 'checks failed for (%d, %d): %r' % (p1, p2, verdict))
            self.assertEqual(str(verdict), 'pass')

    def testFailedVerdict(self):
        verdict = capitulation.Verdict(5, 13, [('K1-size', '3')])
        self.assertFalse(verdict.passed())
        self.assertEqual(str(verdict), 'fail')


class Application222Test(unittest.TestCase):
    """ Test case for 2-class groups of type (2, 2, 2) """
    def testDetection(self):
        self.assertEqual(capitulation.legendreSymbols(5, 13), (-1, -1, -1))
        self.assertTrue(capitulation.isType222(5, 29))
        self.assertFalse(capitulation.isType222(17, 41))
        self.assertIsNone(capitulation.application222(17, 41))

    def testKernels(self):
        for (p1, p2), q, k3 in (((5, 29), 1, [H0, H1 + H2]), ((5, 13), 2, [H0])):
            result = capitulation.application222(p1, p2)
            self.assertEqual(result.q, q)
            self.assertEqual(result.kernels[fsu.K1].generators, [H1, H2])
            self.assertEqual(result.kernels[fsu.K2].generators, [H0 + H1, H0 + H2])
            self.assertEqual(result.kernels[fsu.K3].generators, k3)
            self.assertEqual(result.kernels[fsu.K3].canonical, k3)
            self.assertEqual(result.kernels[fsu.K2].canonical, [H0 + H1, H0 + H2])
            self.assertTrue(result.kernels[capitulation.GENUS].isWholeKernel)
            self.assertTrue(result.fullCapitulation)

    def testAllType222PairsHaveNormMinusOne(self):
        primes = numtheory.primesOneModFour(500)
        for p1, p2 in itertools.permutations(primes, 2):
            if capitulation.isType222(p1, p2):
                self.assertEqual(pell.fundamentalUnit(2 * p1 * p2).normSign, -1,
                                 'N(eps) of (%d, %d)' % (p1, p2))

    def testApplicationSweep(self):
        primes = numtheory.primesOneModFour(300)
        for p1, p2 in itertools.permutations(primes, 2):
            result = capitulation.application222(p1, p2)
            if capitulation.isType222(p1, p2):
                self.assertIsNotNone(result, '(%d, %d) has type (2, 2, 2)' % (p1, p2))
                self.assertEqual(result.kernels[fsu.K1].generators, [H1, H2])
            else:
                self.assertIsNone(result, '(%d, %d) has no type (2, 2, 2)' % (p1, p2))


def suite():
    suite = unittest.TestSuite()
    loader = unittest.TestLoader()
    for case in (KernelTest, MainTheoremTest, Application222Test):
        suite.addTest(loader.loadTestsFromTestCase(case))
    return suite

if __name__ == '__main__':
    # If this module is executed from the commandline, run all its tests
    unittest.TextTestRunner().run(suite())
