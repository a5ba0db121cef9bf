#!/usr/bin/env python
#
# This library is free software, distributed under the terms of
# the GNU Lesser General Public License Version 3, or any later version.
# See the COPYING file included in this archive
#
# The docstrings in this module contain epytext markup; API documentation
# may be created by processing this file with epydoc: http://epydoc.sf.net

""" Capitulation of the 2-classes of k in its unramified extensions

For an unramified quadratic extension K/k the number of classes of k that
become principal in K is [K:k] * [E_k : N(E_K)] = 2 * normUnitIndex, the
index coming from the L{capitula.fsu.FsuCase} of the tower. The generators
of each kernel are class words over H0..H4 (see L{capitula.ambiguous}).
"""

from twisted.logger import Logger

from capitula import ambiguous
from capitula import fsu
from capitula import numtheory
from capitula import pell
from capitula.ambiguous import H0, H1, H2, H3, H4
from capitula.numtheory import InconsistencyError

log = Logger()

GENUS = 'genus'


class KernelReport(object):
    """ The capitulation kernel of k in one extension

    @ivar tower: 'K1', 'K2', 'K3' or 'genus'
    @ivar size: The kernel size; for the genus field the proven lower bound |Am_s|
    @ivar generators: Generating class words as the kernel is usually written
    @ivar canonical: Reduced echelon basis of the same subgroup modulo Am_s relations
    @ivar fsuCase: The unit classification behind the size, or None for the genus field
    @ivar isWholeKernel: False when C{generators} only span a subgroup of the kernel
    """
    def __init__(self, tower, size, generators, canonical, fsuCase=None, isWholeKernel=True):
        self.tower = tower
        self.size = size
        self.generators = list(generators)
        self.canonical = list(canonical)
        self.fsuCase = fsuCase
        self.isWholeKernel = isWholeKernel

    def withGenerators(self, generators):
        """ @return: A copy of this report written with other generators
        @rtype: KernelReport
        """
        return KernelReport(self.tower, self.size, generators, self.canonical,
                            self.fsuCase, self.isWholeKernel)

    def __repr__(self):
        return 'KernelReport(%s, size=%d, generators=%s)' % (
            self.tower, self.size, [str(w) for w in self.generators])


class Verdict(object):
    """ The outcome of C{verifyMainTheorem()}

    @ivar failures: List of (check, detail) pairs; empty on success
    """
    def __init__(self, p1, p2, failures):
        self.p1 = p1
        self.p2 = p2
        self.failures = list(failures)

    def passed(self):
        return not self.failures

    def __str__(self):
        if self.passed():
            return 'pass'
        return 'fail'

    def __repr__(self):
        return 'Verdict(%d, %d, %r)' % (self.p1, self.p2, self.failures)


class Application222(object):
    """ Capitulation when the 2-class group of k has type (2, 2, 2)

    @ivar symbols: The Jacobi symbols ((p1/p2), (2/p1), (2/p2))
    @ivar kernels: Dictionary of L{KernelReport}s keyed by tower; K2 is
                   written as <H0*H1, H0*H2>
    @ivar q: The unit index of K3+
    """
    def __init__(self, p1, p2, symbols, kernels, q):
        self.p1 = p1
        self.p2 = p2
        self.symbols = symbols
        self.kernels = kernels
        self.q = q
        #: Every class of k capitulates in the genus field
        self.fullCapitulation = True

    def __repr__(self):
        return 'Application222(%d, %d, q=%d)' % (self.p1, self.p2, self.q)


def _finish(tower, case, generators, p1, p2):
    ams = ambiguous.amsPresentation(p1, p2)
    size = 2 * case.normUnitIndex
    if 2 ** len(generators) != size or not ams.areIndependent(generators):
        raise InconsistencyError('%s kernel %s of (%d, %d) does not have %d elements'
                                 % (tower, [str(w) for w in generators], p1, p2, size))
    return KernelReport(tower, size, generators, ams.canonical(generators), case)

def _kernelOverP(case, qk):
    # generators of ker J_K1, read with the labels of the ordering (p1, p2)
    norms = case.norms
    squareCase = case.kernelSign is not None
    if squareCase != (qk == 2):
        raise InconsistencyError('x+-1 square test disagrees with Q_k = %d' % qk)
    if norms == (1, 1):
        return [H1, H2] if qk == 2 else [H1]
    if norms[1] == -1:
        return [H1, H2]
    return [H1, H2, H0 + H3] if qk == 2 else [H1, H0 + H3]

def kernelK1(p1, p2):
    """ ker J_K1 for K1 = Q(sqrt(p1), sqrt(2p2), i)

      - N(eps2) = N(eps3) = 1: <H1, H2> if x+-1 is a square, else <H1>
      - N(eps3) = -1: <H1, H2>
      - N(eps2) = -1, N(eps3) = 1: <H1, H2, H0*H3> if x+-1 is a square,
        else <H1, H0*H3>

    @rtype: KernelReport
    """
    case = fsu.classifyK1(p1, p2)
    return _finish(fsu.K1, case, _kernelOverP(case, fsu.qkIndex(p1, p2)), p1, p2)

def kernelK2(p1, p2):
    """ ker J_K2 for K2 = Q(sqrt(p2), sqrt(2p1), i)

    This is C{kernelK1()} of the exchanged pair, with H1, H2 renamed H3, H4
    and the other way round.

    @rtype: KernelReport
    """
    case = fsu.classifyK2(p1, p2)
    generators = [w.relabel(ambiguous.SWAP_PRIMES)
                  for w in _kernelOverP(case, fsu.qkIndex(p1, p2))]
    return _finish(fsu.K2, case, generators, p1, p2)

def kernelK3(p1, p2):
    """ ker J_K3 for K3 = Q(sqrt(2), sqrt(p1p2), i)

      - N(eps3) = -1: <H0> if q = 2, else <H0, H1*H2>
      - N(eps2) = -1, N(eps3) = 1: <H0, H1*H3>
      - N(eps2) = N(eps3) = 1: <H0, H1*H2> if x+-1 is a square, else <H0>

    @rtype: KernelReport
    """
    case = fsu.classifyK3(p1, p2)
    if case.norms[1] == -1:
        generators = [H0] if case.unitIndex == 2 else [H0, H1 + H2]
    elif case.norms[0] == -1:
        generators = [H0, H1 + H3]
    else:
        generators = [H0, H1 + H2] if case.kernelSign is not None else [H0]
    return _finish(fsu.K3, case, generators, p1, p2)

def kernel(tower, p1, p2):
    return {fsu.K1: kernelK1, fsu.K2: kernelK2, fsu.K3: kernelK3, GENUS: genusKernel}[tower](p1, p2)

def genusKernel(p1, p2):
    """ Am_s(k/Q(i)), all of which capitulates in the genus field
    Q(sqrt(2), sqrt(p1), sqrt(p2), i)

    The size is a lower bound for the kernel; the report is marked as the
    whole kernel only in the (2, 2, 2) case.

    @rtype: KernelReport
    """
    ams = ambiguous.amsPresentation(p1, p2)
    whole = isType222(p1, p2)
    return KernelReport(GENUS, ams.size(), ams.generators, ams.canonical(), None, whole)

def legendreSymbols(p1, p2):
    """ @return: ((p1/p2), (2/p1), (2/p2))
    @rtype: tuple
    """
    numtheory.validatePair(p1, p2)
    return numtheory.jacobi(p1, p2), numtheory.jacobi(2, p1), numtheory.jacobi(2, p2)

def isType222(p1, p2):
    """ Tests whether at least two of (p1/p2), (2/p1), (2/p2) are -1, in
    which case the 2-class group of k has type (2, 2, 2)

    @rtype: bool
    """
    return list(legendreSymbols(p1, p2)).count(-1) >= 2

def verifyMainTheorem(p1, p2):
    """ Checks the capitulation picture of one pair

    Every kernel of K1, K2 and K3 must lie in Am_s and have 2*[E_k : N(E_K)]
    independent generators, |Am_s| must match the ambiguous class number
    formula, the words H0..H4 must be nontrivial, H1*H2*H3*H4 must be
    trivial, H1*H2 must be trivial exactly when the ideal above p1 is
    principal, and Am_s must be contained in the genus kernel.

    @return: A verdict listing every failed check (failures are not raised)
    @rtype: Verdict
    """
    failures = []
    ams = ambiguous.amsPresentation(p1, p2)
    for tower in fsu.TOWERS:
        report = kernel(tower, p1, p2)
        for word in report.generators:
            if not ams.contains(word):
                failures.append(('%s-containment' % tower, str(word)))
        if report.size != 2 * report.fsuCase.normUnitIndex:
            failures.append(('%s-size' % tower, '%d' % report.size))
        if not ams.areIndependent(report.generators) or 2 ** len(report.generators) != report.size:
            failures.append(('%s-independence' % tower, ' '.join(str(w) for w in report.generators)))
    counts = ambiguous.ambiguousCounts(p1, p2)
    if ams.size() != counts.amsSize:
        failures.append(('ams-size', '%d != %d' % (ams.size(), counts.amsSize)))
    if not ams.isTrivial(ambiguous.UNIVERSAL_RELATION):
        failures.append(('universal-relation', str(ambiguous.UNIVERSAL_RELATION)))
    for word in (H0, H1, H2, H3, H4):
        if ams.isTrivial(word):
            failures.append(('nontrivial-generator', str(word)))
    if ams.isTrivial(H1 + H2) != ambiguous.principalByRationalPrime(p1, p1, p2):
        failures.append(('rational-prime', str(H1 + H2)))
    genus = genusKernel(p1, p2)
    for word in ams.generators:
        if word not in genus.generators:
            failures.append(('genus-containment', str(word)))
    for check, detail in failures:
        log.warn('main theorem check {check} failed for ({p1}, {p2}): {detail}',
                 check=check, p1=p1, p2=p2, detail=detail)
    return Verdict(p1, p2, failures)

def application222(p1, p2):
    """ Capitulation for 2-class groups of type (2, 2, 2)

    @return: None unless at least two of (p1/p2), (2/p1), (2/p2) are -1;
             then ker J_K1 = <H1, H2>, ker J_K2 = <H0*H1, H0*H2>, ker J_K3
             is <H0, H1*H2> (q = 1) or <H0> (q = 2), and every class
             capitulates in the genus field
    @rtype: Application222 or None

    @raise InconsistencyError: If N(eps_d) = 1 for such a pair, or a kernel
                               differs from the expected one
    """
    symbols = legendreSymbols(p1, p2)
    if list(symbols).count(-1) < 2:
        return None
    eps = pell.fundamentalUnit(2 * p1 * p2)
    if eps.normSign != -1:
        raise InconsistencyError('N(eps_%d) = 1 although the class group has type (2, 2, 2)'
                                 % eps.m)
    ams = ambiguous.amsPresentation(p1, p2)
    k1, k2, k3 = kernelK1(p1, p2), kernelK2(p1, p2), kernelK3(p1, p2)
    written = [H0 + H1, H0 + H2]
    if k1.generators != [H1, H2] or not ams.spanEquals(k2.generators, written):
        raise InconsistencyError('(2, 2, 2) kernels of (%d, %d) differ from <H1, H2> and <H0*H1, H0*H2>'
                                 % (p1, p2))
    q = k3.fsuCase.unitIndex
    expected = [H0] if q == 2 else [H0, H1 + H2]
    if k3.generators != expected:
        raise InconsistencyError('K3 kernel of (%d, %d) is %r' % (p1, p2, k3))
    kernels = {fsu.K1: k1, fsu.K2: k2.withGenerators(written), fsu.K3: k3,
               GENUS: genusKernel(p1, p2)}
    return Application222(p1, p2, symbols, kernels, q)
