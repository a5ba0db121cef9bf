#!/usr/bin/env python
#
# This library is free software, distributed under the terms of
# the GNU Lesser General Public License Version 3, or any later version.
# See the COPYING file included in this archive
#
# The docstrings in this module contain epytext markup; API documentation
# may be created by processing this file with epydoc: http://epydoc.sf.net

""" The complete analysis of one pair (p1, p2) """

from twisted.logger import Logger

from capitula import ambiguous
from capitula import capitulation
from capitula import fsu
from capitula import numtheory
from capitula import pell
from capitula.numtheory import InconsistencyError

log = Logger()

#: Labels of the quadratic subfields whose units are reported, in order
SUBFIELDS = ('p1', 'p2', '2', '2p1', '2p2', 'p1p2')


class FieldReport(object):
    """ Units, indices, ambiguous classes and capitulation kernels of
    k = Q(sqrt(2p1p2), i)

    @ivar pair: The validated pair
    @type pair: capitula.numtheory.PrimePair
    @ivar epsD: The fundamental unit of Q(sqrt(d))
    @ivar units: List of (label, unit) for the subfields in C{SUBFIELDS}
    @ivar qk: The Hasse unit index Q_k
    @ivar qK3: The unit index of K3+
    @ivar counts: L{capitula.ambiguous.AmbiguousCounts}
    @ivar ams: Am_s(k/Q(i)) as a L{capitula.ambiguous.Subgroup}
    @ivar cases: L{capitula.fsu.FsuCase} per tower
    @ivar kernels: L{capitula.capitulation.KernelReport} per tower and 'genus'
    @ivar application: L{capitula.capitulation.Application222} or None
    @ivar verdict: L{capitula.capitulation.Verdict}
    @ivar numericCheck: 'agree', 'not-applicable' or None when not requested
    """
    def __init__(self, pair, epsD, units, qk, qK3, counts, ams, cases, kernels,
                 application, verdict, numericCheck=None):
        self.pair = pair
        self.p1 = pair.p1
        self.p2 = pair.p2
        self.d = pair.d
        self.epsD = epsD
        self.units = units
        self.qk = qk
        self.qK3 = qK3
        self.counts = counts
        self.ams = ams
        self.cases = cases
        self.kernels = kernels
        self.application = application
        self.type222 = application is not None
        self.verdict = verdict
        self.numericCheck = numericCheck

    def __repr__(self):
        return 'FieldReport(%d, %d, main theorem %s)' % (self.p1, self.p2, self.verdict)


def subfieldRadicands(p1, p2):
    """ @return: The radicands matching C{SUBFIELDS}
    @rtype: tuple
    """
    return p1, p2, 2, 2 * p1, 2 * p2, p1 * p2

def _numericCheck(p1, p2, case, precisionBits):
    if case.norms != (-1, -1):
        return 'not-applicable'
    exact = fsu.tripleProductSquare(p1, p2, fsu.K3)
    numeric = fsu.tripleProductSquareNumerically(p1, p2, fsu.K3, precisionBits)
    if exact != numeric:
        raise InconsistencyError('square test of eps1*eps2*eps3 in K3+ for (%d, %d): '
                                 'exact %s, numeric %s' % (p1, p2, exact, numeric))
    return 'agree'

def analysePair(p1, p2, verifyNumeric=False, precisionBits=None):
    """ Runs the whole pipeline for one pair and cross-checks the parts

    @param verifyNumeric: Also decide the K3 triple product square with the
                          numeric oracle and compare
    @type verifyNumeric: bool
    @param precisionBits: Oracle precision override
    @type precisionBits: int

    @rtype: FieldReport

    @raise capitula.numtheory.InvalidPair: For inadmissible pairs
    @raise InconsistencyError: If two parts of the analysis disagree
    """
    pair = numtheory.validatePair(p1, p2)
    epsD = pell.fundamentalUnit(pair.d)
    units = [(label, pell.fundamentalUnit(m))
             for label, m in zip(SUBFIELDS, subfieldRadicands(p1, p2))]
    qk = fsu.qkIndex(p1, p2)
    counts = ambiguous.ambiguousCounts(p1, p2)
    ams = ambiguous.amsPresentation(p1, p2)
    if ams.size() != counts.amsSize:
        raise InconsistencyError('|Am_s| = %d by presentation, %d by class number formula'
                                 % (ams.size(), counts.amsSize))
    cases = dict((tower, fsu.classify(tower, p1, p2)) for tower in fsu.TOWERS)
    kernels = dict((tower, capitulation.kernel(tower, p1, p2))
                   for tower in fsu.TOWERS + (capitulation.GENUS,))
    application = capitulation.application222(p1, p2)
    if application is not None:
        if application.q != cases[fsu.K3].unitIndex:
            raise InconsistencyError('unit index of K3+ differs between reports')
        kernels[fsu.K2] = application.kernels[fsu.K2]
    verdict = capitulation.verifyMainTheorem(p1, p2)
    numericCheck = None
    if verifyNumeric:
        numericCheck = _numericCheck(p1, p2, cases[fsu.K3], precisionBits)
    report = FieldReport(pair, epsD, units, qk, cases[fsu.K3].unitIndex, counts, ams,
                         cases, kernels, application, verdict, numericCheck)
    log.debug('analysed ({p1}, {p2}): main theorem {verdict}', p1=p1, p2=p2,
              verdict=str(verdict))
    return report
