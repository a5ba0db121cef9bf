# This library is free software, distributed under the terms of
# the GNU Lesser General Public License Version 3, or any later version.
# See the COPYING file included in this archive

""" Units, ambiguous classes and capitulation for k = Q(sqrt(2p1p2), i)

For two distinct primes p1, p2 congruent to 1 mod 4, capitula computes the
fundamental units of the quadratic subfields of the genus field of k, the
fundamental systems of units of the three unramified quadratic extensions

    K1 = Q(sqrt(p1), sqrt(2p2), i), K2 = Q(sqrt(p2), sqrt(2p1), i) and
    K3 = Q(sqrt(2), sqrt(p1p2), i),

the strongly ambiguous class group Am_s(k/Q(i)) and the classes of k that
capitulate in K1, K2, K3 and in the genus field.

The arithmetic lives in C{numtheory}, C{gaussian}, C{pell} and
C{biquadratic}; the classification of units in C{fsu}; the class group
side in C{ambiguous} and C{capitulation}. C{report.analysePair()} ties
everything together, and C{cli} exposes it on the command line.
"""

from capitula.numtheory import validatePair, DomainError, InvalidPair, InconsistencyError
from capitula.pell import fundamentalUnit, QuadUnit
from capitula.fsu import classifyK1, classifyK2, classifyK3, qkIndex
from capitula.ambiguous import ClassWord, Subgroup, amsPresentation
from capitula.capitulation import (kernelK1, kernelK2, kernelK3, genusKernel,
                                   verifyMainTheorem, application222)
from capitula.report import analysePair, FieldReport
