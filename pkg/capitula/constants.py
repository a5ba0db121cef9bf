#!/usr/bin/env python
#
# This library is free software, distributed under the terms of
# the GNU Lesser General Public License Version 3, or any later version.
# See the COPYING file included in this archive
#
# The docstrings in this module contain epytext markup; API documentation
# may be created by processing this file with epydoc: http://epydoc.sf.net

""" This module defines the characterizing constants of the computations

Library functions read these values at call time, so client applications
(and the command line front-end) may modify them to suit their needs.
C{scanWorkers} and C{envPrefix} are implementation-specific and do not
affect any computed invariant.
"""

######### ARITHMETIC CONSTANTS ###########

#: Numbers below this bound are proven prime or composite by Miller-Rabin
#: with the fixed witness set below
deterministicPrimeBound = 2**64

#: Miller-Rabin witnesses that are sufficient below C{deterministicPrimeBound}
millerRabinWitnesses = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

#: Additional random-base rounds for candidates above C{deterministicPrimeBound};
#: such numbers are reported as "probable" primes
probablePrimeRounds = 40

#: Maximum number of continued fraction steps before an expansion is abandoned
periodCap = 10**6

######### NUMERIC ORACLE CONSTANTS ###########

#: Lower bound on the working precision (in bits) of the square-in-field oracle;
#: the oracle always uses at least 2*bitlength(u) + 64 bits
precisionBits = 128

#: How many times the oracle doubles its precision before giving up
oracleRetries = 3

#: Coefficients of a candidate square root are rounded to multiples of 1/oracleGrid
oracleGrid = 4

######## IMPLEMENTATION-SPECIFIC CONSTANTS ###########

#: Default number of worker threads used by a batch scan
scanWorkers = 4

#: Prefix of the environment variables that mirror command line flags
envPrefix = 'CAPITULA_'
