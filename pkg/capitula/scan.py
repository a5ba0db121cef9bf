#!/usr/bin/env python
#
# This library is free software, distributed under the terms of
# the GNU Lesser General Public License Version 3, or any later version.
# See the COPYING file included in this archive
#
# The docstrings in this module contain epytext markup; API documentation
# may be created by processing this file with epydoc: http://epydoc.sf.net

""" Batch analysis of all pairs of primes up to a bound

Pairs are analysed on a Twisted thread pool and written, one JSON document
per line, in pair order whatever the order of completion.
"""

import collections

from twisted.internet import defer, threads
from twisted.logger import Logger
from twisted.python import failure, threadpool

from capitula import capitulation
from capitula import constants
from capitula import fsu
from capitula import numtheory
from capitula import report
from capitula.encoding import JSONEncoding
from capitula.numtheory import DomainError
from capitula.reportformat import DefaultFormat

log = Logger()

#: Filters accepted by C{iterPairs()}
FILTERS = ('222',)


def iterPairs(maxPrime, filterName=None):
    """ All ordered pairs (p1, p2) of distinct primes = 1 (mod 4) up to maxPrime

    @param filterName: None, or '222' to keep only pairs whose 2-class
                       group has type (2, 2, 2)
    @type filterName: str

    @rtype: generator of tuples
    """
    if filterName is not None and filterName not in FILTERS:
        raise DomainError('unknown filter %r' % filterName)
    primes = numtheory.primesOneModFour(maxPrime)
    for p1 in primes:
        for p2 in primes:
            if p1 == p2:
                continue
            if filterName == '222' and not capitulation.isType222(p1, p2):
                continue
            yield p1, p2


class OrderedSink(object):
    """ Writes numbered lines in index order

    Lines arriving early are held back until every line before them has
    been written.
    """
    def __init__(self, stream):
        self.stream = stream
        self._next = 0
        self._pending = {}

    def put(self, index, line):
        self._pending[index] = line
        while self._next in self._pending:
            self.stream.write(self._pending.pop(self._next) + '\n')
            self._next += 1

    def pending(self):
        """ @return: The number of lines waiting for a predecessor
        @rtype: int
        """
        return len(self._pending)


class ScanSummary(object):
    """ Aggregate counts of a scan

    @ivar branches: Per tower, a counter of FsuCase branch labels
    @ivar kernelSizes: Per tower, a counter of kernel sizes
    @ivar failures: List of (p1, p2, check) for failed verifications
    @ivar errors: List of (p1, p2, code) for pairs whose analysis raised
    @ivar ioError: The first exception raised while writing to the
                   output stream, or None
    """
    def __init__(self):
        self.pairs = 0
        self.passed = 0
        self.type222 = 0
        self.branches = dict((tower, collections.Counter()) for tower in fsu.TOWERS)
        self.kernelSizes = dict((tower, collections.Counter())
                                for tower in fsu.TOWERS + (capitulation.GENUS,))
        self.failures = []
        self.errors = []
        self.ioError = None

    def add(self, fieldReport):
        self.pairs += 1
        if fieldReport.verdict.passed():
            self.passed += 1
        for check, _ in fieldReport.verdict.failures:
            self.failures.append((fieldReport.p1, fieldReport.p2, check))
        if fieldReport.type222:
            self.type222 += 1
        for tower in fsu.TOWERS:
            self.branches[tower][fieldReport.cases[tower].label()] += 1
        for tower, counter in self.kernelSizes.items():
            counter[fieldReport.kernels[tower].size] += 1

    def addError(self, p1, p2, code):
        self.pairs += 1
        self.errors.append((p1, p2, code))

    def ok(self):
        """ @return: True iff every pair was analysed, verified and written
        @rtype: bool
        """
        return not self.failures and not self.errors and self.ioError is None

    def toPrimitive(self):
        return {'pairs': self.pairs,
                'passed': self.passed,
                'failed': self.pairs - self.passed - len(self.errors),
                'errors': len(self.errors),
                'type_222': self.type222,
                'branches': dict((tower, dict(sorted(counter.items())))
                                 for tower, counter in sorted(self.branches.items())),
                'kernel_sizes': dict((tower, dict((str(size), n) for size, n in sorted(counter.items())))
                                     for tower, counter in sorted(self.kernelSizes.items())),
                'failures': [[str(p1), str(p2), check] for p1, p2, check in self.failures],
                'error_pairs': [[str(p1), str(p2), code] for p1, p2, code in self.errors],
                'io_error': None if self.ioError is None else str(self.ioError)}


def _analyse(p1, p2, translator, encoding):
    # runs in a worker thread; everything it touches is pure
    fieldReport = report.analysePair(p1, p2)
    return fieldReport, encoding.encode(translator.toPrimitive(fieldReport))

def _errorLine(p1, p2, error, encoding):
    code = getattr(error, 'code', 'error')
    return code, encoding.encode({'p1': str(p1), 'p2': str(p2), 'error': code,
                                  'message': str(error)})

def scanPairs(maxPrime, stream, filterName=None, workers=None, reactor=None,
              translator=None, encoding=None):
    """ Analyses every pair from C{iterPairs()} and streams the reports

    @param maxPrime: Upper bound for both primes
    @type maxPrime: int
    @param stream: Text stream receiving one encoded report per line
    @param filterName: See C{iterPairs()}
    @param workers: Thread pool size; 0 analyses synchronously in the
                    calling thread. Defaults to C{constants.scanWorkers}
    @type workers: int
    @param reactor: The reactor driving the pool (needed when workers > 0)

    @return: A deferred firing with the L{ScanSummary}; a failure to write
             to C{stream} is recorded as its C{ioError}
    @rtype: twisted.internet.defer.Deferred
    """
    if workers is None:
        workers = constants.scanWorkers
    if translator is None:
        translator = DefaultFormat()
    if encoding is None:
        encoding = JSONEncoding()
    pairs = list(iterPairs(maxPrime, filterName))
    sink = OrderedSink(stream)
    summary = ScanSummary()
    log.info('scanning {count} pairs with primes up to {maxPrime}', count=len(pairs),
             maxPrime=maxPrime)

    def write(index, line):
        # nothing more goes to a stream that has failed once
        if summary.ioError is None:
            sink.put(index, line)

    def record(result, index, p1, p2):
        fieldReport, line = result
        summary.add(fieldReport)
        write(index, line)

    def recordError(reason, index, p1, p2):
        log.failure('analysis of ({p1}, {p2}) failed', reason, p1=p1, p2=p2)
        code, line = _errorLine(p1, p2, reason.value, encoding)
        summary.addError(p1, p2, code)
        write(index, line)

    def recordFailed(reason, p1, p2):
        log.failure('recording the result of ({p1}, {p2}) failed', reason, p1=p1, p2=p2)
        if reason.check(OSError):
            summary.ioError = reason.value
        else:
            summary.failures.append((p1, p2, 'record'))

    def finish(_):
        log.info('scan done: {passed} of {pairs} pairs verified', passed=summary.passed,
                 pairs=summary.pairs)
        return summary

    def chain(df, index, p1, p2):
        df.addCallbacks(record, recordError, callbackArgs=(index, p1, p2),
                        errbackArgs=(index, p1, p2))
        df.addErrback(recordFailed, p1, p2)
        return df

    if workers == 0:
        for index, (p1, p2) in enumerate(pairs):
            try:
                result = _analyse(p1, p2, translator, encoding)
            except Exception:
                chain(defer.fail(failure.Failure()), index, p1, p2)
            else:
                chain(defer.succeed(result), index, p1, p2)
        return defer.succeed(None).addCallback(finish)

    if reactor is None:
        from twisted.internet import reactor
    pool = threadpool.ThreadPool(minthreads=0, maxthreads=workers, name='capitula-scan')
    pool.start()
    deferreds = []
    for index, (p1, p2) in enumerate(pairs):
        df = threads.deferToThreadPool(reactor, pool, _analyse, p1, p2, translator, encoding)
        deferreds.append(chain(df, index, p1, p2))

    def stopPool(result):
        pool.stop()
        return result
    outer = defer.DeferredList(deferreds, consumeErrors=True)
    outer.addBoth(stopPool)
    outer.addCallback(finish)
    return outer
