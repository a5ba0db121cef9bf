#!/usr/bin/env python
#
# This library is free software, distributed under the terms of
# the GNU Lesser General Public License Version 3, or any later version.
# See the COPYING file included in this archive
#
# The docstrings in this module contain epytext markup; API documentation
# may be created by processing this file with epydoc: http://epydoc.sf.net

""" The capitula command line

    capitula [--precision-bits N] [--period-cap N] [-v | -q] COMMAND ...

    report --p1 P --p2 P [--format json|csv|text] [--verify-numeric]
    tables --set ex48|ex49|k3-q|k3-sq|genus [--both-orders] [--format ...]
    scan   --max N [--filter 222] [--out PATH] [--workers N]
    unit   --d D [--format ...]

Options not given on the command line are read from the environment
(CAPITULA_PRECISION_BITS, CAPITULA_PERIOD_CAP, CAPITULA_WORKERS) before
falling back to L{capitula.constants}.

Exit codes: 0 success, 2 usage or domain error, 3 internal inconsistency
or failed verification, 4 I/O error.
"""

import os
import sys

from twisted.internet import defer, task
from twisted.logger import (FilteringLogObserver, LogLevel, LogLevelFilterPredicate,
                            Logger, globalLogPublisher, textFileLogObserver)
from twisted.python import usage

from capitula import constants
from capitula import pell
from capitula import report
from capitula import scan
from capitula import tables
from capitula.biquadratic import OracleUndecided
from capitula.encoding import JSONEncoding, encodingFor
from capitula.numtheory import DomainError, InconsistencyError
from capitula.reportformat import DefaultFormat

log = Logger()

EXIT_OK, EXIT_DOMAIN, EXIT_INCONSISTENT, EXIT_IO = 0, 2, 3, 4
FORMATS = ('json', 'csv', 'text')


def _format(value):
    if value not in FORMATS:
        raise ValueError('format must be one of %s' % ', '.join(FORMATS))
    return value
_format.coerceDoc = 'One of json, csv or text.'

def _positive(value):
    value = int(value)
    if value < 0:
        raise ValueError('must not be negative')
    return value

def fromEnvironment(name, default, environ=None):
    """ Reads CAPITULA_<NAME> (dashes become underscores) as an integer

    @return: The environment value, or C{default} if unset
    @rtype: int

    @raise usage.UsageError: If the variable is not an integer
    """
    if environ is None:
        environ = os.environ
    key = constants.envPrefix + name.upper().replace('-', '_')
    if key not in environ:
        return default
    try:
        return _positive(environ[key])
    except ValueError:
        raise usage.UsageError('%s must be a nonnegative integer, got %r' % (key, environ[key]))


class ReportOptions(usage.Options):
    synopsis = '--p1 P --p2 P [options]'
    optParameters = [['p1', None, None, 'The first prime (1 mod 4).', int],
                     ['p2', None, None, 'The second prime (1 mod 4).', int],
                     ['format', 'f', 'json', None, _format]]
    optFlags = [['verify-numeric', None,
                 'Check the K3 triple product square with the numeric oracle.']]

    def postOptions(self):
        if self['p1'] is None or self['p2'] is None:
            raise usage.UsageError('report needs --p1 and --p2')


class TablesOptions(usage.Options):
    synopsis = '--set SET [options]'
    optParameters = [['set', 's', None, 'Table set: %s.' % ', '.join(sorted(tables.TABLE_SETS))],
                     ['format', 'f', 'json', None, _format]]
    optFlags = [['both-orders', None, 'Also render every row with p1 and p2 exchanged.']]

    def parseArgs(self, setId=None):
        if setId is not None:
            self['set'] = setId

    def postOptions(self):
        if self['set'] is None:
            raise usage.UsageError('tables needs a table set')


class ScanOptions(usage.Options):
    synopsis = '--max N [options]'
    optParameters = [['max', 'm', None, 'Upper bound for both primes.', int],
                     ['filter', None, None, 'Only pairs of a given kind; "222" for type (2, 2, 2).'],
                     ['out', 'o', '-', 'File receiving the JSON lines ("-" for stdout).'],
                     ['workers', 'w', None, 'Worker threads; 0 runs in the main thread.', _positive]]

    def postOptions(self):
        if self['max'] is None:
            raise usage.UsageError('scan needs --max')
        if self['filter'] is not None and self['filter'] not in scan.FILTERS:
            raise usage.UsageError('unknown filter %r' % self['filter'])
        if self['workers'] is None:
            self['workers'] = fromEnvironment('workers', constants.scanWorkers)


class UnitOptions(usage.Options):
    synopsis = '--d D [options]'
    optParameters = [['d', None, None, 'A squarefree integer > 1.', int],
                     ['format', 'f', 'json', None, _format]]

    def postOptions(self):
        if self['d'] is None:
            raise usage.UsageError('unit needs --d')


class Options(usage.Options):
    synopsis = '[options] report|tables|scan|unit ...'
    optParameters = [['precision-bits', None, None,
                      'Minimum precision of the numeric square root oracle.', _positive],
                     ['period-cap', None, None,
                      'Maximum continued fraction period length.', _positive]]
    optFlags = [['verbose', 'v', 'Log debug messages to stderr.'],
                ['quiet', 'q', 'Only log errors.']]
    subCommands = [['report', None, ReportOptions, 'Analyse one pair of primes.'],
                   ['tables', None, TablesOptions, 'Regenerate an example table.'],
                   ['scan', None, ScanOptions, 'Analyse all pairs up to a bound.'],
                   ['unit', None, UnitOptions, 'Print the fundamental unit of Q(sqrt(D)).']]

    def postOptions(self):
        if self.subCommand is None:
            raise usage.UsageError('no command given')
        if self['verbose'] and self['quiet']:
            raise usage.UsageError('--verbose and --quiet exclude each other')
        if self['precision-bits'] is None:
            self['precision-bits'] = fromEnvironment('precision-bits', constants.precisionBits)
        if self['period-cap'] is None:
            self['period-cap'] = fromEnvironment('period-cap', constants.periodCap)

    def logLevel(self):
        if self['verbose']:
            return LogLevel.debug
        if self['quiet']:
            return LogLevel.error
        return LogLevel.warn


def _writeError(stream, code, message):
    stream.write(JSONEncoding().encode({'error': code, 'message': message}) + '\n')

def _emit(stream, fmt, primitive, csvRows=None):
    encoding = encodingFor(fmt)
    if fmt == 'csv':
        stream.write(encoding.encode(csvRows))
    elif fmt == 'json':
        stream.write(encoding.encode(primitive) + '\n')
    else:
        stream.write(encoding.encode(primitive))

def _report(opts, stdout):
    translator = DefaultFormat()
    fieldReport = report.analysePair(opts['p1'], opts['p2'], opts['verify-numeric'],
                                     constants.precisionBits)
    _emit(stdout, opts['format'], translator.toPrimitive(fieldReport),
          [list(translator.columns), translator.toRow(fieldReport)])
    return EXIT_OK

def _tables(opts, stdout):
    table = tables.buildTable(opts['set'], opts['both-orders'])
    _emit(stdout, opts['format'], table.toPrimitive(), table.toCsvRows())
    return EXIT_OK

def _unit(opts, stdout):
    unit = pell.fundamentalUnit(opts['d'])
    primitive = {'m': str(unit.m)}
    primitive.update(DefaultFormat().unitToPrimitive(unit))
    primitive['period'] = unit.period
    primitive['unit'] = str(unit)
    _emit(stdout, opts['format'], primitive,
          [list(primitive.keys()), list(primitive.values())])
    return EXIT_OK

def _scan(opts, stdout, stderr, reactor):
    if opts['out'] == '-':
        out, summaryStream, close = stdout, stderr, False
    else:
        out, summaryStream, close = open(opts['out'], 'w', encoding='utf-8'), stdout, True
    workers = opts['workers'] if reactor is not None else 0

    def done(summary):
        if close:
            try:
                out.close()
            except OSError as e:
                if summary.ioError is None:
                    summary.ioError = e
        summaryStream.write(JSONEncoding().encode(summary.toPrimitive()) + '\n')
        if summary.ioError is not None:
            _writeError(stderr, 'io', str(summary.ioError))
            return EXIT_IO
        return EXIT_OK if summary.ok() else EXIT_INCONSISTENT

    def closeOnError(reason):
        if close:
            out.close()
        return reason
    df = scan.scanPairs(opts['max'], out, opts['filter'], workers, reactor)
    return df.addCallbacks(done, closeOnError)

def _exitCode(error, stderr):
    if isinstance(error, usage.UsageError):
        _writeError(stderr, 'usage', str(error))
        return EXIT_DOMAIN
    if isinstance(error, DomainError):
        _writeError(stderr, error.code, str(error))
        return EXIT_DOMAIN
    if isinstance(error, (InconsistencyError, OracleUndecided)):
        _writeError(stderr, error.code, str(error))
        return EXIT_INCONSISTENT
    if isinstance(error, (IOError, OSError)):
        _writeError(stderr, 'io', str(error))
        return EXIT_IO
    raise error

def dispatch(argv, stdout, stderr, reactor=None):
    """ Parses a command line and runs the command

    Without a reactor every command, scans included, runs in the calling
    thread and the returned deferred has already fired. The global
    settings apply to C{capitula.constants} until it fires.

    @param argv: The arguments, without the program name
    @type argv: list of str

    @return: A deferred firing with the exit code
    @rtype: twisted.internet.defer.Deferred
    """
    config = Options()
    try:
        config.parseOptions(argv)
    except usage.UsageError as e:
        return defer.succeed(_exitCode(e, stderr))

    observer = FilteringLogObserver(textFileLogObserver(stderr),
                                    [LogLevelFilterPredicate(defaultLogLevel=config.logLevel())])
    globalLogPublisher.addObserver(observer)
    saved = constants.precisionBits, constants.periodCap
    constants.precisionBits = config['precision-bits']
    constants.periodCap = config['period-cap']
    opts = config.subOptions
    try:
        if config.subCommand == 'report':
            df = defer.succeed(_report(opts, stdout))
        elif config.subCommand == 'tables':
            df = defer.succeed(_tables(opts, stdout))
        elif config.subCommand == 'unit':
            df = defer.succeed(_unit(opts, stdout))
        else:
            df = _scan(opts, stdout, stderr, reactor)
    except Exception as e:
        df = defer.fail(e)

    def failed(reason):
        return _exitCode(reason.value, stderr)

    def detach(result):
        globalLogPublisher.removeObserver(observer)
        constants.precisionBits, constants.periodCap = saved
        return result
    df.addErrback(failed)
    df.addBoth(detach)
    return df

def main(argv=None, stdout=None, stderr=None):
    """ Runs a command synchronously

    @return: The exit code
    @rtype: int
    """
    if argv is None:
        argv = sys.argv[1:]
    result = []
    dispatch(argv, stdout or sys.stdout, stderr or sys.stderr).addBoth(result.append)
    code = result[0]
    if not isinstance(code, int):
        code.raiseException()
    return code

def _reactMain(reactor, argv):
    def exit(code):
        if code:
            raise SystemExit(code)
    return dispatch(argv, sys.stdout, sys.stderr, reactor).addCallback(exit)

def run():
    """ Console script entry point """
    task.react(_reactMain, [sys.argv[1:]])

if __name__ == '__main__':
    run()
