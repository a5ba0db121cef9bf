#!/usr/bin/env python
#
# This library is free software, distributed under the terms of
# the GNU Lesser General Public License Version 3, or any later version.
# See the COPYING file included in this archive
#
# The docstrings in this module contain epytext markup; API documentation
# may be created by processing this file with epydoc: http://epydoc.sf.net

""" Regeneration of the example tables

Each table set lists the ordered pairs (p1, p2) of its rows and the columns
to compute. Columns holding class group coordinates cannot be computed
here; they are rendered as C{EXTERNAL}.
"""

from capitula import ambiguous
from capitula import capitulation
from capitula import fsu
from capitula import numtheory
from capitula import pell
from capitula.numtheory import DomainError

#: Placeholder for columns computed by external class group software
EXTERNAL = 'external'


class UnknownTable(DomainError):
    """ Raised for a table set name that does not exist """
    code = 'unknown-table'


class TableSet(object):
    """ The definition of one example table

    @ivar tower: 'K1', 'K3' or 'genus'; selects eps2, eps3 and the kernel
    """
    def __init__(self, setId, title, tower, columns, pairs):
        self.setId = setId
        self.title = title
        self.tower = tower
        self.columns = tuple(columns)
        self.pairs = tuple(pairs)


class Table(object):
    """ A computed table: C{rows} are lists aligned with C{columns} """
    def __init__(self, tableSet, rows):
        self.setId = tableSet.setId
        self.title = tableSet.title
        self.tower = tableSet.tower
        self.columns = list(tableSet.columns)
        self.rows = rows

    def records(self):
        """ @return: One dictionary per row
        @rtype: list
        """
        return [dict(zip(self.columns, row)) for row in self.rows]

    def toPrimitive(self):
        return {'set': self.setId,
                'title': self.title,
                'tower': self.tower,
                'columns': self.columns,
                'rows': self.rows}

    def toCsvRows(self):
        return [self.columns] + self.rows


TABLE_SETS = dict((t.setId, t) for t in (
    TableSet('ex48', 'K1 with N(eps2) = N(eps3) = 1', fsu.K1,
             ('d', 'factors', 'eps_d', 'x+1', 'x-1', 'x+1 square', 'x-1 square',
              'H1H2 principal', 'kernel size', 'kernel', 'class vectors'),
             ((41, 17), (97, 17), (449, 17), (5, 89), (53, 17), (37, 73))),
    TableSet('ex49', 'K1 with N(eps2) = -1 or N(eps3) = -1', fsu.K1,
             ('d', 'factors', 'N(eps2)', 'N(eps3)', 'eps_d', 'x+1 square', 'x-1 square',
              'H1H2 principal', 'kernel size', 'kernel', 'class vectors'),
             ((5, 29), (13, 17), (29, 13), (41, 13), (17, 41), (89, 41), (73, 113),
              (5, 41), (13, 113), (37, 41), (5, 809))),
    TableSet('k3-q', 'K3 with N(eps3) = -1: the unit index q', fsu.K3,
             ('d', 'factors', 'q', 'N(eps2)', 'N(eps3)', 'H1H2 principal',
              'kernel size', 'kernel', 'class vectors'),
             ((5, 13), (13, 41), (29, 37), (5, 29), (13, 29), (37, 13), (53, 13))),
    TableSet('k3-sq', 'K3 with N(eps3) = 1', fsu.K3,
             ('d', 'factors', 'N(eps2)', 'N(eps3)', 'eps_d', 'x+1 square', 'x-1 square',
              'H1H2 principal', 'kernel size', 'kernel', 'class vectors'),
             ((5, 89), (53, 17), (61, 41), (73, 89), (17, 433), (41, 401), (41, 569),
              (5, 41), (13, 113), (401, 5), (37, 73))),
    TableSet('genus', 'Strongly ambiguous classes capitulating in the genus field',
             capitulation.GENUS,
             ('d', 'factors', 'N(eps_d)', 'Q_k', 'H1H2 principal', 'H3H4 principal',
              'kernel size', 'kernel', 'class vectors'),
             ((13, 17), (41, 13), (17, 37), (17, 41), (97, 17), (17, 113),
              (5, 89), (53, 17), (13, 113))),
    ))


def _cell(column, tower, p1, p2):
    d = 2 * p1 * p2
    eps = pell.fundamentalUnit(d)
    if column == 'd':
        return str(d)
    if column == 'factors':
        return '2.%d.%d' % (p1, p2)
    if column == 'eps_d':
        return str(eps)
    if column == 'x+1':
        return str(eps.x + 1)
    if column == 'x-1':
        return str(eps.x - 1)
    if column == 'x+1 square':
        return numtheory.isPerfectSquare(eps.x + 1)
    if column == 'x-1 square':
        return numtheory.isPerfectSquare(eps.x - 1)
    if column == 'N(eps_d)':
        return eps.normSign
    if column in ('N(eps2)', 'N(eps3)'):
        units = fsu.towerUnits(tower, p1, p2)
        return units[1 if column == 'N(eps2)' else 2].normSign
    if column == 'q':
        return fsu.classifyK3(p1, p2).unitIndex
    if column == 'Q_k':
        return fsu.qkIndex(p1, p2)
    if column == 'H1H2 principal':
        return ambiguous.principalByRationalPrime(p1, p1, p2)
    if column == 'H3H4 principal':
        return ambiguous.principalByRationalPrime(p2, p1, p2)
    if column == 'kernel size':
        return capitulation.kernel(tower, p1, p2).size
    if column == 'kernel':
        return [str(w) for w in capitulation.kernel(tower, p1, p2).generators]
    if column == 'class vectors':
        return EXTERNAL
    raise DomainError('unknown column %r' % column)

def buildTable(setId, bothOrders=False):
    """ Computes the columns of one example table

    @param setId: One of C{TABLE_SETS}: 'ex48', 'ex49', 'k3-q', 'k3-sq' or 'genus'
    @type setId: str
    @param bothOrders: Follow every row by the row of the exchanged pair
    @type bothOrders: bool

    @rtype: Table

    @raise UnknownTable: If setId is not a known table set
    """
    if setId not in TABLE_SETS:
        raise UnknownTable('unknown table set %r (choose from %s)'
                           % (setId, ', '.join(sorted(TABLE_SETS))))
    tableSet = TABLE_SETS[setId]
    pairs = []
    for p1, p2 in tableSet.pairs:
        pairs.append((p1, p2))
        if bothOrders:
            pairs.append((p2, p1))
    rows = []
    for p1, p2 in pairs:
        numtheory.validatePair(p1, p2)
        rows.append([_cell(column, tableSet.tower, p1, p2) for column in tableSet.columns])
    return Table(tableSet, rows)
