#!/usr/bin/env python
#
# This library is free software, distributed under the terms of
# the GNU Lesser General Public License Version 3, or any later version.
# See the COPYING file included in this archive
#
# The docstrings in this module contain epytext markup; API documentation
# may be created by processing this file with epydoc: http://epydoc.sf.net

from capitula import fsu
from capitula.capitulation import GENUS


class ReportTranslator(object):
    """ Interface for report translators/formatters

    Classes inheriting from this should provide a translation service
    between the report classes of this package and the primitive data
    (dicts, lists, strings and small integers) handed to an encoder.
    """
    def toPrimitive(self, report):
        """ Create the primitive representation of a report

        @param report: The report object
        @type report: capitula.report.FieldReport

        @return: The report's primitive representation
        @rtype: dict
        """

    def unitToPrimitive(self, unit):
        """ Create the primitive representation of a quadratic unit

        @type unit: capitula.pell.QuadUnit
        @rtype: dict
        """

    def toRow(self, report):
        """ Flatten a report into one row of C{columns}

        @rtype: list
        """


class DefaultFormat(ReportTranslator):
    """ The default report format of this package

    Keys come in a fixed order; unbounded integers are rendered as decimal
    strings and small enumerations as numbers.
    """
    columns = ('p1', 'p2', 'd', 'eps_x', 'eps_y', 'eps_den', 'eps_norm', 'Q_k', 'q_K3',
               'rank', 'am_size', 'ams_size', 'ams_generators', 'ams_relations',
               'K1_size', 'K1_generators', 'K2_size', 'K2_generators',
               'K3_size', 'K3_generators', 'genus_size', 'genus_generators',
               'type_222', 'main_theorem')

    def unitToPrimitive(self, unit):
        return {'x': str(unit.x), 'y': str(unit.y), 'den': unit.den, 'norm': unit.normSign}

    def wordsToPrimitive(self, wordList):
        return [str(w) for w in wordList]

    def kernelToPrimitive(self, kernel):
        return {'size': kernel.size,
                'generators': self.wordsToPrimitive(kernel.generators),
                'canonical': self.wordsToPrimitive(kernel.canonical)}

    def caseToPrimitive(self, case):
        primitive = {'branch': case.label(),
                     'norms': list(case.norms),
                     'Q': case.hasseIndex,
                     'q': case.unitIndex,
                     'norm_index': case.normUnitIndex,
                     'sign': case.subcaseSign or case.kernelSign,
                     'decided_by': case.decidedBy,
                     'fsu_real': case.fsuReal,
                     'fsu': case.fsu}
        if case.alternatives:
            primitive['alternatives'] = case.alternatives
        return primitive

    def toPrimitive(self, report):
        units = {}
        for label, unit in report.units:
            entry = {'m': str(unit.m)}
            entry.update(self.unitToPrimitive(unit))
            units[label] = entry
        kernels = {}
        for tower in fsu.TOWERS + (GENUS,):
            kernels[tower] = self.kernelToPrimitive(report.kernels[tower])
        primitive = {'p1': str(report.p1),
                     'p2': str(report.p2),
                     'd': str(report.d),
                     'eps_d': self.unitToPrimitive(report.epsD),
                     'units': units,
                     'Q_k': report.qk,
                     'q_K3': report.qK3,
                     'rank': report.counts.rank,
                     'am_size': report.counts.amSize,
                     'ams_size': report.counts.amsSize,
                     'ams': {'generators': self.wordsToPrimitive(report.ams.generators),
                             'relations': self.wordsToPrimitive(report.ams.relations),
                             'origin': report.ams.origin},
                     'kernels': kernels,
                     'type_222': report.type222,
                     'main_theorem': str(report.verdict)}
        primitive['cases'] = dict((tower, self.caseToPrimitive(report.cases[tower]))
                                  for tower in fsu.TOWERS)
        primitive['primality'] = 'probable' if report.pair.probable else 'proven'
        if report.verdict.failures:
            primitive['failures'] = [[check, detail] for check, detail in report.verdict.failures]
        if report.numericCheck is not None:
            primitive['numeric_check'] = report.numericCheck
        return primitive

    def toRow(self, report):
        primitive = self.toPrimitive(report)
        eps = primitive['eps_d']
        row = [primitive['p1'], primitive['p2'], primitive['d'],
               eps['x'], eps['y'], eps['den'], eps['norm'],
               primitive['Q_k'], primitive['q_K3'], primitive['rank'],
               primitive['am_size'], primitive['ams_size'],
               '+'.join(primitive['ams']['generators']),
               '+'.join(primitive['ams']['relations'])]
        for tower in fsu.TOWERS + (GENUS,):
            kernel = primitive['kernels'][tower]
            row.extend([kernel['size'], '+'.join(kernel['generators'])])
        row.extend([str(primitive['type_222']).lower(), primitive['main_theorem']])
        return row
