#!/usr/bin/env python
#
# This library is free software, distributed under the terms of
# the GNU Lesser General Public License Version 3, or any later version.
# See the COPYING file included in this archive
#
# The docstrings in this module contain epytext markup; API documentation
# may be created by processing this file with epydoc: http://epydoc.sf.net

import csv
import io
import json


class Encoding(object):
    """ Interface for output encoders

    All encoding implementations used with this package should inherit and
    implement this.
    """
    def encode(self, data):
        """ Encode the specified data

        @param data: The data to encode
                     This method has to support encoding of the primitives
                     produced by C{capitula.reportformat}: C{str}, C{int},
                     C{bool}, C{None}, C{list} and C{dict}

        @return: The encoded data
        @rtype: str
        """


class JSONEncoding(Encoding):
    """ JSON with the key order of the primitive preserved

    @note: Every document is a single line, so the output of consecutive
           C{encode()} calls forms a JSON Lines stream.
    """
    def encode(self, data):
        return json.dumps(data, separators=(',', ':'), ensure_ascii=False)


class CSVEncoding(Encoding):
    """ Comma separated values; the data is a list of rows, the first of
    which is the header

    Every non-numeric cell is quoted.
    """
    def encode(self, data):
        buf = io.StringIO()
        writer = csv.writer(buf, quoting=csv.QUOTE_NONNUMERIC, lineterminator='\n')
        for row in data:
            writer.writerow([self._cell(value) for value in row])
        return buf.getvalue()

    def _cell(self, value):
        if isinstance(value, bool):
            return str(value).lower()
        if value is None:
            return ''
        if isinstance(value, list):
            return '+'.join(str(v) for v in value)
        return value


class TextEncoding(Encoding):
    """ Indented "key: value" text for people to read """

    def encode(self, data):
        lines = []
        self._render(data, 0, lines)
        return '\n'.join(lines) + '\n'

    def _scalar(self, value):
        if isinstance(value, bool):
            return 'yes' if value else 'no'
        if value is None:
            return '-'
        if isinstance(value, list):
            return ', '.join(self._scalar(v) for v in value) or '-'
        return str(value)

    def _render(self, data, depth, lines):
        pad = '  ' * depth
        for key, value in data.items():
            if isinstance(value, dict):
                lines.append('%s%s:' % (pad, key))
                self._render(value, depth + 1, lines)
            elif isinstance(value, list) and value and isinstance(value[0], list):
                lines.append('%s%s:' % (pad, key))
                for item in value:
                    lines.append('%s  %s' % (pad, self._scalar(item)))
            else:
                lines.append('%s%s: %s' % (pad, key, self._scalar(value)))


def encodingFor(name):
    """ @return: The encoder for one of 'json', 'csv' or 'text'
    @rtype: Encoding
    """
    encodings = {'json': JSONEncoding, 'csv': CSVEncoding, 'text': TextEncoding}
    if name not in encodings:
        raise ValueError('unknown format %r' % name)
    return encodings[name]()
