# -*- coding: utf-8 -*-
#
# Copyright (C) 2006-2007 Alec Thomas <alec@swapoff.org>
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

"""Console output helpers.

This module provides a simple formatting syntax for basic terminal visual
control sequences. The syntax is a carat ``^`` followed by a single character.

Valid colour escape sequences are:

    :``^N``: Reset all formatting.
    :``^B``: Toggle bold.
    :``^U``: Toggle underline.
    :``^0``: Set black foreground.
    :``^1``: Set red foreground.
    :``^2``: Set green foreground.
    :``^3``: Set brown foreground.
    :``^4``: Set blue foreground.
    :``^5``: Set magenta foreground.
    :``^6``: Set cyan foreground.
    :``^7``: Set white foreground.
    :``^^``: A literal caret; see :func:`cescape`.

Codes are translated to ANSI sequences when the destination stream is a TTY,
and stripped otherwise. Data goes to standard output through :func:`cprint`;
every diagnostic (:func:`cerror`, :func:`cwarning`, :func:`cinfo`) goes to
standard error so that JSON written to standard output stays parseable.
"""

import re
import sys


__all__ = ['cwrite', 'cprint', 'cdecode', 'cstrip', 'cescape', 'clen',
           'cerror', 'cwarning', 'cinfo', 'print_table']
__docformat__ = 'restructuredtext en'


_decode_re = re.compile(r'\^([N0-7BU^])|[^^]+|\^')
_cstrip_re = re.compile(r'\^([N0-7BU^])')


class _Decoder(object):
    """Stateful translation of caret codes into ANSI sequences."""

    def __init__(self):
        self.bold = False
        self.underline = False

    def decode(self, text):
        return _decode_re.sub(self._decode_match, text)

    def _decode_match(self, match):
        c = match.group(1)
        if not c:
            return match.group(0)
        if c == '^':
            return '^'
        if c == 'B':
            self.bold = not self.bold
            return self.bold and '\033[1m' or '\033[22m'
        elif c == 'U':
            self.underline = not self.underline
            return self.underline and '\033[4m' or '\033[24m'
        elif c == 'N':
            self.underline = self.bold = False
            return '\033[0m'
        return '\033[3' + c + 'm'


def _isatty(io):
    try:
        return io.isatty()
    except (AttributeError, ValueError):
        return False


def cdecode(text):
    """Decode colour-encoded text to its ANSI equivalent.

    >>> cdecode('^Bbold^B')
    '\\x1b[1mbold\\x1b[22m'
    """
    return _Decoder().decode(text)


def cwrite(io, text):
    """Write using simple colour escape codes.

    Colour is not automatically reset at the end of output. If ``io`` is not a
    TTY, colour codes are stripped.
    """
    if _isatty(io):
        io.write(cdecode(text))
    else:
        io.write(cstrip(text))


def cprint(*args):
    """Emulate the ``print`` builtin, with terminal shortcuts.

    If the first argument is a stream it is written to instead of standard
    output.

    >>> cprint('^Bweight^B', 3)
    weight 3
    """
    if args and hasattr(args[0], 'write'):
        stream = args[0]
        args = args[1:]
    else:
        stream = sys.stdout
    cwrite(stream, ' '.join(map(str, args)) + '\n')


def cstrip(text):
    """Strip colour codes from text.

    >>> cstrip('^1^Bfailed^N')
    'failed'
    >>> cstrip(cescape('v^2 + 1'))
    'v^2 + 1'
    """
    return _cstrip_re.sub(lambda m: m.group(1) == '^' and '^' or '', text)


def cescape(text):
    """Escape carets in ``text`` so that they print literally.

    >>> cescape('v^2')
    'v^^2'
    """
    return str(text).replace('^', '^^')


def clen(arg):
    """Return the length of arg after colour codes are stripped."""
    return len(cstrip(arg))


def cerror(*args):
    """Print a message in red to stderr."""
    cprint(sys.stderr, '^1^B' + ' '.join(map(str, args)) + '^N')


def cwarning(*args):
    """Print a yellow warning message to stderr."""
    cprint(sys.stderr, '^3^B' + ' '.join(map(str, args)) + '^N')


def cinfo(*args):
    """Print a green progress notice to stderr."""
    cprint(sys.stderr, '^2' + ' '.join(map(str, args)) + '^N')


def print_table(header, table, stream=None, sep=' ', indent='',
                header_format='^B', align=None):
    """Print a list of lists as a table, so that columns line up nicely.

    :param header: List of column headings. Printed as the first row.
    :param table: List of lists for the table body.
    :param stream: Destination, standard output by default.
    :param sep: The column separator.
    :param indent: Table indentation as a string.
    :param header_format: Formatting to use for the header.
    :param align: Per-column ``'<'`` or ``'>'``; columns are left aligned by
                  default.

    :returns: List of strings, one per line, without colour codes.

    >>> lines = print_table(['mu', 'd'], [['(2)', '1'], ['(1, 1)', 'v']],
    ...                     align='<>')
    mu     d
    (2)    1
    (1, 1) v
    """
    if stream is None:
        stream = sys.stdout
    rows = [[str(c) for c in row] for row in [list(header)] + list(table)]
    columns = len(rows[0])
    align = align or '<' * columns
    widths = [max(clen(row[x]) for row in rows) for x in range(columns)]
    out = []
    for y, row in enumerate(rows):
        cells = []
        for x, cell in enumerate(row):
            pad = ' ' * (widths[x] - clen(cell))
            cells.append(align[x] == '>' and pad + cell or cell + pad)
        line = indent + sep.join(cells).rstrip()
        out.append(cstrip(line))
        if y == 0 and header_format:
            line = indent + header_format + line[len(indent):] + '^N'
        cwrite(stream, line + '\n')
    return out


if __name__ == '__main__':
    import doctest
    doctest.testmod()
