# -*- coding: utf-8 -*-
#
# Copyright (C) 2006-2007 Alec Thomas <alec@swapoff.org>
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

"""Counting simple modules of core blocks.

Members of a core block whose quotient charges are compact have beta-sets of
the form ``Z_{<m} ∪ L_i`` with ``L_i`` inside a window of length ``e``. Such a
member is read as a generalised tableau whose ``i``-th row lists
``L_{ℓ-i+1}`` shifted down to start at ``1``; the member is Uglov exactly
when the tableau is column semistandard. Counting those tableaux by type
counts simple modules:

>>> kostka_count((2, 1), (1, 1, 1))
2
>>> kostka_count((2,), (2,))
0
>>> tableau_of(ChargedMultipartition([[], []], [1, 2], e=2), m=0).rows
((1, 2), (1,))
"""

from math import comb


__all__ = ['GenTableau', 'flotw_test', 'tableau_of', 'kostka_count',
           'count_simples', 'count_simples_level_two', 'kleshchev_count']
__docformat__ = 'restructuredtext en'


from akblocks.exceptions import *
from akblocks.betaset import Partition
from akblocks.multipartition import ChargedMultipartition, is_kleshchev
from akblocks.weyl import in_closed_alcove
from akblocks.blocks import enumerate_in_block
from akblocks.scopes import yz_split, scopes_chain


class GenTableau(object):
    """A generalised tableau: positive integer entries on the Young diagram
    of ``shape``, stored row by row."""

    def __init__(self, rows):
        self.rows = tuple(tuple(int(x) for x in row) for row in rows)
        self.shape = Partition(len(row) for row in self.rows)
        if any(x < 1 for row in self.rows for x in row):
            raise ShapeError('tableau entries must be positive: %r'
                             % (self.rows,))

    def __getitem__(self, node):
        i, j = node
        return self.rows[i - 1][j - 1]

    def filling_type(self):
        """``(|T^{-1}{1}|, |T^{-1}{2}|, …)`` up to the largest entry."""
        entries = [x for row in self.rows for x in row]
        return tuple(entries.count(k) for k in range(1, max(entries, default=0)
                                                     + 1))

    def is_column_semistandard(self):
        """Rows strictly increase and columns weakly increase."""
        for row in self.rows:
            if any(a >= b for a, b in zip(row, row[1:])):
                return False
        for upper, lower in zip(self.rows, self.rows[1:]):
            if any(a > b for a, b in zip(upper, lower)):
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, GenTableau):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return 'GenTableau(%r)' % (self.rows,)


def flotw_test(lm):
    """True if ``(λ; t)`` is FLOTW, for ``t`` in the closed alcove.

    >>> flotw_test(ChargedMultipartition([[1], [1]], [0, 0], e=2))
    True
    >>> flotw_test(ChargedMultipartition([[1, 1], []], [0, 0], e=2))
    False
    """
    t, e, l = lm.charge, lm.e, lm.level
    if not in_closed_alcove(t, e):
        raise NotInClosedAlcove(charge=t, e=e)
    parts = lm.components
    for i in range(l - 1):
        gap = t[i + 1] - t[i]
        for a in range(1, len(parts[i + 1]) + 1):
            if parts[i].part(a) < parts[i + 1].part(a + gap):
                return False
    wrap = e + t[0] - t[-1]
    for a in range(1, len(parts[0]) + 1):
        if parts[-1].part(a) < parts[0].part(a + wrap):
            return False
    ends = {}
    for i, partition in enumerate(parts):
        for a, k in enumerate(partition, 1):
            ends.setdefault(k, set()).add((k - a + t[i]) % e)
    return all(len(residues) < e for residues in ends.values())


def tableau_of(lm, m=None):
    """``T^λ`` for ``(λ; t)`` with every beta-set of the form ``Z_{<m} ∪ L``,
    ``L ⊆ [m, m + e - 1]``.

    ``m`` defaults to the least threshold among the beta-sets.
    """
    betas = lm.beta_tuple()
    if m is None:
        m = min(b.threshold for b in betas)
    windows = []
    for b in betas:
        if b.threshold < m or (b.excess and b.excess[-1] > m + lm.e - 1):
            raise ShapeError('%r is not Z_{<%d} plus a subset of [%d, %d]'
                             % (b, m, m, m + lm.e - 1))
        windows.append(list(range(m, b.threshold)) + list(b.excess))
    return GenTableau([[1 - m + x for x in window]
                       for window in reversed(windows)])


def kostka_count(shape, filling):
    """The number of column semistandard generalised tableaux of ``shape``
    whose type is ``filling``.

    >>> kostka_count((3,), (1, 1, 1))
    1
    """
    shape = Partition(shape)
    quota = list(filling)
    if shape.size != sum(quota):
        raise ShapeError('shape %r has size %d but type %r has size %d'
                         % (tuple(shape), shape.size, tuple(quota), sum(quota)))
    cells = [(i, j) for i, length in enumerate(shape) for j in range(length)]
    rows = [[0] * length for length in shape]

    def fill(k):
        if k == len(cells):
            return 1
        i, j = cells[k]
        low = rows[i][j - 1] + 1 if j else 1
        if i:
            low = max(low, rows[i - 1][j])
        total = 0
        for v in range(low, len(quota) + 1):
            if quota[v - 1]:
                quota[v - 1] -= 1
                rows[i][j] = v
                total += fill(k + 1)
                quota[v - 1] += 1
        return total

    return fill(0)


def _eta(block, data):
    y = sum(data.y)
    eta = [r - y for r in reversed(block.reduced_charge)]
    if any(p < 0 for p in eta):
        raise ComputationError('negative row length in %r' % (eta,))
    return eta


def count_simples(block):
    """The number of simple modules in the core block ``block``: the
    Kostka count for shape ``η`` (``η_i = r'_{ℓ+1-i} - |y|``) and type
    ``z``, taken at the initial block of the Scopes class."""
    chain = scopes_chain(block)
    initial = chain[-1][1] if chain else block
    data = yz_split(initial)
    return kostka_count(_eta(initial, data), data.z)


def count_simples_level_two(block):
    """``C(|z|, a) - C(|z|, a - 1)`` with ``a = r'_1 - |y|``, for level
    two."""
    if block.l != 2:
        raise RankMismatch('level two formula applied at level %d' % block.l)
    data = yz_split(block)
    s, a = sum(data.z), block.reduced_charge[0] - sum(data.y)
    if a < 0:
        return 0
    return comb(s, a) - (comb(s, a - 1) if a else 0)


def kleshchev_count(block, **kwargs):
    """The number of Kleshchev members of ``block``, by enumeration."""
    return sum(1 for lm in enumerate_in_block(block, **kwargs)
               if is_kleshchev(lm))


if __name__ == '__main__':
    import doctest
    doctest.testmod()
