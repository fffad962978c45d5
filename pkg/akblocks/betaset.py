# -*- coding: utf-8 -*-
#
# Copyright (C) 2006-2007 Alec Thomas <alec@swapoff.org>
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

"""Partitions, beta-sets and abacus arithmetic.

A beta-set is a subset of the integers that is bounded above and contains
every integer below some point. It is stored as a *threshold* ``m``, the
least integer missing from the set, plus the finite *excess* of members above
``m``::

    B = {x : x < m} | excess

Beta-sets encode a partition together with a charge:

>>> b = beta_set(Partition([3, 2, 1, 1, 1, 1]), 1)
>>> b
BetaSet(-5, (-4, -3, -2, -1, 1, 3))
>>> b.charge
1
>>> beta_inverse(b)
((3, 2, 1, 1, 1, 1), 1)

Residue classes modulo ``e`` are the runners of an abacus. Sliding beads up
the runners gives the e-core and the number of slides is the e-weight:

>>> e_core_and_weight(BetaSet(-2, [-1, 2, 4, 5]), 3)
(BetaSet(0, (2, 5)), 2)
>>> print(abacus(BetaSet(0, [2, 5]), 3))
· · ●
· · ●
● ● ●
"""

from collections import namedtuple


__all__ = ['Partition', 'partitions', 'BetaSet', 'EQuotient', 'beta_set',
           'beta_inverse', 'shift', 'e_quotient', 'from_quotient',
           'e_core_and_weight', 'is_core', 'hub', 'abacus']
__docformat__ = 'restructuredtext en'


from akblocks.exceptions import *


BEAD = u'●'
GAP = u'·'


class Partition(tuple):
    """A partition: a weakly decreasing tuple of positive integers.

    Trailing zeros are dropped, so ``Partition([2, 1, 0]) == (2, 1)``.

    >>> Partition([4, 2, 2, 0])
    (4, 2, 2)
    >>> Partition([1, 2])
    Traceback (most recent call last):
    ...
    akblocks.exceptions.InvalidPartition: (1, 2) is not weakly decreasing
    >>> Partition([1.5])
    Traceback (most recent call last):
    ...
    akblocks.exceptions.InvalidPartition: [1.5] is not a sequence of integers
    """

    def __new__(cls, parts=()):
        if isinstance(parts, Partition):
            return parts
        try:
            parts = [_integer(p) for p in parts]
        except (TypeError, ValueError, OverflowError):
            raise InvalidPartition('%r is not a sequence of integers' % (parts,))
        while parts and parts[-1] == 0:
            parts.pop()
        if any(p < 0 for p in parts):
            raise InvalidPartition('%r has negative parts' % (tuple(parts),))
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise InvalidPartition('%r is not weakly decreasing'
                                   % (tuple(parts),))
        return tuple.__new__(cls, parts)

    @property
    def size(self):
        """Sum of the parts."""
        return sum(self)

    def part(self, row):
        """The length of ``row`` (1-based), zero beyond the last row."""
        return self[row - 1] if row <= len(self) else 0

    def conjugate(self):
        """The conjugate partition.

        >>> Partition([3, 1]).conjugate()
        (2, 1, 1)
        """
        if not self:
            return self
        return Partition([sum(1 for p in self if p > c)
                          for c in range(self[0])])

    def is_regular(self, e):
        """True if no non-zero part is repeated ``e`` or more times.

        >>> Partition([1, 1]).is_regular(2)
        False
        """
        run = 1
        for i in range(1, len(self)):
            run = run + 1 if self[i] == self[i - 1] else 1
            if run >= e:
                return False
        return True

    def add_node(self, row):
        """Add a node at the end of ``row`` (1-based)."""
        parts = list(self) + [0]
        parts[row - 1] += 1
        return Partition(parts)

    def remove_node(self, row):
        """Remove the node at the end of ``row`` (1-based)."""
        parts = list(self)
        parts[row - 1] -= 1
        return Partition(parts)


def partitions(n, largest=None):
    """Generate the partitions of ``n`` in reverse lexicographic order.

    >>> list(partitions(4))
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    >>> list(partitions(0))
    [()]
    """
    if largest is None:
        largest = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield Partition((first,) + rest)


class BetaSet(object):
    """A charged beta-set ``Z_{<threshold} | excess``.

    The constructor normalises its arguments so that the threshold is the
    least missing integer; two BetaSets are equal exactly when they represent
    the same subset of the integers.

    >>> BetaSet(0, [0, 1, 3]) == BetaSet(2, [3])
    True
    >>> BetaSet(2, [3]).charge
    3
    """

    __slots__ = ('_threshold', '_excess', '_members')

    def __init__(self, threshold, excess=()):
        m = int(threshold)
        members = set(int(x) for x in excess)
        while m in members:
            members.discard(m)
            m += 1
        self._threshold = m
        self._excess = tuple(sorted(x for x in members if x > m))
        self._members = frozenset(self._excess)

    threshold = property(lambda self: self._threshold,
                         doc='The least integer not in the set.')
    excess = property(lambda self: self._excess,
                      doc='Sorted members above the threshold.')

    @property
    def charge(self):
        """``|B ∩ Z_{>=0}| - |Z_{<0} \\ B|``, equal to threshold + |excess|."""
        return self._threshold + len(self._excess)

    @property
    def top(self):
        """The largest member."""
        if self._excess:
            return self._excess[-1]
        return self._threshold - 1

    def __contains__(self, x):
        return x < self._threshold or x in self._members

    def members(self, lower):
        """Members ``>= lower`` in descending order."""
        for x in reversed(self._excess):
            if x >= lower:
                yield x
        for x in range(self._threshold - 1, lower - 1, -1):
            yield x

    def count_at_least(self, x):
        """Number of members ``>= x``."""
        if x >= self._threshold:
            return sum(1 for y in self._excess if y >= x)
        return len(self._excess) + self._threshold - x

    def __eq__(self, other):
        if not isinstance(other, BetaSet):
            return NotImplemented
        return (self._threshold, self._excess) == \
            (other._threshold, other._excess)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self._threshold, self._excess))

    def __repr__(self):
        return 'BetaSet(%d, %r)' % (self._threshold, self._excess)

    def to_json(self):
        return {'threshold': self._threshold, 'excess': list(self._excess)}


EQuotient = namedtuple('EQuotient', 'components charges')
EQuotient.__doc__ = """The e-quotient of a beta-set.

``components[i]`` collects runner ``i`` (residue ``i``, written ``B_{i+1}``
when runners are numbered from one) and ``charges`` are their charges."""


def beta_set(partition, charge):
    """The beta-set ``{λ_i + t - i : i >= 1}``.

    >>> beta_set(Partition(), 3)
    BetaSet(3, ())
    >>> beta_set(Partition([1]), 0)
    BetaSet(-1, (0,))
    """
    partition = Partition(partition)
    return BetaSet(charge - len(partition),
                   [p + charge - i for i, p in enumerate(partition, 1)])


def beta_inverse(b):
    """Return ``(partition, charge)`` for a beta-set.

    >>> beta_inverse(BetaSet(0))
    ((), 0)
    >>> beta_inverse(BetaSet(-1, [1]))
    ((2,), 0)
    """
    charge = b.charge
    return (Partition([x - charge + i
                       for i, x in enumerate(reversed(b.excess), 1)]),
            charge)


def shift(b, k):
    """Translate every member by ``k``.

    >>> shift(BetaSet(0, [2, 5]), -2)
    BetaSet(-2, (0, 3))
    """
    return BetaSet(b.threshold + k, [x + k for x in b.excess])


def e_quotient(b, e):
    """Split ``b`` into its ``e`` runners.

    >>> e_quotient(BetaSet(3), 2)
    EQuotient(components=(BetaSet(2, ()), BetaSet(1, ())), charges=(2, 1))
    """
    _check_rank(e)
    m = b.threshold
    components = tuple(
        BetaSet(-((i - m) // e),
                [(x - i) // e for x in b.excess if x % e == i])
        for i in range(e))
    return EQuotient(components, tuple(c.charge for c in components))


def from_quotient(components, e=None):
    """Reassemble a beta-set from its runners; the inverse of
    :func:`e_quotient`.

    >>> from_quotient(e_quotient(BetaSet(-2, [-1, 2, 4, 5]), 3).components)
    BetaSet(-2, (-1, 2, 4, 5))
    """
    components = tuple(components)
    if e is None:
        e = len(components)
    if len(components) != e:
        raise RankMismatch(left=len(components), right=e)
    _check_rank(e)
    lower = min(e * c.threshold + i for i, c in enumerate(components))
    upper = max(e * c.top + i for i, c in enumerate(components))
    excess = [x for x in range(lower, upper + 1)
              if (x - x % e) // e in components[x % e]]
    return BetaSet(lower, excess)


def e_core_and_weight(b, e):
    """Return the e-core of ``b`` and its e-weight.

    The core keeps the charge of every runner and empties its partition; the
    weight is the total size of the runner partitions.

    >>> e_core_and_weight(BetaSet(5), 4)
    (BetaSet(5, ()), 0)
    >>> e_core_and_weight(BetaSet(-1, [1]), 2)
    (BetaSet(0, ()), 1)
    """
    quotient = e_quotient(b, e)
    core = from_quotient([BetaSet(s) for s in quotient.charges], e)
    weight = sum(beta_inverse(c)[0].size for c in quotient.components)
    return core, weight


def is_core(b, e):
    """True if ``b`` has e-weight zero."""
    return e_core_and_weight(b, e)[1] == 0


def hub(b, e):
    """The e-hub: removable minus addable nodes per residue.

    Entry ``j`` is ``s_{j+1} - s_j - δ_{j0}`` in terms of the runner charges,
    reading runner ``0`` before runner ``1`` as runner ``e``.

    >>> hub(BetaSet(0), 3)
    (-1, 0, 0)
    >>> hub(BetaSet(-2, [-1, 2, 4, 5]), 3) == hub(BetaSet(0, [2, 5]), 3)
    True
    """
    s = e_quotient(b, e).charges
    return tuple(s[j] - s[j - 1] - (1 if j == 0 else 0) for j in range(e))


def abacus(b, e, rows=None):
    """Render ``b`` on an e-abacus.

    Rows are printed from the highest down, runner 0 is leftmost, beads are
    ``●`` and gaps ``·``. By default the rendering stops one full row of beads
    below the threshold.

    >>> print(abacus(beta_set(Partition([2]), 0), 2))
    · ●
    ● ·
    ● ●
    """
    _check_rank(e)
    top_row = max(b.top, b.threshold) // e
    if rows is None:
        bottom_row = b.threshold // e - 1
    else:
        bottom_row = top_row - rows + 1
    lines = []
    for row in range(top_row, bottom_row - 1, -1):
        lines.append(u' '.join(BEAD if row * e + i in b else GAP
                               for i in range(e)))
    return u'\n'.join(lines)


def _integer(p):
    if isinstance(p, bool) or int(p) != p:
        raise ValueError(p)
    return int(p)


def _check_rank(e):
    if e < 2:
        raise RankMismatch('e must be at least 2, not %r' % (e,))


if __name__ == '__main__':
    import doctest
    doctest.testmod()
