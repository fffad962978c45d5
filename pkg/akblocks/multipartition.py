# -*- coding: utf-8 -*-
#
# Copyright (C) 2006-2007 Alec Thomas <alec@swapoff.org>
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

"""Charged multipartitions, nodes, residues and good nodes.

An ℓ-partition with an ℓ-charge ``t`` places node ``(a, b, i)`` (row, column,
component, all 1-based) at content ``b - a + t_i``. Addable and removable
nodes are read off the beta-sets ``β_{t_i}(λ^{(i)})``: a removable node sits
at a bead ``x`` with a gap at ``x - 1``, an addable node at a gap ``x`` with a
bead at ``x - 1``, and in both cases the content is ``x``.

>>> lm = ChargedMultipartition([[2], []], [0, 1], e=2)
>>> addable, removable = addable_removable(lm, 1)
>>> sorted(addable)
[Node(row=1, col=1, comp=2), Node(row=2, col=1, comp=1)]
>>> sorted(removable)
[Node(row=1, col=2, comp=1)]
>>> hub_of(lm)
(-1, -1)

Two total orders on nodes of one residue drive the crystal combinatorics:
``'uglov'`` compares contents first, ``'kleshchev'`` compares components
first. Good nodes are found by cancelling ``-+`` pairs in the signature:

>>> is_kleshchev(ChargedMultipartition([[1, 1]], [0], e=2))
False
>>> is_kleshchev(ChargedMultipartition([[2]], [0], e=2))
True
"""

from collections import namedtuple
from functools import lru_cache
from itertools import product


__all__ = ['Node', 'ChargedMultipartition', 'multipartitions', 'content',
           'bead_node', 'addable_removable', 'hub_of', 'UGLOV', 'KLESHCHEV',
           'order_key', 'order_compare', 'signature', 'good_node',
           'good_removal_path', 'is_kleshchev', 'is_uglov']
__docformat__ = 'restructuredtext en'


from akblocks.exceptions import *
from akblocks.betaset import Partition, BetaSet, partitions, beta_set, \
    beta_inverse, hub


UGLOV = 'uglov'
KLESHCHEV = 'kleshchev'


Node = namedtuple('Node', 'row col comp')


class ChargedMultipartition(object):
    """An ℓ-partition ``λ`` together with an ℓ-charge ``t`` and the
    modulus ``e`` used for residues.

    >>> lm = ChargedMultipartition([[3, 2, 1, 1, 1, 1], [4, 2, 1], [2, 2, 1],
    ...                             [1]], [1, 3, 3, 6], e=5)
    >>> lm.level, lm.size
    (4, 22)
    >>> lm.residue(Node(1, 3, 1))
    3
    """

    def __init__(self, components, charge, e):
        try:
            components = tuple(Partition(c) for c in components)
            charge = tuple(int(t) for t in charge)
        except TypeError:
            raise InvalidMultipartition('malformed multipartition %r'
                                        % (components,))
        if not components:
            raise InvalidMultipartition('a multipartition needs at least one '
                                        'component')
        if len(components) != len(charge):
            raise RankMismatch(left=len(components), right=len(charge))
        if e < 2:
            raise RankMismatch('e must be at least 2, not %r' % (e,))
        self.components = components
        self.charge = charge
        self.e = e
        self._betas = None

    level = property(lambda self: len(self.components),
                     doc='The number of components ℓ.')

    @property
    def size(self):
        return sum(c.size for c in self.components)

    def beta_tuple(self):
        """``(β_{t_1}(λ^{(1)}), …, β_{t_ℓ}(λ^{(ℓ)}))``."""
        if self._betas is None:
            self._betas = tuple(beta_set(c, t) for c, t in
                                zip(self.components, self.charge))
        return self._betas

    @classmethod
    def from_beta_tuple(cls, betas, e):
        """Build from a sequence of beta-sets; their charges become the
        charge."""
        pairs = [beta_inverse(b) for b in betas]
        return cls([p for p, _ in pairs], [t for _, t in pairs], e)

    def nodes(self):
        """Every node of the Young diagram."""
        for i, component in enumerate(self.components, 1):
            for a, length in enumerate(component, 1):
                for b in range(1, length + 1):
                    yield Node(a, b, i)

    def content(self, node):
        return content(node, self.charge)

    def residue(self, node):
        return content(node, self.charge) % self.e

    def is_multicore(self):
        """True if every component is an e-core."""
        from akblocks.betaset import is_core
        return all(is_core(b, self.e) for b in self.beta_tuple())

    def add_node(self, node):
        return self._replace_component(
            node.comp, self.components[node.comp - 1].add_node(node.row))

    def remove_node(self, node):
        return self._replace_component(
            node.comp, self.components[node.comp - 1].remove_node(node.row))

    def with_charge(self, charge):
        return ChargedMultipartition(self.components, charge, self.e)

    def _replace_component(self, i, partition):
        components = list(self.components)
        components[i - 1] = partition
        return ChargedMultipartition(components, self.charge, self.e)

    def __eq__(self, other):
        if not isinstance(other, ChargedMultipartition):
            return NotImplemented
        return (self.components, self.charge, self.e) == \
            (other.components, other.charge, other.e)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.components, self.charge, self.e))

    def __repr__(self):
        return 'ChargedMultipartition(%r, %r, e=%d)' % (
            [list(c) for c in self.components], list(self.charge), self.e)

    def to_json(self):
        return [list(c) for c in self.components]


def multipartitions(n, level):
    """Generate every ``level``-partition of ``n``.

    >>> len(list(multipartitions(2, 2)))
    5
    """
    def compositions(total, parts):
        if parts == 1:
            yield (total,)
            return
        for first in range(total, -1, -1):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    for sizes in compositions(n, level):
        for components in product(*[list(partitions(k)) for k in sizes]):
            yield tuple(components)


def content(node, charge):
    """The t-content ``b - a + t_i`` of a node.

    >>> content(Node(3, 2, 1), (1, 3))
    0
    """
    if not 1 <= node.comp <= len(charge):
        raise RankMismatch('component %d is not in [1, %d]'
                           % (node.comp, len(charge)))
    return node.col - node.row + charge[node.comp - 1]


def _check_residue(j, e):
    if not 0 <= j < e:
        raise InvalidResidue(j=j, e=e)


def bead_node(b, x, charge, comp):
    """The node of content ``x`` that is addable or removable in the
    beta-set ``b`` of charge ``charge``, or ``None``.

    Returns ``('+', node)`` or ``('-', node)``.

    >>> bead_node(BetaSet(-1, [1]), 1, 0, 1)
    ('-', Node(row=1, col=2, comp=1))
    >>> bead_node(BetaSet(-1, [1]), -1, 0, 1)
    ('+', Node(row=2, col=1, comp=1))
    """
    if x in b and x - 1 not in b:
        a = b.count_at_least(x)
        return '-', Node(a, x - charge + a, comp)
    if x not in b and x - 1 in b:
        a = b.count_at_least(x - 1)
        return '+', Node(a, x - charge + a, comp)
    return None


def addable_removable(lm, j):
    """Return ``(addable, removable)`` frozensets of the nodes of residue
    ``j``."""
    _check_residue(j, lm.e)
    addable, removable = set(), set()
    for i, (b, t) in enumerate(zip(lm.beta_tuple(), lm.charge), 1):
        for x in set([b.threshold] + [y + d for y in b.excess for d in (0, 1)]):
            if x % lm.e != j:
                continue
            found = bead_node(b, x, t, i)
            if found is None:
                continue
            (addable if found[0] == '+' else removable).add(found[1])
    return frozenset(addable), frozenset(removable)


def hub_of(lm):
    """The e-hub of ``(λ; t)``: the sum of the component hubs.

    >>> hub_of(ChargedMultipartition([[], []], [0, 0], e=2))
    (-2, 0)
    """
    total = [0] * lm.e
    for b in lm.beta_tuple():
        for j, h in enumerate(hub(b, lm.e)):
            total[j] += h
    return tuple(total)


def order_key(node, charge, which):
    """A sort key that is ascending in the chosen order.

    Under ``'uglov'`` a node is larger when its content is larger, or when
    contents agree and its component is smaller. Under ``'kleshchev'`` a node
    is larger when its component is smaller, or when components agree and
    its content is larger.
    """
    c = content(node, charge)
    if which == UGLOV:
        return (c, -node.comp)
    elif which == KLESHCHEV:
        return (-node.comp, c)
    raise ValueError('unknown node order %r' % (which,))


def order_compare(n1, n2, charge, which):
    """Compare two nodes: ``1`` if ``n1`` is above ``n2``, ``-1`` if below,
    ``0`` if equal.

    >>> order_compare(Node(1, 3, 1), Node(1, 5, 2), (0, 0), KLESHCHEV)
    1
    >>> order_compare(Node(1, 3, 1), Node(1, 5, 2), (0, 0), UGLOV)
    -1
    """
    k1, k2 = order_key(n1, charge, which), order_key(n2, charge, which)
    return (k1 > k2) - (k1 < k2)


def signature(lm, j, which):
    """The reduced j-signature as a list of ``(sign, node)`` pairs.

    Nodes are listed in ascending order, addable nodes as ``'+'`` and
    removable nodes as ``'-'``; every ``-`` immediately followed by a ``+``
    is cancelled until none remain, leaving all ``+`` before all ``-``.
    """
    addable, removable = addable_removable(lm, j)
    signs = [('+', n) for n in addable] + [('-', n) for n in removable]
    signs.sort(key=lambda item: order_key(item[1], lm.charge, which))
    contents = set()
    for _, n in signs:
        key = (n.comp, lm.content(n))
        if key in contents:
            raise ComputationError('two nodes of component %d share content %d'
                                   % key)
        contents.add(key)
    stack = []
    for sign, n in signs:
        if sign == '+' and stack and stack[-1][0] == '-':
            stack.pop()
        else:
            stack.append((sign, n))
    return stack


def good_node(lm, j, which):
    """The good node of residue ``j``, or ``None``.

    >>> good_node(ChargedMultipartition([[1]], [0], e=2), 0, KLESHCHEV)
    Node(row=1, col=1, comp=1)
    """
    for sign, n in signature(lm, j, which):
        if sign == '-':
            return n
    return None


@lru_cache(maxsize=4096)
def _removal_path(components, charge, e, which):
    lm = ChargedMultipartition(components, charge, e)
    if lm.size == 0:
        return ()
    for j in range(e):
        n = good_node(lm, j, which)
        if n is not None:
            smaller = lm.remove_node(n)
            rest = _removal_path(smaller.components, charge, e, which)
            return None if rest is None else (j,) + rest
    return None


def good_removal_path(lm, which):
    """The residues of successive good-node removals down to the empty
    multipartition, or ``None`` if the removals get stuck.

    At each step the least residue with a good node is taken, so the path
    reads from ``λ`` down to ``∅``.

    >>> good_removal_path(ChargedMultipartition([[2]], [0], e=2), KLESHCHEV)
    (1, 0)
    """
    charge = lm.charge
    if which == KLESHCHEV:
        charge = tuple(t % lm.e for t in charge)
    return _removal_path(lm.components, charge, lm.e, which)


def _reaches_empty(components, charge, e, which):
    return _removal_path(components, charge, e, which) is not None


def is_kleshchev(lm):
    """True if successive removal of good nodes under the ``'kleshchev'``
    order reaches the empty multipartition. Only ``t mod e`` matters."""
    return _reaches_empty(lm.components, tuple(t % lm.e for t in lm.charge),
                          lm.e, KLESHCHEV)


def is_uglov(lm):
    """As :func:`is_kleshchev` under the ``'uglov'`` order."""
    return _reaches_empty(lm.components, lm.charge, lm.e, UGLOV)


if __name__ == '__main__':
    import doctest
    doctest.testmod()
