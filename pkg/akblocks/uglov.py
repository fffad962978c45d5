# -*- coding: utf-8 -*-
#
# Copyright (C) 2006-2007 Alec Thomas <alec@swapoff.org>
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

"""Uglov's map and rank-level duality.

The maps ``υ_i(x) = (x - x̄)ℓ + (ℓ - i)e + x̄`` (``x̄`` the residue of ``x``
modulo ``e``) interleave ``ℓ`` beta-sets into one. Reading the result on an
e-abacus gives the rank-level duality ``(λ; t) -> (μ; u)`` between charged
ℓ-partitions and charged e-partitions.

>>> from akblocks.multipartition import ChargedMultipartition
>>> lm = ChargedMultipartition([[3, 2, 1, 1, 1, 1], [4, 2, 1], [2, 2, 1], [1]],
...                            [1, 3, 3, 6], e=5)
>>> image = duality(lm)
>>> image.multipartition
((1,), (1,), (), (), ())
>>> image.charge
(0, 6, 1, 4, 2)
>>> duality_inverse(image) == lm
True
"""

from collections import namedtuple


__all__ = ['DualityImage', 'upsilon', 'upsilon_inverse', 'uglov_map',
           'uglov_inverse', 'duality', 'duality_inverse', 'core_wt_of_pair',
           'level_one_image', 'ar_correspondence']
__docformat__ = 'restructuredtext en'


from akblocks.exceptions import *
from akblocks.betaset import BetaSet, beta_set, beta_inverse, e_quotient, \
    from_quotient, e_core_and_weight
from akblocks.multipartition import ChargedMultipartition, bead_node


DualityImage = namedtuple('DualityImage', 'multipartition charge e l')
DualityImage.__doc__ = """The rank-level dual ``(μ; u)`` of a charged
ℓ-partition: an e-tuple of partitions and an e-charge, together with the
``(e, ℓ)`` it was computed for."""


def upsilon(i, x, e, l):
    """``υ_i(x)`` for ``i ∈ [1, ℓ]``.

    >>> upsilon(1, 7, 5, 4), upsilon(4, 0, 5, 4)
    (37, 0)
    """
    if not 1 <= i <= l:
        raise RankMismatch('component %d is not in [1, %d]' % (i, l))
    a, b = divmod(x, e)
    return a * e * l + (l - i) * e + b


def upsilon_inverse(y, e, l):
    """The unique ``(i, x)`` with ``υ_i(x) = y``.

    >>> upsilon_inverse(37, 5, 4)
    (1, 7)
    """
    q, r = divmod(y, e * l)
    return l - r // e, q * e + r % e


def uglov_map(bs, e):
    """``U(B_1, …, B_ℓ)``, the union of the images ``υ_j(B_j)``.

    >>> uglov_map([BetaSet(0), BetaSet(0)], 3)
    BetaSet(0, ())
    """
    bs = tuple(bs)
    l = len(bs)
    if not l:
        raise RankMismatch('the Uglov map needs at least one beta-set')
    # Everything below the least image of a threshold is a member.
    lower = min(upsilon(j, b.threshold, e, l) for j, b in enumerate(bs, 1))
    excess = []
    for j, b in enumerate(bs, 1):
        x = b.threshold - 1
        while upsilon(j, x, e, l) >= lower:
            excess.append(upsilon(j, x, e, l))
            x -= 1
        excess.extend(upsilon(j, x, e, l) for x in b.excess)
    return BetaSet(lower, excess)


def uglov_inverse(b, e, l):
    """Split a beta-set back into the ``ℓ`` beta-sets it is the Uglov image
    of.

    >>> uglov_inverse(BetaSet(0), 3, 2)
    (BetaSet(0, ()), BetaSet(0, ()))
    """
    # Every x <= floor lies below each component's threshold.
    floor = (b.threshold // (e * l)) * e - e
    kept = [[] for _ in range(l)]
    for y in range(upsilon(l, floor + 1, e, l), max(b.top, b.threshold) + 1):
        if y in b:
            i, x = upsilon_inverse(y, e, l)
            if x > floor:
                kept[i - 1].append(x)
    return tuple(BetaSet(floor + 1, xs) for xs in kept)


def duality(lm):
    """The rank-level dual ``(μ; u)`` of ``(λ; t)``, with
    ``β_u(μ) = quot_e(U(β_t(λ)))``."""
    quotient = e_quotient(uglov_map(lm.beta_tuple(), lm.e), lm.e)
    pairs = [beta_inverse(c) for c in quotient.components]
    return DualityImage(tuple(p for p, _ in pairs), tuple(u for _, u in pairs),
                        lm.e, lm.level)


def duality_inverse(image):
    """Recover ``(λ; t)`` from its dual."""
    components = [beta_set(p, u) for p, u in zip(image.multipartition,
                                                 image.charge)]
    b = from_quotient(components, image.e)
    return ChargedMultipartition.from_beta_tuple(
        uglov_inverse(b, image.e, image.l), image.e)


def core_wt_of_pair(lm):
    """``(core_e(λ; t), wt_e(λ; t))``, the e-core and e-weight of
    ``U(β_t(λ))``.

    >>> core_wt_of_pair(ChargedMultipartition([[1], []], [0, 0], e=2))
    (BetaSet(-1, (0,)), 1)
    """
    return e_core_and_weight(uglov_map(lm.beta_tuple(), lm.e), lm.e)


def level_one_image(lm):
    """``Φ_t(λ) = β^{-1}(U(β_t(λ)))`` as a level one charged partition at
    charge ``|t|``.

    >>> level_one_image(ChargedMultipartition([[1], []], [0, 0], e=2))
    ChargedMultipartition([[3]], [0], e=2)
    """
    partition, charge = beta_inverse(uglov_map(lm.beta_tuple(), lm.e))
    return ChargedMultipartition([partition], [charge], lm.e)


def ar_correspondence(lm, j):
    """Match the addable and removable ``j``-nodes of ``(λ; t)`` with those
    of ``Φ_t(λ)``.

    A node of component ``i`` and content ``c`` goes to the level one node
    of the same kind at content ``υ_i(c)``. Residue ``0`` is excluded.

    >>> lm = ChargedMultipartition([[], []], [0, 1], e=2)
    >>> ar_correspondence(lm, 1)
    {Node(row=1, col=1, comp=2): Node(row=1, col=1, comp=1)}
    """
    if not 0 < j < lm.e:
        raise InvalidResidue('residue %d is not in [1, %d]' % (j, lm.e - 1))
    image = uglov_map(lm.beta_tuple(), lm.e)
    charge = image.charge
    mapping = {}
    for i, (b, t) in enumerate(zip(lm.beta_tuple(), lm.charge), 1):
        for x in set([b.threshold] + [y + d for y in b.excess
                                      for d in (0, 1)]):
            if x % lm.e != j:
                continue
            found = bead_node(b, x, t, i)
            if found is None:
                continue
            partner = bead_node(image, upsilon(i, x, lm.e, lm.level),
                                charge, 1)
            if partner is None or partner[0] != found[0]:
                raise ComputationError('node %r has no partner in the level '
                                       'one image' % (found[1],))
            mapping[found[1]] = partner[1]
    return mapping


if __name__ == '__main__':
    import doctest
    doctest.testmod()
