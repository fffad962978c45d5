# -*- coding: utf-8 -*-
#
# Copyright (C) 2006-2007 Alec Thomas <alec@swapoff.org>
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

"""Blocks of Ariki-Koike algebras and their invariants.

Two ℓ-partitions with the same multicharge lie in the same block exactly when
their Uglov images have the same e-core and e-weight once the charge has been
moved into the fundamental domain. A :class:`BlockDescriptor` records that
identity together with the moving vector, ``r*`` and a canonical frame.

>>> from akblocks.multipartition import ChargedMultipartition
>>> lm = ChargedMultipartition([[3, 2, 1, 1, 1, 1], [4, 2, 1], [2, 2, 1], [1]],
...                            [1, 3, 3, 6], e=5)
>>> moving_vector(lm)
(0, 1, 0, 1)
>>> block = block_of(lm)
>>> block.weight, block.is_core
(2, True)
>>> block.reduced_charge, block.mv, block.r_star
((3, 3, 6, 6), (1, 0, 1, 0), (1, 7, 2, 5, 3))
>>> is_decomposable(lm)
True
"""

from itertools import combinations, product

import networkx as nx


__all__ = ['BlockDescriptor', 'BlockEnumerator', 'block_of', 'moving_vector',
           'is_core_block', 'r_star', 's_action_on_block', 'same_weyl_orbit',
           'construct_with_mv', 'core_star', 'weight_graph', 'gamma_graph',
           'is_decomposable', 'enumerate_in_block', 'weight_bound',
           'bipartition_weight']
__docformat__ = 'restructuredtext en'


from akblocks.exceptions import *
from akblocks.console import cinfo
from akblocks.betaset import Partition, BetaSet, e_quotient
from akblocks.multipartition import ChargedMultipartition, multipartitions, \
    hub_of
from akblocks.weyl import WeylElement, permute, right_action, \
    right_action_charge, reduce_to_domain, in_closed_alcove, \
    s_dot_multipartition
from akblocks.uglov import duality, core_wt_of_pair, uglov_inverse


def _step(l):
    """``ρ_ℓ e_ℓ``."""
    return WeylElement.rho(l) * WeylElement.unit(l, l)


def _image_mv(lm):
    image = duality(lm)
    counts = [0] * lm.level
    for mu, u in zip(image.multipartition, image.charge):
        for a, length in enumerate(mu, 1):
            for b in range(1, length + 1):
                counts[(b - a + u) % lm.level] += 1
    return tuple(reversed(counts))


def moving_vector(lm, w=None, strict=True):
    """``mv_e((λ; r)^w)``, the node counts of the dual ``(μ; u)`` by
    ``(ℓ, u)``-residue, listed from residue ``ℓ-1`` down to ``0``.

    ``r^w`` must lie in the closed alcove unless ``strict`` is false.
    """
    if w is not None:
        lm = right_action(lm, w)
    if strict and not in_closed_alcove(lm.charge, lm.e):
        raise NotInClosedAlcove(charge=lm.charge, e=lm.e)
    return _image_mv(lm)


def weight_bound(e, l):
    """The largest weight a core block of level ``l`` can have.

    >>> weight_bound(5, 4)
    20
    """
    return (l // 2) * ((l + 1) // 2) * e


class BlockDescriptor(object):
    """The block of a charged ℓ-partition.

    Equality and hashing use :attr:`key`, ``(e, ℓ, A_F charge, core at that
    charge, weight)``; the representative and frame are carried along for
    computations but do not affect identity.
    """

    def __init__(self, representative, domain_frame, domain_core, weight,
                 domain_mv, frame, core, mv):
        self.representative = representative
        self.e = representative.e
        self.l = representative.level
        self.charge = representative.charge
        self.size = representative.size
        self.domain_frame = domain_frame
        self.domain_charge = right_action_charge(self.charge, domain_frame,
                                                 self.e)
        self.domain_core = domain_core
        self.domain_mv = domain_mv
        self.weight = weight
        self.frame = frame
        self.reduced_charge = right_action_charge(self.charge, frame, self.e)
        self.core = core
        self.mv = mv
        self.hub = hub_of(representative)
        self.r_star = e_quotient(core, self.e).charges

    key = property(lambda self: (self.e, self.l, self.domain_charge,
                                 self.domain_core, self.weight))

    @property
    def is_core(self):
        return 0 in self.mv

    def __eq__(self, other):
        if not isinstance(other, BlockDescriptor):
            return NotImplemented
        return self.key == other.key

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return '<BlockDescriptor e=%d l=%d r=%r weight=%d mv=%r>' % (
            self.e, self.l, self.charge, self.weight, self.mv)

    def to_json(self):
        return {
            'e': self.e,
            'l': self.l,
            'n': self.size,
            'charge': list(self.charge),
            'reduced_charge': list(self.reduced_charge),
            'frame': {'perm': list(self.frame.perm),
                      'trans': list(self.frame.trans)},
            'core_threshold': self.core.threshold,
            'core_excess': list(self.core.excess),
            'weight': self.weight,
            'hub': list(self.hub),
            'mv': list(self.mv),
            'r_star': list(self.r_star),
            'core_block': self.is_core,
            }


def _domain_data(lm):
    frame, _ = reduce_to_domain(lm.charge, lm.e)
    at_domain = right_action(lm, frame)
    core, weight = core_wt_of_pair(at_domain)
    return frame, core, weight, _image_mv(at_domain)


def block_of(lm, w=None):
    """The :class:`BlockDescriptor` of ``(λ; r)``.

    Without ``w`` the frame is canonical: ``w_F (ρ_ℓ e_ℓ)^k`` with the least
    ``k ∈ [1, ℓ]`` making the last moving-vector entry zero for core blocks,
    and the fundamental-domain frame ``w_F`` otherwise. An explicit ``w``
    must put the charge in the closed alcove and, for core blocks, make the
    last moving-vector entry zero.
    """
    domain_frame, domain_core, weight, domain_mv = _domain_data(lm)
    core_block = 0 in domain_mv
    if w is None:
        w = domain_frame
        if core_block:
            # mv at w_F (ρ e)^k is the domain mv rotated k places.
            w = w * _step(lm.level) ** (domain_mv.index(0) + 1)
    elif not in_closed_alcove(right_action_charge(lm.charge, w, lm.e), lm.e):
        raise NotInClosedAlcove(charge=right_action_charge(lm.charge, w,
                                                           lm.e), e=lm.e)
    at_frame = right_action(lm, w)
    mv = _image_mv(at_frame)
    if core_block and mv[-1] != 0:
        raise PreconditionError('frame %r leaves the last moving vector entry '
                                'of %r non-zero' % (w, mv))
    core, _ = core_wt_of_pair(at_frame)
    return BlockDescriptor(lm, domain_frame, domain_core, weight, domain_mv,
                           w, core, mv)


def is_core_block(block):
    """True if some moving-vector entry is zero."""
    return block.is_core


def _require_core(block):
    if not block.is_core:
        raise NotCoreBlock(mv=block.mv)


def r_star(block, w=None):
    """``r*_B`` at the frame ``w``: the runner charges of the block's
    e-core."""
    if w is None:
        return block.r_star
    at_frame = right_action(block.representative, w)
    if not in_closed_alcove(at_frame.charge, block.e):
        raise NotInClosedAlcove(charge=at_frame.charge, e=block.e)
    return e_quotient(core_wt_of_pair(at_frame)[0], block.e).charges


def s_action_on_block(j, block):
    """``s_j ∙ B``: the block of ``s_j ∙ λ`` for any member ``λ``, read in
    the frame of ``B``."""
    return block_of(s_dot_multipartition(j, block.representative),
                    block.frame)


def same_weyl_orbit(block, other):
    """True if ``other = w ∙ block`` for some ``w`` in the affine Weyl group
    of rank ``e``."""
    if (block.e, block.l, block.domain_charge) != \
            (other.e, other.l, other.domain_charge):
        raise IncompatibleBlocks('blocks with charges %r and %r at e=%d are '
                                 'not comparable' % (block.charge,
                                                     other.charge, block.e))
    return block.domain_mv == other.domain_mv


def core_star(block):
    """``(λ*; t*)``, the preimage of the block's core under the Uglov map at
    its frame."""
    return ChargedMultipartition.from_beta_tuple(
        uglov_inverse(block.core, block.e, block.l), block.e)


def _without(b, x):
    if x >= b.threshold:
        return BetaSet(b.threshold, [y for y in b.excess if y != x])
    return BetaSet(x, list(range(x + 1, b.threshold)) + list(b.excess))


def _raise_moving_vector(lm, k):
    """Move beads between components until the moving vector has grown by
    ``(k_1, …, k_{ℓ-1}, 0)``; the core is unchanged."""
    l = lm.level
    k = list(k) + [0]
    t = list(lm.charge)
    u = [t[i] + k[i] - (k[i - 1] if i else 0) for i in range(l)]
    if t != sorted(t) or u != sorted(u):
        raise PreconditionError('charges %r and %r must both be ascending'
                                % (tuple(t), tuple(u)))
    betas = list(lm.beta_tuple())
    while any(k):
        top = max(i for i in range(1, l) if k[i - 1] > 0)
        m = max(i for i in range(1, l + 1) if u[i - 1] > t[i - 1])
        a = max(i for i in range(1, l + 1) if t[i - 1] == t[m - 1])
        b = min(i for i in range(1, l + 1) if t[i - 1] == t[top])
        source, target = betas[b - 1], betas[a - 1]
        x = next(y for y in source.members(target.threshold)
                 if y not in target)
        betas[a - 1] = BetaSet(target.threshold, target.excess + (x,))
        betas[b - 1] = _without(source, x)
        t[a - 1] += 1
        t[b - 1] -= 1
        for i in range(a, b):
            k[i - 1] -= 1
    return ChargedMultipartition.from_beta_tuple(betas, lm.e)


def construct_with_mv(core_pair, m, t):
    """An ℓ-partition ``λ`` at charge ``t`` whose core is
    ``U(β_{t*}(λ*))`` and whose moving vector is ``m``.

    ``core_pair`` is ``(λ*; t*)`` as a :class:`ChargedMultipartition`. The
    charge must satisfy ``t_i = t*_i + m_i - m_{i-1}`` (with ``m_0 = m_ℓ``)
    and be ascending.

    >>> star = ChargedMultipartition([[], []], [0, 1], e=2)
    >>> construct_with_mv(star, (1, 1), (0, 1))
    ChargedMultipartition([[], [2]], [0, 1], e=2)
    """
    e, l = core_pair.e, core_pair.level
    m, t, ts = tuple(m), tuple(t), core_pair.charge
    if len(m) != l or len(t) != l:
        raise RankMismatch(left=l, right=len(m) if len(m) != l else len(t))
    if any(x < 0 for x in m):
        raise PreconditionError('moving vector %r has a negative entry' % (m,))
    if any(t[i] != ts[i] + m[i] - m[i - 1] for i in range(l)):
        raise PreconditionError('charge %r does not match %r and moving '
                                'vector %r' % (t, ts, m))
    if list(t) != sorted(t):
        raise PreconditionError('charge %r is not ascending' % (t,))
    if core_wt_of_pair(core_pair)[1]:
        raise PreconditionError('%r does not have an e-core as Uglov image'
                                % (core_pair,))
    low = min(m)
    if m[-1] == low:
        base = _raise_moving_vector(core_pair, [x - low for x in m[:-1]])
        components = list(base.components)
        last = components[-1]
        components[-1] = Partition([last.part(1) + low * e] + list(last[1:]))
        return ChargedMultipartition(components, t, e)
    step = _step(l) ** (m.index(low) + 1)
    rotated = construct_with_mv(right_action(core_pair, step),
                                permute(m, step.perm),
                                right_action_charge(t, step, e))
    return right_action(rotated, step.inverse())


def bipartition_weight(lm, p, q):
    """The weight of ``((λ^{(p)}, λ^{(q)}); (r_p, r_q))``."""
    pair = ChargedMultipartition(
        [lm.components[p - 1], lm.components[q - 1]],
        [lm.charge[p - 1], lm.charge[q - 1]], lm.e)
    return _domain_data(pair)[2]


def weight_graph(block, lm=None):
    """``G(λ)``: a multigraph on ``[1, ℓ]`` with as many ``p``-``q`` edges
    as the weight of the bipartition formed by components ``p`` and ``q``.
    """
    _require_core(block)
    if lm is None:
        lm = block.representative
    graph = nx.MultiGraph()
    graph.add_nodes_from(range(1, block.l + 1))
    for p, q in combinations(range(1, block.l + 1), 2):
        graph.add_edges_from([(p, q)] * bipartition_weight(lm, p, q))
    return graph


def gamma_graph(block, w=None, relabel=False):
    """``Γ_{r^w}(B)``: ``i`` joined to ``i+1`` (cyclically) whenever the
    ``i``-th moving-vector entry is non-zero.

    With ``relabel`` vertex ``i`` is renamed ``σ(i)``, ``σ`` the
    permutation part of ``w``, so components can be compared with
    :func:`weight_graph`.
    """
    _require_core(block)
    if w is None:
        w, mv = block.frame, block.mv
    else:
        mv = moving_vector(block.representative, w)
    graph = nx.Graph()
    graph.add_nodes_from(range(1, block.l + 1))
    graph.add_edges_from((i, i % block.l + 1)
                         for i in range(1, block.l + 1) if mv[i - 1])
    if relabel:
        graph = nx.relabel_nodes(graph, dict(enumerate(w.perm, 1)))
    return graph


def is_decomposable(lm):
    """True if the core block of ``(λ; r)`` is decomposable: its moving
    vector has at least two zero entries."""
    block = lm if isinstance(lm, BlockDescriptor) else block_of(lm)
    _require_core(block)
    return block.mv.count(0) >= 2


def _satisfies_condition_one(block):
    y = [r // block.l for r in block.r_star]
    e = block.e
    return all(y[(j + 1) % e] <= y[j] + (1 if j == e - 1 else 0)
               for j in range(e))


class BlockEnumerator(object):
    """Enumerate the members of a block.

    Core blocks whose quotient charges are compact (the first condition for
    being initial) are scanned through the beta-set shapes their members
    must have; everything else is scanned over all ℓ-partitions of ``n``.
    Either scan stops with :class:`BudgetExceeded` once ``budget``
    candidates have been examined.

    :param budget: Candidate multipartitions to examine at most.
    :param verbose: Report progress on standard error.
    """
    budget = 10 ** 7
    verbose = False
    progress_interval = 10 ** 5

    def __init__(self, **kwargs):
        self.budget = kwargs.pop('budget', self.budget)
        self.verbose = kwargs.pop('verbose', self.verbose)
        if kwargs:
            raise TypeError('unexpected arguments %s' % ', '.join(kwargs))

    def members(self, block):
        """Every ℓ-partition in ``block``, as charged multipartitions."""
        if block.is_core and _satisfies_condition_one(block):
            candidates = self._shaped_candidates(block)
        else:
            candidates = (ChargedMultipartition(c, block.charge, block.e)
                          for c in multipartitions(block.size, block.l))
        found = []
        for count, lm in enumerate(candidates, 1):
            if self.budget is not None and count > self.budget:
                raise BudgetExceeded(self.budget, partial=found)
            if self.verbose and count % self.progress_interval == 0:
                cinfo('%d candidates scanned, %d members found'
                      % (count, len(found)))
            if lm.size == block.size and self._domain_key(lm) == block.key:
                found.append(lm)
        return found

    def _domain_key(self, lm):
        frame, core, weight, _ = _domain_data(lm)
        return (lm.e, lm.level, right_action_charge(lm.charge, frame, lm.e),
                core, weight)

    def _shaped_candidates(self, block):
        # Every member at the frame has beta-sets Z_{<m} ∪ L_a with
        # L_a ⊆ [m, m + e - 1].
        m = sum(r // block.l for r in block.r_star)
        window = range(m, m + block.e)
        choices = []
        for r in block.reduced_charge:
            if not 0 <= r - m <= block.e:
                return
            choices.append(list(combinations(window, r - m)))
        back = block.frame.inverse()
        for subsets in product(*choices):
            at_frame = ChargedMultipartition.from_beta_tuple(
                [BetaSet(m, s) for s in subsets], block.e)
            yield right_action(at_frame, back)


def enumerate_in_block(block, n=None, **kwargs):
    """All members of ``block``; keyword arguments configure the
    :class:`BlockEnumerator`.

    Members of a block all have the block's size, so for any other ``n``
    the result is empty.
    """
    if n is not None and n != block.size:
        return []
    return BlockEnumerator(**kwargs).members(block)


if __name__ == '__main__':
    import doctest
    doctest.testmod()
