# -*- coding: utf-8 -*-
#
# Copyright (C) 2006-2007 Alec Thomas <alec@swapoff.org>
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

"""Scopes equivalence of core blocks.

A core block is split as ``r* = y·ℓ + z`` with ``z ∈ [0, ℓ-1]^e``. Sorting
``y`` gives ``σ``, ordering ``z^σ`` by heights over the zero positions of the
moving vector gives ``τ``, and the Scopes vector ``Sc = z^{στ}`` together
with the moving vector decides Scopes equivalence.

>>> from akblocks.multipartition import ChargedMultipartition
>>> from akblocks.blocks import block_of
>>> lm = ChargedMultipartition([[3, 2, 1, 1, 1, 1], [4, 2, 1], [2, 2, 1], [1]],
...                            [1, 3, 3, 6], e=5)
>>> data = yz_split(block_of(lm))
>>> data.y, data.z, data.frak_y, data.j
((0, 1, 0, 1, 0), (1, 3, 2, 1, 3), 0, 2)
>>> data.sigma, data.tau, data.scopes_vector
((1, 3, 5, 2, 4), (3, 4, 2, 1, 5), (3, 3, 2, 1, 1))
>>> [block.r_star for _, block in scopes_chain(block_of(lm))][-1]
(5, 5, 3, 3, 2)
"""

from collections import Counter, deque
from math import factorial


__all__ = ['ScopesData', 'RouquierSearch', 'yz_split', 'sigma_of', 'ht',
           'tau_of', 'scopes_vector', 'is_initial', 'initial_condition_forms',
           'scopes_certificate', 'scopes_chain', 'chain_terminal_r_star',
           'scopes_equivalent', 'specht_correspondence', 'orbit_class_count',
           'is_rouquier', 'is_rouquier_by_definition', 'rouquier_reduction',
           'core_block_abacus_bounds']
__docformat__ = 'restructuredtext en'


from akblocks.exceptions import *
from akblocks.betaset import beta_set, e_quotient, e_core_and_weight
from akblocks.weyl import WeylElement, compose, permute, diamond_k, \
    right_action
from akblocks.uglov import DualityImage, duality, duality_inverse, uglov_map
from akblocks.blocks import s_action_on_block, same_weyl_orbit, \
    enumerate_in_block


class ScopesData(object):
    """The Scopes invariants of a core block.

    :ivar y: ``y^B``, the quotients of ``r*_B`` by ``ℓ``.
    :ivar z: ``z^B``, the remainders.
    :ivar frak_y: ``|y^B|`` divided by ``e``.
    :ivar j: ``|y^B|`` modulo ``e``.
    :ivar I: ``{ℓ - i : mv_i(B) = 0}``.
    :ivar sigma: ``σ_B`` in one-line form.
    :ivar tau: ``τ_B`` in one-line form.
    :ivar scopes_vector: ``Sc(B)``.
    """

    def __init__(self, block):
        if not block.is_core:
            raise NotCoreBlock(mv=block.mv)
        self.block = block
        l = block.l
        self.y = tuple(r // l for r in block.r_star)
        self.z = tuple(r % l for r in block.r_star)
        self.frak_y, self.j = divmod(sum(self.y), block.e)
        self.I = frozenset(l - i for i, m in enumerate(block.mv, 1) if m == 0)
        self.sigma = sigma_of(self.y)
        self.tau = tau_of(permute(self.z, self.sigma), self.I)
        self.scopes_vector = permute(self.z, compose(self.sigma, self.tau))

    def to_json(self):
        return {
            'mv': list(self.block.mv),
            'y': list(self.y),
            'z': list(self.z),
            'frak_y': self.frak_y,
            'j_B': self.j,
            'I': sorted(self.I),
            'sigma': list(self.sigma),
            'tau': list(self.tau),
            'scopes_vector': list(self.scopes_vector),
            }


def yz_split(block):
    """The :class:`ScopesData` of a core block."""
    return ScopesData(block)


def sigma_of(y):
    """The shortest permutation sorting ``y`` into weakly increasing order.

    >>> sigma_of((0, 1, 0, 1, 0))
    (1, 3, 5, 2, 4)
    """
    return tuple(sorted(range(1, len(y) + 1), key=lambda i: (y[i - 1], i)))


def ht(I, b):
    """``max{i ∈ I : i <= b}``.

    >>> ht({0, 2}, 1), ht({0, 2}, 3)
    (0, 2)
    >>> ht({2}, 3)
    Traceback (most recent call last):
    ...
    akblocks.exceptions.PreconditionError: 0 must lie in [2]
    """
    if 0 not in I:
        raise PreconditionError('0 must lie in %r' % (sorted(I),))
    if b < 0:
        raise PreconditionError('height of %r is undefined' % (b,))
    return max(i for i in I if i <= b)


def tau_of(z, I):
    """The permutation ordering ``z`` by decreasing height over ``I``.

    Within one height, entries above the height come before entries equal
    to it, and ties keep their index order.

    >>> tau_of((1, 2, 3, 3, 1), {0, 2})
    (3, 4, 2, 1, 5)
    """
    def key(i):
        h = ht(I, z[i - 1])
        return (-h, z[i - 1] == h, i)
    return tuple(sorted(range(1, len(z) + 1), key=key))


def scopes_vector(block):
    return ScopesData(block).scopes_vector


def _next(j, e):
    return j % e + 1


def initial_condition_forms(block):
    """The five equivalent statements of the first condition for being
    initial, evaluated separately."""
    data = ScopesData(block)
    y, e, sigma = data.y, block.e, data.sigma
    first, last = sigma[0], sigma[-1]
    wrap = 1 if last < first else 0
    j_bar = data.j or e
    delta = lambda j: 1 if j == e else 0
    return (
        y[last - 1] <= y[first - 1] + wrap,
        all(y[j - 1] == data.frak_y + (1 if j <= data.j else 0)
            for j in range(1, e + 1)),
        all(y[_next(j, e) - 1] == y[j - 1] + delta(j)
            for j in range(1, e + 1) if j != j_bar),
        all(y[_next(j, e) - 1] <= y[j - 1] + delta(j)
            for j in range(1, e + 1)),
        y[last - 1] == y[first - 1] + wrap,
        )


def is_initial(block):
    data = ScopesData(block)
    return initial_condition_forms(block)[0] and \
        data.tau == tuple(range(1, block.e + 1))


def scopes_certificate(block, j):
    """Which sufficient condition shows that no member of ``block`` has an
    addable node of residue ``j`` (``j ∈ [1, e]``, ``e`` standing for
    ``0``): ``1``, ``2`` or ``None``."""
    data = ScopesData(block)
    e = block.e
    if not 1 <= j <= e:
        raise InvalidResidue('residue %d is not in [1, %d]' % (j, e))
    k = _next(j, e)
    delta = 1 if j == e else 0
    y, z = data.y, data.z
    if y[k - 1] > y[j - 1] + delta:
        return 1
    if y[k - 1] == y[j - 1] + delta and z[k - 1] > z[j - 1] and \
            any(z[j - 1] <= h <= z[k - 1] for h in data.I):
        return 2
    return None


def _chain_step(data):
    e = data.block.e
    y = data.y
    for j in range(1, e + 1):
        if y[_next(j, e) - 1] > y[j - 1] + (1 if j == e else 0):
            return j
    shifted = permute(data.z, data.sigma)
    for b in range(1, e):
        if shifted[b] > shifted[b - 1] and \
                ht(data.I, shifted[b]) >= shifted[b - 1]:
            return data.sigma[b - 1]
    return None


def scopes_chain(block):
    """Walk Scopes moves down to the initial block of the class.

    Returns a list of ``(residue, block)`` pairs, one per move; the smallest
    admissible residue is taken at every step.
    """
    steps = []
    data = ScopesData(block)
    while not is_initial(data.block):
        j = _chain_step(data)
        if j is None:
            raise ComputationError('no Scopes move from non-initial block %r'
                                   % (data.block,))
        following = s_action_on_block(j % block.e, data.block)
        if following.size >= data.block.size:
            raise ComputationError('Scopes move %d did not shrink %r'
                                   % (j, data.block))
        steps.append((j % block.e, following))
        data = ScopesData(following)
    return steps


def chain_terminal_r_star(block):
    """``r*`` of the initial block in the Scopes class, in closed form.

    >>> from akblocks.multipartition import ChargedMultipartition
    >>> from akblocks.blocks import block_of
    >>> chain_terminal_r_star(block_of(ChargedMultipartition(
    ...     [[3, 2, 1, 1, 1, 1], [4, 2, 1], [2, 2, 1], [1]], [1, 3, 3, 6], 5)))
    (5, 5, 3, 3, 2)
    """
    data = ScopesData(block)
    e, l = block.e, block.l
    levels = [data.frak_y] * (e - data.j) + [data.frak_y + 1] * data.j
    x = [v * l + s for v, s in zip(levels, data.scopes_vector)]
    return permute(x, (WeylElement.rho(e) ** -data.j).perm)


def scopes_equivalent(block, other):
    """True if the two core blocks lie in one Weyl group orbit and share
    moving vector and Scopes vector."""
    return same_weyl_orbit(block, other) and block.mv == other.mv and \
        scopes_vector(block) == scopes_vector(other)


def specht_correspondence(block, lm, other=None):
    """The Scopes bijection ``Ω`` from ``block`` to the equivalent block
    ``other`` (by default the initial block of the class).

    Duals ``λ*`` of ``λ^w`` are matched by ``(λ*)^{σ_B τ_B} =
    (μ*)^{σ_C τ_C}``.
    """
    if other is None:
        chain = scopes_chain(block)
        other = chain[-1][1] if chain else block
    if not scopes_equivalent(block, other):
        raise IncompatibleBlocks('%r and %r are not Scopes equivalent'
                                 % (block, other))
    source, target = ScopesData(block), ScopesData(other)
    star = duality(right_action(lm, block.frame)).multipartition
    target_perm = compose(target.sigma, target.tau)
    inverse = tuple(target_perm.index(i) + 1
                    for i in range(1, block.e + 1))
    mapped = permute(star, compose(compose(source.sigma, source.tau),
                                   inverse))
    at_frame = duality_inverse(DualityImage(mapped, other.r_star, block.e,
                                            block.l))
    if at_frame.charge != other.reduced_charge:
        raise ComputationError('Scopes image %r is not at charge %r'
                               % (at_frame, other.reduced_charge))
    return right_action(at_frame, other.frame.inverse())


def orbit_class_count(block):
    """The number of Scopes classes of core blocks with this moving vector
    in the orbit of ``block``.

    Values of ``z`` strictly between consecutive elements of ``I`` (and
    ``ℓ``) form a stratum; each stratum contributes the multinomial of its
    value multiplicities.
    """
    data = ScopesData(block)
    counts = Counter(data.z)
    bounds = sorted(data.I) + [block.l]
    total = 1
    for low, high in zip(bounds, bounds[1:]):
        ks = [counts[a] for a in range(low + 1, high)]
        term = factorial(sum(ks))
        for k in ks:
            term //= factorial(k)
        total *= term
    return total


def is_rouquier_by_definition(block, members):
    """Check the quotient-charge spacing on the given members: for every
    component, consecutive runner charges of ``β_{r_i}(λ^{(i)})`` differ by
    at least the component's e-weight minus one."""
    for lm in members:
        for partition, r in zip(lm.components, lm.charge):
            b = beta_set(partition, r)
            s = e_quotient(b, block.e).charges
            weight = e_core_and_weight(b, block.e)[1]
            if any(s[j + 1] < s[j] + weight - 1 for j in range(block.e - 1)):
                return False
    return True


def is_rouquier(block, members=None):
    """True if ``block`` is a Rouquier block.

    Strictly increasing ``y^B`` certifies it outright; otherwise the
    members (enumerated if not given) are checked one by one.
    """
    y = ScopesData(block).y
    if all(a < b for a, b in zip(y, y[1:])):
        return True
    if members is None:
        members = enumerate_in_block(block)
    return is_rouquier_by_definition(block, members)


class RouquierSearch(object):
    """Breadth-first search over ``y`` for a Scopes-equivalent block with
    strictly increasing ``y``.

    Every move ``s_j`` that changes ``y`` is a Scopes move in one direction
    or the other.

    :param budget: The number of ``y`` vectors to visit at most.
    """
    budget = 10 ** 5

    def __init__(self, **kwargs):
        self.budget = kwargs.pop('budget', self.budget)
        if kwargs:
            raise TypeError('unexpected arguments %s' % ', '.join(kwargs))

    def path(self, block):
        """The residues of the moves, in order of application."""
        e = block.e
        start = ScopesData(block).y
        generators = [WeylElement.s(j, e) for j in range(e)]
        parents = {start: None}
        queue = deque([start])
        while queue:
            y = queue.popleft()
            if all(a < b for a, b in zip(y, y[1:])):
                moves = []
                while parents[y] is not None:
                    y, j = parents[y]
                    moves.append(j)
                return list(reversed(moves))
            for j, s in enumerate(generators):
                moved = diamond_k(s, 1, y)
                if moved in parents:
                    continue
                if len(parents) >= self.budget:
                    raise BudgetExceeded(self.budget)
                parents[moved] = (y, j)
                queue.append(moved)
        raise ComputationError('no strictly increasing y reachable from %r'
                               % (start,))

    def reduce(self, block):
        for j in self.path(block):
            block = s_action_on_block(j, block)
        return block


def rouquier_reduction(block, **kwargs):
    """A Rouquier block Scopes equivalent to ``block``."""
    if not block.is_core:
        raise NotCoreBlock(mv=block.mv)
    return RouquierSearch(**kwargs).reduce(block)


def core_block_abacus_bounds(block, lm):
    """Check the runner bounds a member of a core block obeys at every zero
    ``i`` of the moving vector: each runner ``C_j`` of the Uglov image lies
    between ``ℓ⌊(x_j + i)/ℓ⌋ - i`` and ``ℓ⌈(x_j + i)/ℓ⌉ - i``, ``x = r*``.
    """
    l = block.l
    at_frame = right_action(lm, block.frame)
    runners = e_quotient(uglov_map(at_frame.beta_tuple(), block.e),
                         block.e).components
    for i, m in enumerate(block.mv, 1):
        if m:
            continue
        for c, x in zip(runners, block.r_star):
            if c.top + i >= l * -(-(x + i) // l):
                return False
            if c.threshold + i < l * ((x + i) // l):
                return False
    return True


if __name__ == '__main__':
    import doctest
    doctest.testmod()
