# -*- coding: utf-8 -*-
#
# Copyright (C) 2006-2007 Alec Thomas <alec@swapoff.org>
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

"""Extended affine Weyl groups and their actions.

An element ``σt`` of the extended affine Weyl group of rank ``m`` is a
permutation ``σ`` of ``[1, m]`` (one-line form, ``perm[i-1] = σ(i)``) together
with a translation ``t ∈ Z^m``, multiplied by ``(σt)(τu) = (στ)(t^τ + u)``
where ``(x^σ)_i = x_{σ(i)}``.

>>> rho, e4 = WeylElement.rho(4), WeylElement.unit(4, 4)
>>> w = rho * e4
>>> right_action_charge((1, 3, 3, 6), w, 5)
(3, 3, 6, 6)
>>> (rho * e4) ** 6 == WeylElement((3, 4, 1, 2), (1, 1, 2, 2))
True

Rank ``ℓ`` elements act on the right of charged ℓ-partitions; rank ``e``
elements act on the left of integers and beta-sets (``∙_k``) and of e-tuples
(``⋄_k``):

>>> s1 = WeylElement.s(1, 3)
>>> [left_dot_k(s1, 1, x) for x in (0, 1, 2)]
[1, 0, 2]
"""

import re


__all__ = ['WeylElement', 'compose', 'permute', 'mul', 'inv',
           'right_action_charge', 'right_action', 'in_fundamental_domain',
           'in_alcove', 'in_closed_alcove', 'reduce_to_domain',
           'closed_alcove_representatives', 'left_dot_k', 'diamond_k',
           's_dot_multipartition']
__docformat__ = 'restructuredtext en'


from akblocks.exceptions import *
from akblocks.betaset import BetaSet, e_quotient, from_quotient, shift


def compose(p, q):
    """Compose permutations in one-line form: ``(pq)(x) = p(q(x))``.

    >>> compose((2, 3, 1), (2, 1, 3))
    (3, 2, 1)
    """
    return tuple(p[x - 1] for x in q)


def permute(x, p):
    """The right place permutation ``(x^σ)_i = x_{σ(i)}``.

    >>> permute(('a', 'b', 'c'), (2, 3, 1))
    ('b', 'c', 'a')
    """
    return tuple(x[i - 1] for i in p)


def _inverse_perm(p):
    inverse = [0] * len(p)
    for i, x in enumerate(p, 1):
        inverse[x - 1] = i
    return tuple(inverse)


class WeylElement(object):
    """An element ``σt`` of the extended affine Weyl group.

    :param perm: One-line form of ``σ``.
    :param trans: The translation ``t``.
    """

    _token_re = re.compile(r'\s*(?:(s|e)(\d+)|(rho))(?:\^(-?\d+))?\s*')

    def __init__(self, perm, trans=None):
        perm = tuple(int(x) for x in perm)
        if sorted(perm) != list(range(1, len(perm) + 1)):
            raise ValueError('%r is not a permutation' % (perm,))
        if trans is None:
            trans = (0,) * len(perm)
        trans = tuple(int(x) for x in trans)
        if len(trans) != len(perm):
            raise RankMismatch(left=len(perm), right=len(trans))
        self.perm = perm
        self.trans = trans

    rank = property(lambda self: len(self.perm))

    @classmethod
    def identity(cls, m):
        return cls(range(1, m + 1))

    @classmethod
    def translation(cls, vector):
        vector = tuple(vector)
        return cls(range(1, len(vector) + 1), vector)

    @classmethod
    def unit(cls, j, m):
        """The unit translation ``e_j``."""
        if not 1 <= j <= m:
            raise RankMismatch('e_%d is not defined in rank %d' % (j, m))
        return cls.translation([1 if i == j else 0 for i in range(1, m + 1)])

    @classmethod
    def rho(cls, m):
        """The cycle ``i -> i+1``, ``m -> 1``."""
        return cls(list(range(2, m + 1)) + [1])

    @classmethod
    def s(cls, i, m):
        """The Coxeter generator ``s_i``, ``i ∈ [0, m-1]``.

        ``s_0`` swaps ``1`` and ``m`` with translation ``-e_1 + e_m``.

        >>> WeylElement.s(0, 3)
        WeylElement((3, 2, 1), (-1, 0, 1))
        """
        if m < 2 or not 0 <= i < m:
            raise InvalidResidue(j=i, e=m)
        perm = list(range(1, m + 1))
        if i == 0:
            perm[0], perm[-1] = m, 1
            trans = [0] * m
            trans[0], trans[-1] = -1, 1
            return cls(perm, trans)
        perm[i - 1], perm[i] = i + 1, i
        return cls(perm)

    @classmethod
    def from_word(cls, text, m):
        """Parse a word in the generators, eg. ``'s2 s4 s3'`` or
        ``'rho e4^2'``.

        >>> WeylElement.from_word('s1 s1', 3) == WeylElement.identity(3)
        True
        """
        w = cls.identity(m)
        pos = 0
        while pos < len(text):
            match = cls._token_re.match(text, pos)
            if not match or match.end() == pos:
                raise ValueError('invalid Weyl group word %r' % text)
            pos = match.end()
            kind, index, rho, power = match.groups()
            if rho:
                g = cls.rho(m)
            elif kind == 's':
                g = cls.s(int(index), m)
            else:
                g = cls.unit(int(index), m)
            w = w * g ** int(power or 1)
        return w

    def __mul__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        if self.rank != other.rank:
            raise RankMismatch(left=self.rank, right=other.rank)
        shifted = permute(self.trans, other.perm)
        return WeylElement(compose(self.perm, other.perm),
                           [a + b for a, b in zip(shifted, other.trans)])

    def inverse(self):
        inverse = _inverse_perm(self.perm)
        return WeylElement(inverse, [-x for x in permute(self.trans, inverse)])

    def __pow__(self, k):
        base = self if k >= 0 else self.inverse()
        result = WeylElement.identity(self.rank)
        for _ in range(abs(k)):
            result = result * base
        return result

    def is_translation(self):
        return self.perm == tuple(range(1, self.rank + 1))

    def is_affine(self):
        """True if the element lies in the (non-extended) affine Weyl
        group."""
        return sum(self.trans) == 0

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return (self.perm, self.trans) == (other.perm, other.trans)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.perm, self.trans))

    def __repr__(self):
        return 'WeylElement(%r, %r)' % (self.perm, self.trans)


def mul(w1, w2):
    return w1 * w2


def inv(w):
    return w.inverse()


def right_action_charge(t, w, e):
    """``t^{σu} = t^σ + e·u``."""
    t = tuple(t)
    if len(t) != w.rank:
        raise RankMismatch(left=len(t), right=w.rank)
    return tuple(a + e * u for a, u in zip(permute(t, w.perm), w.trans))


def right_action(lm, w):
    """``(λ; t)^w``: components are permuted, charges permuted and
    translated."""
    from akblocks.multipartition import ChargedMultipartition
    return ChargedMultipartition(permute(lm.components, w.perm),
                                 right_action_charge(lm.charge, w, lm.e),
                                 lm.e)


def in_fundamental_domain(t, e):
    """``0 <= t_1 <= … <= t_ℓ < e``."""
    t = tuple(t)
    return all(0 <= x < e for x in t) and list(t) == sorted(t)


def in_alcove(t, e):
    """``t_1 <= … <= t_ℓ < t_1 + e``."""
    t = tuple(t)
    return list(t) == sorted(t) and t[-1] < t[0] + e


def in_closed_alcove(t, e):
    """``t_1 <= … <= t_ℓ <= t_1 + e``.

    >>> in_closed_alcove((1, 3, 3, 6), 5), in_closed_alcove((0, 6), 5)
    (True, False)
    """
    t = tuple(t)
    return list(t) == sorted(t) and t[-1] <= t[0] + e


def reduce_to_domain(t, e):
    """Return ``(w, t^w)`` with ``t^w`` in the fundamental domain.

    Residues are sorted stably, so equal residues keep their order.

    >>> w, f = reduce_to_domain((1, 3, 3, 6), 5)
    >>> f, w.perm
    ((1, 1, 3, 3), (1, 4, 2, 3))
    """
    t = tuple(t)
    qr = [divmod(x, e) for x in t]
    perm = tuple(sorted(range(1, len(t) + 1), key=lambda i: qr[i - 1][1]))
    w = WeylElement(perm, [-qr[i - 1][0] for i in perm])
    return w, right_action_charge(t, w, e)


def closed_alcove_representatives(t, e, count=None):
    """Yield ``(k, w, t^w)`` for ``w = w_F (ρ e_ℓ)^k``, ``k = 0, 1, …``.

    Every such ``t^w`` lies in the closed alcove and the powers of ``ρ e_ℓ``
    act transitively on the orbit's intersection with it. By default
    ``ℓ + 1`` representatives are produced.
    """
    t = tuple(t)
    level = len(t)
    w, _ = reduce_to_domain(t, e)
    step = WeylElement.rho(level) * WeylElement.unit(level, level)
    if count is None:
        count = level + 1
    for k in range(count):
        yield k, w, right_action_charge(t, w, e)
        w = w * step


def left_dot_k(w, k, x):
    """The left action ``w ∙_k x`` on integers, beta-sets and tuples of
    beta-sets.

    Writing ``x = e·q + (c - 1)`` with ``c ∈ [1, e]``, ``σt ∙_k x =
    e·(q + k·t_c) + σ(c) - 1``.

    >>> left_dot_k(WeylElement.unit(2, 3), 4, 1)
    13
    >>> left_dot_k(WeylElement.s(0, 3), 1, BetaSet(0))
    BetaSet(-1, (0,))
    """
    e = w.rank
    if isinstance(x, BetaSet):
        return from_quotient(diamond_k(w, k, e_quotient(x, e).components), e)
    if isinstance(x, (tuple, list)):
        return tuple(left_dot_k(w, k, b) for b in x)
    q, c = divmod(x, e)
    return e * (q + k * w.trans[c]) + w.perm[c] - 1


def diamond_k(w, k, xs):
    """The left action ``w ⋄_k`` on e-tuples of integers or beta-sets:
    entry ``σ(c)`` of the result is entry ``c`` translated by
    ``k·t_c``.

    >>> diamond_k(WeylElement.s(0, 5), 4, (1, 7, 2, 5, 3))
    (7, 7, 2, 5, -3)
    """
    xs = tuple(xs)
    if len(xs) != w.rank:
        raise RankMismatch(left=len(xs), right=w.rank)
    result = [None] * len(xs)
    for c, x in enumerate(xs):
        amount = k * w.trans[c]
        if isinstance(x, BetaSet):
            result[w.perm[c] - 1] = shift(x, amount)
        else:
            result[w.perm[c] - 1] = x + amount
    return tuple(result)


def s_dot_multipartition(j, lm):
    """``s_j ∙_t λ``: remove every removable and add every addable node of
    residue ``j``. The charge is unchanged.

    >>> from akblocks.multipartition import ChargedMultipartition
    >>> s_dot_multipartition(0, ChargedMultipartition([[]], [0], 2))
    ChargedMultipartition([[1]], [0], e=2)
    """
    from akblocks.multipartition import ChargedMultipartition
    s = WeylElement.s(j, lm.e)
    return ChargedMultipartition.from_beta_tuple(
        left_dot_k(s, 1, lm.beta_tuple()), lm.e)


if __name__ == '__main__':
    import doctest
    doctest.testmod()
