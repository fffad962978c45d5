# -*- coding: utf-8 -*-
#
# Copyright (C) 2006-2007 Alec Thomas <alec@swapoff.org>
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

"""The level ℓ Fock space and v-decomposition numbers.

Vectors are finite sums of charged ℓ-partitions with Laurent polynomial
coefficients. ``f_j`` adds addable ``j``-nodes, weighting each by ``v`` to
the number of addable minus removable ``j``-nodes above it in the
``'kleshchev'`` order:

>>> x = f_op(1, f_op(0, FockVector.empty([0], e=2)))
>>> print(x)
((2,)) + v((1, 1))

Canonical basis vectors come from bar-invariant vectors built along a path
of good-node removals, corrected until every off-diagonal coefficient lies
in ``vZ[v]``:

>>> print(canonical_basis([[3]], [0], e=2))
((3,)) + v((1, 1, 1))
"""

from collections import namedtuple
from itertools import combinations


__all__ = ['LaurentPoly', 'FockVector', 'CanonicalBasis', 'Reduction',
           'DecompositionMatrix', 'f_op', 'canonical_basis',
           'dominance_key', 'dominates', 'decomposition_matrix',
           'translation_frames', 'level_one_reduction', 'psi', 'psi_check']
__docformat__ = 'restructuredtext en'


from akblocks.exceptions import *
from akblocks.console import cinfo
from akblocks.betaset import Partition
from akblocks.multipartition import ChargedMultipartition, KLESHCHEV, \
    addable_removable, order_key, good_node, is_kleshchev
from akblocks.weyl import WeylElement, in_closed_alcove
from akblocks.uglov import level_one_image
from akblocks.blocks import block_of, enumerate_in_block, \
    _satisfies_condition_one
from akblocks.scopes import yz_split, scopes_chain, specht_correspondence


class LaurentPoly(object):
    """An integer Laurent polynomial in ``v``.

    >>> p = LaurentPoly({-1: 1, 1: 1})
    >>> p == p.bar(), p * p
    (True, LaurentPoly({-2: 1, 0: 2, 2: 1}))
    """

    def __init__(self, coefficients=None):
        if isinstance(coefficients, int):
            coefficients = {0: coefficients}
        self._terms = dict((int(k), int(c)) for k, c in
                           (coefficients or {}).items() if c)

    @classmethod
    def v(cls, k=1):
        return cls({k: 1})

    def coefficient(self, k):
        return self._terms.get(k, 0)

    def exponents(self):
        return sorted(self._terms)

    def bar(self):
        """``p(v^{-1})``."""
        return LaurentPoly(dict((-k, c) for k, c in self._terms.items()))

    def symmetric_part(self):
        """The bar-invariant ``α`` with ``self - α ∈ vZ[v]``.

        >>> LaurentPoly({-1: 2, 0: 1, 2: 5}).symmetric_part()
        LaurentPoly({-1: 2, 0: 1, 1: 2})
        """
        terms = dict((k, c) for k, c in self._terms.items() if k <= 0)
        terms.update((-k, c) for k, c in self._terms.items() if k < 0)
        return LaurentPoly(terms)

    def in_v_z_v(self):
        """True if every exponent is positive."""
        return all(k > 0 for k in self._terms)

    def is_nonnegative(self):
        return all(c > 0 for c in self._terms.values())

    def at_one(self):
        return sum(self._terms.values())

    def __add__(self, other):
        other = _poly(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for k, c in other._terms.items():
            terms[k] = terms.get(k, 0) + c
        return LaurentPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(dict((k, -c) for k, c in self._terms.items()))

    def __sub__(self, other):
        other = _poly(other)
        if other is None:
            return NotImplemented
        return self + -other

    def __mul__(self, other):
        other = _poly(other)
        if other is None:
            return NotImplemented
        terms = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                terms[k1 + k2] = terms.get(k1 + k2, 0) + c1 * c2
        return LaurentPoly(terms)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        other = _poly(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(tuple(sorted(self._terms.items())))

    def __repr__(self):
        return 'LaurentPoly(%r)' % (dict(sorted(self._terms.items())),)

    def __str__(self):
        """Highest power first: ``v^2 + 2v + 1``."""
        if not self._terms:
            return '0'
        out = []
        for k in sorted(self._terms, reverse=True):
            c = self._terms[k]
            sign = '-' if c < 0 else '+'
            c = abs(c)
            if k == 0:
                body = str(c)
            else:
                power = 'v' if k == 1 else 'v^%d' % k
                body = power if c == 1 else '%d%s' % (c, power)
            out.append((sign, body))
        text = ('-' if out[0][0] == '-' else '') + out[0][1]
        for sign, body in out[1:]:
            text += ' %s %s' % (sign, body)
        return text

    def to_json(self):
        return dict((str(k), c) for k, c in sorted(self._terms.items()))


def _poly(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly(x)
    return None


class FockVector(object):
    """A vector of ``F_t``: a map from ℓ-partitions to Laurent
    polynomials."""

    def __init__(self, charge, e, terms=None):
        self.charge = tuple(charge)
        self.e = e
        self.terms = {}
        for components, coefficient in (terms or {}).items():
            key = tuple(Partition(c) for c in components)
            if len(key) != len(self.charge):
                raise RankMismatch(left=len(key), right=len(self.charge))
            coefficient = _poly(coefficient)
            if coefficient:
                self.terms[key] = self.terms.get(key, LaurentPoly()) + \
                    coefficient
        self.terms = dict((k, c) for k, c in self.terms.items() if c)

    @classmethod
    def empty(cls, charge, e):
        """The vector ``(∅; t)``."""
        return cls.basis([()] * len(tuple(charge)), charge, e)

    @classmethod
    def basis(cls, components, charge, e):
        return cls(charge, e, {tuple(Partition(c) for c in components):
                               LaurentPoly(1)})

    def coefficient(self, components):
        key = tuple(Partition(c) for c in components)
        return self.terms.get(key, LaurentPoly())

    def multipartitions(self):
        return [ChargedMultipartition(k, self.charge, self.e)
                for k in self.terms]

    def _check(self, other):
        if (self.charge, self.e) != (other.charge, other.e):
            raise RankMismatch('vectors of F_%r and F_%r do not mix'
                               % (self.charge, other.charge))

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, LaurentPoly()) + c
        return FockVector(self.charge, self.e, terms)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, coefficient):
        return FockVector(self.charge, self.e,
                          dict((k, c * coefficient)
                               for k, c in self.terms.items()))

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return (self.charge, self.e, self.terms) == \
            (other.charge, other.e, other.terms)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __repr__(self):
        return '<FockVector t=%r terms=%d>' % (self.charge, len(self.terms))

    def __str__(self):
        """Terms in decreasing dominance order."""
        out = []
        for key in sorted(self.terms, key=dominance_key, reverse=True):
            c = self.terms[key]
            label = ', '.join(repr(tuple(p)) for p in key)
            label = '(%s)' % label
            if c == 1:
                out.append(label)
            elif len(c.exponents()) == 1 and c.coefficient(c.exponents()[0]) > 0:
                out.append('%s%s' % (c, label))
            else:
                out.append('(%s)%s' % (c, label))
        return ' + '.join(out) or '0'

    def to_json(self):
        return {
            'charge': list(self.charge),
            'terms': [{'multipartition': [list(p) for p in key],
                       'coefficient': self.terms[key].to_json()}
                      for key in sorted(self.terms, key=dominance_key,
                                        reverse=True)],
            }


def _exponent(chosen, addable, removable, charge):
    total = 0
    for node in chosen:
        key = order_key(node, charge, KLESHCHEV)
        total += sum(1 for n in addable
                     if n not in chosen and
                     order_key(n, charge, KLESHCHEV) > key)
        total -= sum(1 for n in removable
                     if order_key(n, charge, KLESHCHEV) > key)
    return total


def f_op(j, x, power=1):
    """``f_j^{(k)} x``, the divided power of ``f_j`` applied to ``x``.

    ``f_j^{(k)}`` adds ``k`` addable ``j``-nodes at once; the exponent of
    ``v`` sums, over the added nodes, the addable nodes left above minus
    the removable nodes above.
    """
    if not 0 <= j < x.e:
        raise InvalidResidue(j=j, e=x.e)
    terms = {}
    for components, coefficient in x.terms.items():
        lm = ChargedMultipartition(components, x.charge, x.e)
        addable, removable = addable_removable(lm, j)
        for chosen in combinations(sorted(addable), power):
            grown = lm
            for node in chosen:
                grown = grown.add_node(node)
            weight = LaurentPoly.v(_exponent(set(chosen), addable, removable,
                                             x.charge))
            key = grown.components
            terms[key] = terms.get(key, LaurentPoly()) + coefficient * weight
    return FockVector(x.charge, x.e, terms)


def dominance_key(lm):
    """Cumulative sizes ``Σ_{a<i} |λ^{(a)}| + λ^{(i)}_1 + … + λ^{(i)}_b``
    for every ``i`` and every ``b`` up to the total size.

    Comparing keys entrywise is dominance; comparing them
    lexicographically refines it to a total order.
    """
    components = lm.components if isinstance(lm, ChargedMultipartition) \
        else tuple(Partition(c) for c in lm)
    n = sum(c.size for c in components)
    key, before = [], 0
    for c in components:
        running = before
        for b in range(1, n + 1):
            running += c.part(b)
            key.append(running)
        before += c.size
    return tuple(key)


def dominates(mu, lm):
    """True if ``mu ⊵ lm``.

    >>> dominates([[2], []], [[1], [1]]), dominates([[1], [1]], [[2], []])
    (True, False)
    """
    k1, k2 = dominance_key(mu), dominance_key(lm)
    if len(k1) != len(k2):
        raise RankMismatch(left=len(k1), right=len(k2))
    return all(a >= b for a, b in zip(k1, k2))


class CanonicalBasis(object):
    """Compute and cache canonical basis vectors ``G(μ; t)``.

    :param budget: The number of multipartitions a single vector may carry.
    :param path: ``'least'`` or ``'greatest'``: which residue to strip first
                 when walking good nodes down to ``∅``.
    """
    budget = 2000
    path = 'least'
    verbose = False

    def __init__(self, **kwargs):
        self.budget = kwargs.pop('budget', self.budget)
        self.path = kwargs.pop('path', self.path)
        self.verbose = kwargs.pop('verbose', self.verbose)
        if kwargs:
            raise TypeError('unexpected arguments %s' % ', '.join(kwargs))
        if self.path not in ('least', 'greatest'):
            raise ValueError('unknown path %r' % (self.path,))
        self._cache = {}
        self._pending = set()

    def ladder(self, lm):
        """The ``(j, k)`` steps from ``λ`` down to ``∅``: each strips all
        ``k`` good ``j``-nodes."""
        steps = []
        while lm.size:
            residues = [j for j in range(lm.e)
                        if good_node(lm, j, KLESHCHEV) is not None]
            if not residues:
                raise NotKleshchev('%r is not Kleshchev' % (lm,))
            j = residues[0] if self.path == 'least' else residues[-1]
            k = 0
            while True:
                node = good_node(lm, j, KLESHCHEV)
                if node is None:
                    break
                lm = lm.remove_node(node)
                k += 1
            steps.append((j, k))
        return steps

    def vector(self, lm):
        """``G(λ; t)`` for Kleshchev ``(λ; t)``."""
        key = (lm.components, lm.charge, lm.e)
        if key in self._cache:
            return self._cache[key]
        if key in self._pending:
            raise ComputationError('canonical basis recursion loops at %r'
                                   % (lm,))
        self._pending.add(key)
        try:
            result = self._compute(lm)
        finally:
            self._pending.discard(key)
        self._cache[key] = result
        return result

    def _compute(self, lm):
        if lm.size == 0:
            return FockVector.empty(lm.charge, lm.e)
        (j, k), rest = self.ladder(lm)[0], lm
        for _ in range(k):
            rest = rest.remove_node(good_node(rest, j, KLESHCHEV))
        x = f_op(j, self.vector(rest), power=k)
        self._check_budget(x, lm)
        # G(ν) is supported on ν and below, so walking down in dominance
        # leaves corrected coefficients alone.
        done = set()
        while True:
            pending = [key for key in x.terms
                       if key != lm.components and key not in done and
                       not x.terms[key].in_v_z_v()]
            if not pending:
                break
            top = max(pending, key=dominance_key)
            alpha = x.terms[top].symmetric_part()
            nu = ChargedMultipartition(top, lm.charge, lm.e)
            if not is_kleshchev(nu):
                raise ComputationError('correction at non-Kleshchev %r' % (nu,))
            x = x - self.vector(nu).scale(alpha)
            self._check_budget(x, lm)
            done.add(top)
        if x.coefficient(lm.components) != 1:
            raise ComputationError('leading coefficient of %r is %s'
                                   % (lm, x.coefficient(lm.components)))
        if self.verbose:
            cinfo('G(%r): %d terms' % (list(map(list, lm.components)), len(x)))
        return x

    def _check_budget(self, x, lm):
        if self.budget is not None and len(x) > self.budget:
            raise BudgetExceeded(self.budget)


def canonical_basis(mu, t, e, **kwargs):
    """``G(μ; t)``; keyword arguments configure a :class:`CanonicalBasis`."""
    return CanonicalBasis(**kwargs).vector(ChargedMultipartition(mu, t, e))


class DecompositionMatrix(object):
    """``d_{λμ}(v)`` with rows ``λ`` and columns ``μ`` in decreasing
    dominance order."""

    def __init__(self, charge, e, rows, columns, entries):
        self.charge = tuple(charge)
        self.e = e
        self.rows = rows
        self.columns = columns
        self.entries = entries

    def entry(self, lm, mu):
        return self.entries[self.rows.index(lm)][self.columns.index(mu)]

    def column(self, mu):
        i = self.columns.index(mu)
        return dict((lm, row[i]) for lm, row in zip(self.rows, self.entries))

    def table(self):
        """``(header, body)`` ready for :func:`akblocks.console.print_table`."""
        label = lambda key: '.'.join(','.join(map(str, p)) or '-' for p in key)
        header = [''] + [label(mu) for mu in self.columns]
        body = [[label(lm)] + [str(c) if c else '.' for c in row]
                for lm, row in zip(self.rows, self.entries)]
        return header, body

    def to_json(self):
        return {
            'charge': list(self.charge),
            'e': self.e,
            'rows': [[list(p) for p in key] for key in self.rows],
            'columns': [[list(p) for p in key] for key in self.columns],
            'entries': [[c.to_json() for c in row] for row in self.entries],
            }


def decomposition_matrix(block, restrict_to_kleshchev_columns=True,
                         basis=None, members=None):
    """The v-decomposition matrix of ``block``.

    Columns are the Kleshchev members; with
    ``restrict_to_kleshchev_columns`` false every member is a column and a
    non-Kleshchev member raises :class:`NotKleshchev`.
    """
    if basis is None:
        basis = CanonicalBasis()
    if members is None:
        members = enumerate_in_block(block)
    members = sorted(members, key=dominance_key, reverse=True)
    rows = [lm.components for lm in members]
    columns = [lm for lm in members
               if not restrict_to_kleshchev_columns or is_kleshchev(lm)]
    index = dict((key, i) for i, key in enumerate(rows))
    entries = [[LaurentPoly() for _ in columns] for _ in rows]
    for x, mu in enumerate(columns):
        if not is_kleshchev(mu):
            raise NotKleshchev('%r is not Kleshchev' % (mu,))
        for key, c in basis.vector(mu).terms.items():
            if key not in index:
                raise ComputationError('G(%r) leaves the block at %r'
                                       % (mu, key))
            entries[index[key]][x] = c
    return DecompositionMatrix(block.charge, block.e, rows,
                               [mu.components for mu in columns], entries)


def translation_frames(block):
    """Yield the translations ``w`` with ``r^w`` in the closed alcove, with
    ``r^w_1 = r_1``."""
    r, e = block.charge, block.e

    def extend(t):
        if len(t) == len(r):
            yield tuple(t)
            return
        x = t[-1] + (r[len(t)] - t[-1]) % e
        while x <= t[0] + e:
            yield from extend(t + [x])
            x += e

    for t in extend([r[0]]):
        if in_closed_alcove(t, e):
            yield WeylElement.translation([(a - b) // e for a, b in zip(t, r)])


def _translation_block(block):
    if not block.is_core:
        raise NotCoreBlock(mv=block.mv)
    for w in translation_frames(block):
        try:
            return block_of(block.representative, w)
        except PreconditionError:
            continue
    raise HypothesisNotSatisfied('no translation frame of %r puts it in the '
                                 'closed alcove with a zero last moving '
                                 'vector entry' % (block.charge,))


def _phi(lm, u):
    return level_one_image(lm.with_charge(u))


def psi(x, u):
    """Send every ``(μ; t)`` of ``x`` to ``(Φ_u(μ); |u|)`` and extend linearly.

    >>> x = FockVector.empty((1, 0), 2)
    >>> psi(x, (1, 0)).coefficient([[2]]) == 1
    True
    >>> psi(f_op(1, x), (1, 0)) == f_op(1, psi(x, (1, 0)))
    True
    """
    terms = {}
    for key, c in x.terms.items():
        image = _phi(ChargedMultipartition(key, x.charge, x.e), u).components
        terms[image] = terms.get(image, LaurentPoly()) + c
    return FockVector((sum(u),), x.e, terms)


Reduction = namedtuple('Reduction', 'frame u omega image matrix level_one')
Reduction.__doc__ = """The verified comparison of a core block's
decomposition matrix with level one: the translation ``frame``, ``u``,
``omega`` and ``image`` (member components to ``Ω(λ)`` and to
``Φ_u(Ω(λ))``), and both matrices."""


def level_one_reduction(block, basis=None, members=None):
    """Compare ``d^r_{λμ}(v)`` with ``d_{Φ_u(Ω(λ)), Φ_u(Ω(μ))}(v)`` for every
    member ``λ`` and Kleshchev member ``μ``.

    Raises :class:`HypothesisNotSatisfied` when no translation frame has a
    zero last moving vector entry, and :class:`ComputationError` on any
    mismatch.
    """
    if basis is None:
        basis = CanonicalBasis()
    framed = _translation_block(block)
    chain = scopes_chain(framed)
    initial = chain[-1][1] if chain else framed
    u = tuple(r - sum(yz_split(framed).y) for r in framed.reduced_charge)
    if members is None:
        members = enumerate_in_block(framed)
    matrix = decomposition_matrix(framed, basis=basis, members=members)
    omega, image = {}, {}
    for lm in members:
        omega[lm.components] = specht_correspondence(framed, lm, initial)
        image[lm.components] = _phi(omega[lm.components], u)
    images = set(p.components for p in image.values())
    level_one = {}
    for mu in matrix.columns:
        target = image[mu]
        if not target.components[0].is_regular(block.e):
            raise ComputationError('%r is not %d-regular'
                                   % (target.components[0], block.e))
        g = basis.vector(target)
        for key in g.terms:
            if key not in images:
                raise ComputationError('G(%r) reaches %r outside the image'
                                       % (target, key))
        for lm in matrix.rows:
            if matrix.entry(lm, mu) != g.coefficient(image[lm].components):
                raise ComputationError('d(%r, %r) differs at level one'
                                       % (lm, mu))
        level_one[mu] = g
    return Reduction(framed.frame, u, omega, image, matrix, level_one)


def psi_check(block, basis=None):
    """True if ``Ψ(G(μ; r)) = G(Φ_u(μ); |u|)`` for every Kleshchev member
    ``μ`` of a block satisfying the first condition for being initial at a
    translation frame."""
    if basis is None:
        basis = CanonicalBasis()
    framed = _translation_block(block)
    if not _satisfies_condition_one(framed):
        raise HypothesisNotSatisfied('%r does not satisfy the first '
                                     'condition for being initial' % (block,))
    u = tuple(r - sum(yz_split(framed).y) for r in framed.reduced_charge)
    for mu in enumerate_in_block(framed):
        if not is_kleshchev(mu):
            continue
        if psi(basis.vector(mu), u) != basis.vector(_phi(mu, u)):
            return False
    return True


if __name__ == '__main__':
    import doctest
    doctest.testmod()
