# -*- coding: utf-8 -*-
#
# Copyright (C) 2006-2007 Alec Thomas <alec@swapoff.org>
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

import io
import json
import os
import shutil
import tempfile
import unittest
import doctest
from collections import Counter
from functools import lru_cache
from itertools import combinations_with_replacement

import networkx as nx
from hypothesis import given, settings, strategies as st

from akblocks.exceptions import *
from akblocks.betaset import Partition, BetaSet, partitions, beta_set, \
    beta_inverse, e_core_and_weight
from akblocks.multipartition import ChargedMultipartition, Node, \
    multipartitions, addable_removable, hub_of, signature, good_node, \
    is_kleshchev, is_uglov, KLESHCHEV, UGLOV, _removal_path
from akblocks.weyl import WeylElement, mul, inv, right_action, \
    right_action_charge, reduce_to_domain, in_fundamental_domain, in_alcove, \
    in_closed_alcove, closed_alcove_representatives, left_dot_k, \
    s_dot_multipartition
from akblocks.uglov import upsilon, upsilon_inverse, uglov_map, duality, \
    duality_inverse, level_one_image, ar_correspondence
from akblocks.blocks import block_of, moving_vector, weight_bound, \
    construct_with_mv, enumerate_in_block, is_decomposable, gamma_graph, \
    weight_graph, is_core_block, same_weyl_orbit, core_star, \
    s_action_on_block, BlockEnumerator
from akblocks.scopes import yz_split, scopes_chain, is_initial, \
    initial_condition_forms, chain_terminal_r_star, scopes_equivalent, \
    scopes_certificate, specht_correspondence, rouquier_reduction, \
    is_rouquier, is_rouquier_by_definition, core_block_abacus_bounds, \
    orbit_class_count, ht
from akblocks.simples import flotw_test, kostka_count, count_simples, \
    count_simples_level_two, kleshchev_count
from akblocks.fock import LaurentPoly, FockVector, f_op, dominates, \
    dominance_key, canonical_basis, CanonicalBasis, decomposition_matrix, \
    level_one_reduction, psi, psi_check
from akblocks.console import cstrip, cescape, print_table
from akblocks.parser import Parser
from akblocks.cli import JobSpec, SCHEMA, grammar, run, main


RUNNING = ([[3, 2, 1, 1, 1, 1], [4, 2, 1], [2, 2, 1], [1]], [1, 3, 3, 6], 5)
RUNNING_MP = '[[3,2,1,1,1,1],[4,2,1],[2,2,1],[1]]'


@st.composite
def partition_strategy(draw, max_part=4, max_rows=4):
    parts = draw(st.lists(st.integers(min_value=1, max_value=max_part),
                          max_size=max_rows))
    return Partition(sorted(parts, reverse=True))


@st.composite
def charged_multipartitions(draw, max_level=3, closed_alcove=False):
    e = draw(st.integers(min_value=2, max_value=4))
    level = draw(st.integers(min_value=1, max_value=max_level))
    components = [draw(partition_strategy(max_part=3, max_rows=3))
                  for _ in range(level)]
    if closed_alcove:
        first = draw(st.integers(min_value=-2, max_value=3))
        offsets = draw(st.lists(st.integers(min_value=0, max_value=e),
                                min_size=level - 1, max_size=level - 1))
        charge = [first] + [first + o for o in sorted(offsets)]
    else:
        charge = draw(st.lists(st.integers(min_value=-3, max_value=6),
                               min_size=level, max_size=level))
    return ChargedMultipartition(components, charge, e)


@st.composite
def weyl_elements(draw, rank):
    letters = draw(st.lists(st.integers(min_value=0, max_value=rank), max_size=6))
    w = WeylElement.identity(rank)
    for letter in letters:
        w = w * (WeylElement.rho(rank) if letter == rank
                 else WeylElement.s(letter, rank))
    return w


def _slide_to_core(b, e):
    """Slide beads up their runners until none can move; return the result
    and the number of moves."""
    floor = b.threshold - e
    beads = set(b.members(floor))
    moves = 0
    while True:
        free = [x for x in beads if x - e >= floor and x - e not in beads]
        if not free:
            return BetaSet(floor, beads), moves
        x = max(free)
        beads.remove(x)
        beads.add(x - e)
        moves += 1


def _diagram_nodes(lm, j):
    """Addable and removable ``j``-nodes read off the Young diagrams."""
    addable, removable = set(), set()
    for i, (p, t) in enumerate(zip(lm.components, lm.charge), 1):
        for a in range(1, len(p) + 2):
            b = p.part(a) + 1
            if (a == 1 or p.part(a - 1) > p.part(a)) and (b - a + t) % lm.e == j:
                addable.add(Node(a, b, i))
        for a in range(1, len(p) + 1):
            b = p.part(a)
            if p.part(a + 1) < b and (b - a + t) % lm.e == j:
                removable.add(Node(a, b, i))
    return addable, removable


def _residues(lm):
    return frozenset(Counter(lm.residue(node) for node in lm.nodes()).items())


SWEEPS = [(2, (0, 1), 4), (2, (0, 0), 4), (3, (0, 1), 4), (3, (0, 2), 4),
          (2, (0, 1, 1), 3), (3, (0, 1, 2), 3)]


def _charge_window(e, l):
    """Charges ``0 = t_1 <= … <= t_ℓ <= e``."""
    return [(0,) + rest
            for rest in combinations_with_replacement(range(e + 1), l - 1)]


@lru_cache(maxsize=None)
def _sweep(e, charge, n):
    """Blocks of size ``n`` at ``charge``, each with its members."""
    blocks = {}
    for components in multipartitions(n, len(charge)):
        lm = ChargedMultipartition(components, charge, e)
        blocks.setdefault(block_of(lm), []).append(lm)
    return blocks


def _all_blocks(core_only=False):
    for e, charge, top in SWEEPS:
        for n in range(top + 1):
            for block, members in _sweep(e, charge, n).items():
                if block.is_core or not core_only:
                    yield block, members


def _initial(block):
    chain = scopes_chain(block)
    return chain[-1][1] if chain else block


class TestBetaSet(unittest.TestCase):
    """Beta-sets, cores and quotients."""

    def test_partition_counts(self):
        self.assertEqual([len(list(partitions(n))) for n in range(11)],
                         [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42])

    def test_worked_beta_sets(self):
        self.assertEqual(beta_set(Partition([3, 2, 1, 1, 1, 1]), 1),
                         BetaSet(-5, (-4, -3, -2, -1, 1, 3)))
        self.assertEqual(beta_set(Partition([1]), 0), BetaSet(-1, (0,)))

    @settings(max_examples=60, deadline=None)
    @given(partition_strategy(), st.integers(min_value=-4, max_value=4))
    def test_beta_inverse(self, partition, charge):
        self.assertEqual(beta_inverse(beta_set(partition, charge)),
                         (partition, charge))

    @settings(max_examples=60, deadline=None)
    @given(partition_strategy(max_part=6, max_rows=6),
           st.integers(min_value=-3, max_value=3),
           st.integers(min_value=2, max_value=5))
    def test_core_matches_bead_sliding(self, partition, charge, e):
        b = beta_set(partition, charge)
        self.assertEqual(e_core_and_weight(b, e), _slide_to_core(b, e))

    @settings(max_examples=60, deadline=None)
    @given(partition_strategy())
    def test_conjugate_involution(self, partition):
        self.assertEqual(partition.conjugate().conjugate(), partition)
        self.assertEqual(partition.conjugate().size, partition.size)

    def test_threshold_normalised(self):
        self.assertEqual(BetaSet(-3, [-3, -2, -1, 4]), BetaSet(0, [4]))
        self.assertEqual(BetaSet(0, [4]).charge, 1)

    def test_invalid_partition(self):
        self.assertRaises(InvalidPartition, Partition, [1, 3])
        self.assertRaises(InvalidPartition, Partition, [2, -1])
        self.assertRaises(InvalidPartition, Partition, [1.5])
        self.assertRaises(InvalidPartition, Partition, [True])
        self.assertRaises(InvalidPartition, Partition, ['2'])
        self.assertEqual(Partition([2.0, 1]), (2, 1))


class TestMultipartition(unittest.TestCase):
    """Nodes, residues and good nodes."""

    @settings(max_examples=80, deadline=None)
    @given(charged_multipartitions(), st.data())
    def test_addable_removable_against_diagram(self, lm, data):
        j = data.draw(st.integers(min_value=0, max_value=lm.e - 1))
        addable, removable = addable_removable(lm, j)
        self.assertEqual((set(addable), set(removable)), _diagram_nodes(lm, j))

    @settings(max_examples=60, deadline=None)
    @given(charged_multipartitions())
    def test_hub_counts_nodes(self, lm):
        expected = []
        for j in range(lm.e):
            addable, removable = _diagram_nodes(lm, j)
            expected.append(len(removable) - len(addable))
        self.assertEqual(list(hub_of(lm)), expected)

    def test_level_one_kleshchev_is_regular(self):
        for e in (2, 3):
            for n in range(8):
                for p in partitions(n):
                    self.assertEqual(
                        is_kleshchev(ChargedMultipartition([p], [1], e)),
                        p.is_regular(e))

    def test_level_one_uglov_is_regular(self):
        for e in (2, 3):
            for n in range(7):
                for p in partitions(n):
                    self.assertEqual(
                        is_uglov(ChargedMultipartition([p], [1], e)),
                        p.is_regular(e))

    def test_signature(self):
        lm = ChargedMultipartition([[1]], [0], 2)
        self.assertEqual([s for s, _ in signature(lm, 0, KLESHCHEV)], ['-'])
        self.assertEqual(signature(lm, 1, UGLOV),
                         [('+', Node(2, 1, 1)), ('+', Node(1, 2, 1))])

    @settings(max_examples=80, deadline=None)
    @given(charged_multipartitions(), st.data())
    def test_signature_is_reduced(self, lm, data):
        j = data.draw(st.integers(min_value=0, max_value=lm.e - 1))
        for which in (KLESHCHEV, UGLOV):
            reduced = signature(lm, j, which)
            signs = [s for s, _ in reduced]
            self.assertEqual(signs, sorted(signs))
            removable = [n for s, n in reduced if s == '-']
            self.assertEqual(good_node(lm, j, which),
                             removable[0] if removable else None)

    def test_multipartition_count(self):
        self.assertEqual(len(list(multipartitions(3, 2))), 10)
        self.assertEqual(len(list(multipartitions(0, 3))), 1)

    def test_rank_mismatch(self):
        self.assertRaises(RankMismatch, ChargedMultipartition, [[1], []], [0],
                          2)
        self.assertRaises(RankMismatch, ChargedMultipartition, [[1]], [0], 1)

    def test_invalid_residue(self):
        lm = ChargedMultipartition([[1]], [0], 3)
        self.assertRaises(InvalidResidue, addable_removable, lm, 3)

    def test_removal_path_cache_is_bounded(self):
        for n in range(6):
            for components in multipartitions(n, 2):
                is_kleshchev(ChargedMultipartition(components, (0, 1), 2))
        info = _removal_path.cache_info()
        self.assertEqual(info.maxsize, 4096)
        self.assertLessEqual(info.currsize, 4096)


class TestWeyl(unittest.TestCase):
    """The extended affine Weyl group and its actions."""

    def test_generators_are_involutions(self):
        for m in (2, 3, 5):
            for i in range(m):
                s = WeylElement.s(i, m)
                self.assertEqual(s * s, WeylElement.identity(m))

    def test_rho_order(self):
        self.assertEqual(WeylElement.rho(4) ** 4, WeylElement.identity(4))
        step = WeylElement.rho(3) * WeylElement.unit(3, 3)
        self.assertEqual(right_action_charge((1, 2, 4), step ** 3, 5),
                         (6, 7, 9))

    @settings(max_examples=40, deadline=None)
    @given(weyl_elements(4), weyl_elements(4), weyl_elements(4))
    def test_group_laws(self, a, b, c):
        self.assertEqual((a * b) * c, a * (b * c))
        self.assertEqual(a * a.inverse(), WeylElement.identity(4))
        self.assertEqual(mul(a, inv(a)), WeylElement.identity(4))

    @settings(max_examples=40, deadline=None)
    @given(weyl_elements(3), weyl_elements(3),
           st.lists(st.integers(min_value=-8, max_value=8), min_size=3,
                    max_size=3))
    def test_right_action(self, a, b, t):
        self.assertEqual(
            right_action_charge(right_action_charge(t, a, 4), b, 4),
            right_action_charge(t, a * b, 4))

    @settings(max_examples=40, deadline=None)
    @given(weyl_elements(3), weyl_elements(3),
           st.integers(min_value=-20, max_value=20),
           st.integers(min_value=1, max_value=3))
    def test_left_dot_action(self, a, b, x, k):
        self.assertEqual(left_dot_k(a * b, k, x),
                         left_dot_k(a, k, left_dot_k(b, k, x)))

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.integers(min_value=-10, max_value=10), min_size=1,
                    max_size=5), st.integers(min_value=2, max_value=6))
    def test_reduce_to_domain(self, t, e):
        w, f = reduce_to_domain(t, e)
        self.assertTrue(in_fundamental_domain(f, e))
        self.assertEqual(right_action_charge(t, w, e), f)
        for _, _, u in closed_alcove_representatives(t, e):
            self.assertTrue(in_closed_alcove(u, e))

    def test_alcoves(self):
        self.assertFalse(in_alcove((1, 3, 3, 6), 5))
        self.assertTrue(in_closed_alcove((1, 3, 3, 6), 5))
        self.assertTrue(in_alcove((1, 3, 3, 5), 5))
        self.assertFalse(in_alcove((2, 1), 5))

    def test_words(self):
        self.assertEqual(WeylElement.from_word('s0 s0', 3),
                         WeylElement.identity(3))
        self.assertEqual(WeylElement.from_word('rho^3', 3),
                         WeylElement.identity(3))
        self.assertRaises(ValueError, WeylElement.from_word, 'x1', 3)

    @settings(max_examples=60, deadline=None)
    @given(charged_multipartitions(), st.data())
    def test_s_dot_is_involution(self, lm, data):
        j = data.draw(st.integers(min_value=0, max_value=lm.e - 1))
        moved = s_dot_multipartition(j, lm)
        self.assertEqual(moved.charge, lm.charge)
        self.assertEqual(s_dot_multipartition(j, moved), lm)


class TestUglov(unittest.TestCase):
    """Rank-level duality through the Uglov map."""

    def test_upsilon(self):
        for i in range(1, 4):
            for x in range(-12, 12):
                self.assertEqual(upsilon_inverse(upsilon(i, x, 4, 3), 4, 3),
                                 (i, x))

    @settings(max_examples=60, deadline=None)
    @given(charged_multipartitions())
    def test_duality_inverse(self, lm):
        self.assertEqual(duality_inverse(duality(lm)), lm)

    def test_running_example(self):
        image = duality(ChargedMultipartition(*RUNNING))
        self.assertEqual(image.charge, (0, 6, 1, 4, 2))
        self.assertEqual([list(p) for p in image.multipartition],
                         [[1], [1], [], [], []])

    @settings(max_examples=40, deadline=None)
    @given(charged_multipartitions(max_level=2), st.data())
    def test_ar_correspondence_keeps_kind(self, lm, data):
        j = data.draw(st.integers(min_value=1, max_value=lm.e - 1))
        addable, removable = addable_removable(lm, j)
        image = level_one_image(lm)
        image_addable, image_removable = addable_removable(image, j)
        mapping = ar_correspondence(lm, j)
        self.assertEqual(set(mapping), set(addable) | set(removable))
        for node, target in mapping.items():
            if node in addable:
                self.assertIn(target, image_addable)
            else:
                self.assertIn(target, image_removable)


class TestBlocks(unittest.TestCase):
    """Blocks, moving vectors and core blocks."""

    def test_running_example(self):
        block = block_of(ChargedMultipartition(*RUNNING))
        self.assertTrue(block.is_core)
        self.assertEqual(block.reduced_charge, (3, 3, 6, 6))
        self.assertEqual(block.mv, (1, 0, 1, 0))
        self.assertEqual(block.r_star, (1, 7, 2, 5, 3))
        self.assertEqual(block.weight, 2)
        self.assertEqual(moving_vector(ChargedMultipartition(*RUNNING)),
                         (0, 1, 0, 1))

    def test_empty_bipartition(self):
        block = block_of(ChargedMultipartition([[], []], [0, 1], 2))
        self.assertEqual((block.weight, block.mv), (0, (0, 0)))
        self.assertEqual(block.reduced_charge, (1, 2))
        self.assertEqual(block.r_star, (2, 1))
        self.assertEqual(block.to_json()['core_threshold'], 3)

    def test_moving_vector_needs_closed_alcove(self):
        lm = ChargedMultipartition([[], []], [0, 6], 5)
        self.assertRaises(NotInClosedAlcove, moving_vector, lm)
        moving_vector(lm, strict=False)

    def test_blocks_are_residue_classes(self):
        for e, charge, top in SWEEPS:
            for n in range(top + 1):
                classes = {}
                for block, members in _sweep(e, charge, n).items():
                    for lm in members:
                        classes.setdefault(_residues(lm), set()).add(block)
                for blocks in classes.values():
                    self.assertEqual(len(blocks), 1)
                self.assertEqual(len(classes), len(_sweep(e, charge, n)))

    def test_core_blocks_are_multicores(self):
        for e, l in ((2, 2), (3, 2), (2, 3)):
            for charge in _charge_window(e, l):
                for n in range(7):
                    for block, members in _sweep(e, charge, n).items():
                        self.assertEqual(
                            is_core_block(block),
                            all(lm.is_multicore() for lm in members))

    def test_core_block_weight_bound(self):
        for block, _ in _all_blocks(core_only=True):
            self.assertLessEqual(block.weight, weight_bound(block.e, block.l))
            self.assertEqual(block.mv[-1], 0)

    def test_hub_is_block_invariant(self):
        for block, members in _all_blocks():
            self.assertEqual(set(hub_of(lm) for lm in members), {block.hub})

    def test_enumeration(self):
        for block, members in _all_blocks():
            found = enumerate_in_block(block)
            self.assertEqual(sorted(lm.components for lm in found),
                             sorted(lm.components for lm in members))
        block, _ = next(_all_blocks())
        self.assertEqual(enumerate_in_block(block, n=block.size + 1), [])

    def test_enumeration_budget(self):
        block = block_of(ChargedMultipartition([[4]], [0], 2))
        self.assertFalse(block.is_core)
        try:
            BlockEnumerator(budget=1).members(block)
        except BudgetExceeded as e:
            self.assertEqual(e.budget, 1)
            self.assertEqual([lm.components for lm in e.partial], [((4,),)])
        else:
            self.fail('budget was not enforced')

    @settings(max_examples=500, deadline=None)
    @given(charged_multipartitions(closed_alcove=True), st.data())
    def test_moving_vector_reflection_invariant(self, lm, data):
        j = data.draw(st.integers(min_value=0, max_value=lm.e - 1))
        self.assertEqual(moving_vector(s_dot_multipartition(j, lm)),
                         moving_vector(lm))

    @settings(max_examples=500, deadline=None)
    @given(charged_multipartitions(closed_alcove=True))
    def test_moving_vector_rotation(self, lm):
        l = lm.level
        step = WeylElement.rho(l) * WeylElement.unit(l, l)
        mv = moving_vector(lm)
        self.assertEqual(moving_vector(right_action(lm, step)),
                         mv[1:] + mv[:1])

    def test_construct_with_mv(self):
        star = ChargedMultipartition([[], []], [0, 1], 2)
        lm = construct_with_mv(star, (1, 1), (0, 1))
        self.assertEqual(moving_vector(lm), (1, 1))
        self.assertRaises(PreconditionError, construct_with_mv, star, (1, 1),
                          (1, 1))

    def test_weight_graph_components(self):
        for block, members in _all_blocks(core_only=True):
            gamma = gamma_graph(block, relabel=True)
            expected = set(frozenset(c) for c in nx.connected_components(gamma))
            for lm in members:
                found = set(frozenset(c) for c in
                            nx.connected_components(weight_graph(block, lm)))
                self.assertEqual(found, expected)

    def test_same_weyl_orbit(self):
        for block, _ in _all_blocks(core_only=True):
            self.assertTrue(same_weyl_orbit(block, block))
            for j in range(block.e):
                self.assertTrue(
                    same_weyl_orbit(block, s_action_on_block(j, block)))

    def test_core_star(self):
        for block, _ in _all_blocks():
            star = core_star(block)
            self.assertEqual(star.level, block.l)
            self.assertEqual(uglov_map(star.beta_tuple(), block.e),
                             block.core)

    def test_decomposable(self):
        for block, _ in _all_blocks(core_only=True):
            self.assertEqual(is_decomposable(block),
                             not nx.is_connected(gamma_graph(block)))

    def test_not_core(self):
        block = block_of(ChargedMultipartition([[4]], [0], 2))
        self.assertRaises(NotCoreBlock, gamma_graph, block)


class TestScopes(unittest.TestCase):
    """Scopes vectors, chains and equivalence."""

    def test_running_example(self):
        block = block_of(ChargedMultipartition(*RUNNING))
        data = yz_split(block)
        self.assertEqual(data.y, (0, 1, 0, 1, 0))
        self.assertEqual(data.z, (1, 3, 2, 1, 3))
        self.assertEqual((data.frak_y, data.j), (0, 2))
        self.assertEqual(data.sigma, (1, 3, 5, 2, 4))
        self.assertEqual(data.tau, (3, 4, 2, 1, 5))
        self.assertEqual(data.scopes_vector, (3, 3, 2, 1, 1))
        self.assertEqual(chain_terminal_r_star(block), (5, 5, 3, 3, 2))
        self.assertEqual(scopes_chain(block)[-1][1].r_star, (5, 5, 3, 3, 2))

    def test_chain(self):
        for block, _ in _all_blocks(core_only=True):
            chain = scopes_chain(block)
            initial = chain[-1][1] if chain else block
            self.assertTrue(is_initial(initial))
            self.assertEqual(initial.r_star, chain_terminal_r_star(block))
            for _, following in chain:
                self.assertTrue(scopes_equivalent(block, following))

    def test_initial_condition_forms_agree(self):
        for block, _ in _all_blocks(core_only=True):
            self.assertEqual(len(set(initial_condition_forms(block))), 1)

    def test_equivalence_is_shared_initial_block(self):
        for e, charge, top in SWEEPS:
            core = [block for n in range(top + 1)
                    for block in _sweep(e, charge, n) if block.is_core]
            for block in core:
                for other in core:
                    self.assertEqual(scopes_equivalent(block, other),
                                     _initial(block) == _initial(other))

    def test_incomparable(self):
        block = block_of(ChargedMultipartition([[], []], [0, 1], 2))
        other = block_of(ChargedMultipartition([[], []], [0, 0], 2))
        self.assertRaises(IncompatibleBlocks, scopes_equivalent, block, other)

    def test_specht_correspondence(self):
        for block, members in _all_blocks(core_only=True):
            initial = _initial(block)
            images = sorted(specht_correspondence(block, lm, initial).components
                            for lm in members)
            self.assertEqual(images, sorted(lm.components for lm in
                                            enumerate_in_block(initial)))

    def test_certificate(self):
        block = block_of(ChargedMultipartition(*RUNNING))
        self.assertRaises(InvalidResidue, scopes_certificate, block, 0)
        for j in range(1, 6):
            self.assertIn(scopes_certificate(block, j), (1, 2, None))

    def test_rouquier_reduction(self):
        for block, _ in _all_blocks(core_only=True):
            reduced = rouquier_reduction(block)
            self.assertTrue(is_rouquier(reduced))
            self.assertEqual(reduced.mv, block.mv)

    def test_rouquier_by_definition(self):
        empty = ChargedMultipartition([[], []], [0, 1], 2)
        self.assertTrue(is_rouquier_by_definition(block_of(empty), [empty]))
        four = ChargedMultipartition([[4]], [0], 2)
        self.assertFalse(is_rouquier_by_definition(block_of(four), [four]))

    def test_orbit_class_count(self):
        for e, charge in ((2, (0, 1)), (3, (0, 1))):
            for n in range(3):
                for block in _sweep(e, charge, n):
                    if not block.is_core:
                        continue
                    seen, frontier = set([block]), set([block])
                    for _ in range(8):
                        frontier = set(s_action_on_block(j, b)
                                       for b in frontier
                                       for j in range(e)) - seen
                        seen |= frontier
                    classes = set(yz_split(b).scopes_vector for b in seen)
                    self.assertEqual(len(classes), orbit_class_count(block))

    def test_abacus_bounds(self):
        for block, members in _all_blocks(core_only=True):
            for lm in members:
                self.assertTrue(core_block_abacus_bounds(block, lm))

    def test_not_core(self):
        block = block_of(ChargedMultipartition([[4]], [0], 2))
        self.assertRaises(NotCoreBlock, yz_split, block)

    def test_height(self):
        self.assertEqual(ht({0, 2}, 1), 0)
        self.assertRaises(PreconditionError, ht, {2}, 3)
        self.assertRaises(PreconditionError, ht, {0, 2}, -1)


class TestSimples(unittest.TestCase):
    """Counting simple modules."""

    def test_kostka(self):
        self.assertEqual(kostka_count((2, 1), (1, 1, 1)), 2)
        self.assertEqual(kostka_count((2,), (2,)), 0)
        self.assertEqual(kostka_count((3,), (1, 1, 1)), 1)
        self.assertRaises(ShapeError, kostka_count, (2,), (1,))

    def test_flotw_count_matches_kleshchev(self):
        for e, charge in ((2, (0, 1)), (3, (0, 0, 2)), (3, (1, 2))):
            for n in range(5):
                lms = [ChargedMultipartition(c, charge, e)
                       for c in multipartitions(n, len(charge))]
                self.assertEqual(sum(1 for lm in lms if flotw_test(lm)),
                                 sum(1 for lm in lms if is_kleshchev(lm)))

    def test_count_simples(self):
        for block, _ in _all_blocks(core_only=True):
            self.assertEqual(count_simples(block), kleshchev_count(block))
            if block.l == 2:
                self.assertEqual(count_simples_level_two(block),
                                 count_simples(block))

    def test_count_constant_on_chain(self):
        for block, _ in _all_blocks(core_only=True):
            for _, following in scopes_chain(block):
                self.assertEqual(kleshchev_count(following),
                                 kleshchev_count(block))

    def test_level_two_only(self):
        block = block_of(ChargedMultipartition(*RUNNING))
        self.assertRaises(RankMismatch, count_simples_level_two, block)


class TestFock(unittest.TestCase):
    """Fock space and the canonical basis."""

    @settings(max_examples=60, deadline=None)
    @given(st.dictionaries(st.integers(min_value=-4, max_value=4),
                           st.integers(min_value=-3, max_value=3)))
    def test_symmetric_part(self, terms):
        p = LaurentPoly(terms)
        alpha = p.symmetric_part()
        self.assertEqual(alpha.bar(), alpha)
        self.assertTrue((p - alpha).in_v_z_v())

    def test_f_operators(self):
        x = f_op(1, f_op(0, FockVector.empty((0,), 2)))
        self.assertEqual(x.coefficient([[2]]), 1)
        self.assertEqual(x.coefficient([[1, 1]]), LaurentPoly.v())
        self.assertRaises(InvalidResidue, f_op, 2, x)

    def test_dominance(self):
        self.assertEqual(dominance_key([[2], []]), (2, 2, 2, 2))
        self.assertEqual(dominance_key([[1], [1]]), (1, 1, 2, 2))
        self.assertTrue(dominates([[2], []], [[1], [1]]))
        self.assertFalse(dominates([[1], [1]], [[2], []]))
        self.assertTrue(dominates([[1], [1]], [[], [1, 1]]))

    def test_known_vectors(self):
        g = canonical_basis([[3]], [0], 2)
        self.assertEqual(g.coefficient([[3]]), 1)
        self.assertEqual(g.coefficient([[1, 1, 1]]), LaurentPoly.v())
        self.assertEqual(len(g), 2)
        self.assertRaises(NotKleshchev, canonical_basis, [[1, 1]], [0], 2)

    def test_level_one(self):
        least, greatest = CanonicalBasis(), CanonicalBasis(path='greatest')
        for e, top in ((2, 8), (3, 7)):
            for n in range(1, top + 1):
                for mu in partitions(n):
                    if not mu.is_regular(e):
                        continue
                    lm = ChargedMultipartition([mu], [0], e)
                    g = least.vector(lm)
                    self.assertEqual(g, greatest.vector(lm))
                    self.assertEqual(g.coefficient([mu]), 1)
                    for key, c in g.terms.items():
                        self.assertTrue(c.is_nonnegative())
                        self.assertTrue(dominates([mu], key))
                        if key != (mu,):
                            self.assertTrue(c.in_v_z_v())

    def test_level_two(self):
        basis = CanonicalBasis()
        for n in range(1, 4):
            for components in multipartitions(n, 2):
                lm = ChargedMultipartition(components, (0, 1), 2)
                if not is_kleshchev(lm):
                    continue
                g = basis.vector(lm)
                self.assertEqual(g.coefficient(components), 1)
                for key, c in g.terms.items():
                    self.assertTrue(c.is_nonnegative())
                    if key != lm.components:
                        self.assertTrue(c.in_v_z_v())

    def test_decomposition_matrix(self):
        block = block_of(ChargedMultipartition([[2]], [0], 2))
        matrix = decomposition_matrix(block)
        self.assertEqual(matrix.rows, [((2,),), ((1, 1),)])
        self.assertEqual(matrix.columns, [((2,),)])
        self.assertEqual(matrix.entry(((1, 1),), ((2,),)), LaurentPoly.v())
        header, body = matrix.table()
        self.assertEqual(body[1], ['1,1', 'v'])

    def test_level_one_reduction(self):
        basis = CanonicalBasis()
        applicable = set()
        for e, charge in ((2, (0, 1)), (2, (0, 0)), (3, (0, 1))):
            for n in range(5):
                for block in _sweep(e, charge, n):
                    if not block.is_core or not 1 <= block.weight <= 3:
                        continue
                    try:
                        reduction = level_one_reduction(block, basis=basis)
                    except HypothesisNotSatisfied:
                        continue
                    applicable.add(block)
                    self.assertTrue(reduction.matrix.columns)
                    for mu in reduction.matrix.columns:
                        self.assertEqual(reduction.matrix.entry(mu, mu), 1)
                    try:
                        self.assertTrue(psi_check(block, basis=basis))
                    except HypothesisNotSatisfied:
                        pass
        self.assertGreaterEqual(len(applicable), 5)

    @settings(max_examples=200, deadline=None)
    @given(st.integers(min_value=2, max_value=3),
           st.integers(min_value=-2, max_value=2), st.data())
    def test_psi_intertwines_f(self, e, m, data):
        # Every component has beta-set Z_{<m} ∪ L_i with L_i in [m, m+e-1].
        l = data.draw(st.integers(min_value=1, max_value=3))
        components, charge = [], []
        for _ in range(l):
            beads = data.draw(st.sets(st.integers(min_value=m,
                                                  max_value=m + e - 1)))
            partition, t = beta_inverse(BetaSet(m, beads))
            components.append(partition)
            charge.append(t)
        x = FockVector.basis(components, charge, e)
        u = tuple(t - m for t in charge)
        for j in range(e):
            if j == m % e:
                continue
            self.assertEqual(psi(f_op(j, x), u), f_op((j - m) % e, psi(x, u)))

    def test_budget(self):
        self.assertRaises(BudgetExceeded, canonical_basis, [[3]], [0], 2,
                          budget=1)


class TestGrammar(unittest.TestCase):
    """Command line grammar."""

    def setUp(self):
        self.parser = Parser(grammar())

    def test_option_order(self):
        one = self.parser.execute('mv --e 5 --charge 1,3,3,6 --mp ' + RUNNING_MP)
        two = self.parser.execute('mv --mp %s --charge 1,3,3,6 --e 5'
                                  % RUNNING_MP)
        for spec in (one, two):
            self.assertEqual((spec.command, spec.e, spec.l, spec.charge),
                             ('mv', 5, 4, (1, 3, 3, 6)))
            self.assertEqual(spec.multipartition,
                             ChargedMultipartition(*RUNNING))

    def test_quoted_json(self):
        spec = self.parser.execute("block --e 2 --charge 0,1 --mp '[[1], []]'")
        self.assertEqual(spec.mp, [[1], []])

    def test_duplicate_option(self):
        self.assertRaises(ParseError, self.parser.execute,
                          'mv --e 5 --e 4 --charge 1 --mp [[]]')

    def test_missing_option(self):
        self.assertRaises(ParseError, self.parser.execute,
                          'mv --e 5 --charge 1')

    def test_invalid_values(self):
        self.assertRaises(ParseError, self.parser.execute,
                          'mv --e 5 --charge 1 --mp [[1],')
        self.assertRaises(ParseError, self.parser.execute,
                          'mv --e 5 --charge 1 --mp [[]] --output xml')
        self.assertRaises(ParseError, self.parser.execute,
                          'mv --e five --charge 1 --mp [[]]')
        self.assertRaises(InvalidPartition, self.parser.execute,
                          'mv --e 2 --charge 0 --mp [[1.5]]')
        self.assertRaises(InvalidPartition, self.parser.execute,
                          'mv --e 2 --charge 0 --mp [[true]]')

    def test_atlas_options(self):
        spec = self.parser.execute('atlas --e 2 --charge 0,1 --n 1 --n-max 3 '
                                   '--jobs 2')
        self.assertEqual((spec.n, spec.n_max, spec.jobs), (1, 3, 2))
        self.assertRaises(ParseError, self.parser.execute,
                          'mv --e 2 --charge 0 --mp [[]] --n 1')

    def test_job_spec(self):
        self.assertRaises(RankMismatch, JobSpec, 'mv', e=1, charge=(0,),
                          mp=[[]])
        self.assertRaises(PreconditionError, JobSpec, 'mv', e=2, charge=(0,),
                          mp=[[]], budget=0)
        self.assertRaises(InvalidMultipartition, JobSpec, 'mv', e=2,
                          charge=(0,), mp=3)

    def test_console(self):
        self.assertEqual(cstrip('^Bbold^B ^Rx'), 'bold ^Rx')
        self.assertEqual(cstrip(cescape('v^2 + 2v^3')), 'v^2 + 2v^3')
        out = io.StringIO()
        lines = print_table(['a', 'b'], [['1', '22']], stream=out)
        self.assertEqual(len(lines), 2)
        self.assertEqual(cstrip(out.getvalue()).splitlines()[1].split(),
                         ['1', '22'])


class TestCli(unittest.TestCase):
    """End to end runs of the command line."""

    def setUp(self):
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def _main(self, *argv):
        out = io.StringIO()
        status = main(list(argv), out)
        return status, out.getvalue()

    def _json(self, *argv):
        status, text = self._main(*argv)
        return status, json.loads(text)

    def test_mv(self):
        status, doc = self._json('mv', '--e', '5', '--charge', '1,3,3,6',
                                 '--mp', RUNNING_MP)
        self.assertEqual(status, 0)
        self.assertEqual((doc['schema'], doc['command']), (SCHEMA, 'mv'))
        self.assertEqual(doc['mv'], [0, 1, 0, 1])
        self.assertNotIn('frame', doc)

    def test_block(self):
        status, doc = self._json('block', '--e', '2', '--charge', '0,1',
                                 '--mp', '[[],[]]')
        self.assertEqual(status, 0)
        self.assertEqual(doc['block']['weight'], 0)
        self.assertTrue(doc['block']['core_block'])
        self.assertEqual(doc['block']['reduced_charge'], [1, 2])

    def test_block_text(self):
        status, text = self._main('block', '--e', '2', '--charge', '0,1',
                                  '--mp', '[[1],[]]', '--output', 'text')
        self.assertEqual(status, 0)
        self.assertIn('weight', text)
        self.assertIn('core', text)

    def test_decomp_text(self):
        status, text = self._main('decomp', '--e', '2', '--charge', '0',
                                  '--mp', '[[4]]', '--output', 'text')
        self.assertEqual(status, 0)
        rows = dict((line.split()[0], line.split()[1:])
                    for line in text.splitlines()[1:] if line.strip())
        self.assertEqual(rows['3,1'], ['v', '1'])
        self.assertEqual(rows['2,1,1'], ['v', 'v^2'])
        self.assertEqual(rows['1,1,1,1'], ['v^2', '.'])

    def test_scopes(self):
        status, doc = self._json('scopes', '--e', '5', '--charge', '1,3,3,6',
                                 '--mp', RUNNING_MP)
        self.assertEqual(status, 0)
        self.assertEqual(doc['y'], [0, 1, 0, 1, 0])
        self.assertEqual(doc['scopes_vector'], [3, 3, 2, 1, 1])
        self.assertEqual(doc['r_star'], [1, 7, 2, 5, 3])
        self.assertEqual(doc['initial_r_star'], [5, 5, 3, 3, 2])
        self.assertEqual(doc['mv'], [1, 0, 1, 0])

    def test_not_core(self):
        status, text = self._main('simples', '--e', '2', '--charge', '0',
                                  '--mp', '[[4]]')
        self.assertEqual((status, text), (4, ''))

    def test_budget(self):
        status, doc = self._json('enumerate', '--e', '2', '--charge', '0',
                                 '--mp', '[[4]]', '--budget', '1')
        self.assertEqual(status, 3)
        self.assertTrue(doc['truncated'])
        self.assertEqual(doc['partial'], [[[4]]])

    def test_parse_errors(self):
        self.assertEqual(self._main('mv', '--e', '5')[0], 2)
        self.assertEqual(self._main('bogus')[0], 2)
        self.assertEqual(self._main('mv', '--e', '5', '--l', '3', '--charge',
                                    '1,2', '--mp', '[[],[]]')[0], 2)

    def test_help(self):
        status, text = self._main()
        self.assertEqual(status, 0)
        self.assertIn('scopes', text)

    def test_atlas(self):
        out_dir = os.path.join(self.tmp, 'atlas')
        spec = JobSpec('atlas', e=2, charge=(0, 1), n=0, n_max=3,
                       out_dir=out_dir)
        self.assertEqual(run(spec, io.StringIO()), 0)
        names = sorted(os.listdir(out_dir))
        expected = sum(len(_sweep(2, (0, 1), n)) for n in range(4))
        self.assertEqual(len(names), expected)
        contents = {}
        for name in names:
            with open(os.path.join(out_dir, name), encoding='utf-8') as f:
                contents[name] = f.read()
            doc = json.loads(contents[name])
            self.assertEqual(doc['schema'], SCHEMA)
            self.assertTrue(name.startswith('n%d-' % doc['block']['n']))
            if doc['block']['core_block']:
                self.assertIn('simples', doc)
        self.assertEqual(run(spec, io.StringIO()), 0)
        mask = os.umask(0)
        os.umask(mask)
        for name in names:
            path = os.path.join(out_dir, name)
            with open(path, encoding='utf-8') as f:
                self.assertEqual(f.read(), contents[name])
            self.assertEqual(os.stat(path).st_mode & 0o777, 0o666 & ~mask)

    def test_atlas_empty_range(self):
        out_dir = os.path.join(self.tmp, 'empty')
        out = io.StringIO()
        spec = JobSpec('atlas', e=2, charge=(0, 1), n=3, n_max=2,
                       out_dir=out_dir)
        self.assertEqual(run(spec, out), 0)
        self.assertEqual(json.loads(out.getvalue())['files'], [])
        self.assertFalse(os.path.exists(out_dir))

    def test_atlas_budget(self):
        spec = JobSpec('atlas', e=2, charge=(0, 1), n=0, n_max=2, budget=2,
                       out_dir=os.path.join(self.tmp, 'partial'))
        out = io.StringIO()
        self.assertEqual(run(spec, out), 3)
        self.assertTrue(json.loads(out.getvalue())['truncated'])


def suite():
    import akblocks
    from akblocks import exceptions, console, betaset, multipartition, \
        weyl, uglov, blocks, scopes, simples, fock, builder, parser, cli
    loader = unittest.defaultTestLoader
    suite = unittest.TestSuite()
    for case in (TestBetaSet, TestMultipartition, TestWeyl, TestUglov,
                 TestBlocks, TestScopes, TestSimples, TestFock, TestGrammar,
                 TestCli):
        suite.addTest(loader.loadTestsFromTestCase(case))
    for module in (akblocks, exceptions, console, betaset, multipartition,
                   weyl, uglov, blocks, scopes, simples, fock, builder,
                   parser, cli):
        suite.addTest(doctest.DocTestSuite(module))
    return suite


def load_tests(loader, tests, pattern):
    return suite()


if __name__ == '__main__':
    unittest.main(defaultTest='suite')
