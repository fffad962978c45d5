# -*- coding: utf-8 -*-
#
# Copyright (C) 2006-2007 Alec Thomas <alec@swapoff.org>
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

"""akblocks computes with blocks of Ariki-Koike algebras through the
combinatorics of charged multipartitions.

It has the following features:

  - Beta-sets, abaci, e-cores and e-quotients (:mod:`akblocks.betaset`).

  - Rank-level duality through the Uglov map, moving vectors and the
    classification of core blocks (:mod:`akblocks.uglov`,
    :mod:`akblocks.blocks`).

  - Scopes equivalence of core blocks decided by the Scopes vector, with
    the chains of moves to the initial block (:mod:`akblocks.scopes`).

  - Simple module counts as Kostka numbers (:mod:`akblocks.simples`).

  - v-decomposition numbers from the canonical basis of the Fock space
    (:mod:`akblocks.fock`).

  - A command line, ``akblocks``, writing JSON or text reports
    (:mod:`akblocks.cli`)::

      $ akblocks mv --e 5 --charge 1,3,3,6 --mp "[[3,2,1,1,1,1],[4,2,1],[2,2,1],[1]]"
"""


__docformat__ = 'restructuredtext en'
__author__ = 'Alec Thomas <alec@swapoff.org>'
try:
    __version__ = __import__('importlib.metadata').metadata.version('akblocks')
except Exception:
    __version__ = '1.0'
