#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# Copyright 2022 acirank Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
# SPDX-License-Identifier: Apache-2.0

import unittest
from parameterized import parameterized
import doctest
import numpy as np
import progressbar
import acirank.rank
from acirank.rank import rank_set, rank_set_exhaustive, has_constant_rank, \
        zero_completion_rank, constant_rank, PARALLEL_THRESHOLD
from acirank.corpus import corpus_ids, get_entry
from acirank.errors import BudgetExceeded
from acirank.generate import gen_constant_rank
from acirank.lib.budget import Budget
from acirank.lib.parse_aci import parse_matrix
from acirank.lib.progressbar_utils import ProgressBar, completion_progress
from acirank.models.aci import apply_equivalence, delete_column, hstack, \
        random_aci, random_equivalence, rename_variables, vstack, zero_aci
from acirank.models.gf import field_make, field_of_order

# Variables per random matrix, so that q**vars stays small.
ORACLE_VARS = {2: 8, 3: 5, 4: 4, 5: 4}

# (m, n, r, s) with 1 <= m - r <= s < n and 1 <= n - s <= r < m.
BLOCK_SHAPES = [(2, 2, 1, 1), (3, 3, 2, 2), (3, 4, 2, 2), (4, 4, 2, 2),
                (4, 5, 2, 3), (5, 4, 3, 2)]


def upper_block_matrix(A11, A12, A22):
    """ [A11 A12; 0 A22] """
    field = A11.field
    return vstack(hstack(A11, A12),
                  hstack(zero_aci(field, A22.m, A11.n), A22))


def prefixed(A, prefix):
    return rename_variables(A, {name: prefix + name for name in A.variables})


def full_rank_blocks(field, m, n, r, s, seed):
    """ Blocks of constant rank m - r and n - s with a random corner. """
    A11 = gen_constant_rank(m - r, s, m - r, field, seed=seed, max_vars=3)
    A22 = gen_constant_rank(r, n - s, n - s, field, seed=seed + 1,
                            max_vars=3)
    A12 = random_aci(field, m - r, n - s, np.random.default_rng(seed),
                     max_vars=2, prefix='b')
    return prefixed(A11, 'a'), A12, prefixed(A22, 'c')


class TestRank(unittest.TestCase):
    def test_worked_example_exhaustive(self):
        A = get_entry('sec2.2-A').matrix
        summary = rank_set_exhaustive(A)
        self.assertEqual(summary.rank_set, (5, ))
        self.assertEqual(summary.constant, 5)
        self.assertEqual(summary.completions_examined, 1024)
        self.assertEqual(summary.method, "exhaustive")

    def test_worked_example_decomposed(self):
        A = get_entry('sec2.2-A').matrix
        summary = rank_set(A)
        self.assertEqual(summary.rank_set, (5, ))
        self.assertEqual(summary.method, "decomposed")
        self.assertEqual(summary.completions_examined, 32 + 16)

        # The split stays within a budget too small for enumeration.
        small = Budget(completions=100)
        self.assertEqual(rank_set(A, small).constant, 5)
        with self.assertRaises(BudgetExceeded) as cm:
            rank_set_exhaustive(A, budget=small)
        self.assertEqual((cm.exception.needed, cm.exception.limit),
                         (1024, 100))

    def test_rank_one_examples(self):
        for entry_id in ('Eprime', 'Fprime'):
            summary = rank_set(get_entry(entry_id).matrix)
            self.assertEqual(summary.rank_set, (1, ))
            self.assertEqual(summary.completions_examined, 2)
            self.assertEqual(summary.method, "exhaustive")

    def test_not_constant(self):
        A = parse_matrix("field 3\n[ x, 1 ; 1, y ]")
        summary = rank_set(A)
        # det = xy - 1 vanishes exactly on xy = 1.
        self.assertEqual(summary.rank_set, (1, 2))
        self.assertEqual((summary.mrank, summary.Mrank), (1, 2))
        self.assertIsNone(summary.constant)
        self.assertIsNone(constant_rank(A))
        self.assertFalse(has_constant_rank(A, 2))

    def test_constant_matrix(self):
        A = parse_matrix("field 2\n[ 1, 1 ; 1, 1 ]")
        summary = rank_set(A)
        self.assertEqual(summary.rank_set, (1, ))
        self.assertEqual(summary.completions_examined, 1)

    def test_early_stop(self):
        # Every rank 0..2 shows up, enumeration stops before the end.
        A = parse_matrix("field 2\n[ a, b ; c, d ]")
        summary = rank_set_exhaustive(A)
        self.assertEqual(summary.rank_set, (0, 1, 2))
        self.assertEqual(summary.completions_examined, 16)

        wide = parse_matrix("field 2\n" + "[ " + ", ".join(
            "z{}".format(j) for j in range(13)) + " ]")
        summary = rank_set_exhaustive(wide)
        self.assertEqual(summary.rank_set, (0, 1))
        self.assertLess(summary.completions_examined, wide.num_completions)

    def test_has_constant_rank(self):
        A = get_entry('example1.4i-A').matrix
        self.assertEqual(A.num_completions, 32)
        self.assertTrue(has_constant_rank(A, 3))
        self.assertFalse(has_constant_rank(A, 2))
        self.assertFalse(has_constant_rank(A, 4))

    def test_zero_completion_rank(self):
        A = parse_matrix("field 2\n[ x+1, 1 ; 1, y+1 ]")
        self.assertEqual(zero_completion_rank(A), 1)

    @parameterized.expand([(q, seed) for q in sorted(ORACLE_VARS)
                           for seed in range(5)])
    def test_split_agrees_with_exhaustive(self, q, seed):
        rng = np.random.default_rng(100 * q + seed)
        gf = field_of_order(q)
        for _ in range(10):
            m = int(rng.integers(1, 7))
            n = int(rng.integers(1, 7))
            A = random_aci(gf, m, n, rng, max_vars=ORACLE_VARS[q],
                           density=0.4)
            self.assertLessEqual(q**len(A.variables), 2**14)
            summary = rank_set(A)
            self.assertEqual(summary.rank_set,
                             rank_set_exhaustive(A).rank_set)
            self.assertGreaterEqual(summary.mrank, 0)
            self.assertLessEqual(summary.Mrank, min(m, n))

    @parameterized.expand([(entry_id, ) for entry_id in corpus_ids()])
    def test_corpus_split_agrees_with_exhaustive(self, entry_id):
        A = get_entry(entry_id).matrix
        self.assertEqual(rank_set(A).rank_set,
                         rank_set_exhaustive(A).rank_set)

    @parameterized.expand([(entry_id, ) for entry_id in corpus_ids()])
    def test_equivalence_keeps_rank_set(self, entry_id):
        A = get_entry(entry_id).matrix
        expected = rank_set_exhaustive(A).rank_set
        rng = np.random.default_rng(5)
        for _ in range(20):
            E = random_equivalence(A.field, A.m, A.n, rng)
            self.assertEqual(
                rank_set_exhaustive(apply_equivalence(A, E)).rank_set,
                expected)

    @parameterized.expand([(entry_id, ) for entry_id in corpus_ids()])
    def test_column_deletion(self, entry_id):
        A = get_entry(entry_id).matrix
        ranks = rank_set(A).rank_set
        for j in range(A.n):
            reduced = delete_column(A, j)
            if reduced is None:
                continue
            after = rank_set(reduced).rank_set
            self.assertIn(max(ranks) - max(after), (0, 1))
            self.assertIn(min(ranks) - min(after), (0, 1))

    @parameterized.expand([(q, ) + shape for q in (2, 3)
                           for shape in BLOCK_SHAPES])
    def test_full_rank_blocks_add_up(self, q, m, n, r, s):
        gf = field_make(q)
        for seed in range(3):
            A11, A12, A22 = full_rank_blocks(gf, m, n, r, s, seed)
            A = upper_block_matrix(A11, A12, A22)
            self.assertEqual(A.shape, (m, n))
            self.assertEqual(rank_set(A).rank_set, ((m - r) + (n - s), ))

    @parameterized.expand([(q, ) + shape for q in (2, 3)
                           for shape in BLOCK_SHAPES])
    def test_constant_rank_splits_into_blocks(self, q, m, n, r, s):
        gf = field_make(q)
        rng = np.random.default_rng(q + m + n)
        candidates = [full_rank_blocks(gf, m, n, r, s, 9)]
        for _ in range(30):
            candidates.append(
                (random_aci(gf, m - r, s, rng, max_vars=2, prefix='a'),
                 random_aci(gf, m - r, n - s, rng, max_vars=2, prefix='b'),
                 random_aci(gf, r, n - s, rng, max_vars=2, prefix='c')))

        hits = 0
        for A11, A12, A22 in candidates:
            A = upper_block_matrix(A11, A12, A22)
            if rank_set(A).rank_set != ((m - r) + (n - s), ):
                continue
            hits += 1
            self.assertEqual(rank_set(A11).rank_set, (m - r, ))
            self.assertEqual(rank_set(A22).rank_set, (n - s, ))
        self.assertGreater(hits, 0)

    def test_progress_trackers(self):
        self.assertIsInstance(
            completion_progress(8, False), progressbar.NullBar)
        bar = completion_progress(8, True)
        self.assertIsInstance(bar, ProgressBar)
        bar.finish()

        A = get_entry('example1.4i-A').matrix
        for enabled in (False, True):
            summary = rank_set_exhaustive(A, progress=enabled)
            self.assertEqual(summary.rank_set, (3, ))

    def test_workers(self):
        names = ["z{}".format(k) for k in range(14)]
        A = parse_matrix("field 2\n[ " + ", ".join(names[:7]) + " ; " +
                         ", ".join(names[7:]) + " ]")
        self.assertGreaterEqual(A.num_completions, PARALLEL_THRESHOLD)
        serial = rank_set_exhaustive(A)
        parallel = rank_set_exhaustive(A, budget=Budget(workers=2))
        self.assertEqual(serial.rank_set, (0, 1, 2))
        self.assertEqual(parallel.rank_set, serial.rank_set)

    def test_doctest(self):
        self.assertEqual(doctest.testmod(acirank.rank).failed, 0)
