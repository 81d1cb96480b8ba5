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
import acirank.classify
from acirank.classify import classify, is_column_irreducible, \
        is_row_irreducible, find_augmenting_vector, \
        projective_representatives, count_projective_representatives, \
        constant_rank_square_submatrices
from acirank.corpus import corpus_ids, get_entry
from acirank.decompose import unit_transform
from acirank.errors import NotConstantRank, BudgetExceeded
from acirank.generate import gen_constant_rank, minimal_gadget, \
        maximal_gadget
from acirank.lib.budget import Budget
from acirank.lib.parse_aci import parse_matrix
from acirank.models.aci import Equivalence, apply_equivalence, augment, \
        delete_row, random_equivalence, zero_aci
from acirank.models.gf import field_of_order
from acirank.rank import rank_set, has_constant_rank

# Entries whose full classification takes more than a few seconds.
SLOW_ENTRIES = frozenset(['sec2.2-A', 'sec2.2-Aprime', 'example1.3ii-q3'])

SMALL_ENTRIES = [
    'Eprime', 'Fprime', 'example1.3i-q2', 'example1.3ii-q2', 'example1.4i-A',
    'example1.4ii-A', 'A2', 'P', 'sec2.2-B', 'sec2.2-C'
]

# Completely irreducible entries.
CI_ENTRIES = [
    'example1.3i-q2', 'example1.3ii-q2', 'example1.4i-A', 'A2', 'sec2.2-B',
    'sec2.2-C'
]

# Entries that are not completely irreducible because a column augments them.
AUGMENTABLE_ENTRIES = ['Eprime', 'Fprime', 'example1.4ii-A', 'E', 'sec2.2-A22']

FULL_RANK_SHAPES = [(2, 4, 1), (3, 5, 2), (4, 2, 3), (5, 3, 4), (3, 3, 5),
                    (2, 2, 6)]


class TestClassify(unittest.TestCase):
    def test_augmentable_example(self):
        A = get_entry('example1.4ii-A').matrix
        verdict = classify(A)
        self.assertEqual(verdict.constant, 3)
        self.assertTrue(verdict.full_rank)
        self.assertFalse(verdict.maximal_fr)
        self.assertTrue(verdict.column_augmentable)
        self.assertFalse(verdict.completely_irreducible)

        v = verdict.augmenting_vector
        self.assertEqual(rank_set(augment(A, v)).rank_set, (4, ))
        self.assertNotEqual(sorted(v), [0, 0, 0, 0, 1])
        self.assertEqual(
            rank_set(augment(A, [1, 0, 1, 1, 0])).rank_set, (4, ))

    def test_rank_one_pair(self):
        verdict = classify(get_entry('Eprime').matrix)
        self.assertTrue(verdict.irreducible)
        self.assertTrue(verdict.column_augmentable)
        self.assertEqual(verdict.augmenting_vector, (1, 1))
        self.assertFalse(verdict.completely_irreducible)

        verdict = classify(get_entry('Fprime').matrix)
        self.assertTrue(verdict.row_reducible)
        self.assertEqual(verdict.row_witness, 0)
        self.assertFalse(verdict.column_reducible)
        self.assertEqual(verdict.augmenting_vector, (1, 0))

    @parameterized.expand([(2, ), (3, ), (4, )])
    def test_minimal_gadget(self, q):
        verdict = classify(minimal_gadget(field_of_order(q)))
        self.assertEqual(verdict.constant, 2)
        self.assertTrue(verdict.minimal_fr)
        self.assertTrue(verdict.completely_irreducible)

    @parameterized.expand([(2, ), (3, )])
    def test_maximal_gadget(self, q):
        A = maximal_gadget(field_of_order(q))
        verdict = classify(A)
        self.assertEqual(verdict.constant, q + 1)
        self.assertTrue(verdict.maximal_fr)
        self.assertIsNone(verdict.augmenting_vector)
        self.assertIsNone(find_augmenting_vector(A, q + 1))

    def test_partial_matrices(self):
        P = get_entry('P').matrix
        verdict = classify(P)
        self.assertEqual(verdict.constant, 3)
        self.assertTrue(verdict.irreducible)
        self.assertEqual(constant_rank_square_submatrices(P, 3), [])

        A2 = get_entry('A2').matrix
        self.assertTrue(classify(A2).minimal_fr)
        self.assertEqual(constant_rank_square_submatrices(A2, 3), [])

    def test_equivalent_pair(self):
        E = classify(get_entry('E').matrix)
        self.assertTrue(E.irreducible)
        self.assertFalse(E.completely_irreducible)

        F = classify(get_entry('F').matrix)
        self.assertEqual(F.constant, 5)
        self.assertEqual(F.row_witness, 0)

    def test_degenerate(self):
        F2 = field_of_order(2)
        verdict = classify(zero_aci(F2, 2, 3))
        self.assertEqual(verdict.constant, 0)
        self.assertFalse(verdict.full_rank)

        verdict = classify(parse_matrix("field 2\n[ x ]"))
        self.assertIsNone(verdict.constant)
        self.assertIsNone(verdict.completely_irreducible)

    def test_wrong_rank(self):
        A = get_entry('Eprime').matrix
        with self.assertRaises(NotConstantRank):
            is_column_irreducible(A, 2)
        with self.assertRaises(NotConstantRank):
            is_row_irreducible(A, 0)
        with self.assertRaises(NotConstantRank):
            find_augmenting_vector(A, 2)

    def test_vector_budget(self):
        A = get_entry('Eprime').matrix
        with self.assertRaises(BudgetExceeded) as cm:
            classify(A, Budget(vectors=2))
        self.assertEqual(cm.exception.what, "vectors")

    def check_full_rank_flavours(self, A):
        verdict = classify(A)
        if not verdict.constant:
            return
        m, n = A.shape
        rho = verdict.constant
        if rho == m < n:
            self.assertEqual(verdict.minimal_fr,
                             verdict.completely_irreducible)
        elif rho == n < m:
            self.assertEqual(verdict.maximal_fr,
                             verdict.completely_irreducible)
        elif rho == m == n:
            self.assertTrue(verdict.square_fr)
            self.assertTrue(verdict.completely_irreducible)
        else:
            self.assertFalse(verdict.full_rank)
            self.assertFalse(verdict.minimal_fr or verdict.maximal_fr or
                             verdict.square_fr)

    @parameterized.expand([(entry_id, ) for entry_id in corpus_ids()
                           if entry_id not in SLOW_ENTRIES])
    def test_full_rank_flavours_corpus(self, entry_id):
        self.check_full_rank_flavours(get_entry(entry_id).matrix)

    @parameterized.expand(FULL_RANK_SHAPES)
    def test_full_rank_flavours_generated(self, m, n, seed):
        A = gen_constant_rank(m, n, min(m, n), field_of_order(2), seed=seed,
                              max_vars=4)
        self.check_full_rank_flavours(A)

    @parameterized.expand([(entry_id, ) for entry_id in SMALL_ENTRIES])
    def test_flavours_survive_equivalence(self, entry_id):
        A = get_entry(entry_id).matrix
        expected = classify(A)
        rng = np.random.default_rng(len(entry_id))
        for _ in range(20):
            E = random_equivalence(A.field, A.m, A.n, rng)
            verdict = classify(apply_equivalence(A, E))
            self.assertEqual(verdict.constant, expected.constant)
            self.assertEqual(verdict.minimal_fr, expected.minimal_fr)
            self.assertEqual(verdict.maximal_fr, expected.maximal_fr)

    @parameterized.expand([(entry_id, ) for entry_id in CI_ENTRIES])
    def test_completely_irreducible_stays_irreducible(self, entry_id):
        A = get_entry(entry_id).matrix
        verdict = classify(A)
        self.assertTrue(verdict.completely_irreducible)
        rho = verdict.constant
        rng = np.random.default_rng(7)
        for _ in range(20):
            B = apply_equivalence(A, random_equivalence(A.field, A.m, A.n,
                                                        rng))
            self.assertTrue(is_row_irreducible(B, rho).irreducible)
            self.assertTrue(is_column_irreducible(B, rho).irreducible)

    @parameterized.expand([(entry_id, ) for entry_id in AUGMENTABLE_ENTRIES])
    def test_augmenting_vector_exposes_row(self, entry_id):
        A = get_entry(entry_id).matrix
        verdict = classify(A)
        self.assertFalse(verdict.completely_irreducible)
        v = verdict.augmenting_vector
        self.assertIsNotNone(v)

        # T . v = e1 turns [A v] into [T.A e1], so the first row of T.A can
        # go without changing the rank.
        T = unit_transform(A.field, v)
        self.assertEqual(
            A.field.matmul(T, np.array(v)[:, None]).ravel().tolist(),
            [1] + [0] * (A.m - 1))
        B = apply_equivalence(A, Equivalence(T, range(A.n)))
        self.assertFalse(is_row_irreducible(B, verdict.constant).irreducible)
        self.assertTrue(has_constant_rank(delete_row(B, 0), verdict.constant))

    def test_projective_representatives(self):
        F3 = field_of_order(3)
        reps = list(projective_representatives(F3, 3))
        self.assertEqual(len(reps), count_projective_representatives(F3, 3))
        self.assertEqual(len(reps), 13)
        self.assertEqual(reps, sorted(reps))
        for v in reps:
            self.assertEqual(next(c for c in v if c), 1)

    def test_doctest(self):
        self.assertEqual(doctest.testmod(acirank.classify).failed, 0)
