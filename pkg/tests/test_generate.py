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
import itertools
import doctest
import acirank.generate
from acirank.generate import gen_constant_rank, compose_blocks, \
        minimal_gadget, maximal_gadget, COMPOSITION_CASES, ALWAYS_CI
from acirank.classify import classify
from acirank.corpus import get_entry
from acirank.decompose import canonical_decomposition, verify_decomposition
from acirank.errors import InfeasibleShape, VariableClash, FieldMismatch, \
        NotClassified
from acirank.lib.parse_aci import parse_matrix
from acirank.models.aci import apply_equivalence, constant_aci, \
        rename_variables, submatrix
from acirank.models.gf import field_of_order
from acirank.rank import rank_set

F2 = field_of_order(2)
F3 = field_of_order(3)

SHAPES = [(m, n, rho) for m, n in itertools.product(range(1, 5), repeat=2)
          for rho in range(1, min(m, n) + 1)]

KIND_BUILDERS = {
    'square': lambda: constant_aci(F2, [[1]]),
    'minimal': lambda: minimal_gadget(F2),
    'maximal': lambda: maximal_gadget(F2),
}

ALWAYS_CI_CELLS = sorted(
    kinds for kinds, case in COMPOSITION_CASES.items() if case in ALWAYS_CI)


def kind_block(kind, prefix):
    A = KIND_BUILDERS[kind]()
    return rename_variables(A, {name: prefix + name for name in A.variables})


class TestGenerate(unittest.TestCase):
    @parameterized.expand(SHAPES)
    def test_constant_rank(self, m, n, rho):
        for seed in range(3):
            A = gen_constant_rank(m, n, rho, F2, seed=seed, max_vars=6)
            self.assertEqual(A.shape, (m, n))
            self.assertEqual(rank_set(A).rank_set, (rho, ))

    def test_other_fields(self):
        for q in (3, 4):
            A = gen_constant_rank(3, 4, 2, field_of_order(q), seed=1,
                                  max_vars=3)
            self.assertEqual(rank_set(A).constant, 2)

    def test_seed(self):
        A = gen_constant_rank(4, 4, 3, F2, seed=42, max_vars=5)
        B = gen_constant_rank(4, 4, 3, F2, seed=42, max_vars=5)
        self.assertEqual(A, B)
        self.assertLessEqual(len(A.variables), 5)

    def test_unscrambled_layout(self):
        A = gen_constant_rank(4, 5, 3, F3, seed=4, max_vars=4,
                              scramble=False)
        self.assertEqual(rank_set(A).constant, 3)

    def test_gadgets(self):
        A = gen_constant_rank(2, 3, 2, F2, seed=1, gadget='minimal',
                              max_vars=0)
        self.assertEqual(A.variables, ('t1', 't2', 't3'))
        self.assertTrue(classify(A).minimal_fr)

        A = gen_constant_rank(4, 3, 3, F2, seed=1, gadget='maximal',
                              max_vars=0)
        self.assertEqual(len(A.variables), 3)
        self.assertTrue(classify(A).maximal_fr)

        A = gen_constant_rank(3, 5, 3, F2, seed=2, gadget='minimal',
                              max_vars=2)
        self.assertEqual(rank_set(A).constant, 3)

    def test_infeasible(self):
        with self.assertRaises(InfeasibleShape):
            gen_constant_rank(2, 2, 0, F2)
        with self.assertRaises(InfeasibleShape):
            gen_constant_rank(2, 3, 3, F2)
        with self.assertRaises(InfeasibleShape):
            gen_constant_rank(2, 2, 2, F2, gadget='minimal')
        with self.assertRaises(InfeasibleShape):
            gen_constant_rank(3, 3, 2, F2, gadget='diagonal')

    def test_gadget_texts(self):
        self.assertEqual(minimal_gadget(F2),
                         get_entry('example1.3i-q2').matrix)
        self.assertEqual(maximal_gadget(F3),
                         get_entry('example1.3ii-q3').matrix)
        self.assertEqual(minimal_gadget(field_of_order(4)).to_string(),
                         "[ 1, x2+1, g:10*x3+1, g:11*x4+1, x5 ; "
                         "x1, x2, x3, x4, 1 ]")

    def test_compose_square_blocks(self):
        one = constant_aci(F2, [[1]])
        composition = compose_blocks(one, one)
        self.assertEqual(composition.case, 'i')
        self.assertEqual(composition.kinds, ('square', 'square'))
        self.assertTrue(composition.predicted)
        self.assertEqual(composition.matrix.to_string(), "[ 1, 0 ; 0, 1 ]")

    def test_compose_square_over_minimal(self):
        one = constant_aci(F2, [[1]])
        composition = compose_blocks(one, minimal_gadget(F2))
        self.assertEqual(composition.case, 'ii')
        self.assertIsNone(composition.predicted)
        self.assertEqual(composition.matrix.shape, (3, 4))
        self.assertEqual(rank_set(composition.matrix).constant, 3)
        self.assertTrue(
            submatrix(composition.matrix, [1, 2], [0]).is_zero())

    def test_compose_random_filler(self):
        one = constant_aci(F2, [[1]])
        composition = compose_blocks(one, minimal_gadget(F2),
                                     filler='random', seed=3)
        A = composition.matrix
        extra = set(A.variables) - {'x1', 'x2', 'x3'}
        for name in extra:
            self.assertTrue(name.startswith('t'))
        self.assertEqual(rank_set(A).constant, 3)

    def test_compose_maximal_over_minimal(self):
        A11 = get_entry('P').matrix
        A22 = parse_matrix("field 2\n[ y1, 1, y3 ; y1+1, y2, 1 ]")
        composition = compose_blocks(A11, A22)
        self.assertEqual(composition.kinds, ('maximal', 'minimal'))
        self.assertEqual(composition.case, 'viii')
        self.assertIsNone(composition.predicted)
        # Block diagonal, so the ranks simply add up.
        self.assertEqual(rank_set(composition.matrix).rank_set, (5, ))

        # A nonzero corner can break constant rank.
        self.assertEqual(
            rank_set(get_entry('case-viii').matrix).rank_set, (5, 6))

    def test_compose_errors(self):
        with self.assertRaises(VariableClash):
            compose_blocks(minimal_gadget(F2), minimal_gadget(F2))
        with self.assertRaises(FieldMismatch):
            compose_blocks(constant_aci(F2, [[1]]), constant_aci(F3, [[1]]))
        with self.assertRaises(NotClassified):
            compose_blocks(parse_matrix("field 2\n[ x ]"),
                           constant_aci(F2, [[1]]))
        with self.assertRaises(NotClassified):
            compose_blocks(constant_aci(F2, [[0]]), constant_aci(F2, [[1]]))
        with self.assertRaises(ValueError):
            compose_blocks(
                constant_aci(F2, [[1]]),
                constant_aci(F2, [[1]]),
                filler='ones')

    def test_composition_table(self):
        self.assertEqual(len(COMPOSITION_CASES), 9)
        self.assertEqual(
            sorted(COMPOSITION_CASES.values()),
            sorted(['i', 'ii', 'iii', 'iv', 'v', 'vi', 'vii', 'viii', 'ix']))
        self.assertEqual(len(ALWAYS_CI_CELLS), 6)

    @parameterized.expand([(kinds[0], kinds[1], filler)
                           for kinds in ALWAYS_CI_CELLS
                           for filler in ('zeros', 'random')])
    def test_always_completely_irreducible(self, top, bottom, filler):
        A11, A22 = kind_block(top, 'a'), kind_block(bottom, 'c')
        for seed in range(2 if filler == 'random' else 1):
            composition = compose_blocks(A11, A22, filler=filler, seed=seed)
            self.assertEqual(composition.kinds, (top, bottom))
            self.assertIn(composition.case, ALWAYS_CI)
            self.assertTrue(composition.predicted)
            verdict = classify(composition.matrix)
            self.assertEqual(verdict.constant, rank_set(A11).constant +
                             rank_set(A22).constant)
            self.assertTrue(verdict.completely_irreducible)

    @parameterized.expand([('zeros', ), ('random', )])
    def test_minimal_over_maximal_round_trip(self, filler):
        A11, A22 = kind_block('minimal', 'a'), kind_block('maximal', 'c')
        composition = compose_blocks(A11, A22, filler=filler, seed=5)
        A = composition.matrix
        self.assertEqual(composition.case, 'vi')
        verdict = classify(A)
        self.assertTrue(verdict.completely_irreducible)
        self.assertFalse(verdict.full_rank)

        # Decomposing a completely irreducible matrix of deficient rank
        # gives back a minimal block over a maximal one.
        D = canonical_decomposition(A)
        self.assertEqual(D.B.tag, 'minimal_fr')
        self.assertEqual(D.C.tag, 'maximal_fr')
        self.assertEqual(D.B.rank + D.C.rank, D.rank)
        self.assertEqual(D.rank, verdict.constant)
        self.assertTrue(verify_decomposition(A, D))

    def test_worked_example_round_trip(self):
        A = get_entry('sec2.2-A').matrix
        verdict = classify(A)
        self.assertTrue(verdict.completely_irreducible)
        self.assertFalse(verdict.full_rank)
        D = canonical_decomposition(A)
        self.assertEqual((D.B.tag, D.C.tag), ('minimal_fr', 'maximal_fr'))
        self.assertEqual((D.B.rank, D.C.rank, D.rank), (2, 3, 5))

        # The blocks it splits into compose back to case vi.
        D0 = apply_equivalence(A, D.witness)
        B = submatrix(D0, range(*D.B.rows), range(*D.B.cols))
        C = submatrix(D0, range(*D.C.rows), range(*D.C.cols))
        composition = compose_blocks(B, C)
        self.assertEqual(composition.case, 'vi')
        self.assertTrue(composition.predicted)

    def test_doctest(self):
        self.assertEqual(doctest.testmod(acirank.generate).failed, 0)
