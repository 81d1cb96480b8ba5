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
import doctest
import numpy as np
import acirank.geometry
from acirank.geometry import AffineSubspace, subspaces_to_aci, \
        span_dim_set, span_dim_set_bruteforce
from acirank.errors import DimensionMismatch, EmptyMatrix, BudgetExceeded
from acirank.lib.budget import Budget
from acirank.models.gf import field_of_order

F2 = field_of_order(2)
F3 = field_of_order(3)


def random_subspaces(field, rng, ambient, count):
    subspaces = []
    for _ in range(count):
        base = rng.integers(0, field.q, size=ambient)
        dim = int(rng.integers(0, 3))
        directions = rng.integers(0, field.q, size=(dim, ambient))
        subspaces.append(AffineSubspace.build(field, base, directions))
    return subspaces


class TestGeometry(unittest.TestCase):
    def test_build(self):
        V = AffineSubspace.build(F2, (0, 0, 0), [(1, 0, 0), (1, 0, 0),
                                                 (0, 1, 0)])
        self.assertTrue(V.reduced)
        self.assertEqual(V.dimension, 2)
        self.assertEqual(V.ambient, 3)
        self.assertEqual(len(list(V.points(F2))), 4)

        V = AffineSubspace.build(F3, (1, 2), [(0, 1)])
        self.assertFalse(V.reduced)
        self.assertEqual([p.tolist() for p in V.points(F3)],
                         [[1, 2], [1, 0], [1, 1]])

        with self.assertRaises(DimensionMismatch):
            AffineSubspace.build(F2, (0, 0), [(1, 0, 0)])

    def test_matrix(self):
        subspaces = [
            AffineSubspace.build(F3, (1, 0), [(0, 1)]),
            AffineSubspace.build(F3, (1, 1)),
        ]
        A = subspaces_to_aci(F3, subspaces)
        self.assertEqual(A.to_string(), "[ 1, 1 ; v1t1, 1 ]")
        self.assertEqual(span_dim_set(F3, subspaces), (1, 2))

    def test_against_bruteforce(self):
        rng = np.random.default_rng(7)
        for field in (F2, F3):
            for _ in range(10):
                subspaces = random_subspaces(field, rng, 3, 3)
                self.assertEqual(
                    span_dim_set(field, subspaces),
                    span_dim_set_bruteforce(field, subspaces))

    def test_errors(self):
        with self.assertRaises(EmptyMatrix):
            subspaces_to_aci(F2, [])
        with self.assertRaises(DimensionMismatch):
            span_dim_set(F2, [
                AffineSubspace.build(F2, (0, 1)),
                AffineSubspace.build(F2, (0, 1, 1))
            ])
        subspaces = [AffineSubspace.build(F2, (0, 0), [(1, 0), (0, 1)])] * 2
        with self.assertRaises(BudgetExceeded) as cm:
            span_dim_set_bruteforce(F2, subspaces, Budget(completions=8))
        self.assertEqual(cm.exception.what, "point tuples")

    def test_doctest(self):
        self.assertEqual(doctest.testmod(acirank.geometry).failed, 0)
