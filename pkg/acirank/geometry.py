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

from collections import namedtuple
import itertools

import numpy as np

from .errors import BudgetExceeded, DimensionMismatch, EmptyMatrix
from .lib.budget import get_budget
from .lib.utils import vprint
from .models.aci import ACIMatrix, AffineForm
from .rank import rank_set
""" Affine subspaces of F^m and the dimensions of the subspaces they span.

Picking one point P_j in each of V_1, ..., V_n and spanning them together
with the origin gives a subspace of dimension rank [P_1 ... P_n].  Column j
of the matching ACI-matrix parametrizes V_j, so the possible dimensions are
exactly its rank set.
"""


class AffineSubspace(namedtuple('AffineSubspace',
                                'base directions reduced')):
    """ base + span(directions).

    base is a tuple of element indices, directions a tuple of such tuples,
    linearly independent.  reduced is True when dependent directions were
    dropped on construction.
    """

    @classmethod
    def build(cls, field, base, directions=()):
        base = tuple(int(v) for v in base)
        kept = []
        for d in directions:
            d = tuple(int(v) for v in d)
            if len(d) != len(base):
                raise DimensionMismatch(
                    "direction {} does not live in F^{}".format(
                        list(d), len(base)))
            if field.rank(np.array(kept + [d], dtype=np.int64)) > len(kept):
                kept.append(d)
        reduced = len(kept) != len(directions)
        if reduced:
            vprint("geometry: dropped {} dependent directions",
                   len(directions) - len(kept))
        return cls(base, tuple(kept), reduced)

    @property
    def ambient(self):
        return len(self.base)

    @property
    def dimension(self):
        return len(self.directions)

    def points(self, field):
        """ Every point, ordered by the coordinates on the directions. """
        base = np.array(self.base, dtype=np.int64)
        dirs = np.array(self.directions, dtype=np.int64).reshape(
            -1, self.ambient)
        for coords in itertools.product(range(field.q),
                                        repeat=self.dimension):
            point = base
            for c, d in zip(coords, dirs):
                point = field.add(point, field.mul(c, d))
            yield point


def _check_ambient(subspaces):
    if not subspaces:
        raise EmptyMatrix("no subspaces given")
    m = subspaces[0].ambient
    for V in subspaces:
        if V.ambient != m:
            raise DimensionMismatch("subspaces live in F^{} and F^{}".format(
                m, V.ambient))
    return m


def variable_name(j, k):
    """ Name of the k-th coordinate of subspace j, both 0-based.

    >>> variable_name(0, 1)
    'v1t2'

    """
    return "v{}t{}".format(j + 1, k + 1)


def subspaces_to_aci(field, subspaces):
    """ ACI-matrix whose column j is base_j + sum_k v(j)t(k) * direction_k.
    """
    m = _check_ambient(subspaces)
    rows = [[None] * len(subspaces) for _ in range(m)]
    for j, V in enumerate(subspaces):
        for i in range(m):
            terms = [(variable_name(j, k), d[i])
                     for k, d in enumerate(V.directions)]
            rows[i][j] = AffineForm.build(field, V.base[i], terms)
    return ACIMatrix(field, rows)


def span_dim_set(field, subspaces, budget=None, progress=False):
    """ { dim span(P_1, ..., P_n) : P_j in V_j } through the rank set of the
    matching ACI-matrix, as a sorted tuple. """
    A = subspaces_to_aci(field, subspaces)
    return rank_set(A, budget, progress).rank_set


def span_dim_set_bruteforce(field, subspaces, budget=None):
    """ span_dim_set by visiting every tuple of points. """
    _check_ambient(subspaces)
    budget = get_budget(budget)
    total = 1
    for V in subspaces:
        total *= field.q**V.dimension
    if total > budget.completions:
        raise BudgetExceeded(total, budget.completions, what="point tuples")

    dims = set()
    for points in itertools.product(*[list(V.points(field))
                                      for V in subspaces]):
        dims.add(field.rank(np.stack(points, axis=1)))
    return tuple(sorted(dims))
