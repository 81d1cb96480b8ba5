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

from .errors import NotConstantRank, BudgetExceeded
from .lib.budget import get_budget
from .lib.utils import vprint
from .models.aci import augment, delete_column, delete_row, submatrix
from .rank import rank_set, has_constant_rank
""" Constant rank classification: full rank flavours, reducibility,
column augmentability and complete irreducibility. """

Reducibility = namedtuple('Reducibility', 'irreducible witness')


class Classification(namedtuple(
        'Classification', 'constant full_rank square_fr minimal_fr maximal_fr '
        'row_reducible row_witness column_reducible column_witness '
        'irreducible column_augmentable augmenting_vector '
        'completely_irreducible')):
    """ Every verdict the classifier produces for one matrix.

    All flags are None when the matrix has no constant rank.  Witnesses are
    0-based indices (row_witness, column_witness) or a tuple of element
    indices (augmenting_vector), None when there is nothing to witness.
    """

    @classmethod
    def not_constant(cls):
        return cls(*([None] * len(cls._fields)))

    @classmethod
    def rank_zero(cls):
        return cls(0, False, False, False, False, False, None, False, None,
                   False, False, None, False)


def _require_constant(A, rho, budget):
    if rank_set(A, budget).constant != rho:
        raise NotConstantRank("matrix does not have constant rank {}".format(
            rho))


def _keeps_rank(reduced, rho, budget):
    if reduced is None:
        # Nothing left, the empty matrix has rank 0.
        return rho == 0
    return has_constant_rank(reduced, rho, budget)


def is_column_irreducible(A, rho, budget=None, verified=False):
    """ Checks single column deletions in order 0..n-1.

    Returns Reducibility(irreducible, witness) where witness is the first
    column whose deletion keeps constant rank rho.
    """
    if not verified:
        _require_constant(A, rho, budget)
    for j in range(A.n):
        if _keeps_rank(delete_column(A, j), rho, budget):
            return Reducibility(False, j)
    return Reducibility(True, None)


def is_row_irreducible(A, rho, budget=None, verified=False):
    """ Row counterpart of is_column_irreducible. """
    if not verified:
        _require_constant(A, rho, budget)
    for i in range(A.m):
        if _keeps_rank(delete_row(A, i), rho, budget):
            return Reducibility(False, i)
    return Reducibility(True, None)


def projective_representatives(field, size):
    """ One vector per class of nonzero multiples, the one whose first
    nonzero entry is 1, in ascending lexicographic order.

    >>> from acirank.models.gf import field_make
    >>> list(projective_representatives(field_make(3), 2))
    [(0, 1), (1, 0), (1, 1), (1, 2)]

    """
    for lead in reversed(range(size)):
        head = (0, ) * lead + (1, )
        for tail in itertools.product(range(field.q), repeat=size - lead - 1):
            yield head + tail


def count_projective_representatives(field, size):
    return (field.q**size - 1) // (field.q - 1)


def search_augmenting_vector(A, rho, budget=None):
    """ find_augmenting_vector without the constant rank check. """
    budget = get_budget(budget)
    if rho + 1 > min(A.m, A.n + 1):
        return None
    needed = count_projective_representatives(A.field, A.m)
    if needed > budget.vectors:
        raise BudgetExceeded(needed, budget.vectors, what="vectors")

    candidates = itertools.chain([(0, ) * A.m],
                                 projective_representatives(A.field, A.m))
    for v in candidates:
        if has_constant_rank(augment(A, v), rho + 1, budget):
            vprint("classify: augmenting vector {}", list(v))
            return v
    return None


def find_augmenting_vector(A, rho, budget=None):
    """ First v (0, then projective representatives) with [A v] of constant
    rank rho + 1, or None.  Scaling v by a nonzero constant does not change
    the rank of any completion, so one representative per class suffices.
    """
    _require_constant(A, rho, budget)
    return search_augmenting_vector(A, rho, budget)


def classify(A, budget=None, summary=None):
    """ Classifies A.

    Arguments
    ---------
    A : ACIMatrix
    budget : Budget, optional
    summary : RankSummary, optional
        Rank set of A when the caller already has it.

    Returns
    -------
    Classification

    """
    if summary is None:
        summary = rank_set(A, budget)
    rho = summary.constant
    if rho is None:
        return Classification.not_constant()
    if rho == 0:
        return Classification.rank_zero()

    m, n = A.shape
    columns = is_column_irreducible(A, rho, budget, verified=True)
    rows = is_row_irreducible(A, rho, budget, verified=True)
    vector = search_augmenting_vector(A, rho, budget)
    augmentable = vector is not None

    return Classification(
        constant=rho,
        full_rank=rho == min(m, n),
        square_fr=rho == m == n,
        minimal_fr=rho == m < n and columns.irreducible,
        maximal_fr=rho == n < m and not augmentable,
        row_reducible=not rows.irreducible,
        row_witness=rows.witness,
        column_reducible=not columns.irreducible,
        column_witness=columns.witness,
        irreducible=rows.irreducible and columns.irreducible,
        column_augmentable=augmentable,
        augmenting_vector=vector,
        completely_irreducible=columns.irreducible and not augmentable)


def constant_rank_square_submatrices(A, size, budget=None):
    """ All size x size submatrices of constant rank size.

    Returns a list of (rows, cols) index tuples, in lexicographic order.
    """
    found = []
    for rows in itertools.combinations(range(A.m), size):
        for cols in itertools.combinations(range(A.n), size):
            if has_constant_rank(submatrix(A, rows, cols), size, budget):
                found.append((rows, cols))
    return found
