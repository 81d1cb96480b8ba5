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
import multiprocessing as mp

import numpy as np

from .errors import BudgetExceeded, SubsetBudgetExceeded
from .lib.budget import get_budget
from .lib.progressbar_utils import completion_progress
from .lib.utils import vprint
from .models.aci import ACIMatrix, apply_equivalence, submatrix
""" Rank sets of ACI-matrices.

The exhaustive engine enumerates completions in mixed-radix order: variables
sorted by name, the first variable being the most significant digit, digits
in canonical field order.  Completions are evaluated and ranked in numpy
batches of CHUNK_SIZE.
"""

CHUNK_SIZE = 4096

# First batch of has_constant_rank, small so that a mismatch is found early.
FIRST_CHUNK_SIZE = 64

# Below this many completions the worker pool is not worth starting.
PARALLEL_THRESHOLD = 4 * CHUNK_SIZE


class RankSummary(namedtuple('RankSummary', 'rank_set mrank Mrank constant '
                             'completions_examined method')):
    """ The set of ranks over the completions of a matrix.

    rank_set is a sorted tuple, constant is the rank when the set is a
    singleton and None otherwise.
    """

    @classmethod
    def from_ranks(cls, ranks, examined, method):
        ranks = tuple(sorted(int(r) for r in ranks))
        assert ranks, "no completion examined"
        constant = ranks[0] if len(ranks) == 1 else None
        return cls(ranks, ranks[0], ranks[-1], constant, int(examined),
                   method)


def rank_constant(M):
    """ Rank of a completed matrix over its field. """
    return M.field.rank(M.array)


def completion_values(num_vars, q, start, stop):
    """ Digit vectors of completions start..stop-1, shape (count, num_vars).

    >>> completion_values(2, 3, 4, 6).tolist()
    [[1, 1], [1, 2]]

    """
    index = np.arange(start, stop, dtype=np.int64)
    powers = q**np.arange(num_vars - 1, -1, -1, dtype=np.int64)
    return (index[:, None] // powers[None, :]) % q


def evaluate_completions(A, values):
    """ Stack of completed matrices, one per row of `values`. """
    gf = A.field
    constants, columns, coefficients = A.compiled()
    count = values.shape[0]
    stack = np.broadcast_to(constants, (count, A.m, A.n)).copy()
    for k in range(len(A.variables)):
        j = columns[k]
        stack[:, :, j] = gf.add_table[stack[:, :, j], gf.mul_table[
            values[:, k][:, None], coefficients[k][None, :]]]
    return stack


def ranks_of_interval(A, start, stop):
    """ Ranks of completions start..stop-1 as a numpy array. """
    values = completion_values(len(A.variables), A.field.q, start, stop)
    return A.field.batch_rank(evaluate_completions(A, values))


def _enumerate_interval(A, start, stop, progress=None):
    full = set(range(min(A.m, A.n) + 1))
    ranks = set()
    examined = 0
    pos = start
    while pos < stop:
        end = min(stop, pos + CHUNK_SIZE)
        ranks.update(ranks_of_interval(A, pos, end).tolist())
        examined += end - pos
        pos = end
        if progress is not None:
            progress.update(pos - start)
        if ranks == full:
            break
    return ranks, examined


def _check_budget(A, limit):
    total = A.num_completions
    if total > limit:
        raise BudgetExceeded(total, limit)
    return total


def rank_set_exhaustive(A, limit=None, budget=None, progress=False):
    """ Exact rank set by visiting every completion of A.

    Enumeration only stops early once every rank 0..min(m, n) was seen.

    Arguments
    ---------
    A : ACIMatrix
    limit : int, optional
        Completion cap, defaults to the budget's completion cap.
    budget : Budget, optional
        Supplies the default cap and the number of worker processes.
    progress : bool
        Show a progress bar on stderr.

    Returns
    -------
    RankSummary with method "exhaustive".

    """
    budget = get_budget(budget)
    if limit is None:
        limit = budget.completions
    total = _check_budget(A, limit)

    if budget.workers > 1 and total >= PARALLEL_THRESHOLD:
        bounds = np.linspace(0, total, budget.workers + 1).astype(np.int64)
        jobs = [(A, int(bounds[i]), int(bounds[i + 1]))
                for i in range(budget.workers) if bounds[i] < bounds[i + 1]]
        vprint("rank: {} completions over {} workers", total, len(jobs))
        with mp.Pool(budget.workers) as pool:
            parts = pool.starmap(_enumerate_interval, jobs)
        ranks = set()
        examined = 0
        for part_ranks, part_examined in parts:
            ranks |= part_ranks
            examined += part_examined
    else:
        bar = completion_progress(total, progress)
        ranks, examined = _enumerate_interval(A, 0, total, bar)
        bar.finish()

    return RankSummary.from_ranks(ranks, examined, "exhaustive")


def has_constant_rank(A, rho, budget=None):
    """ True if every completion of A has rank rho.

    Stops at the first completion of a different rank.
    """
    if rho > min(A.m, A.n):
        return False
    total = _check_budget(A, get_budget(budget).completions)
    pos = 0
    size = FIRST_CHUNK_SIZE
    while pos < total:
        end = min(total, pos + size)
        if np.any(ranks_of_interval(A, pos, end) != rho):
            return False
        pos = end
        size = CHUNK_SIZE
    return True


def zero_completion_rank(A):
    """ Rank of the completion sending every variable to 0. """
    constants, _, _ = A.compiled()
    return A.field.rank(constants)


def _split_rank_set(A, budget):
    """ Tries the zero block route, returns a RankSummary or None. """
    # Imported here, decompose depends on this module.
    from .decompose import search_zero_block

    m, n = A.shape
    candidate = zero_completion_rank(A)
    if candidate < 1 or candidate >= min(m, n):
        return None

    try:
        split = search_zero_block(A, candidate, budget)
    except SubsetBudgetExceeded:
        return None
    if split is None:
        return None

    r, s, witness = split
    transformed = apply_equivalence(A, witness)
    examined = 0
    if r < m:
        top = submatrix(transformed, range(m - r), range(s))
        part = rank_set(top, budget)
        examined += part.completions_examined
        if part.constant != m - r:
            vprint("rank: A11 block not of constant rank {}, falling back",
                   m - r)
            return None
    if s < n:
        bottom = submatrix(transformed, range(m - r, m), range(s, n))
        part = rank_set(bottom, budget)
        examined += part.completions_examined
        if part.constant != n - s:
            vprint("rank: A22 block not of constant rank {}, falling back",
                   n - s)
            return None

    vprint("rank: split r={} s={} certifies constant rank {}", r, s,
           candidate)
    return RankSummary.from_ranks([candidate], examined, "decomposed")


def rank_set(A, budget=None, progress=False):
    """ Exact rank set, through a zero block split when one certifies it.

    The all-zero completion gives a candidate rank rho.  If A is equivalent
    to [A11 A12; 0 A22] with A11 of size (m-r) x s, A22 of size r x (n-s)
    and (m-r) + (n-s) = rho, and both diagonal blocks have constant rank
    equal to their number of rows (resp. columns), then A has constant rank
    rho.  Every other outcome falls back to exhaustive enumeration, so the
    result always equals rank_set_exhaustive(A).
    """
    assert isinstance(A, ACIMatrix), A
    budget = get_budget(budget)
    if not A.is_constant():
        summary = _split_rank_set(A, budget)
        if summary is not None:
            return summary
    return rank_set_exhaustive(A, budget=budget, progress=progress)


def constant_rank(A, budget=None):
    """ rho when every completion has rank rho, None otherwise. """
    return rank_set(A, budget).constant
