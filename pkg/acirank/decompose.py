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

from .classify import classify, search_augmenting_vector
from .errors import NotConstantRank, NotSquareFullRank, PreconditionViolated, \
        VerificationFailed, SubsetBudgetExceeded, EmptySelection, \
        DimensionMismatch
from .lib.budget import get_budget
from .lib.utils import eprint, vprint
from .models.aci import ACIMatrix, Equivalence, apply_equivalence, complete, \
        submatrix, block_diagonal
from .rank import rank_set, has_constant_rank
""" Constructive canonical forms of constant rank ACI-matrices.

A constant rank rho matrix A is equivalent to

    [ B  *  * ]
    [ 0  0  * ]
    [ 0  0  C ]

where B is square upper triangular with unit diagonal or minimal full rank,
C is square upper triangular with unit diagonal or maximal full rank, the
number of rows of B plus the number of columns of C is rho, and either block
may be absent.  Every function here returns the Equivalence witness (T, Q)
so the claimed form can be re-checked by multiplication.
"""

PivotPlacement = namedtuple('PivotPlacement', 'pivots witness')

# rows and cols are half open (start, stop) ranges inside T . A . Q.
BlockDescriptor = namedtuple('BlockDescriptor', 'tag rows cols rank')
ABSENT = BlockDescriptor('absent', None, None, 0)

BlockDecomposition = namedtuple('BlockDecomposition',
                                'case r s B C witness rank')

CoreCertificate = namedtuple('CoreCertificate', 'witness rows cols core rank')

# Outcome of reduce_wide / reduce_tall.  block is the B (resp. C) submatrix
# of T . A . Q found at rows x cols.
Reduction = namedtuple('Reduction', 'tag block rows cols witness')


def constant_left_kernel(A, S):
    """ Basis of the constant row vectors t with t . A[:, S] identically 0.

    Arguments
    ---------
    A : ACIMatrix
    S : iterable of int
        Column indices.

    Returns
    -------
    numpy array, one basis vector per row.

    """
    S = list(S)
    if not S:
        raise EmptySelection("column subset is empty")
    blocks = [A.column_block(j)[1] for j in S]
    return A.field.left_kernel(np.hstack(blocks))


def kernel_witness(A, S, kernel):
    """ Equivalence placing the kernel rows last and the columns of S first.
    """
    gf = A.field
    extension = gf.extend_to_basis(kernel, A.m)
    T = np.vstack([extension, kernel])
    chosen = list(S)
    Q = chosen + [j for j in range(A.n) if j not in chosen]
    return Equivalence(T, Q)


def search_zero_block(A, rho, budget=None):
    """ Scans column subsets for the zero block of a rank rho matrix.

    Subsets are scanned by increasing size s, then lexicographically.  The
    first S whose constant left kernel has dimension r >= 1 with
    (m - r) + (n - s) == rho wins.  Returns (r, s, Equivalence) or None.
    The constant rank of A is not checked.
    """
    budget = get_budget(budget)
    m, n = A.shape
    needed = 2**n - 1
    if needed > budget.subsets:
        raise SubsetBudgetExceeded(needed, budget.subsets)

    gf = A.field
    blocks = [A.column_block(j)[1] for j in range(n)]
    for s in range(1, n + 1):
        r = m + n - s - rho
        if r < 1 or r > m:
            continue
        for S in itertools.combinations(range(n), s):
            stacked = np.hstack([blocks[j] for j in S])
            if m - gf.rank(stacked) != r:
                continue
            kernel = gf.left_kernel(stacked)
            vprint("decompose: zero block {}x{} under columns {}", r, s,
                   [j + 1 for j in S])
            return r, s, kernel_witness(A, S, kernel)
    return None


def find_zero_block(A, rho, budget=None):
    """ Zero block 0_{r x s} of a constant rank rho < min(m, n) matrix.

    Returns (r, s, witness) where T . A . Q has an identically zero lower
    left r x s block, or None (which a constant rank input never produces).
    """
    m, n = A.shape
    if rho < 1 or rho >= min(m, n):
        raise NotConstantRank(
            "zero block search needs 1 <= rho < min(m, n), got rho={}".format(
                rho))
    if rank_set(A, budget).constant != rho:
        raise NotConstantRank("matrix does not have constant rank {}".format(
            rho))
    found = search_zero_block(A, rho, budget)
    if found is None:
        eprint("WARNING: no zero block found for a constant rank {} matrix, "
               "this is a verification failure".format(rho))
    return found


def _eliminate(rows, T, field, target, source, factor):
    """ rows[target] -= factor * rows[source], mirrored on T. """
    rows[target] = [
        a.sub(b.scale(factor, field), field)
        for a, b in zip(rows[target], rows[source])
    ]
    T[target] = field.sub(T[target], field.mul(factor, T[source]))


def pivot_reduce(A):
    """ Isolates variables on the diagonal by constant row operations.

    At step k the first variable found scanning rows k.. and columns k.. in
    row-major order (lowest name first inside an entry) is moved to position
    (k, k), then removed from every other row of its column.

    Returns (PivotPlacement, transformed ACIMatrix).
    """
    gf = A.field
    m, n = A.shape
    rows = [list(row) for row in A.entries]
    T = np.eye(m, dtype=np.int64)
    Q = list(range(n))
    pivots = []

    for k in range(min(m, n)):
        found = None
        for i in range(k, m):
            for j in range(k, n):
                names = rows[i][j].variables()
                if names:
                    found = (i, j, names[0])
                    break
            if found is not None:
                break
        if found is None:
            break

        i, j, name = found
        rows[k], rows[i] = rows[i], rows[k]
        T[[k, i]] = T[[i, k]]
        for row in rows:
            row[k], row[j] = row[j], row[k]
        Q[k], Q[j] = Q[j], Q[k]

        lead_inv = gf.inv(rows[k][k].coefficient(name))
        for r in range(m):
            coeff = rows[r][k].coefficient(name)
            if r != k and coeff:
                _eliminate(rows, T, gf, r, k, int(gf.mul(coeff, lead_inv)))
        pivots.append((name, k))
        vprint("decompose: pivot {} at ({}, {})", name, k + 1, k + 1)

    return PivotPlacement(pivots, Equivalence(T, Q)), ACIMatrix(gf, rows)


def _unit_row(A, size):
    """ Column j < size and row vector t over the first `size` rows with
    t . (column c) == 0 for the other c < size and t . (column j) == 1. """
    gf = A.field
    blocks = [A.column_block(c)[1][:size] for c in range(size)]
    for j in range(size):
        others = [blocks[c] for c in range(size) if c != j]
        stacked = np.hstack(others + [blocks[j][:, 1:]])
        for t in gf.left_kernel(stacked):
            value = gf.dot(t, blocks[j][:, 0])
            if value != 0:
                return j, gf.mul(gf.inv(value), t)
    return None


def triangularize_square(A):
    """ Witness bringing a square full rank matrix to unit upper triangular
    form.

    Each round finds a row combination t of the leading size x size block
    that kills all but one column j polynomially and evaluates to 1 on
    column j.  That row goes to the bottom of the block and column j to its
    right edge, then the block shrinks by one.
    """
    if A.m != A.n:
        raise NotSquareFullRank("{}x{} matrix is not square".format(
            A.m, A.n))
    gf = A.field
    n = A.n
    witness = Equivalence.identity(n, n)
    current = A
    for size in range(n, 0, -1):
        found = _unit_row(current, size)
        if found is None:
            raise NotSquareFullRank(
                "no unit row for the leading {0}x{0} block".format(size))
        j, t = found
        step_T = np.vstack([gf.extend_to_basis(t[None, :], size), t])
        order = [c for c in range(size) if c != j] + [j] + list(
            range(size, n))
        step = Equivalence(
            block_diagonal([step_T, np.eye(n - size, dtype=np.int64)]),
            order)
        current = apply_equivalence(current, step)
        witness = witness.then(step, gf)
    assert is_unit_upper_triangular(current, 0, 0, n)
    return witness


def is_unit_upper_triangular(A, row0, col0, size):
    """ Diagonal entries exactly 1 and entries below identically zero in the
    size x size block of A starting at (row0, col0). """
    for i in range(size):
        for j in range(i + 1):
            form = A.entry(row0 + i, col0 + j)
            if i == j:
                if form.terms or form.constant != 1:
                    return False
            elif not form.is_zero():
                return False
    return True


def unit_transform(field, v):
    """ Nonsingular T with T . v = e1.

    The first row is c * e_i where i is the last nonzero position of v and
    c = 1 / v_i (the least such functional lexicographically), the other
    rows are a basis of the vectors orthogonal to v.
    """
    v = np.asarray(v, dtype=np.int64)
    nonzero = np.nonzero(v)[0]
    if nonzero.size == 0:
        raise DimensionMismatch("v must be nonzero")
    i = int(nonzero[-1])
    first = np.zeros(v.size, dtype=np.int64)
    first[i] = field.inv(int(v[i]))
    rest = field.left_kernel(v[:, None])
    return np.vstack([first, rest])


def reduce_wide(A, budget=None):
    """ Greedy column deletion on a constant rank m < n matrix.

    Columns whose deletion keeps constant rank m are removed one at a time,
    rescanning from the first column after each removal.  The survivors
    form B at the top left: triangularized when square, minimal full rank
    otherwise.  Deleted columns follow B.
    """
    m, n = A.shape
    if not (m < n and rank_set(A, budget).constant == m):
        raise PreconditionViolated(
            "reduce_wide needs constant rank m < n, matrix is {}x{}".format(
                m, n))
    gf = A.field
    keep = list(range(n))
    changed = True
    while changed and len(keep) > m:
        changed = False
        for pos in range(len(keep)):
            trial = keep[:pos] + keep[pos + 1:]
            if has_constant_rank(submatrix(A, range(m), trial), m, budget):
                vprint("decompose: column {} deletable", keep[pos] + 1)
                keep = trial
                changed = True
                break

    deleted = [j for j in range(n) if j not in keep]
    if len(keep) == m:
        square = triangularize_square(submatrix(A, range(m), keep))
        witness = Equivalence(square.T, [keep[q] for q in square.Q] + deleted)
        tag = 'triangular'
    else:
        witness = Equivalence(np.eye(m, dtype=np.int64), keep + deleted)
        tag = 'minimal_fr'

    rows, cols = (0, m), (0, len(keep))
    block = submatrix(
        apply_equivalence(A, witness), range(*rows), range(*cols))
    return Reduction(tag, block, rows, cols, witness)


def reduce_tall(A, budget=None):
    """ Augment and strip loop on a constant rank n < m matrix.

    While the survivor S (the bottom rows) has an augmenting vector v, T
    with T . v = e1 is applied to S and its first row is moved out of S.
    What remains keeps constant rank n.  The final survivor is C at the
    bottom: triangularized when square, maximal full rank otherwise.
    """
    m, n = A.shape
    if not (n < m and rank_set(A, budget).constant == n):
        raise PreconditionViolated(
            "reduce_tall needs constant rank n < m, matrix is {}x{}".format(
                m, n))
    gf = A.field
    witness = Equivalence.identity(m, n)
    stripped = 0
    survivor = A
    while survivor.m > n:
        v = search_augmenting_vector(survivor, n, budget)
        if v is None:
            break
        T = block_diagonal(
            [np.eye(stripped, dtype=np.int64),
             unit_transform(gf, v)])
        witness = witness.with_rows(gf, T)
        stripped += 1
        vprint("decompose: stripped row, {} rows remain", m - stripped)
        survivor = submatrix(
            apply_equivalence(A, witness), range(stripped, m), range(n))

    if survivor.m == n:
        square = triangularize_square(survivor)
        T = block_diagonal([np.eye(stripped, dtype=np.int64), square.T])
        witness = witness.with_rows(gf, T).with_columns(square.Q)
        tag = 'triangular'
    else:
        tag = 'maximal_fr'

    rows, cols = (stripped, m), (0, n)
    block = submatrix(
        apply_equivalence(A, witness), range(*rows), range(*cols))
    return Reduction(tag, block, rows, cols, witness)


def _pivot_echoes(D, top, C):
    """ Row operations removing C's diagonal pivots from the rows of B.

    A pivot is a variable of a diagonal entry of C that appears in no other
    row of C within that column.  Returns the row transform.
    """
    gf = D.field
    m = D.m
    rows = [list(row) for row in D.entries]
    T = np.eye(m, dtype=np.int64)
    row0, col0 = C.rows[0], C.cols[0]
    for t in range(min(m - row0, C.cols[1] - col0)):
        i, j = row0 + t, col0 + t
        for name in rows[i][j].variables():
            isolated = all(
                rows[k][j].coefficient(name) == 0 for k in range(row0, m)
                if k != i)
            if not isolated:
                continue
            lead_inv = gf.inv(rows[i][j].coefficient(name))
            for k in range(top):
                coeff = rows[k][j].coefficient(name)
                if coeff:
                    _eliminate(rows, T, gf, k, i,
                               int(gf.mul(coeff, lead_inv)))
            break
    return T


def canonical_decomposition(A, budget=None):
    """ Block decomposition of a constant rank rho >= 1 matrix.

    Cases: "i" square full rank, "ii" rho = m < n, "iii" rho = n < m, and
    for rho < min(m, n) "iv-a" (both B and C), "iv-b" (only B, the zero
    block spans every column) or "iv-c" (only C, the zero block spans every
    row).
    """
    gf = A.field
    m, n = A.shape
    rho = rank_set(A, budget).constant
    if rho is None or rho < 1:
        raise NotConstantRank("canonical decomposition needs constant rank "
                              ">= 1")

    if rho == m == n:
        witness = triangularize_square(A)
        B = BlockDescriptor('triangular', (0, m), (0, n), m)
        return BlockDecomposition('i', None, None, B, ABSENT, witness, rho)

    if rho == m:
        wide = reduce_wide(A, budget)
        B = BlockDescriptor(wide.tag, wide.rows, wide.cols, m)
        return BlockDecomposition('ii', None, None, B, ABSENT, wide.witness,
                                  rho)

    if rho == n:
        tall = reduce_tall(A, budget)
        C = BlockDescriptor(tall.tag, tall.rows, tall.cols, n)
        return BlockDecomposition('iii', None, None, ABSENT, C, tall.witness,
                                  rho)

    if A.is_constant():
        _, witness = echelon_form(complete(A, {}))
        B = BlockDescriptor('triangular', (0, rho), (0, rho), rho)
        return BlockDecomposition('iv-b', m - rho, n, B, ABSENT, witness, rho)

    split = search_zero_block(A, rho, budget)
    if split is None:
        raise VerificationFailed(
            "no zero block found for constant rank {} < min(m, n)".format(rho))
    r, s, witness = split
    split_matrix = apply_equivalence(A, witness)
    top = m - r

    B = C = ABSENT
    if r < m:
        wide = reduce_wide(submatrix(split_matrix, range(top), range(s)),
                           budget)
        B = BlockDescriptor(wide.tag, wide.rows, wide.cols, top)
        T_b, Q_b = wide.witness.T, list(wide.witness.Q)
    else:
        T_b, Q_b = np.zeros((0, 0), dtype=np.int64), list(range(s))
    if s < n:
        tall = reduce_tall(
            submatrix(split_matrix, range(top, m), range(s, n)), budget)
        C = BlockDescriptor(tall.tag,
                            (top + tall.rows[0], m), (s, n), n - s)
        T_c, Q_c = tall.witness.T, [s + q for q in tall.witness.Q]
    else:
        T_c, Q_c = np.eye(r, dtype=np.int64), []

    blocks = Equivalence(block_diagonal([T_b, T_c]), Q_b + Q_c)
    witness = witness.then(blocks, gf)

    if B.tag != 'absent' and C.tag != 'absent':
        case = 'iv-a'
        echoes = _pivot_echoes(apply_equivalence(A, witness), top, C)
        witness = witness.with_rows(gf, echoes)
    elif B.tag != 'absent':
        case = 'iv-b'
    else:
        case = 'iv-c'

    return BlockDecomposition(case, r, s, B, C, witness, rho)


def echelon_form(M):
    """ Reduced row echelon form of a completed matrix, the canonical form
    of a constant matrix under equivalence once pivot columns are moved to
    the front.

    Returns (R, Equivalence) with R = T . M . Q = [I *; 0 0].
    """
    gf = M.field
    R, T, pivots = gf.row_reduce(M.array)
    Q = pivots + [j for j in range(M.n) if j not in pivots]
    return R[:, Q], Equivalence(T, Q)


def _permutation_matrix(order):
    P = np.zeros((len(order), len(order)), dtype=np.int64)
    for k, src in enumerate(order):
        P[k, src] = 1
    return P


def extract_core(A, budget=None, decomposition=None):
    """ A completely irreducible constant rank rho block at the top left of
    an equivalent matrix, with its certificate.

    The row and column order is rearranged so that B and C (whichever
    exist) meet at the top left as [B *; 0 C].  The certificate is checked
    with the classifier before it is returned.
    """
    if decomposition is None:
        decomposition = canonical_decomposition(A, budget)
    D = decomposition
    gf = A.field
    m, n = A.shape

    row_order = []
    col_order = []
    if D.B.tag != 'absent':
        row_order += list(range(*D.B.rows))
        col_order += list(range(*D.B.cols))
    if D.C.tag != 'absent':
        row_order += list(range(*D.C.rows))
        col_order += list(range(*D.C.cols))
    core_m, core_n = len(row_order), len(col_order)
    row_order += [i for i in range(m) if i not in row_order]
    col_order += [j for j in range(n) if j not in col_order]

    witness = D.witness.then(
        Equivalence(_permutation_matrix(row_order), col_order), gf)
    core = submatrix(apply_equivalence(A, witness), range(core_m),
                     range(core_n))

    verdict = classify(core, budget)
    if verdict.constant != D.rank or not verdict.completely_irreducible:
        raise VerificationFailed(
            "core of case {} is not completely irreducible of rank {}".format(
                D.case, D.rank))
    return CoreCertificate(witness, (0, core_m), (0, core_n), core, D.rank)


def _check_block(D0, block, deep, budget):
    if block.tag == 'absent':
        return
    sub = submatrix(D0, range(*block.rows), range(*block.cols))
    size_m, size_n = sub.shape
    if block.tag == 'triangular':
        if size_m != size_n or not is_unit_upper_triangular(sub, 0, 0,
                                                             size_m):
            raise VerificationFailed("block is not unit upper triangular")
        return
    if not deep:
        return
    verdict = classify(sub, budget)
    if block.tag == 'minimal_fr' and not verdict.minimal_fr:
        raise VerificationFailed("B block is not minimal full rank")
    if block.tag == 'maximal_fr' and not verdict.maximal_fr:
        raise VerificationFailed("C block is not maximal full rank")


def verify_decomposition(A, D, deep=False, budget=None):
    """ Re-checks a BlockDecomposition by applying its witness to A.

    The zero block must be identically zero, triangular blocks must have a
    unit diagonal with zeros below, and B rows plus C columns must add up to
    the rank.  With deep=True minimal and maximal blocks are re-classified.
    """
    D0 = apply_equivalence(A, D.witness)
    m, n = A.shape
    if D.r is not None:
        for i in range(m - D.r, m):
            for j in range(D.s):
                if not D0.entry(i, j).is_zero():
                    raise VerificationFailed(
                        "zero block entry ({}, {}) is not zero".format(
                            i + 1, j + 1))
    if D.B.rank + D.C.rank != D.rank:
        raise VerificationFailed("block ranks do not add up to {}".format(
            D.rank))
    if D.B.tag != 'absent' and D.B.rows[1] - D.B.rows[0] != D.B.rank:
        raise VerificationFailed("B rows differ from its rank")
    if D.C.tag != 'absent' and D.C.cols[1] - D.C.cols[0] != D.C.rank:
        raise VerificationFailed("C columns differ from its rank")
    if D.C.tag != 'absent' and D.C.rows[1] != m:
        raise VerificationFailed("C is not at the bottom")
    _check_block(D0, D.B, deep, budget)
    _check_block(D0, D.C, deep, budget)
    return True


def verify_core(A, certificate, budget=None):
    """ Re-checks a CoreCertificate by multiplication and classification. """
    D0 = apply_equivalence(A, certificate.witness)
    core = submatrix(D0, range(*certificate.rows), range(*certificate.cols))
    if core != certificate.core:
        raise VerificationFailed("core differs from T . A . Q")
    verdict = classify(core, budget)
    if verdict.constant != certificate.rank or \
            not verdict.completely_irreducible:
        raise VerificationFailed("core is not completely irreducible")
    return True
