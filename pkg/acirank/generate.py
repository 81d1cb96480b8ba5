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

from .classify import classify
from .errors import FieldMismatch, InfeasibleShape, NotClassified, \
        VariableClash
from .lib.utils import vprint
from .models.aci import ACIMatrix, AffineForm, ZERO_FORM, \
        apply_equivalence, random_equivalence, rename_variables
""" Builders for constant rank ACI-matrices.

The minimal and maximal full rank families exist over every finite field,
compose_blocks stacks two full rank blocks as [A11 A12; 0 A22] and predicts
whether the result is completely irreducible, and gen_constant_rank produces
random matrices with a known constant rank for tests and the `gen`
subcommand.
"""

# (A11 kind, A22 kind) -> case of the composition table.
COMPOSITION_CASES = {
    ('square', 'square'): 'i',
    ('square', 'minimal'): 'ii',
    ('square', 'maximal'): 'iii',
    ('minimal', 'square'): 'iv',
    ('minimal', 'minimal'): 'v',
    ('minimal', 'maximal'): 'vi',
    ('maximal', 'square'): 'vii',
    ('maximal', 'minimal'): 'viii',
    ('maximal', 'maximal'): 'ix',
}

# Cases that are always completely irreducible, the others must be computed.
ALWAYS_CI = frozenset(['i', 'iii', 'iv', 'vi', 'vii', 'ix'])

Composition = namedtuple('Composition', 'matrix case kinds predicted')


class FreshNames(object):
    """ Variable names prefix1, prefix2, ... that are not in `used`.

    >>> names = FreshNames(['t2'])
    >>> [names.next() for _ in range(3)]
    ['t1', 't3', 't4']

    """

    def __init__(self, used=(), prefix="t"):
        self.used = set(used)
        self.prefix = prefix
        self.counter = itertools.count(1)
        self.issued = 0

    def next(self):
        while True:
            name = "{}{}".format(self.prefix, next(self.counter))
            if name not in self.used:
                self.used.add(name)
                self.issued += 1
                return name


def minimal_gadget(field):
    """ The 2 x (q+1) minimal full rank matrix

        [ 1+f1*x1  ...  1+fq*xq  x(q+1) ]
        [ x1       ...  xq       1      ]

    with f1..fq the elements of the field in canonical order.
    """
    q = field.q
    top = [
        AffineForm.build(field, 1, [("x{}".format(i + 1), f)])
        for i, f in enumerate(field.elements())
    ]
    top.append(AffineForm.var("x{}".format(q + 1)))
    bottom = [AffineForm.var("x{}".format(i + 1)) for i in range(q)]
    bottom.append(AffineForm.const(1))
    return ACIMatrix(field, [top, bottom])


def maximal_gadget(field):
    """ The 2q x (q+1) maximal full rank matrix [I_q | x(q+1) - f ; D | 1]
    where D = diag(x1, ..., xq). """
    q = field.q
    last = "x{}".format(q + 1)
    rows = []
    for i, f in enumerate(field.elements()):
        row = [AffineForm.const(1 if c == i else 0) for c in range(q)]
        row.append(AffineForm.build(field, int(field.neg(f)), [(last, 1)]))
        rows.append(row)
    for i in range(q):
        row = [ZERO_FORM] * q
        row[i] = AffineForm.var("x{}".format(i + 1))
        rows.append(row + [AffineForm.const(1)])
    return ACIMatrix(field, rows)


class _Filler(object):
    """ Random entries with fresh variables, at most max_vars of them. """

    def __init__(self, field, rng, names, density, max_vars):
        self.field = field
        self.rng = rng
        self.names = names
        self.density = density
        self.max_vars = max_vars

    def entry(self, constant=None):
        if constant is None:
            constant = int(self.rng.integers(self.field.q))
        terms = []
        room = self.max_vars is None or self.names.issued < self.max_vars
        if room and self.rng.random() < self.density:
            terms.append((self.names.next(),
                          int(self.rng.integers(1, self.field.q))))
        return AffineForm.build(self.field, constant, terms)

    def grid(self, m, n):
        return [[self.entry() for _ in range(n)] for _ in range(m)]

    def unit_triangular(self, size):
        """ Unit diagonal, zeros below, random entries above. """
        return [[
            self.entry() if j > i else AffineForm.const(1 if i == j else 0)
            for j in range(size)
        ] for i in range(size)]


def _place(grid, block, row0, col0):
    for i, row in enumerate(block):
        for j, form in enumerate(row):
            grid[row0 + i][col0 + j] = form


def _gadget(builder, field, names):
    gadget = builder(field)
    mapping = {name: names.next() for name in gadget.variables}
    return [list(row) for row in rename_variables(gadget, mapping).entries]


def _minimal_fits(field, rows, cols):
    return rows >= 2 and cols >= field.q + 1 + (rows - 2)


def _maximal_fits(field, rows, cols):
    q = field.q
    return cols >= q + 1 and rows >= 2 * q + (cols - q - 1)


def full_row_block(filler, rows, cols, gadget=False):
    """ rows x cols grid of constant rank rows (rows <= cols).

    [G * ; 0 U] with G the minimal gadget when requested, U unit upper
    triangular, followed by random columns.
    """
    field = filler.field
    grid = [[ZERO_FORM] * cols for _ in range(rows)]
    used = 0
    top = 0
    if gadget:
        assert _minimal_fits(field, rows, cols)
        _place(grid, _gadget(minimal_gadget, field, filler.names), 0, 0)
        used = field.q + 1
        top = 2
        for i in range(2):
            for j in range(used, cols):
                grid[i][j] = filler.entry()
    _place(grid, filler.unit_triangular(rows - top), top, used)
    for i in range(top, rows):
        for j in range(used + rows - top, cols):
            grid[i][j] = filler.entry()
    return grid


def full_column_block(filler, rows, cols, gadget=False):
    """ rows x cols grid of constant rank cols (cols <= rows).

    Random rows on top of [U * ; 0 G] with U unit upper triangular and G the
    maximal gadget when requested.
    """
    field = filler.field
    grid = [[ZERO_FORM] * cols for _ in range(rows)]
    core_cols = field.q + 1 if gadget else 0
    core_rows = 2 * field.q if gadget else 0
    size = cols - core_cols
    extra = rows - size - core_rows
    assert extra >= 0
    for i in range(extra):
        for j in range(cols):
            grid[i][j] = filler.entry()
    _place(grid, filler.unit_triangular(size), extra, 0)
    for i in range(extra, extra + size):
        for j in range(size, cols):
            grid[i][j] = filler.entry()
    if gadget:
        _place(grid, _gadget(maximal_gadget, field, filler.names),
               extra + size, size)
    return grid


def _layouts(m, n, rho, field, gadget):
    """ Values of rho1 whose [B X; 0 C] layout can hold the gadget. """
    choices = []
    for rho1 in range(rho + 1):
        rho2 = rho - rho1
        r, s = m - rho1, n - rho2
        if gadget == 'minimal' and not _minimal_fits(field, rho1, s):
            continue
        if gadget == 'maximal' and not _maximal_fits(field, r, rho2):
            continue
        choices.append(rho1)
    return choices


def gen_constant_rank(m,
                      n,
                      rho,
                      field,
                      seed=None,
                      gadget=None,
                      max_vars=None,
                      density=0.3,
                      scramble=True):
    """ Random m x n ACI-matrix of constant rank rho.

    The matrix is laid out as [B X; 0 C] where B has full row rank rho1, C
    has full column rank rho2 and rho1 + rho2 = rho, then a random
    equivalence is applied (unless scramble is False).

    Arguments
    ---------
    m, n, rho : int
    field : GF
    seed : int, optional
        Seed of the numpy generator, equal seeds give equal matrices.
    gadget : None, 'minimal' or 'maximal'
        Embed the minimal (resp. maximal) full rank family of the field.
    max_vars : int, optional
        Cap on the number of random variables, gadget variables excluded.
    density : float
        Probability that a random entry carries a variable.

    """
    if not 1 <= rho <= min(m, n):
        raise InfeasibleShape("rank {} impossible for a {}x{} matrix".format(
            rho, m, n))
    if gadget not in (None, 'minimal', 'maximal'):
        raise InfeasibleShape("unknown gadget {!r}".format(gadget))

    rng = np.random.default_rng(seed)
    names = FreshNames()
    limit = None
    if max_vars is not None:
        limit = max_vars + (field.q + 1 if gadget else 0)
    filler = _Filler(field, rng, names, density, limit)

    choices = _layouts(m, n, rho, field, gadget)
    if not choices:
        raise InfeasibleShape(
            "no {}x{} layout of rank {} over {} fits gadget {}".format(
                m, n, rho, field, gadget))

    rho1 = choices[int(rng.integers(len(choices)))]
    rho2 = rho - rho1
    r, s = m - rho1, n - rho2
    vprint("generate: rho1={} rho2={} zero block {}x{}", rho1, rho2, r, s)

    grid = [[ZERO_FORM] * n for _ in range(m)]
    if rho1:
        _place(grid,
               full_row_block(filler, rho1, s, gadget == 'minimal'), 0, 0)
        for i in range(rho1):
            for j in range(s, n):
                grid[i][j] = filler.entry()
    if rho2:
        _place(grid,
               full_column_block(filler, r, rho2, gadget == 'maximal'), rho1,
               s)

    A = ACIMatrix(field, grid)
    if scramble:
        A = apply_equivalence(A, random_equivalence(field, m, n, rng))
    return A


def _kind(verdict):
    if verdict.square_fr:
        return 'square'
    if verdict.minimal_fr:
        return 'minimal'
    if verdict.maximal_fr:
        return 'maximal'
    return None


def compose_blocks(A11, A22, filler='zeros', seed=None, budget=None):
    """ Builds [A11 A12; 0 A22] and looks up its composition case.

    Arguments
    ---------
    A11, A22 : ACIMatrix
        Square, minimal or maximal full rank blocks with disjoint variables.
    filler : 'zeros' or 'random'
        A12 is zero, or random constants plus fresh variables named t1, t2,
        ... (skipping names already in use).

    Returns
    -------
    Composition(matrix, case, kinds, predicted) where predicted is True for
    the cases that are always completely irreducible and None otherwise.

    """
    if A11.field != A22.field:
        raise FieldMismatch("blocks are over {} and {}".format(
            A11.field, A22.field))
    clash = set(A11.variables) & set(A22.variables)
    if clash:
        raise VariableClash("blocks share variables {}".format(
            ", ".join(sorted(clash))))

    kinds = []
    for name, block in (("A11", A11), ("A22", A22)):
        kind = _kind(classify(block, budget))
        if kind is None:
            raise NotClassified(
                "{} is not square, minimal or maximal full rank".format(name))
        kinds.append(kind)
    kinds = tuple(kinds)

    field = A11.field
    if filler == 'zeros':
        top_right = [[ZERO_FORM] * A22.n for _ in range(A11.m)]
    elif filler == 'random':
        names = FreshNames(set(A11.variables) | set(A22.variables))
        fill = _Filler(field, np.random.default_rng(seed), names, 0.5, None)
        top_right = fill.grid(A11.m, A22.n)
    else:
        raise ValueError("unknown filler {!r}".format(filler))

    rows = [list(a) + b for a, b in zip(A11.entries, top_right)]
    rows += [[ZERO_FORM] * A11.n + list(c) for c in A22.entries]

    case = COMPOSITION_CASES[kinds]
    predicted = True if case in ALWAYS_CI else None
    return Composition(ACIMatrix(field, rows), case, kinds, predicted)
