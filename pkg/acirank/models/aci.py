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
import re

import numpy as np

from ..errors import CrossColumnVariable, EmptyMatrix, InvalidVariable, \
        DimensionMismatch, EmptySelection, IndexOutOfRange, \
        MissingAssignment, ForeignAssignment, SingularT, FieldMismatch
from .gf import FieldElement
""" Core classes for modelling ACI-matrices.

An ACI-matrix is a grid of affine forms (entries of degree at most one) in
which no variable appears in two different columns.  Field values are stored
as canonical element indices of the owning GF.
"""

VARIABLE_RE = re.compile(r'^[A-Za-z][A-Za-z0-9]*$')


def check_variable(name):
    if not isinstance(name, str) or not VARIABLE_RE.match(name):
        raise InvalidVariable("{!r} is not a valid variable name".format(name))
    return name


def _value(field, value):
    if isinstance(value, FieldElement):
        if value.field != field:
            raise FieldMismatch("{} element used over {}".format(
                value.field, field))
        return value.value
    value = int(value)
    assert 0 <= value < field.q, value
    return value


class AffineForm(namedtuple('AffineForm', 'constant terms')):
    """ One matrix entry: constant + sum of coefficient * variable.

    Arguments
    ---------
    constant : int
        Element index of the constant term.
    terms : tuple of (str, int)
        Variable name and nonzero coefficient pairs, sorted by name.

    >>> from acirank.models.gf import field_make
    >>> F2 = field_make(2)
    >>> form = AffineForm.build(F2, 1, [('x3', 1)])
    >>> form.to_string(F2)
    'x3+1'
    >>> form.add(AffineForm.var('x3'), F2).to_string(F2)
    '1'

    """

    @classmethod
    def build(cls, field, constant=0, terms=()):
        merged = {}
        for name, coeff in terms:
            check_variable(name)
            coeff = _value(field, coeff)
            merged[name] = int(field.add(merged.get(name, 0), coeff))
        return cls(
            int(_value(field, constant)),
            tuple((name, merged[name]) for name in sorted(merged)
                  if merged[name] != 0))

    @classmethod
    def const(cls, value):
        return cls(int(value), ())

    @classmethod
    def var(cls, name, coeff=1):
        return cls(0, ((check_variable(name), int(coeff)), ))

    def variables(self):
        return tuple(name for name, _ in self.terms)

    def coefficient(self, name):
        for var, coeff in self.terms:
            if var == name:
                return coeff
        return 0

    def is_zero(self):
        return self.constant == 0 and not self.terms

    def is_constant(self):
        return not self.terms

    def add(self, other, field):
        return AffineForm.build(field,
                                int(field.add(self.constant, other.constant)),
                                self.terms + other.terms)

    def scale(self, factor, field):
        factor = _value(field, factor)
        return AffineForm.build(
            field, int(field.mul(factor, self.constant)),
            [(name, int(field.mul(factor, coeff)))
             for name, coeff in self.terms])

    def sub(self, other, field):
        return self.add(other.scale(int(field.neg(1)), field), field)

    def evaluate(self, assignment, field):
        acc = self.constant
        for name, coeff in self.terms:
            acc = field.add(acc, field.mul(coeff, assignment[name]))
        return int(acc)

    def to_string(self, field):
        """ Canonical text: variables in order, coefficient 1 omitted,
        constant term last. """
        parts = []
        for name, coeff in self.terms:
            if coeff == 1:
                parts.append(name)
            else:
                parts.append("{}*{}".format(field.format_element(coeff), name))
        if self.constant != 0 or not parts:
            parts.append(field.format_element(self.constant))
        return "+".join(parts)


ZERO_FORM = AffineForm(0, ())


class ACIMatrix(object):
    """ An m x n affine column independent matrix over `field`.

    Construction validates the grid: it must be rectangular and nonempty,
    and no variable may appear in two different columns.
    """

    def __init__(self, field, entries):
        rows = tuple(tuple(row) for row in entries)
        if not rows or not rows[0]:
            raise EmptyMatrix("matrices need at least one row and column")
        n = len(rows[0])
        for row in rows:
            if len(row) != n:
                raise DimensionMismatch("rows have different lengths")
            for form in row:
                assert isinstance(form, AffineForm), form

        owner = {}
        column_vars = []
        for j in range(n):
            names = set()
            for row in rows:
                names.update(row[j].variables())
            for name in names:
                if name in owner:
                    raise CrossColumnVariable(name, owner[name], j)
                owner[name] = j
            column_vars.append(tuple(sorted(names)))

        self.field = field
        self.entries = rows
        self.m = len(rows)
        self.n = n
        self.column_vars = tuple(column_vars)
        self.variables = tuple(sorted(owner))
        self.variable_column = owner
        self._compiled = None

    def __eq__(self, other):
        return isinstance(other, ACIMatrix) and self.field == other.field \
                and self.entries == other.entries

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.field, self.entries))

    def __repr__(self):
        return "ACIMatrix({}, {}x{}, {} variables)".format(
            self.field, self.m, self.n, len(self.variables))

    @property
    def shape(self):
        return (self.m, self.n)

    @property
    def num_completions(self):
        return self.field.q**len(self.variables)

    def entry(self, i, j):
        return self.entries[i][j]

    def row(self, i):
        return self.entries[i]

    def column(self, j):
        return tuple(row[j] for row in self.entries)

    def is_constant(self):
        return not self.variables

    def is_zero(self):
        return all(form.is_zero() for row in self.entries for form in row)

    def column_block(self, j):
        """ Constant matrix of column j: the constant column followed by one
        coefficient column per variable of the column, in name order. """
        names = self.column_vars[j]
        block = np.zeros((self.m, 1 + len(names)), dtype=np.int64)
        for i, form in enumerate(self.column(j)):
            block[i, 0] = form.constant
            for name, coeff in form.terms:
                block[i, 1 + names.index(name)] = coeff
        return names, block

    @classmethod
    def from_column_blocks(cls, field, blocks):
        """ Inverse of column_block, blocks is a list of (names, array). """
        m = blocks[0][1].shape[0]
        rows = []
        for i in range(m):
            row = []
            for names, block in blocks:
                terms = tuple((name, int(block[i, 1 + k]))
                              for k, name in enumerate(names)
                              if block[i, 1 + k] != 0)
                row.append(AffineForm(int(block[i, 0]), terms))
            rows.append(row)
        return cls(field, rows)

    def compiled(self):
        """ Arrays used by the completion engines.

        Returns (constants, columns, coefficients) where constants is the
        m x n constant part, and for the k-th variable (name order)
        columns[k] is its column and coefficients[k] its coefficient vector.
        """
        if self._compiled is None:
            constants = np.array(
                [[form.constant for form in row] for row in self.entries],
                dtype=np.int64)
            columns = np.array(
                [self.variable_column[name] for name in self.variables],
                dtype=np.int64)
            coefficients = np.zeros((len(self.variables), self.m),
                                    dtype=np.int64)
            index = {name: k for k, name in enumerate(self.variables)}
            for i, row in enumerate(self.entries):
                for form in row:
                    for name, coeff in form.terms:
                        coefficients[index[name], i] = coeff
            self._compiled = (constants, columns, coefficients)
        return self._compiled

    def to_string(self):
        rows = []
        for row in self.entries:
            rows.append(", ".join(form.to_string(self.field) for form in row))
        return "[ " + " ; ".join(rows) + " ]"


def validate(field, raw):
    """ Validates a candidate grid of AffineForm into an ACIMatrix. """
    return ACIMatrix(field, raw)


def constant_aci(field, values):
    """ ACIMatrix without variables from a grid of element indices. """
    return ACIMatrix(field, [[AffineForm.const(int(v)) for v in row]
                             for row in np.asarray(values)])


def zero_aci(field, m, n):
    return ACIMatrix(field, [[ZERO_FORM] * n for _ in range(m)])


class ConstantMatrix(namedtuple('ConstantMatrix', 'field values')):
    """ A completed matrix, values is a tuple of rows of element indices. """

    @classmethod
    def from_array(cls, field, array):
        return cls(field, tuple(tuple(int(v) for v in row) for row in array))

    @property
    def m(self):
        return len(self.values)

    @property
    def n(self):
        return len(self.values[0])

    @property
    def array(self):
        return np.array(self.values, dtype=np.int64)


def complete(A, completion):
    """ Evaluates every entry of A under a total assignment.

    Arguments
    ---------
    A : ACIMatrix
    completion : dict
        Variable name to element index or FieldElement, defined exactly on
        the variables of A.

    """
    for name in A.variables:
        if name not in completion:
            raise MissingAssignment(name)
    for name in completion:
        if name not in A.variable_column:
            raise ForeignAssignment(name)
    assignment = {
        name: _value(A.field, value)
        for name, value in completion.items()
    }
    return ConstantMatrix(A.field,
                          tuple(
                              tuple(
                                  form.evaluate(assignment, A.field)
                                  for form in row) for row in A.entries))


class Equivalence(object):
    """ Witness (T, Q) of B = T . A . Q.

    T is a nonsingular m x m constant matrix.  Q is a column permutation in
    one-line form: column j of B is column Q[j] of T . A.
    """

    def __init__(self, T, Q):
        T = np.array(T, dtype=np.int64)
        if T.ndim != 2 or T.shape[0] != T.shape[1]:
            raise DimensionMismatch("T must be square")
        Q = tuple(int(j) for j in Q)
        if sorted(Q) != list(range(len(Q))):
            raise DimensionMismatch("Q is not a permutation")
        T.setflags(write=False)
        self.T = T
        self.Q = Q

    @classmethod
    def identity(cls, m, n):
        return cls(np.eye(m, dtype=np.int64), range(n))

    @property
    def m(self):
        return self.T.shape[0]

    @property
    def n(self):
        return len(self.Q)

    def __eq__(self, other):
        return isinstance(other, Equivalence) and self.Q == other.Q and \
                np.array_equal(self.T, other.T)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "Equivalence(T={}, Q={})".format(self.T.tolist(), list(self.Q))

    def then(self, other, field):
        """ The equivalence applying self first and other second. """
        assert self.m == other.m and self.n == other.n
        return Equivalence(
            field.matmul(other.T, self.T), [self.Q[j] for j in other.Q])

    def with_rows(self, field, T):
        """ Left-multiplies the witness by another row transform. """
        return Equivalence(field.matmul(T, self.T), self.Q)

    def with_columns(self, Q):
        """ Follows the witness by a further column permutation. """
        return Equivalence(self.T, [self.Q[j] for j in Q])


def compose_equivalences(field, first, second):
    """ second o first: apply(A, result) == apply(apply(A, first), second). """
    return first.then(second, field)


def block_diagonal(blocks):
    """ Block diagonal square matrix from a list of square numpy blocks. """
    size = sum(block.shape[0] for block in blocks)
    out = np.zeros((size, size), dtype=np.int64)
    offset = 0
    for block in blocks:
        k = block.shape[0]
        out[offset:offset + k, offset:offset + k] = block
        offset += k
    return out


def apply_equivalence(A, E):
    """ Computes T . A . Q symbolically. """
    if E.m != A.m or E.n != A.n:
        raise DimensionMismatch("witness is {}x{}, matrix is {}x{}".format(
            E.m, E.n, A.m, A.n))
    if A.field.rank(E.T) != A.m:
        raise SingularT("T is singular over {}".format(A.field))
    blocks = []
    for src in E.Q:
        names, block = A.column_block(src)
        blocks.append((names, A.field.matmul(E.T, block)))
    return ACIMatrix.from_column_blocks(A.field, blocks)


def _check_indices(indices, size, what):
    indices = [int(i) for i in indices]
    if not indices:
        raise EmptySelection("no {} selected".format(what))
    for i in indices:
        if i < 0 or i >= size:
            raise IndexOutOfRange("{} index {} outside 0..{}".format(
                what, i, size - 1))
    return indices


def submatrix(A, rows, cols):
    rows = _check_indices(rows, A.m, "row")
    cols = _check_indices(cols, A.n, "column")
    return ACIMatrix(A.field, [[A.entries[i][j] for j in cols] for i in rows])


def delete_row(A, i):
    """ A without row i, None when nothing would be left. """
    if A.m == 1:
        return None
    return submatrix(A, [r for r in range(A.m) if r != i], range(A.n))


def delete_column(A, j):
    """ A without column j, None when nothing would be left. """
    if A.n == 1:
        return None
    return submatrix(A, range(A.m), [c for c in range(A.n) if c != j])


def augment(A, v):
    """ [A v] for a constant column v of length m. """
    v = [_value(A.field, value) for value in v]
    if len(v) != A.m:
        raise DimensionMismatch("vector has length {}, matrix has {} rows".
                                format(len(v), A.m))
    return ACIMatrix(A.field, [
        list(row) + [AffineForm.const(value)]
        for row, value in zip(A.entries, v)
    ])


def hstack(left, right):
    if left.field != right.field:
        raise FieldMismatch("blocks are over different fields")
    if left.m != right.m:
        raise DimensionMismatch("blocks have different row counts")
    return ACIMatrix(left.field, [
        list(a) + list(b) for a, b in zip(left.entries, right.entries)
    ])


def vstack(top, bottom):
    if top.field != bottom.field:
        raise FieldMismatch("blocks are over different fields")
    if top.n != bottom.n:
        raise DimensionMismatch("blocks have different column counts")
    return ACIMatrix(top.field, list(top.entries) + list(bottom.entries))


def rename_variables(A, mapping):
    """ Renames variables, names missing from mapping are kept. """
    return ACIMatrix(A.field, [[
        AffineForm.build(A.field, form.constant,
                         [(mapping.get(name, name), coeff)
                          for name, coeff in form.terms]) for form in row
    ] for row in A.entries])


def is_partial_matrix(A):
    """ True if every entry is a constant or a bare variable (coefficient 1,
    no constant term) and no variable is repeated. """
    seen = set()
    for row in A.entries:
        for form in row:
            if form.is_constant():
                continue
            if form.constant != 0 or len(form.terms) != 1 or \
                    form.terms[0][1] != 1:
                return False
            name = form.terms[0][0]
            if name in seen:
                return False
            seen.add(name)
    return True


def random_nonsingular(field, size, rng):
    while True:
        T = rng.integers(0, field.q, size=(size, size))
        if field.rank(T) == size:
            return T.astype(np.int64)


def random_equivalence(field, m, n, rng):
    return Equivalence(random_nonsingular(field, m, rng), rng.permutation(n))


def random_aci(field, m, n, rng, max_vars=6, density=0.5, prefix="z"):
    """ Random ACI-matrix with at most max_vars variables.

    Each entry gets a random constant and, with probability `density`, one
    term whose variable is either new or already owned by the same column.
    """
    rows = [[None] * n for _ in range(m)]
    owned = [[] for _ in range(n)]
    count = 0
    for i in range(m):
        for j in range(n):
            terms = []
            if rng.random() < density:
                if owned[j] and (count >= max_vars or rng.random() < 0.5):
                    name = owned[j][int(rng.integers(len(owned[j])))]
                elif count < max_vars:
                    count += 1
                    name = "{}{}".format(prefix, count)
                    owned[j].append(name)
                else:
                    name = None
                if name is not None:
                    terms.append((name, int(rng.integers(1, field.q))))
            rows[i][j] = AffineForm.build(field, int(rng.integers(field.q)),
                                          terms)
    return ACIMatrix(field, rows)
