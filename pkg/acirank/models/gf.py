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
import functools

import numpy as np

from ..errors import NotPrime, ReducibleModPoly, NoDefaultPoly, \
        InvalidFieldSpec, ZeroInverse, FieldMismatch, UnknownFieldElement, \
        SingularT
""" Exact arithmetic over finite fields F_q, q = p^k.

Elements are identified with their index in the canonical order: the digit
vector (c0, ..., c_{k-1}) of the residue polynomial c0 + c1 g + ... is read as
a base-p integer.  Engines work directly on numpy arrays of indices and use
the add/mul lookup tables of a GF instance, FieldElement is the value type
handed out by the public API.
"""

# Largest field order for which lookup tables are built.
MAX_FIELD_ORDER = 2**12

# Conway polynomials, coefficients from the constant term up.
DEFAULT_MODPOLYS = {
    4: (2, 2, (1, 1, 1)),
    8: (2, 3, (1, 1, 0, 1)),
    9: (3, 2, (2, 2, 1)),
    16: (2, 4, (1, 1, 0, 0, 1)),
    25: (5, 2, (2, 4, 1)),
    27: (3, 3, (1, 2, 0, 1)),
}


def is_prime(n):
    """
    >>> [v for v in range(12) if is_prime(v)]
    [2, 3, 5, 7, 11]
    """
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_power(q):
    """ Splits q into (p, k) with q = p^k, or returns None.

    >>> prime_power(9)
    (3, 2)
    >>> prime_power(12) is None
    True

    """
    if q < 2:
        return None
    p = 2
    while q % p != 0:
        p += 1
    k = 0
    rest = q
    while rest % p == 0:
        rest //= p
        k += 1
    if rest != 1:
        return None
    return p, k


def poly_mod(num, den, p):
    """ Remainder of num modulo den over F_p, coefficient lists constant first.

    >>> poly_mod([1, 1, 1], [1, 1], 2)
    [1]

    """
    num = [c % p for c in num]
    den = [c % p for c in den]
    while den and den[-1] == 0:
        den.pop()
    assert den, "division by the zero polynomial"
    lead_inv = pow(den[-1], p - 2, p)
    while len(num) >= len(den):
        factor = (num[-1] * lead_inv) % p
        shift = len(num) - len(den)
        if factor:
            for i, c in enumerate(den):
                num[shift + i] = (num[shift + i] - factor * c) % p
        num.pop()
    while num and num[-1] == 0:
        num.pop()
    return num


def monic_polys(p, degree):
    """ Yields every monic polynomial of the given degree over F_p. """
    for index in range(p**degree):
        coeffs = []
        for _ in range(degree):
            coeffs.append(index % p)
            index //= p
        yield coeffs + [1]


def is_irreducible(modpoly, p):
    """ Trial division by every monic polynomial of degree <= k/2.

    >>> is_irreducible([1, 1, 1], 2)
    True
    >>> is_irreducible([1, 0, 1], 2)
    False

    """
    k = len(modpoly) - 1
    for degree in range(1, k // 2 + 1):
        for divisor in monic_polys(p, degree):
            if not poly_mod(modpoly, divisor, p):
                return False
    return True


class GF(object):
    """ The field F_q with precomputed lookup tables.

    Build instances through field_make, which validates the parameters and
    caches one instance per field.

    Arguments
    ---------
    p : int
        Prime characteristic.
    k : int
        Extension degree.
    modpoly : tuple of int or None
        Monic irreducible polynomial of degree k, constant term first.

    """

    def __init__(self, p, k, modpoly):
        self.p = p
        self.k = k
        self.modpoly = modpoly
        self.q = p**k

        self._weights = p**np.arange(k, dtype=np.int64)
        self._digits = (np.arange(self.q, dtype=np.int64)[:, None] //
                        self._weights[None, :]) % p

        if k == 1:
            values = np.arange(p, dtype=np.int64)
            self.add_table = np.add.outer(values, values) % p
            self.mul_table = np.multiply.outer(values, values) % p
        else:
            self.add_table = (
                (self._digits[:, None, :] + self._digits[None, :, :]) % p
            ) @ self._weights
            self.mul_table = self._build_extension_mul()

        self.neg_table = np.argmax(self.add_table == 0, axis=1)
        self.inv_table = np.argmax(self.mul_table == 1, axis=1)
        self.inv_table[0] = 0
        self.sub_table = self.add_table[:, self.neg_table]

    def _build_extension_mul(self):
        p, k = self.p, self.k
        mul = np.zeros((self.q, self.q), dtype=np.int64)
        for a in range(self.q):
            prod = np.zeros((self.q, 2 * k - 1), dtype=np.int64)
            for i in range(k):
                if self._digits[a, i]:
                    prod[:, i:i + k] += self._digits[a, i] * self._digits
            prod %= p
            # g^k = -(c0 + c1 g + ... + c_{k-1} g^{k-1})
            for d in range(2 * k - 2, k - 1, -1):
                lead = prod[:, d].copy()
                for t in range(k):
                    prod[:, d - k + t] -= lead * self.modpoly[t]
                prod[:, d] = 0
                prod %= p
            mul[a] = prod[:, :k] @ self._weights
        return mul

    @property
    def key(self):
        return (self.p, self.k, self.modpoly)

    def __eq__(self, other):
        return isinstance(other, GF) and self.key == other.key

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        if self.k == 1:
            return "GF({})".format(self.p)
        return "GF({}^{}, {})".format(self.p, self.k, list(self.modpoly))

    def __str__(self):
        return "F_{}".format(self.q)

    def __reduce__(self):
        return (field_make, (self.p, self.k, self.modpoly))

    def is_default_poly(self):
        if self.k == 1:
            return True
        default = DEFAULT_MODPOLYS.get(self.q)
        return default is not None and default[2] == self.modpoly

    def digits(self, value):
        return tuple(int(d) for d in self._digits[value])

    def from_digits(self, digits):
        assert len(digits) == self.k
        return int(sum(int(d) * int(w) for d, w in zip(digits, self._weights)))

    def elements(self):
        return range(self.q)

    def reduce_int(self, value):
        """ Maps an integer onto the prime subfield. """
        return int(value) % self.p

    def format_element(self, value):
        """ Token for one element: plain integer in the prime subfield,
        'g:' plus base-p digits (most significant first) otherwise. """
        value = int(value)
        if value < self.p:
            return str(value)
        return "g:" + np.base_repr(value, self.p).lower()

    def parse_element(self, token):
        if token.startswith("g:"):
            digits = token[2:]
            try:
                value = int(digits, self.p)
            except ValueError:
                raise UnknownFieldElement(
                    "{} is not a base-{} digit string".format(token, self.p))
            if not digits or value >= self.q:
                raise UnknownFieldElement("{} is not an element of {}".format(
                    token, self))
            return value
        try:
            return self.reduce_int(int(token))
        except ValueError:
            raise UnknownFieldElement(
                "{} is not a field element".format(token))

    # Scalar and elementwise arithmetic on indices or numpy arrays of them.
    def add(self, a, b):
        return self.add_table[a, b]

    def sub(self, a, b):
        return self.sub_table[a, b]

    def mul(self, a, b):
        return self.mul_table[a, b]

    def neg(self, a):
        return self.neg_table[a]

    def inv(self, a):
        if np.any(np.asarray(a) == 0):
            raise ZeroInverse("0 has no multiplicative inverse")
        return self.inv_table[a]

    def dot(self, u, v):
        acc = 0
        for a, b in zip(u, v):
            acc = self.add_table[acc, self.mul_table[a, b]]
        return int(acc)

    # Constant matrix algebra.
    def matmul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        assert a.shape[1] == b.shape[0], (a.shape, b.shape)
        out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
        for j in range(a.shape[1]):
            out = self.add_table[out, self.mul_table[a[:, j][:, None],
                                                     b[j][None, :]]]
        return out

    def row_reduce(self, matrix):
        """ Reduced row echelon form with the accumulated row transform.

        Returns (R, T, pivots) with T nonsingular, T . matrix = R and pivots
        the pivot column of each nonzero row of R.

        >>> gf = field_make(2)
        >>> R, T, pivots = gf.row_reduce([[0, 1], [1, 1]])
        >>> R.tolist(), pivots
        ([[1, 0], [0, 1]], [0, 1])

        """
        reduced = np.array(matrix, dtype=np.int64)
        rows, cols = reduced.shape
        transform = np.eye(rows, dtype=np.int64)
        pivots = []
        r = 0
        for c in range(cols):
            if r == rows:
                break
            nonzero = np.nonzero(reduced[r:, c])[0]
            if nonzero.size == 0:
                continue
            piv = r + int(nonzero[0])
            if piv != r:
                reduced[[r, piv]] = reduced[[piv, r]]
                transform[[r, piv]] = transform[[piv, r]]
            scale = self.inv_table[reduced[r, c]]
            reduced[r] = self.mul_table[scale, reduced[r]]
            transform[r] = self.mul_table[scale, transform[r]]
            for i in range(rows):
                factor = reduced[i, c]
                if i != r and factor != 0:
                    reduced[i] = self.sub_table[reduced[i],
                                                self.mul_table[factor,
                                                               reduced[r]]]
                    transform[i] = self.sub_table[transform[i],
                                                  self.mul_table[factor,
                                                                 transform[r]]]
            pivots.append(c)
            r += 1
        return reduced, transform, pivots

    def rank(self, matrix):
        matrix = np.asarray(matrix, dtype=np.int64)
        if matrix.size == 0:
            return 0
        return len(self.row_reduce(matrix)[2])

    def inverse(self, matrix):
        matrix = np.asarray(matrix, dtype=np.int64)
        rows, cols = matrix.shape
        if rows != cols:
            raise SingularT("{}x{} matrix is not square".format(rows, cols))
        _, transform, pivots = self.row_reduce(matrix)
        if len(pivots) != rows:
            raise SingularT("matrix is singular over {}".format(self))
        return transform

    def left_kernel(self, matrix):
        """ Basis (as rows) of { t : t . matrix = 0 }.

        >>> gf = field_make(2)
        >>> gf.left_kernel([[1], [1]]).tolist()
        [[1, 1]]

        """
        matrix = np.asarray(matrix, dtype=np.int64)
        rows = matrix.shape[0]
        if matrix.ndim < 2 or matrix.shape[1] == 0:
            return np.eye(rows, dtype=np.int64)
        _, transform, pivots = self.row_reduce(matrix)
        return transform[len(pivots):].copy()

    def extend_to_basis(self, rows, size):
        """ Unit vectors, in ascending position, completing `rows` to a basis
        of F^size.  `rows` must be linearly independent. """
        rows = np.asarray(rows, dtype=np.int64).reshape(-1, size)
        current = self.rank(rows) if rows.shape[0] else 0
        assert current == rows.shape[0], "rows are not independent"
        stack = rows
        added = []
        for i in range(size):
            if current == size:
                break
            unit = np.zeros((1, size), dtype=np.int64)
            unit[0, i] = 1
            candidate = np.vstack([stack, unit])
            if self.rank(candidate) > current:
                stack = candidate
                added.append(unit[0])
                current += 1
        if not added:
            return np.zeros((0, size), dtype=np.int64)
        return np.array(added, dtype=np.int64)

    def batch_rank(self, stack):
        """ Ranks of a stack of constant matrices, shape (count, m, n).

        Gaussian elimination runs on every matrix of the stack at once; each
        matrix keeps its own count of pivots found so far.

        >>> gf = field_make(2)
        >>> gf.batch_rank([[[1, 0], [0, 1]], [[1, 1], [1, 1]]]).tolist()
        [2, 1]

        """
        stack = np.array(stack, dtype=np.int64)
        count, rows, cols = stack.shape
        rank = np.zeros(count, dtype=np.int64)
        row_ids = np.arange(rows)
        for col in range(cols):
            live = np.nonzero(rank < rows)[0]
            if live.size == 0:
                break
            sub = stack[live]
            r = rank[live]
            candidates = (sub[:, :, col] != 0) & \
                (row_ids[None, :] >= r[:, None])
            has_pivot = candidates.any(axis=1)
            if not has_pivot.any():
                continue
            sel = np.nonzero(has_pivot)[0]
            sub = sub[sel]
            r = r[sel]
            pivot = candidates[sel].argmax(axis=1)
            idx = np.arange(sel.size)

            pivot_rows = sub[idx, pivot].copy()
            sub[idx, pivot] = sub[idx, r]
            sub[idx, r] = pivot_rows

            scale = self.inv_table[pivot_rows[:, col]]
            factors = self.mul_table[sub[:, :, col], scale[:, None]]
            factors[row_ids[None, :] <= r[:, None]] = 0
            sub = self.sub_table[sub, self.mul_table[factors[:, :, None],
                                                     pivot_rows[:, None, :]]]

            stack[live[sel]] = sub
            rank[live[sel]] += 1
        return rank


def field_make(p, k=1, modpoly=None):
    """ Builds a validated field.

    >>> field_make(2)
    GF(2)
    >>> field_make(2, 2, [1, 1, 1])
    GF(2^2, [1, 1, 1])

    """
    if modpoly is not None:
        modpoly = tuple(int(c) for c in modpoly)
    return _field_make(int(p), int(k), modpoly)


@functools.lru_cache(maxsize=None)
def _field_make(p, k, modpoly):
    if not is_prime(p):
        raise NotPrime("{} is not prime".format(p))
    if k < 1:
        raise InvalidFieldSpec("extension degree must be at least 1")
    if p**k > MAX_FIELD_ORDER:
        raise InvalidFieldSpec(
            "fields larger than {} elements are not supported".format(
                MAX_FIELD_ORDER))

    if k == 1:
        return GF(p, 1, None)

    if modpoly is None:
        default = DEFAULT_MODPOLYS.get(p**k)
        if default is None or default[0] != p:
            raise NoDefaultPoly(
                "no built-in polynomial for F_{}, give modpoly".format(p**k))
        modpoly = default[2]

    if len(modpoly) != k + 1:
        raise InvalidFieldSpec("modpoly must have {} coefficients".format(k +
                                                                         1))
    modpoly = tuple(c % p for c in modpoly)
    if modpoly[-1] != 1:
        raise InvalidFieldSpec("modpoly must be monic")
    if not is_irreducible(list(modpoly), p):
        raise ReducibleModPoly("{} is reducible over F_{}".format(
            list(modpoly), p))

    return GF(p, k, modpoly)


def field_of_order(q, modpoly=None):
    """ Field with q elements, default polynomial for tabled prime powers. """
    split = prime_power(q)
    if split is None:
        raise NotPrime("{} is not a prime power".format(q))
    p, k = split
    if k == 1 and modpoly is None:
        return field_make(p)
    return field_make(p, k, modpoly)


class FieldElement(namedtuple('FieldElement', 'field value')):
    """ One element of a field, value is its canonical index.

    >>> F4 = field_make(2, 2)
    >>> g = FieldElement(F4, 2)
    >>> str(g * g)
    'g:11'
    >>> (g * g).digits
    (1, 1)

    """

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch("{} and {} differ".format(
                    self.field, other.field))
            return other.value
        return self.field.reduce_int(other)

    @property
    def digits(self):
        return self.field.digits(self.value)

    def is_zero(self):
        return self.value == 0

    def __add__(self, other):
        return FieldElement(self.field,
                            int(self.field.add(self.value,
                                               self._coerce(other))))

    def __sub__(self, other):
        return FieldElement(self.field,
                            int(self.field.sub(self.value,
                                               self._coerce(other))))

    def __mul__(self, other):
        return FieldElement(self.field,
                            int(self.field.mul(self.value,
                                               self._coerce(other))))

    def __neg__(self):
        return FieldElement(self.field, int(self.field.neg(self.value)))

    def inverse(self):
        return FieldElement(self.field, int(self.field.inv(self.value)))

    def __truediv__(self, other):
        return self * FieldElement(self.field, self._coerce(other)).inverse()

    def __str__(self):
        return self.field.format_element(self.value)


def field_elements(spec):
    """ All elements in canonical order.

    >>> [str(e) for e in field_elements(field_make(2, 2))]
    ['0', '1', 'g:10', 'g:11']

    """
    return [FieldElement(spec, value) for value in spec.elements()]


FIELD_OPS = {
    'add': lambda a, b: a + b,
    'sub': lambda a, b: a - b,
    'mul': lambda a, b: a * b,
    'neg': lambda a, b: -a,
    'inv': lambda a, b: a.inverse(),
}


def field_arith(op, a, b=None):
    """ Dispatches one named field operation.

    >>> F5 = field_make(5)
    >>> field_arith('inv', FieldElement(F5, 2)).value
    3

    """
    if op not in FIELD_OPS:
        raise ValueError("unknown field operation {}".format(op))
    if op in ('add', 'sub', 'mul'):
        assert b is not None, "{} needs two operands".format(op)
        if not isinstance(b, FieldElement):
            raise FieldMismatch("operand is not a field element")
        a._coerce(b)
    return FIELD_OPS[op](a, b)
