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

from ..errors import AciSyntaxError, EmptyMatrix
from ..geometry import AffineSubspace
from ..models.aci import ACIMatrix, AffineForm
from ..models.gf import field_make, field_of_order
""" Used to parse and write .aci documents.

A document is a field declaration followed by a matrix literal or a list of
affine subspaces:

    # comments before the body are kept
    field 2
    [ x1+y1, x2+1 ; x1, 1 ]

    field 3^2 modpoly 2 2 1
    subspaces
    (1, 0, 0) + <(0, 1, 0)>
    (0, 0, 1)

"""

Token = namedtuple('Token', 'kind text line col')

Document = namedtuple('Document', 'field body comments')

TOKEN_RE = re.compile(r"""
    (?P<newline>\n)
  | (?P<ws>[ \t\r]+)
  | (?P<comment>\#[^\n]*)
  | (?P<gtoken>g:[0-9A-Za-z]*)
  | (?P<int>[0-9]+)
  | (?P<name>[A-Za-z][A-Za-z0-9]*)
  | (?P<op>[\[\];,+\-*^()<>])
""", re.VERBOSE)


def tokenize(text):
    """ Splits text into tokens, line and col are 1-based.

    >>> [t.text for t in tokenize("[ 2*x1+g:1 ]")]
    ['[', '2', '*', 'x1', '+', 'g:1', ']', '']

    Comments are kept as tokens, whitespace is dropped.  The last token is
    always an empty 'eof' token.
    """
    tokens = []
    line = 1
    line_start = 0
    pos = 0
    while pos < len(text):
        m = TOKEN_RE.match(text, pos)
        if m is None:
            raise AciSyntaxError(line, pos - line_start + 1, "a token",
                                 text[pos])
        kind = m.lastgroup
        if kind == 'newline':
            line += 1
            line_start = m.end()
        elif kind != 'ws':
            tokens.append(Token(kind, m.group(), line, pos - line_start + 1))
        pos = m.end()
    tokens.append(Token('eof', '', line, pos - line_start + 1))
    return tokens


class _Parser(object):
    def __init__(self, text):
        self.comments = []
        self.tokens = []
        in_body = False
        for token in tokenize(text):
            if token.kind == 'comment':
                if not in_body:
                    self.comments.append(token.text[1:].strip())
                continue
            if token.text in ('[', 'subspaces'):
                in_body = True
            self.tokens.append(token)
        self.pos = 0
        self.field = None

    @property
    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        token = self.tokens[self.pos]
        if token.kind != 'eof':
            self.pos += 1
        return token

    def fail(self, expected):
        token = self.peek
        found = token.text if token.kind != 'eof' else "end of input"
        raise AciSyntaxError(token.line, token.col, expected, found)

    def accept(self, text):
        if self.peek.text == text and self.peek.kind in ('op', 'name'):
            return self.advance()
        return None

    def expect(self, text):
        token = self.accept(text)
        if token is None:
            self.fail("'{}'".format(text))
        return token

    def expect_int(self):
        if self.peek.kind != 'int':
            self.fail("an integer")
        return int(self.advance().text)

    def parse_field(self):
        self.expect('field')
        base = self.expect_int()
        if not self.accept('^'):
            return field_of_order(base)
        degree = self.expect_int()
        modpoly = None
        if self.accept('modpoly'):
            modpoly = []
            while self.peek.kind == 'int':
                modpoly.append(self.expect_int())
            if not modpoly:
                self.fail("modpoly coefficients")
        return field_make(base, degree, modpoly)

    def parse_coeff(self):
        token = self.peek
        if token.kind not in ('int', 'gtoken'):
            self.fail("a coefficient")
        self.advance()
        return int(self.field.parse_element(token.text))

    def parse_term(self):
        """ Returns (coefficient, variable or None). """
        if self.peek.kind == 'name':
            return 1, self.advance().text
        coeff = self.parse_coeff()
        if self.accept('*'):
            if self.peek.kind != 'name':
                self.fail("a variable")
            return coeff, self.advance().text
        return coeff, None

    def parse_entry(self):
        gf = self.field
        constant = 0
        terms = []
        sign = 1
        if self.accept('-'):
            sign = -1
        while True:
            coeff, name = self.parse_term()
            if sign < 0:
                coeff = int(gf.neg(coeff))
            if name is None:
                constant = int(gf.add(constant, coeff))
            else:
                terms.append((name, coeff))
            if self.accept('+'):
                sign = 1
            elif self.accept('-'):
                sign = -1
            else:
                break
        return AffineForm.build(gf, constant, terms)

    def parse_matrix(self):
        open_token = self.expect('[')
        if self.peek.text == ']':
            raise EmptyMatrix("line {}, column {}: empty matrix".format(
                open_token.line, open_token.col))
        rows = []
        while True:
            start = self.peek
            row = [self.parse_entry()]
            while self.accept(','):
                row.append(self.parse_entry())
            if rows and len(row) != len(rows[0]):
                raise AciSyntaxError(start.line, start.col,
                                     "a row of {} entries".format(len(
                                         rows[0])), "{} entries".format(
                                             len(row)))
            rows.append(row)
            if not self.accept(';'):
                break
        self.expect(']')
        return ACIMatrix(self.field, rows)

    def parse_vector(self):
        self.expect('(')
        values = []
        while True:
            negate = self.accept('-') is not None
            value = self.parse_coeff()
            values.append(int(self.field.neg(value)) if negate else value)
            if not self.accept(','):
                break
        self.expect(')')
        return values

    def parse_subspaces(self):
        self.expect('subspaces')
        subspaces = []
        while self.peek.text == '(':
            start = self.peek
            base = self.parse_vector()
            directions = []
            if self.accept('+'):
                self.expect('<')
                directions.append(self.parse_vector())
                while self.accept(','):
                    directions.append(self.parse_vector())
                self.expect('>')
            for d in directions:
                if len(d) != len(base):
                    raise AciSyntaxError(start.line, start.col,
                                         "vectors of length {}".format(
                                             len(base)), "length {}".format(
                                                 len(d)))
            subspaces.append(AffineSubspace.build(self.field, base,
                                                  directions))
        if not subspaces:
            self.fail("a subspace '('")
        return subspaces

    def parse_document(self):
        self.field = self.parse_field()
        if self.peek.text == 'subspaces':
            body = self.parse_subspaces()
        else:
            body = self.parse_matrix()
        if self.peek.kind != 'eof':
            self.fail("end of input")
        return Document(self.field, body, tuple(self.comments))


def parse_document(text):
    """ Parses a matrix or subspace document into a Document. """
    return _Parser(text).parse_document()


def parse_matrix(text):
    """ Parses a matrix document, raising AciSyntaxError on a subspace one.

    >>> A = parse_matrix("field 3\\n[ 2*x1+2, 0 ; 1, x2 ]")
    >>> A.shape, A.variables
    ((2, 2), ('x1', 'x2'))

    """
    document = parse_document(text)
    if not isinstance(document.body, ACIMatrix):
        raise AciSyntaxError(1, 1, "a matrix document", "subspaces")
    return document.body


def parse_subspaces(text):
    """ Parses a subspace document into (field, list of AffineSubspace). """
    document = parse_document(text)
    if isinstance(document.body, ACIMatrix):
        raise AciSyntaxError(1, 1, "a subspace document", "a matrix")
    return document.field, document.body


def field_header(field):
    """ First line of a document declaring `field`.

    >>> field_header(field_make(2, 2))
    'field 4'
    >>> field_header(field_make(2, 2, [1, 1, 1]))
    'field 4'
    >>> field_header(field_make(3))
    'field 3'

    """
    if field.k == 1 or field.is_default_poly():
        return "field {}".format(field.q)
    return "field {}^{} modpoly {}".format(
        field.p, field.k, " ".join(str(c) for c in field.modpoly))


def serialize_matrix(A):
    """ Canonical text of A, without trailing newline. """
    return field_header(A.field) + "\n" + A.to_string()


def _vector(field, values):
    return "(" + ", ".join(field.format_element(v) for v in values) + ")"


def serialize_subspaces(field, subspaces):
    lines = [field_header(field), "subspaces"]
    for V in subspaces:
        line = _vector(field, V.base)
        if V.directions:
            line += " + <" + ", ".join(
                _vector(field, d) for d in V.directions) + ">"
        lines.append(line)
    return "\n".join(lines)
