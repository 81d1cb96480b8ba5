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
import os.path

import yaml

from ..classify import classify, constant_rank_square_submatrices
from ..decompose import canonical_decomposition
from ..errors import UnknownCorpusEntry
from ..generate import minimal_gadget, maximal_gadget
from ..lib.parse_aci import parse_matrix
from ..models.aci import augment, is_partial_matrix
from ..models.gf import field_of_order
from ..rank import rank_set
""" Reference instances with the facts known about them.

Each entry is one data/<id>.aci matrix document; data/facts.yaml lists the
claims to re-derive for it.  Nothing in facts.yaml is trusted: check_fact
recomputes every value with the engines.
"""

DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data')
FACTS_FILE = os.path.join(DATA_DIR, 'facts.yaml')

CorpusEntry = namedtuple('CorpusEntry', 'id matrix facts source family')

Fact = namedtuple('Fact', 'claim expected provenance cite')

FactResult = namedtuple('FactResult',
                        'entry_id claim expected actual provenance ok')

BUILDERS = {
    'minimal_gadget': minimal_gadget,
    'maximal_gadget': maximal_gadget,
}

CLASSIFICATION_CLAIMS = ('square_fr', 'minimal_fr', 'maximal_fr',
                         'irreducible', 'completely_irreducible',
                         'column_augmentable')


@functools.lru_cache(maxsize=None)
def _load_facts():
    with open(FACTS_FILE) as f:
        return yaml.safe_load(f)


def _entry_path(entry_id):
    return os.path.join(DATA_DIR, '{}.aci'.format(entry_id))


def _build_entry(entry_id, data):
    path = _entry_path(entry_id)
    with open(path) as f:
        matrix = parse_matrix(f.read())
    facts = [
        Fact(fact['claim'], fact['expected'], fact['provenance'],
             fact.get('cite')) for fact in data.get('facts', [])
    ]
    for fact in facts:
        assert fact.provenance in ('PAPER', 'DERIVED', 'TRIVIAL'), fact
        assert fact.provenance != 'PAPER' or fact.cite, fact
    return CorpusEntry(entry_id, matrix, tuple(facts),
                       'corpus:{}'.format(entry_id), data.get('family'))


def corpus_ids():
    return sorted(_load_facts())


def get_entry(entry_id):
    """ Loads one entry, UnknownCorpusEntry if there is no such id. """
    facts = _load_facts()
    if entry_id not in facts:
        raise UnknownCorpusEntry("no corpus entry named {!r}".format(entry_id))
    return _build_entry(entry_id, facts[entry_id])


def corpus_instances():
    """ Every entry, sorted by id. """
    return [get_entry(entry_id) for entry_id in corpus_ids()]


@functools.lru_cache(maxsize=None)
def _classification(A, budget):
    return classify(A, budget)


@functools.lru_cache(maxsize=None)
def _rank_set(A, budget):
    return rank_set(A, budget)


def _witness(value):
    return None if value is None else value + 1


def _decomposition(A, budget):
    D = canonical_decomposition(A, budget)
    return {'case': D.case, 'r': D.r, 's': D.s, 'B': D.B.tag, 'C': D.C.tag}


def _actual(entry, fact, budget):
    A = entry.matrix
    claim = fact.claim
    if claim == 'completions':
        return A.num_completions
    if claim == 'constant_rank':
        return _rank_set(A, budget).constant
    if claim == 'rank_set':
        return list(_rank_set(A, budget).rank_set)
    if claim in CLASSIFICATION_CLAIMS:
        return getattr(_classification(A, budget), claim)
    if claim == 'column_irreducible':
        return not _classification(A, budget).column_reducible
    if claim == 'row_witness':
        return _witness(_classification(A, budget).row_witness)
    if claim == 'column_witness':
        return _witness(_classification(A, budget).column_witness)
    if claim == 'augmented_rank_set':
        vector = fact.expected['vector']
        return {
            'vector': vector,
            'rank_set': list(rank_set(augment(A, vector), budget).rank_set),
        }
    if claim == 'unit_augmentations':
        result = []
        for i in range(A.m):
            unit = [1 if k == i else 0 for k in range(A.m)]
            result.append(list(rank_set(augment(A, unit), budget).rank_set))
        return result
    if claim == 'constant_rank_submatrices':
        size = fact.expected['size']
        return {
            'size': size,
            'count': len(constant_rank_square_submatrices(A, size, budget)),
        }
    if claim == 'partial_matrix':
        return is_partial_matrix(A)
    if claim == 'decomposition':
        return _decomposition(A, budget)
    if claim == 'matches_builder':
        family = entry.family
        built = BUILDERS[family['builder']](field_of_order(family['q']))
        return built == A
    raise ValueError("unknown corpus claim {!r}".format(claim))


def check_fact(entry, fact, budget=None):
    """ Recomputes one fact of an entry, returns a FactResult. """
    actual = _actual(entry, fact, budget)
    return FactResult(entry.id, fact.claim, fact.expected, actual,
                      fact.provenance, actual == fact.expected)


def check_entry(entry, budget=None):
    return [check_fact(entry, fact, budget) for fact in entry.facts]
