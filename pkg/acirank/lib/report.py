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
import hashlib

import simplejson

from .parse_aci import serialize_matrix
from .utils import one_based
""" Analysis reports.

Reports are JSON objects with sorted keys (schema 1) or the same data as
sorted "key: value" lines.  Every index in a report is 1-based and every
block position is an inclusive [first, last] range.
"""

SCHEMA_VERSION = 1

FORMATS = ('structured', 'text')


class AnalysisResult(namedtuple(
        'AnalysisResult', 'command matrix source text rank classification '
        'decomposition core geometry corpus')):
    """ Everything one CLI command computed.

    matrix is the analysed ACIMatrix (None for a bare corpus run) and text
    its canonical document when that is not serialize_matrix(matrix), as for
    subspace documents.  The other fields are ready made report sections.
    """

    def __new__(cls,
                command,
                matrix=None,
                source=None,
                text=None,
                rank=None,
                classification=None,
                decomposition=None,
                core=None,
                geometry=None,
                corpus=None):
        return super(AnalysisResult, cls).__new__(
            cls, command, matrix, source, text, rank, classification,
            decomposition, core, geometry, corpus)


def digest(text):
    return hashlib.sha256(text.encode('utf-8')).hexdigest()


def span(bounds):
    """ Half open 0-based (start, stop) to inclusive 1-based [first, last].

    >>> span((4, 7))
    [5, 7]
    >>> span(None) is None
    True

    """
    if bounds is None:
        return None
    return [bounds[0] + 1, bounds[1]]


def tokens(field, values):
    return [field.format_element(v) for v in values]


def field_section(field):
    return {
        'p': field.p,
        'k': field.k,
        'q': field.q,
        'modpoly': list(field.modpoly) if field.modpoly else None,
    }


def rank_section(summary):
    return {
        'rank_set': list(summary.rank_set),
        'mrank': summary.mrank,
        'Mrank': summary.Mrank,
        'constant': summary.constant,
        'completions_examined': summary.completions_examined,
        'method': summary.method,
    }


def classification_section(field, verdict):
    section = verdict._asdict()
    for key in ('row_witness', 'column_witness'):
        if section[key] is not None:
            section[key] += 1
    if section['augmenting_vector'] is not None:
        section['augmenting_vector'] = tokens(field,
                                              section['augmenting_vector'])
    return section


def witness_section(field, witness):
    return {
        'T': [tokens(field, row) for row in witness.T],
        'Q': one_based(witness.Q),
    }


def block_section(block):
    return {
        'tag': block.tag,
        'rows': span(block.rows),
        'cols': span(block.cols),
        'rank': block.rank,
    }


def decomposition_section(A, decomposition, transformed, verified=None):
    """ Arguments
    ---------
    A : ACIMatrix
        The decomposed matrix.
    decomposition : BlockDecomposition
    transformed : ACIMatrix
        T . A . Q
    verified : bool or None
        Outcome of verify_decomposition, None when not requested.

    """
    D = decomposition
    return {
        'case': D.case,
        'r': D.r,
        's': D.s,
        'rank': D.rank,
        'B': block_section(D.B),
        'C': block_section(D.C),
        'witness': witness_section(A.field, D.witness),
        'form': transformed.to_string(),
        'verified': verified,
    }


def core_section(A, certificate, verified=None):
    return {
        'rank': certificate.rank,
        'rows': span(certificate.rows),
        'cols': span(certificate.cols),
        'core': certificate.core.to_string(),
        'witness': witness_section(A.field, certificate.witness),
        'verified': verified,
    }


def geometry_section(field, subspaces, dims):
    return {
        'subspaces': len(subspaces),
        'ambient': subspaces[0].ambient,
        'dimensions': [V.dimension for V in subspaces],
        'reduced': [i + 1 for i, V in enumerate(subspaces) if V.reduced],
        'span_dims': list(dims),
    }


def corpus_section(results):
    checks = []
    for result in results:
        checks.append({
            'id': result.entry_id,
            'claim': result.claim,
            'expected': result.expected,
            'actual': result.actual,
            'provenance': result.provenance,
            'ok': result.ok,
        })
    return {
        'checks': checks,
        'passed': sum(1 for c in checks if c['ok']),
        'failed': sum(1 for c in checks if not c['ok']),
    }


def build_report(result):
    report = {'schema': SCHEMA_VERSION, 'command': result.command}
    A = result.matrix
    if A is not None:
        text = result.text if result.text is not None else serialize_matrix(A)
        report['input'] = {'source': result.source, 'sha256': digest(text)}
        report['field'] = field_section(A.field)
        report['shape'] = [A.m, A.n]
        report['variables'] = list(A.variables)
        report['completions'] = A.num_completions
    for key in ('rank', 'classification', 'decomposition', 'core',
                'geometry', 'corpus'):
        section = getattr(result, key)
        if section is not None:
            report[key] = section
    return report


def _flatten(prefix, value, lines):
    if isinstance(value, dict):
        for key in sorted(value):
            name = "{}.{}".format(prefix, key) if prefix else key
            _flatten(name, value[key], lines)
    elif isinstance(value, list) and value and isinstance(value[0], dict):
        for i, item in enumerate(value):
            _flatten("{}.{}".format(prefix, i + 1), item, lines)
    else:
        lines.append("{}: {}".format(prefix, simplejson.dumps(value)))


def emit_report(result, fmt='structured'):
    """ Renders an AnalysisResult, output always ends with a newline.

    >>> print(emit_report(AnalysisResult('corpus'), 'text'), end='')
    command: "corpus"
    schema: 1

    """
    assert fmt in FORMATS, fmt
    report = build_report(result)
    if fmt == 'structured':
        return simplejson.dumps(report, sort_keys=True, indent=2) + "\n"
    lines = []
    _flatten("", report, lines)
    return "\n".join(lines) + "\n"
