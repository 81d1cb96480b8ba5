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
""" Exact rank analysis of ACI-matrices over finite fields.

Inputs are .aci documents or corpus entries named corpus:<id>.  Reports go to
standard output (or --report), diagnostics to standard error.  Exit code 0
means success, 1 an analysis that could not be completed, 2 a usage or
input error.
"""

import argparse
import sys

from .classify import classify
from .corpus import check_entry, corpus_instances, get_entry
from .decompose import canonical_decomposition, extract_core, \
        verify_core, verify_decomposition
from .errors import AciError, InputError, VerificationFailed
from .generate import gen_constant_rank
from .geometry import span_dim_set, subspaces_to_aci
from .lib import report
from .lib.budget import DEFAULT_COMPLETIONS, DEFAULT_VECTORS, \
        DEFAULT_SUBSETS, Budget
from .lib.parse_aci import parse_matrix, parse_subspaces, \
        serialize_matrix, serialize_subspaces
from .lib.utils import eprint, set_verbose
from .models.aci import apply_equivalence
from .models.gf import field_of_order
from .rank import rank_set

CORPUS_PREFIX = "corpus:"


def read_source(source):
    """ Text of an input file, InputError when it cannot be read. """
    try:
        with open(source) as f:
            return f.read()
    except OSError as e:
        raise InputError("cannot read {}: {}".format(source, e.strerror))


def load_matrix(source):
    if source.startswith(CORPUS_PREFIX):
        return get_entry(source[len(CORPUS_PREFIX):]).matrix
    return parse_matrix(read_source(source))


def cmd_rank(args, budget):
    A = load_matrix(args.input)
    summary = rank_set(A, budget, progress=args.progress)
    return report.AnalysisResult(
        'rank', A, args.input, rank=report.rank_section(summary))


def cmd_classify(args, budget):
    A = load_matrix(args.input)
    summary = rank_set(A, budget, progress=args.progress)
    verdict = classify(A, budget, summary)
    return report.AnalysisResult(
        'classify',
        A,
        args.input,
        rank=report.rank_section(summary),
        classification=report.classification_section(A.field, verdict))


def cmd_decompose(args, budget):
    A = load_matrix(args.input)
    D = canonical_decomposition(A, budget)
    verified = None
    if args.verify:
        verified = verify_decomposition(A, D, deep=True, budget=budget)
    section = report.decomposition_section(
        A, D, apply_equivalence(A, D.witness), verified)
    return report.AnalysisResult(
        'decompose', A, args.input, decomposition=section)


def cmd_core(args, budget):
    A = load_matrix(args.input)
    certificate = extract_core(A, budget)
    verified = None
    if args.verify:
        verified = verify_core(A, certificate, budget)
    return report.AnalysisResult(
        'core',
        A,
        args.input,
        core=report.core_section(A, certificate, verified))


def cmd_geometry(args, budget):
    field, subspaces = parse_subspaces(read_source(args.input))
    dims = span_dim_set(field, subspaces, budget, progress=args.progress)
    return report.AnalysisResult(
        'geometry',
        subspaces_to_aci(field, subspaces),
        args.input,
        text=serialize_subspaces(field, subspaces),
        geometry=report.geometry_section(field, subspaces, dims))


def cmd_corpus(args, budget):
    if args.id is not None:
        entries = [get_entry(args.id)]
    else:
        entries = corpus_instances()
    results = []
    for entry in entries:
        results.extend(check_entry(entry, budget))
    for result in results:
        if not result.ok:
            eprint("FAIL {} {}: expected {!r}, got {!r}".format(
                result.entry_id, result.claim, result.expected,
                result.actual))
    matrix = entries[0].matrix if args.id is not None else None
    source = entries[0].source if args.id is not None else None
    return report.AnalysisResult(
        'corpus',
        matrix,
        source,
        corpus=report.corpus_section(results))


def cmd_gen(args, budget):
    field = field_of_order(args.field)
    A = gen_constant_rank(
        args.m,
        args.n,
        args.rho,
        field,
        seed=args.seed,
        gadget=args.gadget,
        max_vars=args.max_vars)
    if args.verify and rank_set(A, budget).constant != args.rho:
        raise VerificationFailed(
            "generated matrix does not have constant rank {}".format(
                args.rho))
    return serialize_matrix(A) + "\n"


COMMANDS = {
    'rank': cmd_rank,
    'classify': cmd_classify,
    'decompose': cmd_decompose,
    'core': cmd_core,
    'geometry': cmd_geometry,
    'corpus': cmd_corpus,
    'gen': cmd_gen,
}


def common_arguments():
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument(
        '--budget-completions',
        type=int,
        default=DEFAULT_COMPLETIONS,
        help="Most completions one rank computation may enumerate.")
    parser.add_argument(
        '--budget-vectors',
        type=int,
        default=DEFAULT_VECTORS,
        help="Most candidate columns one augmentation search may try.")
    parser.add_argument(
        '--budget-subsets',
        type=int,
        default=DEFAULT_SUBSETS,
        help="Most column subsets one zero block search may scan.")
    parser.add_argument(
        '--workers',
        type=int,
        default=1,
        help="Worker processes for exhaustive enumeration.")
    parser.add_argument(
        '--seed', type=int, default=None, help="Seed for random generation.")
    parser.add_argument(
        '--verify',
        action='store_true',
        help="Re-check every witness by multiplication before reporting.")
    parser.add_argument(
        '--format',
        choices=report.FORMATS,
        default='structured',
        help="Report format.")
    parser.add_argument(
        '--report', help="Write the report to this file instead of stdout.")
    parser.add_argument(
        '--progress',
        action='store_true',
        help="Show enumeration progress on stderr.")
    parser.add_argument(
        '--verbose', action='store_true', help="Trace engine steps on stderr.")
    return parser


def build_parser():
    parser = argparse.ArgumentParser(prog='acirank', description=__doc__)
    common = common_arguments()
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True

    for name, help_text in (
        ('rank', "Rank set of a matrix."),
        ('classify', "Full rank, reducibility and augmentability flags."),
        ('decompose', "Block decomposition with its witness."),
        ('core', "Completely irreducible core with its certificate."),
        ('geometry', "Dimensions spanned by points of affine subspaces."),
    ):
        command = sub.add_parser(name, parents=[common], help=help_text)
        command.add_argument(
            'input', help="Path to an .aci document or corpus:<id>.")

    corpus = sub.add_parser(
        'corpus', parents=[common], help="Re-derive corpus facts.")
    corpus.add_argument('id', nargs='?', help="Only check this entry.")

    gen = sub.add_parser(
        'gen',
        parents=[common],
        help="Random matrix of a given constant rank.")
    gen.add_argument('m', type=int, help="Rows.")
    gen.add_argument('n', type=int, help="Columns.")
    gen.add_argument('rho', type=int, help="Constant rank.")
    gen.add_argument(
        '--field', type=int, required=True, help="Field order q.")
    gen.add_argument(
        '--gadget',
        choices=('minimal', 'maximal'),
        help="Embed the minimal or maximal full rank family.")
    gen.add_argument(
        '--max-vars', type=int, help="Cap on random variables.")
    return parser


def run(argv):
    """ Runs one command line, returns the exit code. """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    if args.workers < 1 or min(args.budget_completions, args.budget_vectors,
                               args.budget_subsets) < 1:
        eprint("ERROR: budgets and --workers must be positive")
        return 2

    set_verbose(args.verbose)
    try:
        budget = Budget.from_args(args)
        outcome = COMMANDS[args.command](args, budget)
    except InputError as e:
        eprint("ERROR: {}".format(e))
        return 2
    except AciError as e:
        eprint("ERROR: {}".format(e))
        return 1

    if isinstance(outcome, str):
        text = outcome
    else:
        text = report.emit_report(outcome, args.format)

    if args.report:
        with open(args.report, 'w') as f:
            f.write(text)
    else:
        sys.stdout.write(text)

    if args.command == 'corpus' and outcome.corpus['failed']:
        return 1
    return 0


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
