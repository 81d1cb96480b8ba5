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
""" Exceptions raised by acirank.

InputError subclasses mean the input itself is malformed (exit code 2 on the
command line), AnalysisError subclasses mean a well formed analysis could not
be completed (exit code 1).
"""


class AciError(Exception):
    pass


class InputError(AciError):
    pass


class AnalysisError(AciError):
    pass


class AciSyntaxError(InputError):
    def __init__(self, line, col, expected, found=None):
        self.line = line
        self.col = col
        self.expected = expected
        self.found = found
        msg = "line {}, column {}: expected {}".format(line, col, expected)
        if found is not None:
            msg += ", found {!r}".format(found)
        super().__init__(msg)


class UnknownFieldElement(InputError):
    pass


class CrossColumnVariable(InputError):
    def __init__(self, var, col_a, col_b):
        self.var = var
        self.col_a = col_a
        self.col_b = col_b
        super().__init__(
            "variable {} appears in columns {} and {}".format(
                var, col_a + 1, col_b + 1))


class EmptyMatrix(InputError):
    pass


class NotPrime(InputError):
    pass


class ReducibleModPoly(InputError):
    pass


class NoDefaultPoly(InputError):
    pass


class InvalidFieldSpec(InputError):
    pass


class InvalidVariable(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class EmptySelection(InputError):
    pass


class IndexOutOfRange(InputError):
    pass


class MissingAssignment(InputError):
    pass


class ForeignAssignment(InputError):
    pass


class UnknownCorpusEntry(InputError):
    pass


class BudgetExceeded(AnalysisError):
    def __init__(self, needed, limit, what="completions"):
        self.needed = needed
        self.limit = limit
        self.what = what
        super().__init__(
            "{} {} needed, budget is {}".format(needed, what, limit))


class SubsetBudgetExceeded(BudgetExceeded):
    def __init__(self, needed, limit):
        super().__init__(needed, limit, what="column subsets")


class NotConstantRank(AnalysisError):
    pass


class NotSquareFullRank(AnalysisError):
    pass


class PreconditionViolated(AnalysisError):
    pass


class VerificationFailed(AnalysisError):
    pass


class InfeasibleShape(AnalysisError):
    pass


class VariableClash(AnalysisError):
    pass


class NotClassified(AnalysisError):
    pass


class SingularT(AnalysisError):
    pass


class ZeroInverse(AnalysisError, ZeroDivisionError):
    pass


class FieldMismatch(AnalysisError, ValueError):
    pass
