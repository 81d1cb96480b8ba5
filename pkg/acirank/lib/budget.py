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

DEFAULT_COMPLETIONS = 2**22
DEFAULT_VECTORS = 2**20
DEFAULT_SUBSETS = 2**16


class Budget(namedtuple('Budget', 'completions vectors subsets workers')):
    """ Search caps shared by every engine.

    Arguments
    ---------
    completions : int
        Maximum number of completions a single exhaustive rank computation
        may enumerate.
    vectors : int
        Maximum number of projective representatives tried when searching
        for an augmenting column.
    subsets : int
        Maximum number of column subsets scanned by the zero block search.
    workers : int
        Worker processes used by the exhaustive rank engine.

    >>> Budget().completions == 2**22
    True
    >>> Budget(completions=16).subsets == 2**16
    True

    """

    def __new__(cls,
                completions=DEFAULT_COMPLETIONS,
                vectors=DEFAULT_VECTORS,
                subsets=DEFAULT_SUBSETS,
                workers=1):
        assert workers >= 1, workers
        return super().__new__(cls, completions, vectors, subsets, workers)

    @classmethod
    def from_args(cls, args):
        return cls(
            completions=args.budget_completions,
            vectors=args.budget_vectors,
            subsets=args.budget_subsets,
            workers=args.workers)


DEFAULT_BUDGET = Budget()


def get_budget(budget):
    if budget is None:
        return DEFAULT_BUDGET
    return budget
