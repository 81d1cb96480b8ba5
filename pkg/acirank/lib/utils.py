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

import sys

VERBOSE = False


def eprint(*args, **kwargs):
    """
    Prints to stderr.
    """
    print(*args, file=sys.stderr, **kwargs)


def set_verbose(verbose):
    global VERBOSE
    VERBOSE = bool(verbose)


def vprint(fmt, *args):
    """ Prints an engine trace line to stderr when --verbose is active. """
    if VERBOSE:
        eprint(fmt.format(*args))


def one_based(indices):
    """ Converts library indices to the numbering used in reports.

    >>> one_based([0, 2, 1])
    [1, 3, 2]

    """
    return [idx + 1 for idx in indices]
