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

import progressbar as bar
import sys

from .utils import vprint


def disable_widgets_if_not_interactive(kwargs):
    if not sys.stderr.isatty():
        # Reports go to stdout, so only stderr interactivity matters.
        vprint('Progress bar widgets disabled, stderr is not a terminal.')
        kwargs['widgets'] = []
    kwargs.setdefault('fd', sys.stderr)


class ProgressBar(bar.ProgressBar):
    def __init__(self, *args, **kwargs):
        disable_widgets_if_not_interactive(kwargs)
        super().__init__(*args, **kwargs)


def completion_progress(total, enabled):
    """ Returns a started progress tracker over `total` completions. """
    if not enabled:
        return bar.NullBar(max_value=total).start()
    return ProgressBar(max_value=total).start()
