# Copyright 2026 The Bernstein Mechanism Authors
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
"""Differentially private function release with Bernstein bases."""

import json as _json

from ._bernstein import *  # noqa: F401,F403
from ._bernstein import _make_target, _run_experiment


def make_target(learner, ell, n):
    """Builds a learner target from a dict such as {"id": "kde", "bandwidth": 0.1}."""
    return _make_target(_json.dumps(learner), ell, n)


def run_experiment(spec):
    """Runs an experiment spec (dict) and returns the CSV report as text."""
    return _run_experiment(_json.dumps(spec))
