# Copyright 2026 The Magiclab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python bindings for the magiclab checks."""

import json as _json

from ._magiclab import *  # noqa: F401,F403
from ._magiclab import run_checks_json as _run_checks_json

__all__ = [name for name in dir() if not name.startswith("_")]


def run_checks(suite, seed=7, n=None, trials=None, tol=None):
    """Run a suite and return its reports as a list of dicts."""
    return _json.loads(_run_checks_json(suite, seed, n, trials, tol))
