# Copyright 2026 The reqlens authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python façade over the reqlens core.

Sources are (file name, text) pairs or plain paths; results are the JSON
report structures of the command-line tool, parsed into dictionaries.
"""

import json
import os

try:
    from . import _core
except ImportError:  # in-tree builds put the extension directly on sys.path
    import _core

__version__ = _core.__version__

__all__ = [
    "parse",
    "check",
    "lint",
    "stories",
    "testgen",
    "load_sources",
    "__version__",
]


def load_sources(paths):
    """Reads files (or directories of .rsl files) into (name, text) pairs."""
    sources = []
    for path in paths:
        if os.path.isdir(path):
            for name in sorted(os.listdir(path)):
                if name.endswith(".rsl"):
                    full = os.path.join(path, name)
                    with open(full, "r", encoding="utf-8") as handle:
                        sources.append((full, handle.read()))
        else:
            with open(path, "r", encoding="utf-8") as handle:
                sources.append((path, handle.read()))
    return sources


def _as_sources(sources):
    if isinstance(sources, str):
        return load_sources([sources])
    out = []
    for item in sources:
        if isinstance(item, str):
            out.extend(load_sources([item]))
        else:
            name, text = item
            out.append((name, text))
    return out


def parse(sources):
    """Syntax-checks the sources; returns the report dictionary."""
    return json.loads(_core.parse_sources(_as_sources(sources)))


def check(sources, routine="", chain=False, functional_equality=False):
    """Runs scenario and invariant checks; returns the report dictionary.

    `routine` selects a single scenario as "CLASS.NAME"; `chain` switches to
    the strict pairwise chain check on plain call sequences.
    """
    return json.loads(
        _core.check_sources(_as_sources(sources), routine, chain, functional_equality)
    )


def lint(sources):
    """Runs redundancy and style lints; returns the report dictionary."""
    return json.loads(_core.lint_sources(_as_sources(sources)))


def stories(sources, class_name, routine=""):
    """Extracts use-case stories from a class (or one routine of it).

    Returns {"stories": [...], "class_text": str, "report": {...}}.
    """
    return json.loads(_core.stories_sources(_as_sources(sources), class_name, routine))


def testgen(sources, class_name):
    """Generates test skeletons for a class.

    Returns {"files": [...], "manifest": [...], "report": {...}}.
    """
    return json.loads(_core.testgen_sources(_as_sources(sources), class_name))
