"""Stable models modulo theories with HT_c cross-checks.

Thin wrapper over the C++ core: programs go in as text, reports come back as
dictionaries matching the CLI's JSON schema.
"""

import json

from amtlab import _core

AmtError = _core.AmtError

example_program = _core.example_program
pretty = _core.pretty
corpus = _core.corpus


def solve(program, mode="transform", theory="lin-int", lo=-10, hi=10, jobs=0):
    """Enumerate stable models modulo the theory; returns the report dict."""
    return json.loads(_core.solve_json(program, mode, theory, lo, hi, jobs))


def diff(program, theory="lin-int", lo=-10, hi=10, jobs=0):
    """Run transform, htc-tau, and htc-tau2 and compare their model sets."""
    return json.loads(_core.diff_json(program, theory, lo, hi, jobs))


def equiv(a, b, theory="lin-int", lo=-10, hi=10, jobs=0):
    """Check HT_c equivalence of two programs or formula theories."""
    return json.loads(_core.equiv_json(a, b, theory, lo, hi, jobs))
