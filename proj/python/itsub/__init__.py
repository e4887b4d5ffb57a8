"""Python bindings for the itsub subtyping kernel.

Types are passed as strings in the textual syntax; certificates as JSON
strings.
"""

import json as _json

from ._itsub import (
    ParseError,
    bcd,
    check,
    consistent,
    derive,
    from_bcd,
    normalize,
    self_consistent,
    suite_names,
    to_bcd,
    trans,
)
from ._itsub import _run_suite

__all__ = [
    "ParseError",
    "bcd",
    "check",
    "consistent",
    "derive",
    "from_bcd",
    "normalize",
    "run_suite",
    "self_consistent",
    "suite_names",
    "to_bcd",
    "trans",
]


def run_suite(name, **options):
    """Run one property suite and return its report as a dict.

    Keyword options mirror the CLI: atoms, max_size, triple_max_size, seed,
    samples, bcd_depth, jobs, failure_limit.
    """
    return _json.loads(_run_suite(name, **options))[0]
