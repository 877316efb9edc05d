"""Quadratization of polynomial and rational PDE systems."""

import json

from ._core import ParseError, __version__, benchmarks, verify_set
from ._core import quadratize_json as _quadratize_json

__all__ = ["ParseError", "__version__", "benchmarks", "quadratize", "verify_set", "run_benchmark"]


def quadratize(source, **options):
    """Search for a quadratization of `source`; returns the JSON report as a dict."""
    return json.loads(_quadratize_json(source, **options))


def run_benchmark(name, **options):
    for case in benchmarks():
        if case["name"] == name:
            return json.loads(_quadratize_json(case["source"], benchmark=name, **options))
    raise KeyError(name)
