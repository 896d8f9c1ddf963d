"""Pendant appearances, fragments and Boltzmann Poisson limits of random
graph classes.

Graphs are passed as ``(n, edges)`` with 1-based vertex labels, the same
convention as the edge-list files read by the command line.
"""

import json

from . import _core
from ._core import (
    DEFAULT_SEED,
    MAX_ORDER,
    CapExceeded,
    ContractError,
    Error,
    ParseError,
    UnknownClass,
    aut,
    bp_sample_trees,
    bridges,
    canonical_form,
    census,
    forest_count,
    format_graph,
    frag_order,
    is_isomorphic,
    named_graph,
    parse_graph,
    pend,
    pend_rooted,
    pend_total,
    run,
    sample,
    vpend,
)

__all__ = [
    "DEFAULT_SEED",
    "MAX_ORDER",
    "CapExceeded",
    "ContractError",
    "Error",
    "ParseError",
    "UnknownClass",
    "aut",
    "bp_sample_trees",
    "bridges",
    "canonical_form",
    "census",
    "forest_connectivity",
    "forest_count",
    "format_graph",
    "frag_order",
    "is_isomorphic",
    "lemma_suite",
    "named_graph",
    "parse_graph",
    "pend",
    "pend_rooted",
    "pend_total",
    "run",
    "sample",
    "vpend",
]


def lemma_suite(cap=6, wide_cap=7):
    """Exhaustive lemma suite as a report dict."""
    return json.loads(_core.lemma_suite_json(cap, wide_cap))


def forest_connectivity(n, samples=0, seed=DEFAULT_SEED):
    """Forest connectivity report; samples=0 gives the exact ratio only."""
    return json.loads(_core.forest_connectivity_json(n, samples, seed))
