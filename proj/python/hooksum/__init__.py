"""Exact hook-sum engine for increasing and Cayley trees.

Thin wrapper over the compiled extension: polynomials are opaque ``Poly``
values, trees are plain dicts ``{"labels": [...], "father": {child: father}}``,
and identity checks come back as parsed JSON reports.
"""
import json as _json

from ._core import (
    DecorationError,
    Poly,
    cayley_weight,
    count_cayley,
    count_increasing,
    decorated_weight,
    derivative,
    det_kirchhoff,
    enumerate_cayley,
    enumerate_increasing,
    eval_int,
    hook_weight,
    kirchhoff,
    poly_from_json,
    psi_map,
    resort_step,
    root_hook_factor,
    substitute,
    theta,
    theta_n,
    unsort_full,
    unsort_step,
    validate,
    x,
    y,
)
from ._core import trace_unsort_json as _trace_unsort_json
from ._core import verify_json as _verify_json

__all__ = [
    "DecorationError", "Poly", "cayley_weight", "count_cayley",
    "count_increasing", "decorated_weight", "derivative", "det_kirchhoff",
    "enumerate_cayley", "enumerate_increasing", "eval_int", "hook_weight",
    "kirchhoff", "poly_from_json", "psi_map", "resort_step",
    "root_hook_factor", "substitute", "theta", "theta_n", "trace_unsort",
    "unsort_full", "unsort_step", "validate", "verify", "x", "y",
]


def verify(which, **kwargs):
    """Run one identity check ('thm11', 'recursion', 'strehl', 'abel',
    'hurwitz', 'psi', 'matrixtree', 'bijection', or 'all') and return the
    report as a dict."""
    if "u" in kwargs:
        kwargs["u"] = str(kwargs["u"])
    if "v" in kwargs:
        kwargs["v"] = str(kwargs["v"])
    return _json.loads(_verify_json(which, **kwargs))


def trace_unsort(tree, phi):
    """Unsort a decorated tree; returns the step-by-step chain as a list."""
    return _json.loads(_trace_unsort_json(tree, phi))
