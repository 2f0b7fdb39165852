"""Abelian quotient singularities C^n/G for diagonal G in SL(n).

Group specs are accepted as JSON strings or as dicts of the form
``{"dim": n, "generators": [{"order": d, "weights": [...]}]}``.
"""

import json as _json

from . import _core
from ._core import QuotsingError

__all__ = [
    "QuotsingError",
    "analyze",
    "census",
    "center_hilbert",
    "dense_center_oracle",
    "group_order",
    "hilbert_basis",
    "mckay_dot",
    "quiver_sizes",
    "reduced_center",
    "singular_locus",
    "verify",
]


def _spec(spec):
    return spec if isinstance(spec, str) else _json.dumps(spec)


def group_order(spec, max_order=10_000):
    return _core.group_order(_spec(spec), max_order)


def hilbert_basis(spec):
    return _core.hilbert_basis(_spec(spec))


def singular_locus(spec):
    return _core.singular_locus(_spec(spec))


def reduced_center(spec):
    return _core.reduced_center(_spec(spec))


def quiver_sizes(spec):
    return _core.quiver_sizes(_spec(spec))


def mckay_dot(spec, contraction=False):
    return _core.mckay_dot(_spec(spec), contraction)


def center_hilbert(spec, max_degree):
    return _core.center_hilbert(_spec(spec), max_degree)


def dense_center_oracle(spec, max_degree):
    return _core.dense_center_oracle(_spec(spec), max_degree)


def analyze(spec, max_degree=-1):
    """Full report as a dict (wall-clock numbers under "timing")."""
    return _json.loads(_core.analyze(_spec(spec), max_degree))


def verify(spec, max_degree=-1, run_oracle=True):
    """List of (check, status, detail) with status in {"pass", "fail", "skip"}."""
    return _core.verify(_spec(spec), max_degree, run_oracle)


def census(dim_max, order_max, samples, seed, dim_min=2, cyclic_only=False, run_oracle=True, threads=0):
    return _json.loads(
        _core.census(dim_max, order_max, samples, seed, dim_min, cyclic_only, run_oracle, threads)
    )
