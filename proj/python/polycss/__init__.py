"""Quantum CSS codes from polycyclic codes over small finite fields."""

import json

from . import _core
from ._core import (
    DEFAULT_BUDGET,
    Catalog,
    PolycssError,
    QuantumParams,
    direct_sum,
    extend,
    puncture,
    run_cli,
    subcode,
    supported_field_orders,
    theorem2,
)

__all__ = [
    "DEFAULT_BUDGET",
    "Catalog",
    "PolycssError",
    "QuantumParams",
    "direct_sum",
    "extend",
    "factor",
    "ideal_code",
    "puncture",
    "query_exact",
    "run_cli",
    "search_trinomial",
    "subcode",
    "supported_field_orders",
    "theorem2",
    "verify_row",
]


def factor(q, poly):
    """Monic irreducible factors of `poly` over GF(q) as dicts."""
    return json.loads(_core.factor_json(q, poly))


def verify_row(q, modulus, g1, second, n=None, k=None, d=None, convention=None, budget=DEFAULT_BUDGET):
    """Rebuild a table row from its printed strings; returns the verification report."""
    return json.loads(_core.verify_row_json(q, modulus, g1, second, n, k, d, convention, budget))


def ideal_code(q, modulus, g, budget=DEFAULT_BUDGET):
    """[n, k, d] of the ideal <g> in GF(q)[x]/<modulus>."""
    return json.loads(_core.ideal_code_json(q, modulus, g, budget))


def search_trinomial(q, n_min, n_max=None, a=(), b=(), i_min=1, i_max=-1, seed=0, jobs=1, budget=DEFAULT_BUDGET):
    """Hits of the trinomial divisor-pair search against an empty catalog."""
    n_max = n_min if n_max is None else n_max
    return json.loads(
        _core.search_trinomial_json(q, n_min, n_max, list(a), list(b), i_min, i_max, seed, jobs, budget)
    )


def query_exact(catalog, q, n, k):
    """Stored record for (q, n, k) as a dict, or None."""
    text = catalog.query_exact(q, n, k)
    return None if text is None else json.loads(text)
