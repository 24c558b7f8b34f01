"""Birman-Craggs-Johnson homomorphism computations.

Thin wrappers over the C++ core. Report-producing calls return plain dicts
with the same layout as the CLI's JSON reports.
"""

import json as _json

from . import _bcj
from ._bcj import (
    MAX_GENUS,
    BcjError,
    b2_dimension,
    bar,
    cm_generator,
    epsilon,
    is_index_matched,
    mu_rho_separating,
    rho_separating,
    sigma_bp,
    sigma_separating,
    wedge,
)

__version__ = _bcj.__version__


def dims(genus):
    return _json.loads(_bcj.dims_json(genus))


def orbits(genus):
    return _json.loads(_bcj.orbits_json(genus))


def search(genus, max_support=3, *, families=False, bp=False, disjointness="orthogonal", workers=1):
    return _json.loads(
        _bcj.search_json(genus, max_support, families, bp, disjointness, workers)
    )


def verify(genus, trials=100, seed=1, *, exhaustive_mu=False):
    return _json.loads(_bcj.verify_json(genus, trials, seed, exhaustive_mu))


def evaluate_catalog(catalog):
    """catalog: a dict/list in the catalog schema, or its JSON text."""
    text = catalog if isinstance(catalog, str) else _json.dumps(catalog)
    return _json.loads(_bcj.eval_json(text))


__all__ = [
    "MAX_GENUS",
    "BcjError",
    "b2_dimension",
    "bar",
    "cm_generator",
    "dims",
    "epsilon",
    "evaluate_catalog",
    "is_index_matched",
    "mu_rho_separating",
    "orbits",
    "rho_separating",
    "search",
    "sigma_bp",
    "sigma_separating",
    "verify",
    "wedge",
]
