"""Irreducible components of V(n,a,b) = {(A,B): AB = BA = A^a = B^b = 0}."""

import json as _json

from . import _nilvar
from ._nilvar import (
    delta_dim,
    dominates,
    dual,
    end_dim,
    ext1_vanishes,
    hom_dim,
    hom_dim_oracle,
    jordan_pair,
    orbit_dim,
    regular_dense,
)


def classify(n, a=3, b=3):
    """Components as the dict emitted by `nilvar classify --format json`."""
    return _json.loads(_nilvar.classify_json(n, a, b))


def string_module(c, a=3, b=3):
    """{n, a, b, A, B} with "p/q" entries."""
    return _json.loads(_nilvar.string_module_json(c, a, b))


def band_module(band, lambdas, a=3, b=3):
    return _json.loads(_nilvar.band_module_json(band, [str(x) for x in lambdas], a, b))


def verify(level="quick", seed=1):
    """One dict per suite: name, checks, ok, counterexample, info."""
    return _nilvar.verify(level, seed)


__all__ = [
    "band_module",
    "classify",
    "delta_dim",
    "dominates",
    "dual",
    "end_dim",
    "ext1_vanishes",
    "hom_dim",
    "hom_dim_oracle",
    "jordan_pair",
    "orbit_dim",
    "regular_dense",
    "string_module",
    "verify",
]
