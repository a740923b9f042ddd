"""Braid groups and link-homotopy string-link groups over surfaces."""

import json as _json

from . import _braidlab
from ._braidlab import (
    dehn_reduce,
    lh_is_trivial,
    magnus,
    permutation,
    pi1_is_trivial,
    reduce,
    rf_is_trivial,
    theta,
    word_grammar,
)

__all__ = [
    "dehn_reduce",
    "lab_run",
    "lh_is_trivial",
    "magnus",
    "permutation",
    "pi1_is_trivial",
    "presentation",
    "reduce",
    "rf_is_trivial",
    "theta",
    "verify",
    "word_grammar",
]


def presentation(family, n, g, lh_len=4, lh_samples=64, lh_seed=0):
    """Generators and enumerated relators as a dict."""
    return _json.loads(_braidlab.presentation_json(family, n, g, lh_len, lh_samples, lh_seed))


def verify(map_name, n, g, lh_len=4, lh_samples=64, lh_seed=0):
    """Well-definedness report of a named map ("theta", "psi", ...)."""
    return _json.loads(_braidlab.verify_json(map_name, n, g, lh_len, lh_samples, lh_seed))


def lab_run(n_max=3, g_max=2, length=12, samples=200, seed=42, fixture="none", **kw):
    """Run every exact-sequence check; returns the suite report as a dict."""
    return _json.loads(_braidlab.lab_run_json(n_max=n_max, g_max=g_max, length=length, samples=samples,
                                              seed=seed, fixture=fixture, **kw))
