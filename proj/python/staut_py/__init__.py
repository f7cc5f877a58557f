"""Finite star-autonomous models and their verification suites."""

import json

from . import _staut
from ._staut import Quantale, check_rel_negation, load_quantale

__all__ = [
    "Quantale",
    "load_quantale",
    "check_rel_negation",
    "quantale_check",
    "vec_scalar_table",
    "prof_check",
    "braided_d2_suite",
    "zang_suite",
    "paper_all",
]


def _run(fn, *args, seed=1, window=3, depth=2):
    return json.loads(fn(*args, seed=seed, window=window, depth=depth))


def quantale_check(spec, **opts):
    """Validate a quantale file or builtin; returns the structured report."""
    return _run(_staut.quantale_check, spec, **opts)


def vec_scalar_table(**opts):
    return _run(_staut.vec_scalar_table, **opts)


def prof_check(path, **opts):
    return _run(_staut.prof_check, path, **opts)


def braided_d2_suite(**opts):
    return _run(_staut.braided_d2_suite, **opts)


def zang_suite(backend, **opts):
    return _run(_staut.zang_suite, backend, **opts)


def paper_all(**opts):
    return _run(_staut.paper_all, **opts)
