"""Certified L1 norms of exponential sums and checks of the bounds built on them.

Sets and polynomials are passed as dicts in the JSON shapes of the
command-line tool, e.g. ``{"rank": 1, "points": [1, 2, 3]}``; lists of
integers are accepted as rank-1 sets.
"""

import json

from . import _littlewood
from ._littlewood import (
    AliasingError,
    Error,
    HypothesisError,
    OverflowError,
    ParameterError,
    ResourceError,
    flat_top_kernel,
    gap_rank2,
)

__all__ = [
    "AliasingError",
    "Error",
    "HypothesisError",
    "OverflowError",
    "ParameterError",
    "ResourceError",
    "certified_l1",
    "flat_top_kernel",
    "gap_rank2",
    "good_modulus",
    "riemann_l1",
    "run_suite",
    "set_from_spec",
    "strong_integer",
    "strong_lattice",
    "thinning",
    "validate_certificate",
    "verify_basic_multidim",
    "verify_mps",
    "verify_multidim",
    "verify_multidimz",
]


def _arg(x):
    if isinstance(x, str):
        return x
    if isinstance(x, (list, tuple)):
        x = {"rank": 1, "points": list(x)}
    return json.dumps(x)


def certified_l1(f, rel_err=0.05, memory_budget=None):
    return json.loads(_littlewood.certified_l1(_arg(f), rel_err, memory_budget))


def riemann_l1(f, samples, memory_budget=None):
    if isinstance(samples, int):
        samples = [samples]
    return _littlewood.riemann_l1(_arg(f), list(samples), memory_budget)


def set_from_spec(spec):
    return json.loads(_littlewood.set_from_spec(spec))


def strong_integer(sizes, deltas, random=False, seed=1):
    return json.loads(_littlewood.strong_integer(list(sizes), list(deltas), random, seed))


def strong_lattice(sizes, random=False, seed=1):
    return json.loads(_littlewood.strong_lattice(list(sizes), random, seed))


def validate_certificate(s, certificate):
    return json.loads(_littlewood.validate_certificate(_arg(s), _arg(certificate)))


def good_modulus(s):
    return json.loads(_littlewood.good_modulus(_arg(s)))


def thinning(f, d1, d2, delta, q, s):
    return json.loads(_littlewood.thinning(_arg(f), d1, d2, delta, q, s))


def verify_mps(f, c_mps=0.25, rel_err=0.05):
    return json.loads(_littlewood.verify_mps(_arg(f), c_mps, rel_err))


def verify_basic_multidim(s, c_mps=0.25, rel_err=0.05):
    return json.loads(_littlewood.verify_basic_multidim(_arg(s), c_mps, rel_err))


def verify_multidim(s, certificate, c_mps=0.25, rel_err=0.05):
    return json.loads(_littlewood.verify_multidim(_arg(s), _arg(certificate), c_mps, rel_err))


def verify_multidimz(s, certificate, c_mps=0.25, rel_err=0.05):
    return json.loads(_littlewood.verify_multidimz(_arg(s), _arg(certificate), c_mps, rel_err))


def run_suite(only=(), rel_err=0.05, seed=1):
    return json.loads(_littlewood.run_suite(list(only), rel_err, seed))
