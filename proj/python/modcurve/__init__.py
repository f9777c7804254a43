"""Exact verification of the X1(13) and X0(37) computations."""

import json

from ._core import (
    BadReduction,
    Error,
    NFElement,
    ParseError,
    PointNotOnCurve,
    ValidationFailed,
    division_polynomial,
    e37_multiple,
    factor_mod_p,
    jacobian_order,
    minimal_polynomial,
    table_csv,
    x13_check_ids,
    x37_check_ids,
)
from . import _core

__all__ = [
    "BadReduction",
    "Error",
    "NFElement",
    "ParseError",
    "PointNotOnCurve",
    "ValidationFailed",
    "division_polynomial",
    "e37_multiple",
    "factor_mod_p",
    "generate_table",
    "jacobian_order",
    "minimal_polynomial",
    "run_x0_37",
    "run_x1_13",
    "table_csv",
    "x13_check_ids",
    "x37_check_ids",
]


def run_x1_13(only=(), skip=(), rng_seed=0, precision=256):
    """Run the X1(13) suite and return the report as a dict."""
    return json.loads(_core.run_x1_13_json(list(only), list(skip), rng_seed, precision))


def run_x0_37(only=(), skip=(), rng_seed=0, max_k=15, jmap=None):
    """Run the X0(37) suite and return the report as a dict."""
    return json.loads(_core.run_x0_37_json(list(only), list(skip), rng_seed, max_k, jmap))


def generate_table(k_max=15, jmap=None):
    """Quadratic points over kG for k <= k_max, one dict per record."""
    return json.loads(_core.generate_table_json(k_max, jmap))
