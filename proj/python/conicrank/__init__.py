"""Rank bounds for elliptic surfaces y^2 = a3 x^3 + a2 x^2 + a1 x + a0 over Q(T)."""

import json

from ._conicrank import (
    ConicrankError,
    ConsistencyError,
    ParseError,
    ValidationError,
    analyze_json,
    classify_kodaira,
    factor,
    is_square_in_field,
    resultant,
    self_test,
)


def analyze(expr, verify_points=False):
    """Full report for the curve y^2 = expr, as a dict with the JSON schema of the CLI."""
    return json.loads(analyze_json(expr, verify_points))


__all__ = [
    "ConicrankError",
    "ConsistencyError",
    "ParseError",
    "ValidationError",
    "analyze",
    "analyze_json",
    "classify_kodaira",
    "factor",
    "is_square_in_field",
    "resultant",
    "self_test",
]
