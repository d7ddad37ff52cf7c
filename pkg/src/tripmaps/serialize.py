"""JSON-ready forms of exact values: an exact string next to a decimal."""

from __future__ import annotations

import json
from enum import Enum
from fractions import Fraction

from .exact.algebraic import AlgebraicReal
from .exact.field import FieldElement
from .exact.matrix import IntMatrix
from .exact.perm import Permutation
from .exact.poly import Polynomial
from .render import fixed

SCHEMA_VERSION = 1


def exact_string(v) -> str:
    if isinstance(v, FieldElement):
        return str(v)
    if isinstance(v, AlgebraicReal):
        return v.to_str()
    if isinstance(v, Polynomial):
        return v.to_str("x").replace(" ", "")
    return str(v)


def decimal_string(v, precision: int) -> str:
    if isinstance(v, FieldElement):
        return fixed(v.approx(Fraction(1, 10 ** (precision + 2))), precision)
    if isinstance(v, AlgebraicReal):
        return fixed(v.approx(Fraction(1, 10 ** (precision + 2))), precision)
    return fixed(Fraction(v), precision)


def number(v, precision: int = 12) -> dict:
    return {"exact": exact_string(v), "decimal": decimal_string(v, precision)}


def point(p, precision: int = 12) -> list:
    return [number(x, precision) for x in p]


def jsonable(obj, precision: int = 12):
    """Recursively convert package values into JSON-compatible data."""
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, (Fraction, FieldElement, AlgebraicReal)):
        return number(obj, precision)
    if isinstance(obj, IntMatrix):
        return obj.tolist()
    if isinstance(obj, Permutation):
        return str(obj)
    if isinstance(obj, Polynomial):
        return exact_string(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v, precision) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v, precision) for v in obj]
    return str(obj)


def dumps(record: dict, precision: int = 12) -> str:
    body = {"schemaVersion": SCHEMA_VERSION}
    body.update(jsonable(record, precision))
    return json.dumps(body, indent=2, ensure_ascii=False) + "\n"
