"""Attribute values: the four storable kinds and their comparison rules.

Attribute values are plain Python objects (str, float, int, bool). Helpers
here validate them on the way into a graph and implement the typed
comparison used by query filters: values of different kinds never compare
(the comparison is simply false), with the single exception that ints and
floats compare numerically.
"""

from __future__ import annotations

import math
from typing import Union

AttrValue = Union[str, float, int, bool]

KIND_TEXT = "text"
KIND_FLOAT = "float"
KIND_INT = "int"
KIND_BOOL = "bool"

ATTR_KINDS = (KIND_TEXT, KIND_FLOAT, KIND_INT, KIND_BOOL)


class InvalidAttrKey(ValueError):
    """Attribute key is not a non-empty string."""


class InvalidAttrValue(ValueError):
    """Attribute value is not one of the storable kinds, or a non-finite float."""


def kind_of(value: AttrValue) -> str:
    # bool first: bool is a subclass of int
    if isinstance(value, bool):
        return KIND_BOOL
    if isinstance(value, str):
        return KIND_TEXT
    if isinstance(value, float):
        return KIND_FLOAT
    if isinstance(value, int):
        return KIND_INT
    raise InvalidAttrValue(f"unsupported attribute value type: {type(value).__name__}")


def check_attr_value(value: AttrValue) -> AttrValue:
    kind = kind_of(value)
    if kind == KIND_FLOAT and not math.isfinite(value):
        raise InvalidAttrValue(f"float attribute values must be finite, got {value!r}")
    return value


def check_attrs(attrs: dict) -> dict[str, AttrValue]:
    """Validate an attribute map, returning a fresh dict."""
    checked = {}
    for key, value in attrs.items():
        if not isinstance(key, str) or not key:
            raise InvalidAttrKey(f"attribute keys must be non-empty strings, got {key!r}")
        checked[key] = check_attr_value(value)
    return checked


def _comparison_key(value: AttrValue):
    """Group values into comparison classes: numbers pool together."""
    kind = kind_of(value)
    if kind in (KIND_FLOAT, KIND_INT):
        return "number"
    return kind


def typed_compare(lhs, op: str, rhs) -> bool:
    """Compare two attribute values under the filter semantics.

    ``None`` on either side (a missing attribute) or a kind mismatch makes
    the comparison false rather than an error, keeping filters total over
    heterogeneous graphs. Ints promote to floats by exact value.
    """
    if lhs is None or rhs is None:
        return False
    if _comparison_key(lhs) != _comparison_key(rhs):
        return False
    if op == "=":
        return lhs == rhs
    if op == "<>":
        return lhs != rhs
    if op == "<":
        return lhs < rhs
    if op == "<=":
        return lhs <= rhs
    if op == ">":
        return lhs > rhs
    if op == ">=":
        return lhs >= rhs
    raise ValueError(f"unknown comparison operator {op!r}")
