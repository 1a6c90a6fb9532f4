"""Semi-complete query templates, completed from user-supplied parameters.

Templates are expanded directly into ASTs (no string splicing, so values
never need quoting rules):

- ``practices-by-context(domain, function)``: practices weighted for both a
  domain and a function name.
- ``weights-above(location_label, characteristic_label, threshold[, name])``:
  practices at a location whose weight into a characteristic family exceeds
  a threshold, optionally pinned to one characteristic name.
- ``practice-detail(name)``: a single practice by name.
"""

from __future__ import annotations

import re

from ..schema import PRACTICE, WEIGHT
from .ast import (
    Comparison,
    EdgePattern,
    Literal,
    NodePattern,
    PathPattern,
    PatternQuery,
    PropertyRef,
)


class UnknownTemplate(ValueError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown boilerplate template {name!r}")


class MissingParam(ValueError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"missing boilerplate parameter {name!r}")


class InvalidParam(ValueError):
    def __init__(self, name: str, reason: str):
        self.name = name
        super().__init__(f"invalid boilerplate parameter {name!r}: {reason}")


_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def _text(params: dict, key: str) -> str:
    if key not in params:
        raise MissingParam(key)
    value = params[key]
    if not isinstance(value, str) or not value:
        raise InvalidParam(key, "expected a non-empty string")
    return value


def _label(params: dict, key: str) -> str:
    value = _text(params, key)
    if not _IDENT.match(value):
        raise InvalidParam(key, "labels are letters, digits and underscores")
    return value


def _number(params: dict, key: str) -> float:
    if key not in params:
        raise MissingParam(key)
    value = params[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InvalidParam(key, "expected a number")
    return float(value)


def _practices_by_context(params: dict) -> PatternQuery:
    domain = _text(params, "domain")
    function = _text(params, "function")
    return PatternQuery(
        paths=(
            PathPattern(
                (NodePattern("p", PRACTICE), NodePattern("d", "Domain")),
                (EdgePattern("wd", WEIGHT),),
            ),
            PathPattern(
                (NodePattern("p", PRACTICE), NodePattern("f", "Function")),
                (EdgePattern("wf", WEIGHT),),
            ),
        ),
        filters=(
            Comparison(PropertyRef("d", "name"), "=", Literal(domain)),
            Comparison(PropertyRef("f", "name"), "=", Literal(function)),
        ),
        returns=("p",),
    )


def _weights_above(params: dict) -> PatternQuery:
    location = _label(params, "location_label")
    characteristic = _label(params, "characteristic_label")
    threshold = _number(params, "threshold")
    filters = [Comparison(PropertyRef("w", "value"), ">", Literal(threshold))]
    if "name" in params:
        filters.append(Comparison(PropertyRef("d", "name"), "=", Literal(_text(params, "name"))))
    return PatternQuery(
        paths=(
            PathPattern(
                (NodePattern("h", location), NodePattern("d", characteristic)),
                (EdgePattern("w", WEIGHT),),
            ),
        ),
        filters=tuple(filters),
        returns=None,
    )


def _practice_detail(params: dict) -> PatternQuery:
    name = _text(params, "name")
    return PatternQuery(
        paths=(PathPattern((NodePattern("p", PRACTICE),)),),
        filters=(Comparison(PropertyRef("p", "name"), "=", Literal(name)),),
        returns=("p",),
    )


TEMPLATES = {
    "practices-by-context": (_practices_by_context, ("domain", "function")),
    "weights-above": (_weights_above, ("location_label", "characteristic_label", "threshold")),
    "practice-detail": (_practice_detail, ("name",)),
}


def expand_boilerplate(template: str, params: dict) -> PatternQuery:
    """Expand a named template into a complete PatternQuery."""
    if template not in TEMPLATES:
        raise UnknownTemplate(template)
    build, required = TEMPLATES[template]
    for key in required:
        if key not in params:
            raise MissingParam(key)
    known = set(required) | {"name"}
    for key in params:
        if key not in known:
            raise InvalidParam(key, "not a parameter of this template")
    return build(params)
