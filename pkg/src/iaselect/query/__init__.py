"""Declarative pattern queries: lexing, parsing, printing, evaluation."""

from .ast import (
    Comparison,
    EdgePattern,
    Literal,
    NodePattern,
    PathPattern,
    PatternQuery,
    PropertyRef,
    pretty_print,
)
from .errors import LexError, ParseError, QueryError, UndeclaredVariable
from .evaluate import EdgeSnapshot, NodeSnapshot, ResultSet, evaluate
from .lexer import Token, TokenKind, tokenize
from .parser import parse
from .boilerplates import MissingParam, UnknownTemplate, expand_boilerplate

__all__ = [
    "Comparison",
    "EdgePattern",
    "EdgeSnapshot",
    "LexError",
    "Literal",
    "MissingParam",
    "NodePattern",
    "NodeSnapshot",
    "ParseError",
    "PathPattern",
    "PatternQuery",
    "PropertyRef",
    "QueryError",
    "ResultSet",
    "Token",
    "TokenKind",
    "UndeclaredVariable",
    "UnknownTemplate",
    "evaluate",
    "expand_boilerplate",
    "parse",
    "pretty_print",
    "tokenize",
]
