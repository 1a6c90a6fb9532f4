"""Positioned errors shared by the lexer and parser."""

from __future__ import annotations


class QueryError(ValueError):
    """Base class carrying a 1-based (line, column) position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} at {line}:{column}")
        self.message = message
        self.line = line
        self.column = column


class LexError(QueryError):
    pass


class ParseError(QueryError):
    def __init__(self, expected: str, found: str, line: int, column: int):
        self.expected = expected
        self.found = found
        super().__init__(f"expected {expected}", line, column)


class UndeclaredVariable(QueryError):
    def __init__(self, name: str, line: int, column: int):
        self.name = name
        super().__init__(f"undeclared variable {name!r}", line, column)
