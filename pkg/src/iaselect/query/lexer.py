"""Tokenizer for the pattern-query language.

Keywords (MATCH, WHERE, AND, RETURN) and the boolean literals are
case-insensitive; identifiers and labels are case-sensitive. String literals
are double-quoted with backslash escapes. Positions are 1-based.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any

from .errors import LexError


class TokenKind(enum.Enum):
    KEYWORD = "keyword"
    IDENT = "identifier"
    PUNCT = "punct"
    STRING = "string"
    NUMBER = "number"
    BOOL = "bool"
    COMPARATOR = "comparator"
    EOF = "eof"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    line: int
    column: int
    value: Any = field(default=None, compare=False)

    @property
    def position(self) -> tuple[int, int]:
        return (self.line, self.column)


KEYWORDS = {"MATCH", "WHERE", "AND", "RETURN"}
BOOLEANS = {"TRUE": True, "FALSE": False}

# Longest first; ']->'' must win over a bare comparator '>'.
_MULTI_PUNCT = ["]->", "-[", "<=", ">=", "<>"]
_SINGLE = {
    "(": TokenKind.PUNCT,
    ")": TokenKind.PUNCT,
    "[": TokenKind.PUNCT,
    "]": TokenKind.PUNCT,
    ",": TokenKind.PUNCT,
    ".": TokenKind.PUNCT,
    "*": TokenKind.PUNCT,
    ":": TokenKind.PUNCT,
    "=": TokenKind.COMPARATOR,
    "<": TokenKind.COMPARATOR,
    ">": TokenKind.COMPARATOR,
}

_ESCAPES = {'"': '"', "\\": "\\", "n": "\n", "t": "\t", "r": "\r", "/": "/"}


def _is_ident_start(ch: str) -> bool:
    return ch.isalpha() or ch == "_"


def _is_ident_char(ch: str) -> bool:
    return ch.isalnum() or ch == "_"


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.line = 1
        self.column = 1

    def eof(self) -> bool:
        return self.pos >= len(self.text)

    def peek(self, offset: int = 0) -> str:
        index = self.pos + offset
        return self.text[index] if index < len(self.text) else ""

    def advance(self) -> str:
        ch = self.text[self.pos]
        self.pos += 1
        if ch == "\n":
            self.line += 1
            self.column = 1
        else:
            self.column += 1
        return ch

    def error(self, message: str, line: int | None = None, column: int | None = None):
        raise LexError(message, line if line is not None else self.line,
                       column if column is not None else self.column)


def _scan_string(sc: _Scanner) -> Token:
    line, column = sc.line, sc.column
    sc.advance()  # opening quote
    parts: list[str] = []
    raw = ['"']
    while True:
        if sc.eof() or sc.peek() == "\n":
            sc.error("unterminated string literal", line, column)
        ch = sc.advance()
        raw.append(ch)
        if ch == '"':
            break
        if ch == "\\":
            if sc.eof():
                sc.error("unterminated string literal", line, column)
            esc_line, esc_column = sc.line, sc.column
            esc = sc.advance()
            raw.append(esc)
            if esc not in _ESCAPES:
                sc.error(f"unknown escape sequence '\\{esc}'", esc_line, esc_column)
            parts.append(_ESCAPES[esc])
        else:
            parts.append(ch)
    return Token(TokenKind.STRING, "".join(raw), line, column, "".join(parts))


def _scan_number(sc: _Scanner) -> Token:
    line, column = sc.line, sc.column
    start = sc.pos
    if sc.peek() == "-":
        sc.advance()
    while sc.peek().isdigit():
        sc.advance()
    if sc.peek() == "." and sc.peek(1).isdigit():
        sc.advance()
        while sc.peek().isdigit():
            sc.advance()
    if sc.peek() in ("e", "E") and (
        sc.peek(1).isdigit() or (sc.peek(1) in ("+", "-") and sc.peek(2).isdigit())
    ):
        sc.advance()
        if sc.peek() in ("+", "-"):
            sc.advance()
        while sc.peek().isdigit():
            sc.advance()
    text = sc.text[start:sc.pos]
    return Token(TokenKind.NUMBER, text, line, column, float(text))


def _scan_word(sc: _Scanner) -> Token:
    line, column = sc.line, sc.column
    start = sc.pos
    while not sc.eof() and _is_ident_char(sc.peek()):
        sc.advance()
    text = sc.text[start:sc.pos]
    upper = text.upper()
    if upper in KEYWORDS:
        return Token(TokenKind.KEYWORD, text, line, column, upper)
    if upper in BOOLEANS:
        return Token(TokenKind.BOOL, text, line, column, BOOLEANS[upper])
    return Token(TokenKind.IDENT, text, line, column, text)


def tokenize(text: str) -> list[Token]:
    """Tokenize the full input, or raise LexError at the first bad character."""
    sc = _Scanner(text)
    tokens: list[Token] = []
    while not sc.eof():
        ch = sc.peek()
        if ch in " \t\r\n":
            sc.advance()
            continue
        if ch == '"':
            tokens.append(_scan_string(sc))
            continue
        if ch.isdigit():
            tokens.append(_scan_number(sc))
            continue
        if ch == "-" and sc.peek(1).isdigit():
            tokens.append(_scan_number(sc))
            continue
        if _is_ident_start(ch):
            tokens.append(_scan_word(sc))
            continue
        two = ch + sc.peek(1)
        three = two + sc.peek(2)
        if three == "]->":
            line, column = sc.line, sc.column
            sc.advance(); sc.advance(); sc.advance()
            tokens.append(Token(TokenKind.PUNCT, "]->", line, column))
            continue
        if two in _MULTI_PUNCT:
            line, column = sc.line, sc.column
            sc.advance(); sc.advance()
            kind = TokenKind.COMPARATOR if two in ("<=", ">=", "<>") else TokenKind.PUNCT
            tokens.append(Token(kind, two, line, column))
            continue
        if ch in _SINGLE:
            line, column = sc.line, sc.column
            sc.advance()
            tokens.append(Token(_SINGLE[ch], ch, line, column))
            continue
        sc.error(f"unexpected character {ch!r}")
    return tokens
