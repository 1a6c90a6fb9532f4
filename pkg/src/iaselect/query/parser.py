"""Recursive-descent parser producing a PatternQuery from query text."""

from __future__ import annotations

from .ast import (
    Comparison,
    EdgePattern,
    Literal,
    NodePattern,
    PathPattern,
    PatternQuery,
    PropertyRef,
)
from .errors import ParseError, UndeclaredVariable
from .lexer import Token, TokenKind, tokenize


def _describe(token: Token) -> str:
    if token.kind is TokenKind.EOF:
        return "end of input"
    return f"{token.kind.value} {token.text!r}"


class _Parser:
    def __init__(self, tokens: list[Token], end_line: int, end_column: int):
        self.tokens = tokens
        self.index = 0
        self.eof = Token(TokenKind.EOF, "", end_line, end_column)
        # variable name -> ("node" | "edge")
        self.declared: dict[str, str] = {}

    def peek(self) -> Token:
        return self.tokens[self.index] if self.index < len(self.tokens) else self.eof

    def advance(self) -> Token:
        token = self.peek()
        if token.kind is not TokenKind.EOF:
            self.index += 1
        return token

    def fail(self, expected: str) -> ParseError:
        token = self.peek()
        return ParseError(expected, _describe(token), token.line, token.column)

    def accept(self, kind: TokenKind, text: str | None = None) -> Token | None:
        token = self.peek()
        if token.kind is kind and (text is None or token.text == text):
            return self.advance()
        return None

    def accept_keyword(self, word: str) -> Token | None:
        token = self.peek()
        if token.kind is TokenKind.KEYWORD and token.value == word:
            return self.advance()
        return None

    def expect_punct(self, text: str) -> Token:
        token = self.accept(TokenKind.PUNCT, text)
        if token is None:
            raise self.fail(f"'{text}'")
        return token

    def declare(self, token: Token, kind: str) -> str:
        name = token.text
        previous = self.declared.setdefault(name, kind)
        if previous != kind:
            raise ParseError(
                f"{name!r} to stay a {previous} variable (a name binds one kind)",
                f"{kind} variable {name!r}",
                token.line,
                token.column,
            )
        return name

    # -- grammar -------------------------------------------------------------

    def parse_query(self) -> PatternQuery:
        if not self.accept_keyword("MATCH"):
            raise self.fail("MATCH")
        paths = [self.parse_path()]
        while self.accept(TokenKind.PUNCT, ","):
            paths.append(self.parse_path())
        filters = []
        if self.accept_keyword("WHERE"):
            filters.append(self.parse_comparison())
            while self.accept_keyword("AND"):
                filters.append(self.parse_comparison())
        if not self.accept_keyword("RETURN"):
            raise self.fail("WHERE, RETURN or ','")
        returns = self.parse_returns()
        if self.peek().kind is not TokenKind.EOF:
            raise self.fail("end of input")
        return PatternQuery(tuple(paths), tuple(filters), returns)

    def parse_path(self) -> PathPattern:
        nodes = [self.parse_node()]
        edges = []
        while self.peek().kind is TokenKind.PUNCT and self.peek().text == "-[":
            edges.append(self.parse_edge())
            nodes.append(self.parse_node())
        return PathPattern(tuple(nodes), tuple(edges))

    def parse_node(self) -> NodePattern:
        self.expect_punct("(")
        var, label = self.parse_var_and_label("node", "')'")
        self.expect_punct(")")
        return NodePattern(var, label)

    def parse_edge(self) -> EdgePattern:
        self.expect_punct("-[")
        var, label = self.parse_var_and_label("edge", "']->'")
        if self.accept(TokenKind.PUNCT, "]->") is None:
            raise self.fail("']->'")
        return EdgePattern(var, label)

    def parse_var_and_label(self, kind: str, closing: str) -> tuple[str | None, str | None]:
        var_token = self.accept(TokenKind.IDENT)
        label = None
        if self.accept(TokenKind.PUNCT, ":"):
            label_token = self.accept(TokenKind.IDENT)
            if label_token is None:
                raise self.fail("label")
            label = label_token.text
        elif var_token is None and not self._at_closing():
            raise self.fail(f"identifier, ':' or {closing}")
        var = None
        if var_token is not None:
            var = self.declare(var_token, kind)
        return var, label

    def _at_closing(self) -> bool:
        token = self.peek()
        return token.kind is TokenKind.PUNCT and token.text in (")", "]->")

    def parse_comparison(self) -> Comparison:
        lhs = self.parse_operand()
        op_token = self.peek()
        if op_token.kind is not TokenKind.COMPARATOR:
            raise self.fail("comparator (=, <>, <, <=, >, >=)")
        self.advance()
        rhs = self.parse_operand()
        if not (isinstance(lhs, PropertyRef) or isinstance(rhs, PropertyRef)):
            raise ParseError(
                "a comparison referencing a variable (literal-only comparisons are not allowed)",
                f"comparator {op_token.text!r}",
                op_token.line,
                op_token.column,
            )
        return Comparison(lhs, op_token.text, rhs)

    def parse_operand(self):
        token = self.peek()
        if token.kind is TokenKind.IDENT:
            self.advance()
            if token.text not in self.declared:
                raise UndeclaredVariable(token.text, token.line, token.column)
            self.expect_punct(".")
            key = self.accept(TokenKind.IDENT)
            if key is None:
                raise self.fail("attribute key")
            return PropertyRef(token.text, key.text)
        if token.kind in (TokenKind.STRING, TokenKind.NUMBER, TokenKind.BOOL):
            self.advance()
            return Literal(token.value)
        raise self.fail("'var.key' or a literal")

    def parse_returns(self) -> tuple[str, ...] | None:
        if self.accept(TokenKind.PUNCT, "*"):
            return None
        names = []
        while True:
            token = self.accept(TokenKind.IDENT)
            if token is None:
                raise self.fail("'*' or variable name")
            if token.text not in self.declared:
                raise UndeclaredVariable(token.text, token.line, token.column)
            if token.text in names:
                raise ParseError(
                    "distinct return variables",
                    f"duplicate variable {token.text!r}",
                    token.line,
                    token.column,
                )
            names.append(token.text)
            if not self.accept(TokenKind.PUNCT, ","):
                break
        return tuple(names)


def parse(text: str) -> PatternQuery:
    """Parse query text into a PatternQuery, or raise a positioned error."""
    tokens = tokenize(text)
    lines = text.split("\n")
    end_line = len(lines)
    end_column = len(lines[-1]) + 1
    return _Parser(tokens, end_line, end_column).parse_query()
