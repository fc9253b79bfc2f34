from __future__ import annotations

import re
from dataclasses import dataclass

KEYWORDS = frozenset(
    """
    point line intersect midpoint reflect foot circumcenter perp_bisector perp
    assert similar congruent concyclic collinear equals ratio_sq
    render label style polygon segment
    """.split()
)

PUNCT = ("==", "(", ")", ",", ";", "=", "{", "}", "/", "-")


@dataclass(frozen=True)
class SourceSpan:
    line: int
    column: int

    def __str__(self):
        return f"{self.line}:{self.column}"


@dataclass(frozen=True)
class Token:
    kind: str  # IDENT, KEYWORD, INT, DECIMAL, STRING, PUNCT, EOF
    text: str
    span: SourceSpan

    def describe(self) -> str:
        if self.kind == "EOF":
            return "end of input"
        return repr(self.text)


class DslError(Exception):
    """Error in a script, located by ``span``."""

    def __init__(self, message: str, span: SourceSpan | None = None):
        self.message = message
        self.span = span
        where = f"line {span.line}, column {span.column}: " if span else ""
        super().__init__(where + message)


class LexError(DslError):
    pass


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<comment>\#[^\n]*)
  | (?P<decimal>\d+\.\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?|\d+[eE][+-]?\d+)
  | (?P<int>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<string>"(?:[^"\\\n]|\\.)*")
  | (?P<punct>==|[(),;={}/\-])
    """,
    re.VERBOSE,
)


def tokenize(text: str) -> list[Token]:
    """Split script text into tokens, ending with an EOF token.

    Identifiers may carry primes (``Dp`` or ``D'``).  ``#`` starts a comment
    that runs to the end of the line.
    """
    tokens = []
    pos = 0
    line, line_start = 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        span = SourceSpan(line, pos - line_start + 1)
        if m is None:
            if text[pos] == '"':
                raise LexError("unterminated string literal", span)
            raise LexError(f"unexpected character {text[pos]!r}", span)
        kind = m.lastgroup
        value = m.group()
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind == "ident":
            tokens.append(Token("KEYWORD" if value in KEYWORDS else "IDENT", value, span))
        elif kind == "int":
            tokens.append(Token("INT", value, span))
        elif kind == "decimal":
            tokens.append(Token("DECIMAL", value, span))
        elif kind == "string":
            tokens.append(Token("STRING", value, span))
        elif kind == "punct":
            tokens.append(Token("PUNCT", value, span))
        pos = m.end()
    tokens.append(Token("EOF", "", SourceSpan(line, pos - line_start + 1)))
    return tokens


def unquote(literal: str) -> str:
    return re.sub(r"\\(.)", r"\1", literal[1:-1])


def quote(value: str) -> str:
    return '"' + value.replace("\\", "\\\\").replace('"', '\\"') + '"'
