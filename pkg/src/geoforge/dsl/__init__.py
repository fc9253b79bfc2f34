"""Construction scripts: ``.geo`` files declaring points and lines,
asserting predicates about them, and naming scenes to render."""

from .evaluate import (
    AssertionResult,
    DslTypeError,
    Environment,
    EvalResult,
    GeometricEvalError,
    UndefinedIdentifierError,
    evaluate,
)
from .lexer import DslError, LexError, SourceSpan, Token, tokenize
from .parser import ParseError, format_script, parse


def load_script(path):
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


__all__ = [
    "AssertionResult",
    "DslError",
    "DslTypeError",
    "Environment",
    "EvalResult",
    "GeometricEvalError",
    "LexError",
    "ParseError",
    "SourceSpan",
    "Token",
    "UndefinedIdentifierError",
    "evaluate",
    "format_script",
    "load_script",
    "parse",
    "tokenize",
]
