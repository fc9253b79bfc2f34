"""AST for construction scripts.

Spans are excluded from equality so that a script and its pretty-printed
form parse to equal trees.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .lexer import SourceSpan

_span = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Number:
    """Numeric literal; ``kind`` is ``"int"``, ``"rational"`` or ``"decimal"``."""

    text: str
    kind: str
    span: SourceSpan = _span


@dataclass(frozen=True)
class Coord:
    x: Number
    y: Number
    span: SourceSpan = _span


@dataclass(frozen=True)
class Ref:
    name: str
    span: SourceSpan = _span


@dataclass(frozen=True)
class Call:
    """A point or line constructor such as ``intersect(l1, l2)``."""

    func: str
    args: tuple
    span: SourceSpan = _span


Expr = Union[Coord, Ref, Call]


@dataclass(frozen=True)
class Decl:
    kind: str  # "point" or "line"
    name: str
    expr: Expr
    span: SourceSpan = _span


@dataclass(frozen=True)
class Pred:
    """``name`` applied to argument ``groups``; ``value`` is set for ratio_sq."""

    name: str
    groups: tuple
    value: Optional[Number] = None
    span: SourceSpan = _span


@dataclass(frozen=True)
class Assertion:
    pred: Pred
    span: SourceSpan = _span


@dataclass(frozen=True)
class RenderItem:
    kind: str  # "ref", "polygon" or "segment"
    names: tuple
    label: Optional[str] = None
    style: Optional[str] = None
    span: SourceSpan = _span


@dataclass(frozen=True)
class RenderDirective:
    name: str
    items: tuple
    span: SourceSpan = _span


@dataclass(frozen=True)
class Script:
    statements: tuple
