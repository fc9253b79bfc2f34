"""Recursive-descent parser and pretty-printer for construction scripts.

Grammar::

    program  := { stmt }
    stmt     := decl | assert | render
    decl     := ("point" IDENT "=" pexpr | "line" IDENT "=" lexpr) ";"
    pexpr    := "(" rat "," rat ")" | "intersect" "(" lexpr "," lexpr ")"
              | "midpoint" "(" pexpr "," pexpr ")" | "reflect" "(" pexpr "," lexpr ")"
              | "foot" "(" pexpr "," lexpr ")"
              | "circumcenter" "(" pexpr "," pexpr "," pexpr ")" | IDENT
    lexpr    := "line" "(" pexpr "," pexpr ")" | "perp_bisector" "(" pexpr "," pexpr ")"
              | "perp" "(" pexpr "," lexpr ")" | IDENT
    assert   := "assert" pred ";"
    pred     := "similar" triple2 | "congruent" triple2
              | "concyclic" "(" pexpr { "," pexpr } ")"
              | "collinear" "(" pexpr "," pexpr "," pexpr ")"
              | "equals" "(" pexpr "," pexpr ")" | "ratio_sq" triple2 "==" rat
    triple2  := "(" pexpr "," pexpr "," pexpr ";" pexpr "," pexpr "," pexpr ")"
    render   := "render" STRING "{" { ritem ";" } "}"
    ritem    := IDENT [ "label" STRING ] [ "style" STRING ]
              | "polygon" "(" IDENT { "," IDENT } ")" [ "style" STRING ]
              | "segment" "(" IDENT "," IDENT ")" [ "style" STRING ]
    rat      := [ "-" ] INT [ "/" INT ] | [ "-" ] DECIMAL
"""

from __future__ import annotations

from .lexer import DslError, Token, quote, tokenize, unquote
from .nodes import (
    Assertion,
    Call,
    Coord,
    Decl,
    Number,
    Pred,
    Ref,
    RenderDirective,
    RenderItem,
    Script,
)

# argument kinds: P = point expression, L = line expression
POINT_FUNCS = {
    "intersect": "LL",
    "midpoint": "PP",
    "reflect": "PL",
    "foot": "PL",
    "circumcenter": "PPP",
}
LINE_FUNCS = {
    "line": "PP",
    "perp_bisector": "PP",
    "perp": "PL",
}
PRED_NAMES = ("similar", "congruent", "concyclic", "collinear", "equals", "ratio_sq")


class ParseError(DslError):
    def __init__(self, message, span, expected=()):
        self.expected = tuple(sorted(expected))
        super().__init__(message, span)


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "EOF":
            self.pos += 1
        return tok

    def check(self, text: str) -> bool:
        return self.tok.kind in ("PUNCT", "KEYWORD") and self.tok.text == text

    def fail(self, expected):
        expected = sorted(expected)
        shown = ", ".join(e if e.isupper() else repr(e) for e in expected)
        raise ParseError(f"expected {shown}; found {self.tok.describe()}", self.tok.span, expected)

    def expect(self, text: str) -> Token:
        if not self.check(text):
            self.fail([text])
        return self.advance()

    def expect_kind(self, kind: str) -> Token:
        if self.tok.kind != kind:
            self.fail([kind])
        return self.advance()

    # -- statements ---------------------------------------------------------

    def program(self) -> Script:
        stmts = []
        while self.tok.kind != "EOF":
            stmts.append(self.stmt())
        return Script(tuple(stmts))

    def stmt(self):
        if self.check("point") or self.check("line"):
            return self.decl()
        if self.check("assert"):
            return self.assertion()
        if self.check("render"):
            return self.render()
        self.fail(["point", "line", "assert", "render"])

    def decl(self) -> Decl:
        kw = self.advance()
        name = self.expect_kind("IDENT").text
        self.expect("=")
        expr = self.pexpr() if kw.text == "point" else self.lexpr()
        self.expect(";")
        return Decl(kw.text, name, expr, kw.span)

    def assertion(self) -> Assertion:
        kw = self.expect("assert")
        pred = self.pred()
        self.expect(";")
        return Assertion(pred, kw.span)

    def render(self) -> RenderDirective:
        kw = self.expect("render")
        name = unquote(self.expect_kind("STRING").text)
        self.expect("{")
        items = []
        while not self.check("}"):
            items.append(self.render_item())
            self.expect(";")
        self.expect("}")
        return RenderDirective(name, tuple(items), kw.span)

    def render_item(self) -> RenderItem:
        start = self.tok
        label = None
        if self.check("polygon") or self.check("segment"):
            kind = self.advance().text
            self.expect("(")
            names = [self.expect_kind("IDENT").text]
            while self.check(","):
                self.advance()
                names.append(self.expect_kind("IDENT").text)
            self.expect(")")
        elif start.kind == "IDENT":
            kind = "ref"
            names = [self.advance().text]
            if self.check("label"):
                self.advance()
                label = unquote(self.expect_kind("STRING").text)
        else:
            self.fail(["IDENT", "polygon", "segment", "}"])
        style = None
        if self.check("style"):
            self.advance()
            style = unquote(self.expect_kind("STRING").text)
        return RenderItem(kind, tuple(names), label, style, start.span)

    # -- expressions --------------------------------------------------------

    def pexpr(self):
        tok = self.tok
        if self.check("("):
            self.advance()
            x = self.rat()
            self.expect(",")
            y = self.rat()
            self.expect(")")
            return Coord(x, y, tok.span)
        if tok.kind == "KEYWORD" and tok.text in POINT_FUNCS:
            return self.call(POINT_FUNCS)
        if tok.kind == "IDENT":
            self.advance()
            return Ref(tok.text, tok.span)
        self.fail(["(", "IDENT", *POINT_FUNCS])

    def lexpr(self):
        tok = self.tok
        if tok.kind == "KEYWORD" and tok.text in LINE_FUNCS:
            return self.call(LINE_FUNCS)
        if tok.kind == "IDENT":
            self.advance()
            return Ref(tok.text, tok.span)
        self.fail(["IDENT", *LINE_FUNCS])

    def call(self, table) -> Call:
        tok = self.advance()
        self.expect("(")
        args = []
        for i, kind in enumerate(table[tok.text]):
            if i:
                self.expect(",")
            args.append(self.pexpr() if kind == "P" else self.lexpr())
        self.expect(")")
        return Call(tok.text, tuple(args), tok.span)

    def rat(self) -> Number:
        start = self.tok
        sign = ""
        if self.check("-"):
            self.advance()
            sign = "-"
        if self.tok.kind == "DECIMAL":
            return Number(sign + self.advance().text, "decimal", start.span)
        if self.tok.kind != "INT":
            self.fail(["INT", "DECIMAL"] if sign else ["-", "INT", "DECIMAL"])
        text = sign + self.advance().text
        if self.check("/"):
            self.advance()
            text += "/" + self.expect_kind("INT").text
            return Number(text, "rational", start.span)
        return Number(text, "int", start.span)

    # -- predicates ---------------------------------------------------------

    def pred(self) -> Pred:
        tok = self.tok
        if not (tok.kind == "KEYWORD" and tok.text in PRED_NAMES):
            self.fail(PRED_NAMES)
        name = self.advance().text
        value = None
        if name in ("similar", "congruent", "ratio_sq"):
            groups = self.triple2()
            if name == "ratio_sq":
                self.expect("==")
                value = self.rat()
        else:
            self.expect("(")
            group = [self.pexpr()]
            while self.check(","):
                self.advance()
                group.append(self.pexpr())
            self.expect(")")
            groups = (tuple(group),)
        return Pred(name, groups, value, tok.span)

    def triple2(self):
        self.expect("(")
        first = [self.pexpr()]
        for _ in range(2):
            self.expect(",")
            first.append(self.pexpr())
        self.expect(";")
        second = [self.pexpr()]
        for _ in range(2):
            self.expect(",")
            second.append(self.pexpr())
        self.expect(")")
        return (tuple(first), tuple(second))


def parse(source) -> Script:
    """Parse script text (or a token list) into a Script."""
    tokens = tokenize(source) if isinstance(source, str) else list(source)
    return _Parser(tokens).program()


# -- pretty-printing ----------------------------------------------------------

def format_expr(e) -> str:
    if isinstance(e, Coord):
        return f"({e.x.text}, {e.y.text})"
    if isinstance(e, Ref):
        return e.name
    if isinstance(e, Call):
        return f"{e.func}({', '.join(format_expr(a) for a in e.args)})"
    raise TypeError(f"not an expression: {e!r}")


def format_pred(p: Pred) -> str:
    groups = [", ".join(format_expr(a) for a in g) for g in p.groups]
    text = f"{p.name} ({'; '.join(groups)})" if len(groups) == 2 else f"{p.name}({groups[0]})"
    if p.value is not None:
        text += f" == {p.value.text}"
    return text


def _format_item(item: RenderItem) -> str:
    if item.kind == "ref":
        text = item.names[0]
        if item.label is not None:
            text += f" label {quote(item.label)}"
    else:
        text = f"{item.kind}({', '.join(item.names)})"
    if item.style is not None:
        text += f" style {quote(item.style)}"
    return text


def format_statement(s) -> str:
    if isinstance(s, Decl):
        return f"{s.kind} {s.name} = {format_expr(s.expr)};"
    if isinstance(s, Assertion):
        return f"assert {format_pred(s.pred)};"
    if isinstance(s, RenderDirective):
        body = "".join(f"    {_format_item(i)};\n" for i in s.items)
        return f"render {quote(s.name)} {{\n{body}}}"
    raise TypeError(f"not a statement: {s!r}")


def format_script(script: Script) -> str:
    return "".join(format_statement(s) + "\n" for s in script.statements)
