"""Text syntax for formulas.

Grammar, loosest binding first::

    iff   := imp ("<->" imp)*          left-assoc
    imp   := or ("->" imp)?            right-assoc
    or    := and ("|" and)*
    and   := unary ("&" unary)*
    unary := "!" unary | atom | "true" | "false" | "(" iff ")"

``a -> b`` is read as ``!a | b`` and ``a <-> b`` as ``(!a | b) & (!b | a)``.
"""

from __future__ import annotations

import re

from .formula import And, Const, Formula, Not, Or, Var, chain

_TOKEN = re.compile(r"\s*(?:(<->|->|[!&|()])|([A-Za-z_][A-Za-z0-9_]*))")


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        tok = m.group(1) or m.group(2)
        tokens.append((tok, m.start(1) if m.group(1) else m.start(2)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0
        self.end = len(text)

    def peek(self) -> str | None:
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def pos(self) -> int:
        return self.tokens[self.i][1] if self.i < len(self.tokens) else self.end

    def take(self, expected: str | None = None) -> str:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", self.end)
        if expected is not None and tok != expected:
            raise ParseError(f"expected {expected!r}, found {tok!r}", self.pos())
        self.i += 1
        return tok

    def iff(self) -> Formula:
        f = self.imp()
        while self.peek() == "<->":
            self.take()
            g = self.imp()
            f = And(Or(Not(f), g), Or(Not(g), f))
        return f

    def imp(self) -> Formula:
        f = self.disj()
        if self.peek() == "->":
            self.take()
            return Or(Not(f), self.imp())
        return f

    def disj(self) -> Formula:
        f = self.conj()
        while self.peek() == "|":
            self.take()
            f = Or(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.unary()
        while self.peek() == "&":
            self.take()
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        tok = self.peek()
        if tok == "!":
            self.take()
            return Not(self.unary())
        if tok == "(":
            self.take()
            f = self.iff()
            self.take(")")
            return f
        if tok is None:
            raise ParseError("unexpected end of input", self.end)
        if tok in ("true", "false"):
            self.take()
            return Const(tok == "true")
        if tok[0].isalpha() or tok[0] == "_":
            self.take()
            return Var(tok)
        raise ParseError(f"unexpected token {tok!r}", self.pos())


def parse(text: str) -> Formula:
    """Parse formula text, expanding ``->`` and ``<->``."""
    if not text.strip():
        raise ParseError("empty formula", 0)
    p = _Parser(text)
    f = p.iff()
    if p.peek() is not None:
        raise ParseError(f"unexpected token {p.peek()!r}", p.pos())
    return f


_PREC = {Or: 1, And: 2}


def render(f: Formula) -> str:
    """Canonical text; ``parse(render(f)) == f``."""
    if isinstance(f, Const):
        return "true" if f.value else "false"
    if isinstance(f, Var):
        return f.name
    if isinstance(f, Not):
        inner = render(f.arg)
        if isinstance(f.arg, (And, Or)):
            inner = f"({inner})"
        return "!" + inner
    prec = _PREC[type(f)]
    parts = chain(f)
    out = []
    for k, g in enumerate(parts):
        text = render(g)
        if isinstance(g, (And, Or)):
            # Left-associative operators: only the head of the chain may be an
            # unparenthesized operand of equal precedence, and chain() already
            # absorbed that case.
            if _PREC[type(g)] < prec or (k > 0 and _PREC[type(g)] == prec):
                text = f"({text})"
        out.append(text)
    return (" & " if isinstance(f, And) else " | ").join(out)
