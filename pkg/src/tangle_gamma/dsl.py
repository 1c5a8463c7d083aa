"""Text syntax for tangle expressions.

Grammar::

    expr   := term { ";" term }      composition, diagrammatic order
    term   := factor { "*" factor }  tensor product
    factor := "id" "(" nat ")" | "cup" | "cap" | "x+" | "x-" | "(" expr ")"

Whitespace is insignificant and ``#`` starts a comment running to the end of
the line. Both operators associate to the left.
"""
from __future__ import annotations

import re

from .errors import TangleSyntaxError
from .tangle import Cap, Compose, Cup, Id, Tensor, Xm, Xp

_TOKEN_RE = re.compile(
    r"(?P<ws>[ \t\r\n]+)|(?P<comment>#[^\n]*)|(?P<op>x\+|x-|[;*()])|(?P<word>[A-Za-z_][A-Za-z0-9_]*)|(?P<nat>\d+)"
)


def _tokenize(text):
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise TangleSyntaxError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        value = m.group()
        col = pos - line_start + 1
        if kind == "ws":
            for k, ch in enumerate(value):
                if ch == "\n":
                    line += 1
                    line_start = pos + k + 1
        elif kind != "comment":
            tokens.append((kind, value, line, col))
        pos = m.end()
    tokens.append(("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        tok = self.take()
        if tok[1] != value:
            self.fail(f"expected {value!r}", tok)
        return tok

    def fail(self, msg, tok):
        found = "end of input" if tok[0] == "eof" else repr(tok[1])
        raise TangleSyntaxError(f"{msg}, found {found}", tok[2], tok[3])

    def expr(self):
        node = self.term()
        while self.peek()[1] == ";":
            tok = self.take()
            node = Compose(node, self.term(), loc=(tok[2], tok[3]))
        return node

    def term(self):
        node = self.factor()
        while self.peek()[1] == "*":
            tok = self.take()
            node = Tensor(node, self.factor(), loc=(tok[2], tok[3]))
        return node

    def factor(self):
        tok = self.take()
        kind, value = tok[0], tok[1]
        if value == "(":
            node = self.expr()
            self.expect(")")
            return node
        if value == "x+":
            return Xp()
        if value == "x-":
            return Xm()
        if kind == "word":
            if value == "cup":
                return Cup()
            if value == "cap":
                return Cap()
            if value == "id":
                self.expect("(")
                num = self.take()
                if num[0] != "nat":
                    self.fail("expected a natural number", num)
                self.expect(")")
                return Id(int(num[1]))
        self.fail("expected a tangle", tok)


def parse(text: str):
    p = _Parser(text)
    node = p.expr()
    if p.peek()[0] != "eof":
        p.fail("unexpected trailing input", p.peek())
    return node


def to_text(e) -> str:
    """Canonical text; ``parse(to_text(e)) == e``."""
    if isinstance(e, Id):
        return f"id({e.n})"
    if isinstance(e, Cup):
        return "cup"
    if isinstance(e, Cap):
        return "cap"
    if isinstance(e, Xp):
        return "x+"
    if isinstance(e, Xm):
        return "x-"
    if isinstance(e, Compose):
        right = to_text(e.right)
        if isinstance(e.right, Compose):
            right = f"({right})"
        return f"{to_text(e.left)} ; {right}"
    left, right = to_text(e.left), to_text(e.right)
    if isinstance(e.left, Compose):
        left = f"({left})"
    if isinstance(e.right, (Compose, Tensor)):
        right = f"({right})"
    return f"{left} * {right}"
