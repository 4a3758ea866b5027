"""Graph expressions: ``P:n | C:n | K:r | KB:m,t | cart(E,E) | strong(E,E) | tensor(E,E) | file(path)``.

Size parameters may be affine in a free variable ``n`` (``n``, ``3n``,
``2*n+1``), which turns an expression into a one-parameter family.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Tuple, Union

from .graph import (Graph, GraphError, build_family, cartesian_product, parse_edge_list,
                    strong_product, tensor_product)


class ExprParseError(GraphError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text[:pos]}>>>{text[pos:]}")
        self.pos = pos


@dataclass(frozen=True)
class Affine:
    """``a*n + b``."""

    a: int
    b: int

    def at(self, n: Optional[int]) -> int:
        if self.a and n is None:
            raise GraphError("expression has a free 'n' but no value was given")
        return self.a * (n or 0) + self.b

    def __str__(self):
        if not self.a:
            return str(self.b)
        head = "n" if self.a == 1 else f"{self.a}n"
        if self.b > 0:
            return f"{head}+{self.b}"
        if self.b < 0:
            return f"{head}{self.b}"
        return head


@dataclass(frozen=True)
class Family:
    kind: str
    params: Tuple[Affine, ...]

    def __str__(self):
        return f"{self.kind}:{','.join(map(str, self.params))}"


@dataclass(frozen=True)
class Product:
    op: str
    left: "Expr"
    right: "Expr"

    def __str__(self):
        return f"{self.op}({self.left},{self.right})"


@dataclass(frozen=True)
class FileRef:
    path: str

    def __str__(self):
        return f"file({self.path})"


Expr = Union[Family, Product, FileRef]

_ARITY = {"P": 1, "C": 1, "K": 1, "KB": 2}
_OPS = ("cart", "strong", "tensor")
_AFFINE = re.compile(r"\s*(?:(-?\d*)\s*\*?\s*n\s*([+-]\s*\d+)?|(-?\d+))")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str):
        raise ExprParseError(msg, self.text, self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def eat(self, tok: str):
        self.skip()
        if not self.text.startswith(tok, self.pos):
            self.error(f"expected {tok!r}")
        self.pos += len(tok)

    def word(self) -> str:
        self.skip()
        m = re.compile(r"[A-Za-z]+").match(self.text, self.pos)
        if not m:
            self.error("expected a family or product name")
        self.pos = m.end()
        return m.group()

    def affine(self) -> Affine:
        m = _AFFINE.match(self.text, self.pos)
        if not m or m.end() == self.pos:
            self.error("expected an integer or affine expression in n")
        self.pos = m.end()
        if m.group(3) is not None:
            return Affine(0, int(m.group(3)))
        coef = m.group(1)
        a = 1 if coef in ("", None) else (-1 if coef == "-" else int(coef))
        b = int(m.group(2).replace(" ", "")) if m.group(2) else 0
        return Affine(a, b)

    def expr(self) -> Expr:
        start = self.pos
        name = self.word()
        if name in _OPS:
            self.eat("(")
            left = self.expr()
            self.eat(",")
            right = self.expr()
            self.eat(")")
            return Product(name, left, right)
        if name == "file":
            self.eat("(")
            end = self.text.find(")", self.pos)
            if end < 0:
                self.error("unterminated file(...)")
            path = self.text[self.pos:end].strip()
            self.pos = end + 1
            return FileRef(path)
        if name not in _ARITY:
            self.pos = start
            self.error(f"unknown name {name!r}")
        self.eat(":")
        params = [self.affine()]
        for _ in range(_ARITY[name] - 1):
            self.eat(",")
            params.append(self.affine())
        return Family(name, tuple(params))

    def parse(self) -> Expr:
        e = self.expr()
        self.skip()
        if self.pos != len(self.text):
            self.error("trailing input")
        return e


def parse_expr(text: str) -> Expr:
    return _Parser(text).parse()


def has_free_n(e: Expr) -> bool:
    if isinstance(e, Family):
        return any(p.a for p in e.params)
    if isinstance(e, Product):
        return has_free_n(e.left) or has_free_n(e.right)
    return False


def substitute(e: Expr, n: Optional[int]) -> Expr:
    """Replace ``n`` by a value, leaving constant parameters."""
    if isinstance(e, Family):
        return Family(e.kind, tuple(Affine(0, p.at(n)) for p in e.params))
    if isinstance(e, Product):
        return Product(e.op, substitute(e.left, n), substitute(e.right, n))
    return e


def build_graph(e: Union[Expr, str], n: Optional[int] = None,
                cap: Optional[int] = None) -> Graph:
    if isinstance(e, str):
        e = parse_expr(e)
    if isinstance(e, Family):
        return build_family(e.kind, *(p.at(n) for p in e.params))
    if isinstance(e, FileRef):
        return parse_edge_list(Path(e.path).read_text())
    make = {"cart": cartesian_product, "strong": strong_product, "tensor": tensor_product}[e.op]
    G, _ = make(build_graph(e.left, n, cap), build_graph(e.right, n, cap), cap=cap)
    return G
