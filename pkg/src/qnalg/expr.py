"""Expression language for algebra elements.

Grammar (whitespace is ignored)::

    element := ['-'] term (('+' | '-') term)*
    term    := scalar ['*' factor+] | factor+      # juxtaposition is the product
    factor  := atom ['^' int] ["'"]                # postfix ' is the adjoint
    atom    := 'u' | 'w(' nat ')' | '(' element ')'
    scalar  := ['-'] nat ['/' nat] ['i'] | 'i'

A bare scalar term such as ``1`` or ``i`` is accepted so that every printed
element can be read back.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .laurent import GaussianRational
from .word_algebra import Element, Monomial


class ExprSyntaxError(ValueError):
    def __init__(self, msg: str, pos: int, text: str):
        super().__init__(f"{msg} at position {pos}: {text!r}")
        self.pos = pos


@dataclass(frozen=True)
class Scalar:
    value: GaussianRational


@dataclass(frozen=True)
class Gen:
    name: str  # "u" or "w"
    m: int = 1


@dataclass(frozen=True)
class Adjoint:
    arg: "Expr"


@dataclass(frozen=True)
class Power:
    base: "Expr"
    exp: int


@dataclass(frozen=True)
class Product:
    factors: tuple["Expr", ...]


@dataclass(frozen=True)
class Sum:
    terms: tuple[tuple[int, "Expr"], ...]  # (sign, term)


Expr = Union[Scalar, Gen, Adjoint, Power, Product, Sum]

_TOKEN = re.compile(r"\s*(?:(\d+)|(.))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(1) is not None:
            toks.append(("nat", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            toks.append(("sym", m.group(2), m.start(2)))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.toks[self.i]

    def error(self, msg: str):
        raise ExprSyntaxError(msg, self.peek()[2], self.text)

    def accept(self, sym: str) -> bool:
        kind, val, _ = self.peek()
        if kind == "sym" and val == sym:
            self.i += 1
            return True
        return False

    def expect(self, sym: str) -> None:
        if not self.accept(sym):
            self.error(f"expected {sym!r}")

    def nat(self) -> int:
        kind, val, _ = self.peek()
        if kind != "nat":
            self.error("expected a natural number")
        self.i += 1
        return int(val)

    def parse(self) -> Expr:
        e = self.element()
        if self.peek()[0] != "end":
            self.error("unexpected input")
        return e

    def element(self) -> Expr:
        terms = []
        sign = -1 if self.accept("-") else 1
        terms.append((sign, self.term()))
        while True:
            if self.accept("+"):
                terms.append((1, self.term()))
            elif self.accept("-"):
                terms.append((-1, self.term()))
            else:
                break
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Sum(tuple(terms))

    def _starts_scalar(self) -> bool:
        kind, val, _ = self.peek()
        return kind == "nat" or (kind == "sym" and val == "i")

    def _starts_factor(self) -> bool:
        kind, val, _ = self.peek()
        return kind == "sym" and val in ("u", "w", "(")

    def term(self) -> Expr:
        factors: list[Expr] = []
        negative = self.peek()[1] == "-" and self.toks[self.i + 1][0] == "nat"
        if negative or self._starts_scalar():
            if negative:
                self.i += 1
            s = self.scalar()
            factors.append(Scalar(-s.value) if negative else s)
            if not self.accept("*"):
                return factors[0]
            if not self._starts_factor():
                self.error("expected a factor after '*'")
        if not self._starts_factor():
            self.error("expected a term")
        while self._starts_factor():
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def scalar(self) -> Scalar:
        if self.accept("i"):
            return Scalar(GaussianRational(0, 1))
        q = Fraction(self.nat())
        if self.accept("/"):
            den = self.nat()
            if den == 0:
                self.error("zero denominator")
            q /= den
        if self.accept("i"):
            return Scalar(GaussianRational(0, q))
        return Scalar(GaussianRational(q))

    def factor(self) -> Expr:
        e = self.atom()
        if self.accept("^"):
            neg = self.accept("-")
            k = self.nat()
            e = Power(e, -k if neg else k)
        if self.accept("'"):
            e = Adjoint(e)
        return e

    def atom(self) -> Expr:
        if self.accept("u"):
            return Gen("u")
        if self.accept("w"):
            self.expect("(")
            pos = self.peek()[2]
            m = self.nat()
            if m < 1:
                raise ExprSyntaxError("w index must be at least 1", pos, self.text)
            self.expect(")")
            return Gen("w", m)
        if self.accept("("):
            e = self.element()
            self.expect(")")
            return e
        self.error("expected 'u', 'w(' or '('")


def parse(text: str) -> Expr:
    return _Parser(text).parse()


def eval_expr(e: Expr) -> Element:
    if isinstance(e, Scalar):
        return Element.scalar(e.value)
    if isinstance(e, Gen):
        return Element.mono(1, 1, 1, 0) if e.name == "u" else Element.mono(0, e.m, 1, 0)
    if isinstance(e, Adjoint):
        return eval_expr(e.arg).star()
    if isinstance(e, Power):
        base = eval_expr(e.base)
        if e.exp >= 0:
            return base ** e.exp
        if not _is_unitary_monomial(base):
            raise ValueError("negative powers need a power of u as base")
        return base.star() ** (-e.exp)
    if isinstance(e, Product):
        out = Element.scalar(1)
        for f in e.factors:
            out = out * eval_expr(f)
        return out
    if isinstance(e, Sum):
        out = Element()
        for sign, t in e.terms:
            out = out + eval_expr(t).scale(sign)
        return out
    raise TypeError(f"not an expression: {e!r}")


def _is_unitary_monomial(x: Element) -> bool:
    if len(x) != 1:
        return False
    (mono, c), = x.items()
    return mono.m == 1 and mono.n == 1 and c == 1


def evaluate(text: str) -> Element:
    return eval_expr(parse(text))


# -- printing -------------------------------------------------------------------

def _u(e: int) -> str:
    if e == 0:
        return ""
    return "u" if e == 1 else f"u^{e}"


def monomial_text(x: Monomial) -> str:
    a, m, n, b = x
    if m == 1 and n == 1:
        return _u(a - b) or "1"
    parts = [_u(a), f"w({m})" if m != 1 else "", f"w({n})'" if n != 1 else "", _u(-b)]
    return " ".join(p for p in parts if p)


def _scalar_pieces(c: GaussianRational) -> list[tuple[int, str]]:
    out = []
    if c.re:
        out.append((-1 if c.re < 0 else 1, str(abs(c.re))))
    if c.im:
        q = abs(c.im)
        out.append((-1 if c.im < 0 else 1, "i" if q == 1 else f"{q}i"))
    return out


def print_element(x: Element) -> str:
    """Deterministic text in the input grammar, terms sorted by ``(m, n, a, b)``."""
    pieces = []
    for mono, c in x.items():
        body = monomial_text(mono)
        for sign, mag in _scalar_pieces(c):
            if body == "1":
                txt = mag
            elif mag == "1":
                txt = body
            else:
                txt = f"{mag}*{body}"
            pieces.append((sign, txt))
    if not pieces:
        return "0"
    out = ("-" if pieces[0][0] < 0 else "") + pieces[0][1]
    for sign, txt in pieces[1:]:
        out += (" - " if sign < 0 else " + ") + txt
    return out


def element_json(x: Element) -> list[dict]:
    return [
        {"a": mono.a, "m": mono.m, "n": mono.n, "b": mono.b, "coeff": list(c.as_tuple())}
        for mono, c in x.items()
    ]


def normalize(text: str) -> str:
    return print_element(evaluate(text))


__all__ = [
    "Adjoint", "Expr", "ExprSyntaxError", "Gen", "Power", "Product", "Scalar", "Sum",
    "element_json", "eval_expr", "evaluate", "normalize", "parse", "print_element",
]
