"""Symbolic *-algebra on a unitary ``u`` and isometries ``w_m``.

Every element is a finite combination of canonical monomials
``u^a w_m w_n^* u^-b`` stored as ``Monomial(a, m, n, b)``. Since
``u^t w_m = w_m`` conjugated appropriately, ``(a, m, n, b)`` and
``(a + t*m, m, n, b + t*n)`` name the same operator; the representative
with ``0 <= a < m`` is the canonical one.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

from .laurent import GaussianRational, LaurentPoly, ONE, ZERO, Number
from .numtheory import _check_positive, bezout, canonical_residue
from .product_system import CompactOp, FiberElement


class Monomial(NamedTuple):
    """``u^a w_m w_n^* u^-b``."""

    a: int
    m: int
    n: int
    b: int

    def sort_key(self) -> tuple[int, int, int, int]:
        return (self.m, self.n, self.a, self.b)

    def __str__(self) -> str:
        return format_monomial(self)


IDENTITY = Monomial(0, 1, 1, 0)


def mono_canon(a: int, m: int, n: int, b: int) -> Monomial:
    _check_positive(m, n)
    r, t = canonical_residue(a, m)
    return Monomial(r, m, n, b - t * n)


def mono_mul(x: Monomial, y: Monomial, *, witness_shift: int = 0) -> Monomial | None:
    """Product of two monomials, or ``None`` when it vanishes.

    With ``x = (a, m, n, b)`` and ``y = (c, p, q, d)`` the middle factor
    ``w_n^* u^(c-b) w_p`` is zero unless ``g = gcd(n, p)`` divides ``c - b``;
    otherwise it equals ``u^x w_(p/g) w_(n/g)^* u^-y`` for any solution of
    ``(c-b)/g = x*(n/g) - y*(p/g)``. ``witness_shift`` picks a different
    solution, which must not change the result.
    """
    a, m, n, b = x
    c, p, q, d = y
    l = c - b
    g = gcd(n, p)
    if l % g:
        return None
    n1, p1, l1 = n // g, p // g, l // g
    alpha, beta = bezout(n1, p1)
    xs = alpha * l1 + witness_shift * p1
    ys = beta * l1 + witness_shift * n1
    return mono_canon(a + m * xs, m * p1, q * n1, d + q * ys)


def mono_star(x: Monomial) -> Monomial:
    return mono_canon(x.b, x.n, x.m, x.a)


def format_monomial(x: Monomial) -> str:
    """Display form ``u^a w_m w_n* u^-b`` with unit factors omitted."""
    a, m, n, b = x
    if m == 1 and n == 1:
        return _u_text(a - b) or "1"
    parts = [_u_text(a), f"w_{m}" if m != 1 else "", f"w_{n}*" if n != 1 else "", _u_text(-b)]
    return " ".join(p for p in parts if p)


def _u_text(e: int) -> str:
    if e == 0:
        return ""
    return "u" if e == 1 else f"u^{e}"


class Element:
    """Finite linear combination of canonical monomials."""

    __slots__ = ("_t",)

    def __init__(self, terms: Mapping[Monomial, Number] | Iterable[tuple[Monomial, Number]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        t: dict[Monomial, GaussianRational] = {}
        for mono, c in items:
            mono = mono_canon(*mono)
            t[mono] = t.get(mono, ZERO) + GaussianRational.coerce(c)
        self._t = {k: v for k, v in t.items() if v}

    @classmethod
    def mono(cls, a: int, m: int, n: int, b: int, c: Number = 1) -> Element:
        return cls({Monomial(a, m, n, b): c})

    @classmethod
    def scalar(cls, c: Number) -> Element:
        return cls({IDENTITY: c})

    @property
    def terms(self) -> dict[Monomial, GaussianRational]:
        return dict(self._t)

    def items(self) -> list[tuple[Monomial, GaussianRational]]:
        return sorted(self._t.items(), key=lambda kv: kv[0].sort_key())

    def __iter__(self) -> Iterator[tuple[Monomial, GaussianRational]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, GaussianRational)):
            other = Element.scalar(other)
        if not isinstance(other, Element):
            return NotImplemented
        return self._t == other._t

    def __hash__(self) -> int:
        return hash(frozenset(self._t.items()))

    def __add__(self, other) -> Element:
        other = _as_element(other)
        out = dict(self._t)
        for k, v in other._t.items():
            out[k] = out.get(k, ZERO) + v
        return Element(out)

    __radd__ = __add__

    def __neg__(self) -> Element:
        return self.scale(-1)

    def __sub__(self, other) -> Element:
        return self + (-_as_element(other))

    def __rsub__(self, other) -> Element:
        return _as_element(other) - self

    def __mul__(self, other) -> Element:
        if isinstance(other, (int, GaussianRational)):
            return self.scale(other)
        return elem_mul(self, other)

    def __rmul__(self, other) -> Element:
        if isinstance(other, (int, GaussianRational)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e: int) -> Element:
        if e < 0:
            raise ValueError("negative powers are only defined for u; use u_power")
        out = Element.scalar(1)
        for _ in range(e):
            out = out * self
        return out

    def scale(self, c: Number) -> Element:
        return elem_scale(self, c)

    def star(self) -> Element:
        return elem_star(self)

    def __repr__(self) -> str:
        return f"Element({str(self)!r})"

    def __str__(self) -> str:
        return format_element(self)


def _as_element(x) -> Element:
    if isinstance(x, Element):
        return x
    return Element.scalar(x)


def elem_add(x: Element, y: Element) -> Element:
    return x + y


def elem_scale(x: Element, c: Number) -> Element:
    c = GaussianRational.coerce(c)
    return Element({k: v * c for k, v in x._t.items()})


def elem_mul(x: Element, y: Element) -> Element:
    out: dict[Monomial, GaussianRational] = {}
    for mx, cx in x._t.items():
        for my, cy in y._t.items():
            p = mono_mul(mx, my)
            if p is not None:
                out[p] = out.get(p, ZERO) + cx * cy
    return Element(out)


def elem_star(x: Element) -> Element:
    return Element({mono_star(k): v.conjugate() for k, v in x._t.items()})


def format_element(x: Element) -> str:
    pieces = []
    for mono, c in x.items():
        body = format_monomial(mono)
        for sign, mag in _coef_pieces(c):
            if body == "1":
                txt = mag
            elif mag == "1":
                txt = body
            else:
                txt = f"{mag} {body}"
            pieces.append((sign, txt))
    if not pieces:
        return "0"
    out = ("-" if pieces[0][0] < 0 else "") + pieces[0][1]
    for sign, txt in pieces[1:]:
        out += (" - " if sign < 0 else " + ") + txt
    return out


def _coef_pieces(c: GaussianRational) -> list[tuple[int, str]]:
    out = []
    if c.re:
        out.append((-1 if c.re < 0 else 1, str(abs(c.re))))
    if c.im:
        q = abs(c.im)
        out.append((-1 if c.im < 0 else 1, "i" if q == 1 else f"{q}i"))
    return out


# -- words in the generators ---------------------------------------------------

@dataclass(frozen=True)
class GeneratorToken:
    kind: str  # "U", "Ustar", "W", "Wstar"
    m: int = 1

    def __post_init__(self):
        if self.kind not in ("U", "Ustar", "W", "Wstar"):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        _check_positive(self.m)

    def monomial(self) -> Monomial:
        if self.kind == "U":
            return Monomial(1, 1, 1, 0)
        if self.kind == "Ustar":
            return Monomial(-1, 1, 1, 0)
        if self.kind == "W":
            return Monomial(0, self.m, 1, 0)
        return Monomial(0, 1, self.m, 0)

    def star(self) -> GeneratorToken:
        flip = {"U": "Ustar", "Ustar": "U", "W": "Wstar", "Wstar": "W"}
        return GeneratorToken(flip[self.kind], self.m)

    def __str__(self) -> str:
        return {"U": "u", "Ustar": "u*", "W": f"w_{self.m}", "Wstar": f"w_{self.m}*"}[self.kind]


U = GeneratorToken("U")
USTAR = GeneratorToken("Ustar")


def W(m: int) -> GeneratorToken:
    return GeneratorToken("W", m)


def Wstar(m: int) -> GeneratorToken:
    return GeneratorToken("Wstar", m)


def u_power(l: int) -> list[GeneratorToken]:
    """Token list for ``u^l``."""
    return [U] * l if l >= 0 else [USTAR] * (-l)


def word_reduce(word: Sequence[GeneratorToken]) -> Element:
    """Multiply out a word in the generators left to right."""
    acc: Monomial | None = IDENTITY
    for tok in word:
        acc = mono_mul(acc, tok.monomial())
        if acc is None:
            return Element()
    return Element({acc: ONE})


def u_elem(l: int = 1) -> Element:
    return Element.mono(l, 1, 1, 0)


def w_elem(m: int) -> Element:
    return Element.mono(0, m, 1, 0)


def wstar_elem(m: int) -> Element:
    return Element.mono(0, 1, m, 0)


# -- bridge from the product system --------------------------------------------

def fiber_to_word(x: FiberElement) -> Element:
    """``f 1_m -> f(u) w_m``."""
    return Element({mono_canon(k, x.level, 1, 0): c for k, c in x.poly.items()})


def poly_to_word(f: LaurentPoly) -> Element:
    """Image of the coefficient algebra, ``f -> f(u)``."""
    return fiber_to_word(FiberElement(1, f))


def compact_to_word(S: CompactOp) -> Element:
    """``theta_{xi, eta} -> psi(xi) psi(eta)^*``."""
    out = Element()
    for t in S.terms:
        out = out + fiber_to_word(FiberElement(S.level, t.left)) * \
            fiber_to_word(FiberElement(S.level, t.right)).star()
    return out
