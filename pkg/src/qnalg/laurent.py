"""Laurent polynomials in the unitary generator Z of C(T).

Coefficients are Gaussian rationals. The circle-algebra maps used by the
product system act on Fourier coefficients:

* ``inflate(m, f)``  : f(z) -> f(z^m)                (exponent k -> m*k)
* ``transfer(m, f)`` : averaging over m-th roots     (keeps m | k, k -> k/m)
* ``cond_exp(m, f)`` : inflate(m, transfer(m, f))    (keeps m | k)
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .numtheory import _check_positive

Number = Union[int, Fraction, "GaussianRational"]


class GaussianRational:
    """Exact complex number ``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: int | Fraction = 0, im: int | Fraction = 0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @classmethod
    def coerce(cls, x: Number) -> GaussianRational:
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, complex):
            raise TypeError("floating complex numbers are not exact")
        return cls(x)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = GaussianRational(other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __add__(self, other: Number) -> GaussianRational:
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> GaussianRational:
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other: Number) -> GaussianRational:
        return self + (-GaussianRational.coerce(other))

    def __rsub__(self, other: Number) -> GaussianRational:
        return GaussianRational.coerce(other) - self

    def __mul__(self, other: Number) -> GaussianRational:
        o = GaussianRational.coerce(other)
        if not self.im and not o.im:
            return GaussianRational(self.re * o.re)
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> GaussianRational:
        o = GaussianRational.coerce(other)
        norm = o.re * o.re + o.im * o.im
        if not norm:
            raise ZeroDivisionError("division by zero")
        return self * GaussianRational(o.re / norm, -o.im / norm)

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def as_tuple(self) -> tuple[int, int, int, int]:
        """``(re_num, re_den, im_num, im_den)``."""
        return (self.re.numerator, self.re.denominator,
                self.im.numerator, self.im.denominator)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self) -> str:
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        if not self.re:
            return _imag_str(self.im)
        sign = "-" if self.im < 0 else "+"
        return f"({self.re} {sign} {_imag_str(abs(self.im))})"


def _imag_str(q: Fraction) -> str:
    if q == 1:
        return "i"
    if q == -1:
        return "-i"
    return f"{q}i"


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


class LaurentPoly:
    """Finite Laurent series ``sum c_k Z^k``; zero coefficients are never stored."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, Number] | Iterable[tuple[int, Number]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, GaussianRational] = {}
        for k, v in items:
            v = GaussianRational.coerce(v)
            c[k] = c.get(k, ZERO) + v
        self._c = {k: v for k, v in c.items() if v}

    @classmethod
    def _raw(cls, c: dict[int, GaussianRational]) -> LaurentPoly:
        """Wrap a dict already free of zero coefficients."""
        out = cls.__new__(cls)
        out._c = c
        return out

    @classmethod
    def monomial(cls, k: int, c: Number = 1) -> LaurentPoly:
        c = GaussianRational.coerce(c)
        return cls._raw({k: c} if c else {})

    @classmethod
    def const(cls, c: Number) -> LaurentPoly:
        return cls({0: c})

    @property
    def coeffs(self) -> dict[int, GaussianRational]:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def coeff(self, k: int) -> GaussianRational:
        return self._c.get(k, ZERO)

    def exponents(self) -> list[int]:
        return sorted(self._c)

    def max_abs_exponent(self) -> int:
        return max((abs(k) for k in self._c), default=0)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __add__(self, other) -> LaurentPoly:
        other = _as_poly(other)
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, ZERO) + v
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({k: -v for k, v in self._c.items()})

    def __sub__(self, other) -> LaurentPoly:
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> LaurentPoly:
        return _as_poly(other) - self

    def __mul__(self, other) -> LaurentPoly:
        other = _as_poly(other)
        if len(self._c) == 1 and len(other._c) == 1:
            (k, v), = self._c.items()
            (l, w), = other._c.items()
            return LaurentPoly._raw({k + l: v * w})
        out: dict[int, GaussianRational] = {}
        for k, v in self._c.items():
            for l, w in other._c.items():
                out[k + l] = out.get(k + l, ZERO) + v * w
        return LaurentPoly._raw({k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> LaurentPoly:
        if e < 0:
            if len(self._c) != 1:
                raise ValueError("only monomials are invertible")
            (k, v), = self._c.items()
            return LaurentPoly({k * e: _gpow(ONE / v, -e)})
        out = LaurentPoly.const(1)
        for _ in range(e):
            out = out * self
        return out

    def star(self) -> LaurentPoly:
        return star(self)

    def __call__(self, z: complex) -> complex:
        """Numerical evaluation at a point of the circle (used by tests only)."""
        return sum(complex(v) * z ** k for k, v in self._c.items())

    def __repr__(self) -> str:
        return f"LaurentPoly({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)


def _gpow(x: GaussianRational, e: int) -> GaussianRational:
    out = ONE
    for _ in range(e):
        out = out * x
    return out


def _as_poly(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    return LaurentPoly.const(x)


Z = LaurentPoly.monomial(1)


def add(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f + g


def mul(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f * g


def star(f: LaurentPoly) -> LaurentPoly:
    """Pointwise conjugate: ``c Z^k -> conj(c) Z^-k``."""
    return LaurentPoly._raw({-k: v.conjugate() for k, v in f._c.items()})


def inflate(m: int, f: LaurentPoly) -> LaurentPoly:
    """The endomorphism ``f -> f(z^m)``."""
    _check_positive(m)
    return LaurentPoly._raw({m * k: v for k, v in f._c.items()})


def transfer(m: int, f: LaurentPoly) -> LaurentPoly:
    """Transfer operator for ``inflate(m, .)``: ``(1/m) sum_{w^m=z} f(w)``.

    On Fourier modes this keeps the exponents divisible by ``m`` and divides
    them by ``m``.
    """
    _check_positive(m)
    return LaurentPoly._raw({k // m: v for k, v in f._c.items() if k % m == 0})


def cond_exp(m: int, f: LaurentPoly) -> LaurentPoly:
    """Conditional expectation onto the range of ``inflate(m, .)``.

    Implemented as the Fourier filter, which coincides with both the
    rotation average and ``inflate(m, transfer(m, f))``.
    """
    _check_positive(m)
    return LaurentPoly._raw({k: v for k, v in f._c.items() if k % m == 0})


# -- text syntax -------------------------------------------------------------

_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
          (?P<coef>\d+(?:/\d+)?\s*i?|i)\s*(?:\*\s*(?P<z1>Z(?:\s*\^\s*(?P<e1>-?\d+))?))?
          |
          (?P<z2>Z(?:\s*\^\s*(?P<e2>-?\d+))?)
        )\s*""",
    re.VERBOSE,
)


def parse_poly(text: str) -> LaurentPoly:
    """Parse ``c*Z^k`` terms joined by ``+``/``-``, e.g. ``1/2*Z^-3 + i*Z^2``."""
    pos = 0
    out: dict[int, GaussianRational] = {}
    first = True
    text = text.strip()
    if not text:
        raise SyntaxError("empty polynomial")
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise SyntaxError(f"bad polynomial syntax at position {pos}: {text!r}")
        if m.group("sign") is None and not first:
            raise SyntaxError(f"expected '+' or '-' at position {pos}: {text!r}")
        sign = -1 if m.group("sign") == "-" else 1
        coef = _parse_scalar(m.group("coef")) if m.group("coef") else ONE
        if m.group("coef"):
            has_z = m.group("z1") is not None
            e = int(m.group("e1")) if m.group("e1") else (1 if has_z else 0)
        else:
            e = int(m.group("e2")) if m.group("e2") else 1
        out[e] = out.get(e, ZERO) + coef * sign
        pos = m.end()
        first = False
    return LaurentPoly(out)


def _parse_scalar(s: str) -> GaussianRational:
    s = s.replace(" ", "")
    imag = s.endswith("i")
    if imag:
        s = s[:-1]
    q = Fraction(s) if s else Fraction(1)
    return GaussianRational(0, q) if imag else GaussianRational(q)


def _scalar_text(c: GaussianRational) -> list[tuple[int, str]]:
    """Split a coefficient into (sign, magnitude text) pieces, real part first."""
    out = []
    if c.re:
        out.append((-1 if c.re < 0 else 1, str(abs(c.re))))
    if c.im:
        q = abs(c.im)
        out.append((-1 if c.im < 0 else 1, "i" if q == 1 else f"{q}i"))
    return out


def format_poly(f: LaurentPoly) -> str:
    """Canonical text, ascending exponents; readable back by ``parse_poly``."""
    pieces = []
    for k, c in f.items():
        z = "" if k == 0 else ("Z" if k == 1 else f"Z^{k}")
        for sign, mag in _scalar_text(c):
            if not z:
                body = mag
            elif mag == "1":
                body = z
            else:
                body = f"{mag}*{z}"
            pieces.append((sign, body))
    if not pieces:
        return "0"
    out = ("-" if pieces[0][0] < 0 else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        out += (" - " if sign < 0 else " + ") + body
    return out
