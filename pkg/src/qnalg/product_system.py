"""The product system X over N^x with fibres X_m = C(T).

A fibre element ``xi . 1_m`` is a :class:`FiberElement`. The right action is
twisted by ``inflate(m, .)``, the inner product is ``transfer(m, xi* eta)``
and the left action is pointwise multiplication. Compact operators are kept
as uncanonicalized sums of rank-one operators; two of them are compared by
applying both to a window of basis vectors ``Z^s 1_m``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .laurent import LaurentPoly, ONE, cond_exp, inflate, star, transfer
from .numtheory import _check_positive, bezout, gcd_lcm


@dataclass(frozen=True)
class FiberElement:
    level: int
    poly: LaurentPoly

    def __post_init__(self):
        _check_positive(self.level)

    @classmethod
    def basis(cls, k: int, level: int) -> FiberElement:
        """``Z^k 1_level``."""
        return cls(level, LaurentPoly.monomial(k))

    def __add__(self, other: FiberElement) -> FiberElement:
        _same_level(self.level, other.level)
        return FiberElement(self.level, self.poly + other.poly)

    def __str__(self) -> str:
        return f"({self.poly})*1_{self.level}"


def _same_level(m: int, n: int) -> None:
    if m != n:
        raise ValueError(f"fibre level mismatch: {m} != {n}")


def right_act(x: FiberElement, f: LaurentPoly) -> FiberElement:
    return FiberElement(x.level, x.poly * inflate(x.level, f))


def left_act(f: LaurentPoly, x: FiberElement) -> FiberElement:
    return FiberElement(x.level, f * x.poly)


def inner(x: FiberElement, y: FiberElement) -> LaurentPoly:
    _same_level(x.level, y.level)
    return transfer(x.level, star(x.poly) * y.poly)


def fiber_mul(x: FiberElement, y: FiberElement) -> FiberElement:
    """``(xi 1_m)(eta 1_r) = (xi * eta(z^m)) 1_{mr}``."""
    return FiberElement(x.level * y.level, x.poly * inflate(x.level, y.poly))


# -- compact operators --------------------------------------------------------

@dataclass(frozen=True)
class RankOne:
    """``theta_{left 1_m, right 1_m}``: z -> left . <right, z>."""

    level: int
    left: LaurentPoly
    right: LaurentPoly

    @classmethod
    def basis(cls, i: int, k: int, level: int) -> RankOne:
        """``theta_{Z^i 1_level, Z^k 1_level}``."""
        return cls(level, LaurentPoly.monomial(i), LaurentPoly.monomial(k))


@dataclass(frozen=True)
class CompactOp:
    level: int
    terms: tuple[RankOne, ...] = field(default=())

    def __post_init__(self):
        _check_positive(self.level)
        object.__setattr__(self, "terms", tuple(self.terms))
        for t in self.terms:
            _same_level(self.level, t.level)

    @classmethod
    def rank_one(cls, left: FiberElement, right: FiberElement) -> CompactOp:
        _same_level(left.level, right.level)
        return cls(left.level, (RankOne(left.level, left.poly, right.poly),))

    @classmethod
    def theta(cls, i: int, k: int, level: int) -> CompactOp:
        return cls(level, (RankOne.basis(i, k, level),))

    def __add__(self, other: CompactOp) -> CompactOp:
        _same_level(self.level, other.level)
        return CompactOp(self.level, self.terms + other.terms)

    def __call__(self, z: FiberElement) -> FiberElement:
        return compact_apply(self, z)

    def monomial_terms(self):
        """Expand into ``(coeff, i, k)`` with ``self = sum coeff theta_{Z^i, Z^k}``."""
        out = []
        for t in self.terms:
            for i, c in t.left.items():
                for k, d in t.right.items():
                    out.append((c * d.conjugate(), i, k))
        return out

    def max_abs_exponent(self) -> int:
        return max((max(t.left.max_abs_exponent(), t.right.max_abs_exponent())
                    for t in self.terms), default=0)


def compact_apply(S: CompactOp, z: FiberElement) -> FiberElement:
    _same_level(S.level, z.level)
    m = S.level
    out = LaurentPoly()
    for t in S.terms:
        out = out + t.left * inflate(m, transfer(m, star(t.right) * z.poly))
    return FiberElement(m, out)


def compact_compose(S: CompactOp, T: CompactOp) -> CompactOp:
    """Operator product ``S T`` via ``theta_{x,y} theta_{z,w} = theta_{x <y,z>, w}``."""
    _same_level(S.level, T.level)
    m = S.level
    terms = []
    for s in S.terms:
        for t in T.terms:
            left = s.left * inflate(m, transfer(m, star(s.right) * t.left))
            if left:
                terms.append(RankOne(m, left, t.right))
    return CompactOp(m, tuple(terms))


def basis_window(*ops: CompactOp) -> int:
    """Half-width ``2*max|exponent| + level`` of a symmetric basis window."""
    return 2 * max(op.max_abs_exponent() for op in ops) + max(op.level for op in ops)


def compact_equal(S: CompactOp, T: CompactOp, window: int | None = None) -> bool:
    """Decide ``S == T`` by applying both to basis vectors ``Z^s 1_m``.

    Every compact operator at level ``m`` commutes with multiplication by
    ``Z^m``, so by default the period ``0 <= s < m`` is used; pass ``window``
    to test ``|s| <= window`` instead.
    """
    if S.level != T.level:
        return False
    points = range(S.level) if window is None else range(-window, window + 1)
    for s in points:
        z = FiberElement.basis(s, S.level)
        if compact_apply(S, z) != compact_apply(T, z):
            return False
    return True


def compact_is_zero(S: CompactOp, window: int | None = None) -> bool:
    return compact_equal(S, CompactOp(S.level), window)


def embed(S: CompactOp, r: int) -> CompactOp:
    """The embedding ``K(X_m) -> K(X_mr)``, ``S -> F(S (x) id_r)F*``.

    ``theta_{xi,eta}`` goes to ``zeta -> xi E_m(eta* zeta)`` at level ``mr``,
    which splits over the residues of the exponent modulo ``mr`` as
    ``sum_{t<r} theta_{xi Z^{tm}, eta Z^{tm}}``.
    """
    _check_positive(r)
    m = S.level
    terms = []
    for t in S.terms:
        for s in range(r):
            shift = LaurentPoly.monomial(s * m)
            terms.append(RankOne(m * r, t.left * shift, t.right * shift))
    return CompactOp(m * r, tuple(terms))


def embedded_apply(S: CompactOp, r: int, z: FiberElement) -> FiberElement:
    """Action of ``embed(S, r)`` on ``z`` computed directly as ``xi E_m(eta* zeta)``."""
    m = S.level
    _same_level(m * r, z.level)
    out = LaurentPoly()
    for t in S.terms:
        out = out + t.left * cond_exp(m, star(t.right) * z.poly)
    return FiberElement(m * r, out)


def nica_theta(i: int, k: int, m: int, l: int, j: int, n: int) -> tuple[int, int, int] | None:
    """Closed form of ``embed(theta_{Z^i,Z^k} at m) embed(theta_{Z^l,Z^j} at n)``.

    Returns ``(i', j', m v n)`` for the rank one ``theta_{Z^i', Z^j'}`` at the
    join, or ``None`` when ``k`` and ``l`` differ modulo ``gcd(m, n)``.
    """
    d, join = gcd_lcm(m, n)
    if (l - k) % d:
        return None
    alpha, beta = bezout(m // d, n // d)
    q = (l - k) // d
    return i + m * alpha * q, j + n * beta * q, join


def nica_product(S: CompactOp, T: CompactOp) -> CompactOp:
    """``embed(S) embed(T)`` at level ``lcm(S.level, T.level)``.

    Uses the closed formula on each pair of monomial rank ones.
    """
    m, n = S.level, T.level
    join = gcd_lcm(m, n)[1]
    terms = []
    for c, i, k in S.monomial_terms():
        for e, l, j in T.monomial_terms():
            res = nica_theta(i, k, m, l, j, n)
            if res is not None:
                ii, jj, _ = res
                terms.append(RankOne(join, LaurentPoly.monomial(ii, c * e),
                                     LaurentPoly.monomial(jj)))
    return CompactOp(join, tuple(terms))


def phi_as_compact(m: int, f: LaurentPoly) -> CompactOp:
    """Left multiplication by ``f`` on X_m as ``sum_{k<m} theta_{f Z^k, Z^k}``."""
    _check_positive(m)
    return CompactOp(m, tuple(
        RankOne(m, f * LaurentPoly.monomial(k), LaurentPoly.monomial(k)) for k in range(m)
    ))


def identity_compact(m: int) -> CompactOp:
    return phi_as_compact(m, LaurentPoly.const(ONE))
