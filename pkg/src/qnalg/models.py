"""Exact representation oracles and the zero tests built on them.

Two concrete models are used.

* The Q_N model on l^2(Z): ``u e_k = e_{k+1}``, ``w_m e_k = e_{mk}``. A
  monomial acts as a partial affine injection defined on a congruence class.
* The Fock model on the span of ``Z^j 1_r``: ``u`` shifts ``j``, ``w_m``
  sends ``(j, r)`` to ``(m j, m r)``. This separates the Nica-Toeplitz
  algebra from its quotient Q_N.

Zero tests group monomials by the affine function they induce. Within one
residue class distinct affine functions agree in at most one point, so an
element vanishes iff, for every group, the coefficients of the group members
whose domain meets the class sum to zero.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable

from .laurent import GaussianRational, ZERO
from .numtheory import divisors, lcm
from .word_algebra import Element, Monomial


@dataclass(frozen=True)
class PartialAffineMap:
    """``k -> num*(k - offset)/modulus + shift`` on ``{k = offset mod modulus}``."""

    modulus: int
    offset: int
    num: int
    shift: int

    def __post_init__(self):
        if self.modulus < 1 or self.num < 1:
            raise ValueError("modulus and num must be positive")
        if not 0 <= self.offset < self.modulus:
            raise ValueError("offset must be reduced modulo modulus")

    @classmethod
    def make(cls, modulus: int, offset: int, num: int, shift: int) -> PartialAffineMap:
        """Normalize an arbitrary offset, moving whole periods into ``shift``."""
        t, r = divmod(offset, modulus)
        return cls(modulus, r, num, shift - t * num)

    @property
    def slope(self) -> Fraction:
        return Fraction(self.num, self.modulus)

    @property
    def intercept(self) -> Fraction:
        return self.shift - self.slope * self.offset

    def in_domain(self, k: int) -> bool:
        return (k - self.offset) % self.modulus == 0

    def __call__(self, k: int) -> int | None:
        if not self.in_domain(k):
            return None
        return self.num * (k - self.offset) // self.modulus + self.shift


def mono_to_qn_map(x: Monomial) -> PartialAffineMap:
    a, m, n, b = x
    return PartialAffineMap.make(n, b, m, a)


def map_compose(f: PartialAffineMap | None, g: PartialAffineMap | None) -> PartialAffineMap | None:
    """``f o g`` (apply ``g`` first); ``None`` is the empty map.

    Points of ``dom g`` are ``k = g.offset + g.modulus*s``; they land in
    ``dom f`` iff ``g.num*s = f.offset - g.shift (mod f.modulus)``.
    """
    if f is None or g is None:
        return None
    h = gcd(g.num, f.modulus)
    rhs = f.offset - g.shift
    if rhs % h:
        return None
    step = f.modulus // h
    s0 = (rhs // h) * pow(g.num // h, -1, step) % step if step > 1 else 0
    modulus = g.modulus * step
    offset = g.offset + g.modulus * s0
    num = f.num * g.num // h
    shift = f(g(offset))
    return PartialAffineMap.make(modulus, offset, num, shift)


def compose_all(maps: Iterable[PartialAffineMap | None]) -> PartialAffineMap | None:
    """Compose left to right as operators: ``compose_all([f, g, h]) = f o g o h``."""
    maps = list(maps)
    acc = PartialAffineMap(1, 0, 1, 0)
    for f in maps:
        acc = map_compose(acc, f)
        if acc is None:
            return None
    return acc


@dataclass(frozen=True)
class FockMap:
    """Partial map on Fock basis indices ``(j, r)``.

    The ``j`` coordinate moves by ``jmap``; the level ``r`` must be divisible
    by ``divisor`` and is multiplied by ``factor``.
    """

    jmap: PartialAffineMap
    divisor: int
    factor: Fraction

    def __call__(self, j: int, r: int) -> tuple[int, int] | None:
        if r % self.divisor:
            return None
        jj = self.jmap(j)
        if jj is None:
            return None
        return jj, int(self.factor * r)


def mono_to_nt_map(x: Monomial) -> FockMap:
    a, m, n, b = x
    return FockMap(mono_to_qn_map(x), n, Fraction(m, n))


def fock_compose(f: FockMap | None, g: FockMap | None) -> FockMap | None:
    if f is None or g is None:
        return None
    jmap = map_compose(f.jmap, g.jmap)
    if jmap is None:
        return None
    # r in divisor_g*Z and factor_g*r in divisor_f*Z
    step = g.factor * g.divisor
    assert step.denominator == 1
    step = int(step)
    divisor = g.divisor * (f.divisor // gcd(f.divisor, step))
    return FockMap(jmap, divisor, f.factor * g.factor)


def fock_compose_all(maps: Iterable[FockMap | None]) -> FockMap | None:
    acc = FockMap(PartialAffineMap(1, 0, 1, 0), 1, Fraction(1))
    for f in maps:
        acc = fock_compose(acc, f)
        if acc is None:
            return None
    return acc


# -- evaluation on basis vectors -----------------------------------------------

def apply_qn(x: Element, k: int) -> dict[int, GaussianRational]:
    """``x e_k`` in the Q_N model as ``{index: coefficient}``."""
    out: dict[int, GaussianRational] = {}
    for mono, c in x.items():
        kk = mono_to_qn_map(mono)(k)
        if kk is not None:
            out[kk] = out.get(kk, ZERO) + c
    return {key: v for key, v in out.items() if v}


def apply_nt(x: Element, j: int, r: int) -> dict[tuple[int, int], GaussianRational]:
    """``x (Z^j 1_r)`` in the Fock model."""
    out: dict[tuple[int, int], GaussianRational] = {}
    for mono, c in x.items():
        img = mono_to_nt_map(mono)(j, r)
        if img is not None:
            out[img] = out.get(img, ZERO) + c
    return {key: v for key, v in out.items() if v}


def apply_basis(x: Element, index: int | tuple[int, int]) -> dict:
    if isinstance(index, tuple):
        return apply_nt(x, *index)
    return apply_qn(x, index)


# -- zero tests ------------------------------------------------------------------

def _merge(terms):
    """Collect coefficients of identical maps and drop the ones that cancel."""
    acc: dict = {}
    for c, f in terms:
        if f is None or not c:
            continue
        acc[f] = acc.get(f, ZERO) + c
    return [(c, f) for f, c in acc.items() if c]


def _classes_vanish(members: list[tuple[int, int, GaussianRational]]) -> bool:
    """Whether ``sum c * [k = offset mod modulus]`` is identically zero."""
    period = 1
    for modulus, _, _ in members:
        period = lcm(period, modulus)
    for cls in range(period):
        total = ZERO
        for modulus, offset, c in members:
            if (cls - offset) % modulus == 0:
                total = total + c
        if total:
            return False
    return True


def qn_maps_vanish(terms: Iterable[tuple[GaussianRational, PartialAffineMap | None]]) -> bool:
    """Zero test for a formal combination of partial maps on l^2(Z)."""
    groups: dict[tuple[Fraction, Fraction], list] = {}
    for c, f in _merge(terms):
        groups.setdefault((f.slope, f.intercept), []).append((f.modulus, f.offset, c))
    return all(_classes_vanish(g) for g in groups.values())


def nt_maps_vanish(terms: Iterable[tuple[GaussianRational, FockMap | None]]) -> bool:
    """Zero test for a formal combination of Fock-model maps.

    For each level ``r`` dividing the lcm of the divisors, the maps active on
    that level are tested like the Q_N case, separately for each level factor.
    Only divisors of the lcm are needed: which maps are active depends on
    ``r`` only through ``gcd(r, lcm)``.
    """
    terms = _merge(terms)
    top = 1
    for _, f in terms:
        top = lcm(top, f.divisor)
    for r in divisors(top):
        by_factor: dict[Fraction, list] = {}
        for c, f in terms:
            if r % f.divisor == 0:
                by_factor.setdefault(f.factor, []).append((c, f.jmap))
        if not all(qn_maps_vanish(g) for g in by_factor.values()):
            return False
    return True


def is_zero_qn(x: Element) -> bool:
    return qn_maps_vanish((c, mono_to_qn_map(mono)) for mono, c in x.items())


def is_zero_nt(x: Element) -> bool:
    return nt_maps_vanish((c, mono_to_nt_map(mono)) for mono, c in x.items())


def equal(algebra: str, x: Element, y: Element) -> bool:
    """Equality in the Nica-Toeplitz algebra (``"nt"``) or in Q_N (``"qn"``)."""
    if algebra == "nt":
        return is_zero_nt(x - y)
    if algebra == "qn":
        return is_zero_qn(x - y)
    raise ValueError(f"unknown algebra {algebra!r}; expected 'nt' or 'qn'")
