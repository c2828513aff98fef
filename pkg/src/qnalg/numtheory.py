"""Divisibility arithmetic on the positive integers.

Everything here works on plain Python ints, so there is no overflow.
"""
from __future__ import annotations

from math import gcd
from typing import NamedTuple


class BezoutPair(NamedTuple):
    """Integers with ``alpha * mp - beta * np == 1``."""

    alpha: int
    beta: int


def _check_positive(*values: int) -> None:
    for v in values:
        if not isinstance(v, int) or v < 1:
            raise ValueError(f"expected a positive integer, got {v!r}")


def gcd_lcm(m: int, n: int) -> tuple[int, int]:
    _check_positive(m, n)
    d = gcd(m, n)
    return d, m // d * n


def lcm(m: int, n: int) -> int:
    """The join ``m v n`` in the divisibility order."""
    return gcd_lcm(m, n)[1]


def bezout(mp: int, np: int) -> BezoutPair:
    """Canonical solution of ``1 = alpha*mp - beta*np`` for coprime inputs.

    ``alpha`` is the least non-negative solution, so ``0 <= alpha < np``
    when ``np > 1``; for ``np == 1`` the pair is ``(1, mp - 1)``.
    """
    _check_positive(mp, np)
    if gcd(mp, np) != 1:
        raise ValueError(f"bezout needs coprime arguments, got ({mp}, {np})")
    if np == 1:
        return BezoutPair(1, mp - 1)
    alpha = pow(mp, -1, np)
    beta = (alpha * mp - 1) // np
    return BezoutPair(alpha, beta)


def factorize(m: int) -> list[int]:
    """Prime factors of ``m`` with multiplicity, ascending. Trial division."""
    _check_positive(m)
    out = []
    p = 2
    while p * p <= m:
        while m % p == 0:
            out.append(p)
            m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        out.append(m)
    return out


def is_prime(m: int) -> bool:
    return m > 1 and factorize(m) == [m]


def primes_upto(bound: int) -> list[int]:
    return [p for p in range(2, bound + 1) if is_prime(p)]


def divisors(m: int) -> list[int]:
    _check_positive(m)
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def canonical_residue(a: int, m: int) -> tuple[int, int]:
    """Split ``a = r + t*m`` with ``0 <= r < m``; returns ``(r, t)``."""
    _check_positive(m)
    t, r = divmod(a, m)
    return r, t
