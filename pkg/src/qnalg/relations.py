"""Relation suites: scheduled identities checked by the rewriting engine.

A word is a sequence whose items are generator tokens or ints, an int ``l``
standing for ``u^l``. Each identity ``lhs = rhs`` between linear
combinations of words is decided twice:

* engine: multiply out with :func:`mono_mul`, then the zero test of the
  chosen algebra;
* model: compose the generators' partial maps directly (never calling the
  engine) and run the same zero test on the formal combination of maps.

An instance passes when both agree that the identity holds.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence, Union

from .laurent import GaussianRational, ONE
from .models import (
    FockMap, PartialAffineMap, fock_compose_all, compose_all, is_zero_nt, is_zero_qn,
    nt_maps_vanish, qn_maps_vanish,
)
from .numtheory import bezout, factorize, gcd_lcm, primes_upto
from .product_system import CompactOp, nica_product
from .word_algebra import (
    Element, GeneratorToken, IDENTITY, Monomial, USTAR, U, W, Wstar, compact_to_word, mono_mul,
)

Letter = Union[GeneratorToken, int]
Word = Sequence[Letter]
Combo = list[tuple[GaussianRational, Word]]

SUITES = ("toeplitz", "nica", "cuntz", "laca_raeburn")


@dataclass(frozen=True)
class SuiteConfig:
    name: str
    bound: int = 12
    seed: int = 0
    exponent_bound: int = 200
    samples: int = 2
    algebra: str | None = None  # overrides the suite's default algebra


@dataclass
class InstanceResult:
    label: str
    engine_ok: bool
    model_ok: bool

    @property
    def passed(self) -> bool:
        return self.engine_ok and self.model_ok


@dataclass
class SuiteReport:
    name: str
    algebra: str
    results: list[InstanceResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> list[InstanceResult]:
        return [r for r in self.results if not r.passed]

    def summary(self) -> str:
        n_fail = len(self.failures)
        status = "PASS" if not n_fail else "FAIL"
        return (f"{status} suite={self.name} algebra={self.algebra} "
                f"instances={len(self.results)} failures={n_fail}")


def _letter_monomial(x: Letter) -> Monomial:
    if isinstance(x, int):
        return Monomial(x, 1, 1, 0)
    return x.monomial()


def word_element(word: Word) -> Element:
    acc: Monomial | None = IDENTITY
    for x in word:
        acc = mono_mul(acc, _letter_monomial(x))
        if acc is None:
            return Element()
    return Element({acc: ONE})


def combo_element(combo: Combo) -> Element:
    out = Element()
    for c, w in combo:
        out = out + word_element(w).scale(c)
    return out


def _letter_qn(x: Letter) -> PartialAffineMap:
    if isinstance(x, int):
        return PartialAffineMap(1, 0, 1, x)
    if x.kind == "U":
        return PartialAffineMap(1, 0, 1, 1)
    if x.kind == "Ustar":
        return PartialAffineMap(1, 0, 1, -1)
    if x.kind == "W":
        return PartialAffineMap(1, 0, x.m, 0)
    return PartialAffineMap(x.m, 0, 1, 0)


def _letter_nt(x: Letter) -> FockMap:
    if isinstance(x, GeneratorToken) and x.kind == "W":
        return FockMap(_letter_qn(x), 1, Fraction(x.m))
    if isinstance(x, GeneratorToken) and x.kind == "Wstar":
        return FockMap(_letter_qn(x), x.m, Fraction(1, x.m))
    return FockMap(_letter_qn(x), 1, Fraction(1))


def model_holds(algebra: str, lhs: Combo, rhs: Combo) -> bool:
    terms = [(c, w) for c, w in lhs] + [(-c, w) for c, w in rhs]
    if algebra == "qn":
        return qn_maps_vanish((c, compose_all(_letter_qn(x) for x in w)) for c, w in terms)
    return nt_maps_vanish((c, fock_compose_all(_letter_nt(x) for x in w)) for c, w in terms)


def engine_holds(algebra: str, lhs: Combo, rhs: Combo) -> bool:
    diff = combo_element(lhs) - combo_element(rhs)
    return is_zero_qn(diff) if algebra == "qn" else is_zero_nt(diff)


def _w(*words: Word) -> Combo:
    return [(ONE, list(w)) for w in words]


ZERO_COMBO: Combo = []


class _Schedule:
    def __init__(self, cfg: SuiteConfig):
        self.cfg = cfg
        self.rng = random.Random(cfg.seed)
        self.items: list[tuple[str, Combo, Combo]] = []

    def add(self, label: str, lhs: Combo, rhs: Combo) -> None:
        self.items.append((label, lhs, rhs))

    def exponents(self, multiple_of: int = 1) -> list[int]:
        """Seeded sample of exponents in ``[-E, E]``, optionally divisible by ``multiple_of``."""
        E = self.cfg.exponent_bound
        out = []
        for _ in range(self.cfg.samples):
            e = self.rng.randint(-E, E)
            out.append(e - e % multiple_of if multiple_of > 1 else e)
        return out

    def pos(self) -> range:
        return range(1, self.cfg.bound + 1)

    def primes(self) -> list[int]:
        return primes_upto(self.cfg.bound)


def _unitary_isometry(s: _Schedule) -> None:
    s.add("u u* = 1", _w([U, USTAR]), _w([]))
    s.add("u* u = 1", _w([USTAR, U]), _w([]))
    for m in s.pos():
        s.add(f"w_{m}* w_{m} = 1", _w([Wstar(m), W(m)]), _w([]))


def _toeplitz(s: _Schedule) -> None:
    _unitary_isometry(s)
    for m in s.pos():
        for n in s.pos():
            s.add(f"w_{m*n} = w_{m} w_{n}", _w([W(m * n)]), _w([W(m), W(n)]))
    for m in s.pos():
        s.add(f"w_{m} u = u^{m} w_{m}", _w([W(m), U]), _w([m, W(m)]))
        s.add(f"w_{m} u* = u*^{m} w_{m}", _w([W(m), USTAR]), _w([-m, W(m)]))
        for l in s.exponents():
            s.add(f"u^{l} w_{m}* = w_{m}* u^{l*m}", _w([l, Wstar(m)]), _w([Wstar(m), l * m]))
    for p in s.primes():
        for q in s.primes():
            if p != q:
                s.add(f"w_{p}* w_{q} = w_{q} w_{p}*", _w([Wstar(p), W(q)]), _w([W(q), Wstar(p)]))
        for k in range(1, p):
            s.add(f"w_{p}* u^{k} w_{p} = 0", _w([Wstar(p), k, W(p)]), ZERO_COMBO)
    for m in s.pos():
        for n in s.pos():
            d, join = gcd_lcm(m, n)
            if d == 1:
                s.add(f"w_{m} w_{n}* = w_{n}* w_{m}", _w([W(m), Wstar(n)]), _w([Wstar(n), W(m)]))
            # w_m* u^l w_n = 0 or w_{m/d}* u^{l/d} w_{n/d}
            for l in s.exponents(d) + s.exponents():
                lhs = _w([Wstar(m), l, W(n)])
                rhs = ZERO_COMBO if l % d else _w([Wstar(m // d), l // d, W(n // d)])
                s.add(f"w_{m}* u^{l} w_{n} simplification", lhs, rhs)
            # w_m w_m* u^-k u^l w_n w_n* = 0 or u^{m a (l-k)/d} w_j w_j* u^-{n b (l-k)/d}
            alpha, beta = bezout(m // d, n // d)
            ks = s.exponents()
            ls = s.exponents()
            for k, l in zip(ks, ls):
                for ll in (l, l - (l - k) % d):
                    lhs = _w([W(m), Wstar(m), -k, ll, W(n), Wstar(n)])
                    if (ll - k) % d:
                        rhs = ZERO_COMBO
                    else:
                        q = (ll - k) // d
                        rhs = _w([m * alpha * q, W(join), Wstar(join), -n * beta * q])
                    s.add(f"range projections m={m} n={n} k={k} l={ll}", lhs, rhs)


def _nica(s: _Schedule) -> None:
    E = s.cfg.exponent_bound
    for m in s.pos():
        for n in s.pos():
            for _ in range(s.cfg.samples):
                i, k, l, j = (s.rng.randint(-E, E) for _ in range(4))
                if s.rng.random() < 0.5:
                    d = gcd_lcm(m, n)[0]
                    l -= (l - k) % d
                S = CompactOp.theta(i, k, m)
                T = CompactOp.theta(l, j, n)
                prod = nica_product(S, T)
                lhs: Combo = []
                for t in prod.terms:
                    (ii, c), = t.left.items()
                    (jj, _), = t.right.items()
                    lhs.append((c, [ii, W(prod.level), Wstar(prod.level), -jj]))
                rhs = _w([i, W(m), Wstar(m), -k, l, W(n), Wstar(n), -j])
                label = f"nica theta({i},{k})@{m} theta({l},{j})@{n}"
                s.add(label, lhs, rhs)
                # the bridge itself, evaluated by the engine on compact operators
                bridge = compact_to_word(prod) - compact_to_word(S) * compact_to_word(T)
                s.add(label + " via bridge",
                      [(c, [mono.a, W(mono.m), Wstar(mono.n), -mono.b]) for mono, c in bridge.items()],
                      ZERO_COMBO)


def _cuntz(s: _Schedule) -> None:
    _unitary_isometry(s)
    for m in s.pos():
        for n in s.pos():
            s.add(f"s_{m} s_{n} = s_{m*n}", _w([W(m), W(n)]), _w([W(m * n)]))
        s.add(f"s_{m} u = u^{m} s_{m}", _w([W(m), U]), _w([m, W(m)]))
        s.add(f"sum_k u^k s_{m} s_{m}* u^-k = 1",
              _w(*[[k, W(m), Wstar(m), -k] for k in range(m)]), _w([]))
    for p in s.primes():
        for k in range(1, p):
            s.add(f"s_{p}* u^{k} s_{p} = 0", _w([Wstar(p), k, W(p)]), ZERO_COMBO)


def _laca_raeburn(s: _Schedule) -> None:
    ps = s.primes()
    s.add("s* s = 1", _w([USTAR, U]), _w([]))
    for p in ps:
        s.add(f"v_{p}* v_{p} = 1", _w([Wstar(p), W(p)]), _w([]))
        s.add(f"LR1 v_{p} s = s^{p} v_{p}", _w([W(p), U]), _w([p, W(p)]))
        s.add(f"LR4 s* v_{p} = s^{p-1} v_{p} s*", _w([USTAR, W(p)]), _w([p - 1, W(p), USTAR]))
        for k in range(1, p):
            s.add(f"LR5 v_{p}* s^{k} v_{p} = 0", _w([Wstar(p), k, W(p)]), ZERO_COMBO)
        for q in ps:
            s.add(f"LR2 v_{p} v_{q} = v_{q} v_{p}", _w([W(p), W(q)]), _w([W(q), W(p)]))
            if p != q:
                s.add(f"LR3 v_{p}* v_{q} = v_{q} v_{p}*", _w([Wstar(p), W(q)]), _w([W(q), Wstar(p)]))
    # w_m is the product of the prime generators along its factorization
    for m in s.pos():
        s.add(f"w_{m} = prod of prime w_p", _w([W(m)]), _w([W(p) for p in factorize(m)]))


_BUILDERS: dict[str, tuple[Callable[[_Schedule], None], str]] = {
    "toeplitz": (_toeplitz, "nt"),
    "nica": (_nica, "nt"),
    "cuntz": (_cuntz, "qn"),
    "laca_raeburn": (_laca_raeburn, "nt"),
}


def schedule(cfg: SuiteConfig) -> list[tuple[str, Combo, Combo]]:
    name = cfg.name.replace("-", "_")
    if name not in _BUILDERS:
        raise ValueError(f"unknown suite {cfg.name!r}; expected one of {SUITES}")
    s = _Schedule(cfg)
    _BUILDERS[name][0](s)
    return s.items


def run_suite(cfg: SuiteConfig) -> SuiteReport:
    name = cfg.name.replace("-", "_")
    items = schedule(cfg)
    algebra = cfg.algebra or _BUILDERS[name][1]
    report = SuiteReport(name, algebra)
    for label, lhs, rhs in items:
        report.results.append(InstanceResult(
            label, engine_holds(algebra, lhs, rhs), model_holds(algebra, lhs, rhs)))
    return report


def relation_suite(name: str, bound: int = 12, seed: int = 0, **kwargs) -> SuiteReport:
    return run_suite(SuiteConfig(name, bound, seed, **kwargs))
