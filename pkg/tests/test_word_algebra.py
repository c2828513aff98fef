from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from qnalg.laurent import GaussianRational, I, LaurentPoly
from qnalg.models import is_zero_nt
from qnalg.product_system import CompactOp, FiberElement, fiber_mul, inner, nica_product, phi_as_compact
from qnalg.word_algebra import (
    Element, IDENTITY, Monomial, U, USTAR, W, Wstar, compact_to_word, fiber_to_word,
    format_element, mono_canon, mono_mul, mono_star, poly_to_word, u_elem, u_power, w_elem,
    word_reduce, wstar_elem,
)

from .oracles import mono_word, qn_word_apply
from .strategies import elements, gaussian_rationals, laurent_polys, monomials

WINDOW = range(-60, 61)


def same_qn_action(word_a, word_b):
    return all(qn_word_apply(word_a, k) == qn_word_apply(word_b, k) for k in WINDOW)


def mono(a, m, n, b):
    return Element.mono(a, m, n, b)


# -- canonical form ------------------------------------------------------------

def test_mono_canon_examples():
    assert mono_canon(2, 2, 1, 0) == (0, 2, 1, -1)
    assert mono_canon(0, 5, 3, 7) == (0, 5, 3, 7)
    assert mono_canon(-1, 2, 3, 0) == (1, 2, 3, 3)
    assert same_qn_action([("u", 2), ("w", 2)], [("w", 2), ("u", 1)])
    assert same_qn_action(mono_word((-1, 2, 3, 0)), mono_word((1, 2, 3, 3)))


@given(st.integers(-50, 50), st.integers(1, 9), st.integers(1, 9), st.integers(-50, 50))
def test_mono_canon_preserves_action(a, m, n, b):
    c = mono_canon(a, m, n, b)
    assert 0 <= c.a < c.m
    assert all(qn_word_apply(mono_word((a, m, n, b)), k) == qn_word_apply(mono_word(c), k)
               for k in range(-40, 41))


# -- products ----------------------------------------------------------------

def test_mono_mul_examples():
    w2, u = Monomial(0, 2, 1, 0), Monomial(1, 1, 1, 0)
    assert mono_mul(w2, u) == (0, 2, 1, -1)
    assert mono_mul(w2, u) == mono_canon(2, 2, 1, 0)  # u^2 w_2
    assert mono_mul(Monomial(0, 1, 3, 0), mono_canon(1, 3, 1, 0)) is None
    assert mono_mul(Monomial(0, 1, 2, 0), Monomial(0, 3, 1, 0)) == (0, 3, 2, 0)
    assert mono_mul(Monomial(0, 1, 2, 0), mono_canon(2, 2, 1, 0)) == mono_canon(1, 1, 1, 0)
    assert mono_mul(Monomial(0, 2, 2, 0), Monomial(1, 3, 3, 0)) == (4, 6, 6, 3)


def test_range_projection_product_against_oracle():
    lhs = [("w", 2), ("w*", 2), ("u", 1), ("w", 3), ("w*", 3)]
    assert same_qn_action(lhs, mono_word((4, 6, 6, 3)))


@given(monomials(), monomials())
def test_mono_mul_matches_qn_action(x, y):
    p = mono_mul(x, y)
    prod_word = mono_word(x) + mono_word(y)
    if p is None:
        assert all(qn_word_apply(prod_word, k) is None for k in range(-80, 81))
    else:
        assert all(qn_word_apply(prod_word, k) == qn_word_apply(mono_word(p), k)
                   for k in range(-80, 81))


@given(monomials(30, 200), monomials(30, 200), st.integers(-5, 5))
def test_bezout_choice_independence(x, y, t):
    assert mono_mul(x, y, witness_shift=t) == mono_mul(x, y)


@given(monomials(30, 200), monomials(30, 200), monomials(30, 200))
def test_mono_mul_associative(x, y, z):
    xy, yz = mono_mul(x, y), mono_mul(y, z)
    left = None if xy is None else mono_mul(xy, z)
    right = None if yz is None else mono_mul(x, yz)
    assert left == right


def test_identity_is_unit():
    for x in [Monomial(3, 5, 2, -7), Monomial(0, 1, 1, 4), Monomial(1, 2, 9, 0)]:
        assert mono_mul(IDENTITY, x) == x == mono_mul(x, IDENTITY)


# -- adjoint ---------------------------------------------------------------

def test_mono_star_examples():
    assert mono_star(Monomial(1, 2, 3, 4)) == (1, 3, 2, -1)
    assert mono_star(Monomial(0, 4, 4, 0)) == (0, 4, 4, 0)


@given(monomials())
def test_mono_star_is_inverse_partial_map(x):
    sx = mono_star(x)
    assert mono_star(sx) == x
    for k in range(-60, 61):
        y = qn_word_apply(mono_word(x), k)
        if y is not None:
            assert qn_word_apply(mono_word(sx), y) == k


@given(elements(), elements())
def test_star_anti_multiplicative(x, y):
    assert (x * y).star() == y.star() * x.star()
    assert x.star().star() == x


@given(elements(), elements(), elements(), gaussian_rationals())
def test_star_algebra_axioms(x, y, z, c):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert (x.scale(c)).star() == x.star().scale(c.conjugate())
    assert x * Element() == Element()


def test_element_examples():
    x = u_elem() + u_elem(-1)
    assert x * x == Element.scalar(2) + u_elem(2) + u_elem(-2)
    c = GaussianRational(Fraction(1, 2), 3)
    m = mono(1, 2, 3, 4)
    assert (m.scale(c)).star() == Element({mono_star(Monomial(1, 2, 3, 4)): c.conjugate()})


def test_display_format():
    assert format_element(mono(4, 6, 6, 3)) == "u^4 w_6 w_6* u^-3"
    assert format_element(mono(0, 2, 2, 0)) == "w_2 w_2*"
    assert format_element(Element()) == "0"
    assert format_element(Element.scalar(1)) == "1"
    assert format_element(mono(0, 2, 1, 0).scale(-I)) == "-i w_2"


# -- words -------------------------------------------------------------------

def test_word_reduce_examples():
    lhs = word_reduce([Wstar(6)] + [U] * 6 + [W(4)])
    rhs = word_reduce([Wstar(3), U, U, U, W(2)])
    assert lhs == rhs == mono(1, 2, 3, 0)
    assert word_reduce([U, USTAR]) == Element.scalar(1)
    assert word_reduce([W(2), W(3)]) == w_elem(6)
    assert word_reduce([]) == Element.scalar(1)


@pytest.mark.parametrize("m", range(1, 13))
def test_generator_consequences(m):
    # w_m u* = u*^m w_m ; u^l w_m* = w_m* u^{lm}
    assert word_reduce([W(m), USTAR]) == word_reduce(u_power(-m) + [W(m)])
    for l in (-3, 1, 4):
        assert word_reduce(u_power(l) + [Wstar(m)]) == word_reduce([Wstar(m)] + u_power(l * m))
    for n in range(1, 13):
        if gcd(m, n) == 1:
            assert w_elem(m) * wstar_elem(n) == wstar_elem(n) * w_elem(m)


# -- bridge from the product system ---------------------------------------------

def test_fiber_to_word_examples():
    assert fiber_to_word(FiberElement.basis(0, 5)) == w_elem(5)
    assert fiber_to_word(FiberElement.basis(1, 2)) == mono(1, 2, 1, 0)
    assert fiber_to_word(FiberElement.basis(-2, 1)) == u_elem(-2)


def test_compact_to_word_examples():
    assert compact_to_word(CompactOp.theta(0, 0, 4)) == w_elem(4) * wstar_elem(4)
    expected = mono(0, 2, 2, 0) + mono(1, 2, 2, 1)
    assert compact_to_word(phi_as_compact(2, LaurentPoly.const(1))) == expected
    assert compact_to_word(CompactOp.theta(1, 3, 2)) == mono(1, 2, 2, 3)


@st.composite
def fibers(draw):
    return FiberElement(draw(st.integers(1, 8)), draw(laurent_polys()))


@given(fibers(), fibers())
def test_bridge_is_multiplicative(x, y):
    assert fiber_to_word(x) * fiber_to_word(y) == fiber_to_word(fiber_mul(x, y))


@given(st.data(), st.integers(1, 8))
def test_bridge_respects_inner_product(data, m):
    x = FiberElement(m, data.draw(laurent_polys()))
    y = FiberElement(m, data.draw(laurent_polys()))
    assert fiber_to_word(x).star() * fiber_to_word(y) == poly_to_word(inner(x, y))


@settings(max_examples=300)
@given(st.integers(1, 12), st.integers(1, 12), st.lists(st.integers(-25, 25), min_size=4, max_size=4))
def test_bridge_is_nica_covariant(m, n, exps):
    i, k, l, j = exps
    S, T = CompactOp.theta(i, k, m), CompactOp.theta(l, j, n)
    lhs = compact_to_word(nica_product(S, T))
    rhs = compact_to_word(S) * compact_to_word(T)
    assert lhs == rhs
    assert is_zero_nt(lhs - rhs)
