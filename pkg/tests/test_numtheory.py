from math import gcd, prod

import pytest
from hypothesis import given, strategies as st

from qnalg.numtheory import bezout, canonical_residue, divisors, factorize, gcd_lcm, primes_upto


@pytest.mark.parametrize("m, n, expected", [((4), 6, (2, 12)), (1, 9, (1, 9)), (6, 6, (6, 6))])
def test_gcd_lcm_examples(m, n, expected):
    assert gcd_lcm(m, n) == expected


@pytest.mark.parametrize("mp, np_, expected", [(3, 2, (1, 1)), (2, 5, (3, 1)), (1, 1, (1, 0))])
def test_bezout_examples(mp, np_, expected):
    assert tuple(bezout(mp, np_)) == expected


def test_bezout_rejects_non_coprime():
    with pytest.raises(ValueError):
        bezout(4, 6)


@pytest.mark.parametrize("m, expected", [(12, [2, 2, 3]), (1, []), (7, [7])])
def test_factorize_examples(m, expected):
    assert factorize(m) == expected


@pytest.mark.parametrize("a, m, expected", [(7, 3, (1, 2)), (-1, 2, (1, -1)), (0, 1, (0, 0))])
def test_canonical_residue_examples(a, m, expected):
    assert canonical_residue(a, m) == expected


@given(st.integers(1, 10**6), st.integers(1, 10**6))
def test_gcd_lcm_laws(m, n):
    d, join = gcd_lcm(m, n)
    assert m % d == 0 and n % d == 0
    assert join == m * n // d
    assert gcd(m // d, n // d) == 1


@given(st.integers(1, 500), st.integers(1, 500))
def test_bezout_invariants(m, n):
    d = gcd(m, n)
    mp, np_ = m // d, n // d
    alpha, beta = bezout(mp, np_)
    assert alpha * mp - beta * np_ == 1
    if np_ > 1:
        assert 0 <= alpha < np_
    else:
        assert (alpha, beta) == (1, mp - 1)
    assert bezout(mp, np_) == (alpha, beta)


def test_bezout_big_integers():
    mp, np_ = 2**89 - 1, 2**61 - 1
    alpha, beta = bezout(mp, np_)
    assert alpha * mp - beta * np_ == 1


@given(st.integers(1, 10**5))
def test_factorize_product(m):
    fs = factorize(m)
    assert prod(fs) == m
    assert all(len(factorize(p)) == 1 for p in fs)


@given(st.integers(-10**9, 10**9), st.integers(1, 1000))
def test_canonical_residue_laws(a, m):
    r, t = canonical_residue(a, m)
    assert 0 <= r < m and a == r + t * m


def test_divisors_and_primes():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(1) == [1]
    assert primes_upto(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_rejects_non_positive():
    with pytest.raises(ValueError):
        gcd_lcm(0, 3)
