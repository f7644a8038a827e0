"""Exact arithmetic primitives against brute force and textbook identities."""

from math import gcd, isqrt, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from indexcong.core import (
    carmichael_lambda,
    crt,
    divides_indicator,
    divisors,
    euler_phi,
    factorize,
    is_prime,
    lcm,
    mobius,
    mod_pow,
    ord_p,
    primes_upto,
    rad,
    unit_indicator,
)


def test_factorize_examples():
    assert factorize(1) == ()
    assert factorize(8) == ((2, 3),)
    assert factorize(360) == ((2, 3), (3, 2), (5, 1))


def test_factorize_rejects_nonpositive():
    with pytest.raises(ValueError):
        factorize(0)
    with pytest.raises(ValueError):
        factorize(-6)


def test_factorize_roundtrip_exhaustive():
    for n in range(1, 100_001):
        fact = factorize(n)
        assert prod(p**e for p, e in fact) == n
        assert all(e >= 1 for _, e in fact)
        assert list(fact) == sorted(fact)


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=1, max_value=10**6))
def test_factorize_roundtrip_sampled(n):
    fact = factorize(n)
    assert prod(p**e for p, e in fact) == n
    primes = [p for p, _ in fact]
    assert primes == sorted(set(primes))
    assert all(is_prime(p) for p in primes)


def test_divisors_vs_scan():
    for n in range(1, 500):
        assert divisors(n) == tuple(d for d in range(1, n + 1) if n % d == 0)


def test_primes_upto_vs_trial_division():
    naive = [n for n in range(2, 1000) if all(n % d for d in range(2, isqrt(n) + 1))]
    assert primes_upto(999) == naive
    assert primes_upto(1) == []
    assert primes_upto(2) == [2]


def test_is_prime_agrees_with_sieve():
    sieve = set(primes_upto(2000))
    for n in range(2001):
        assert is_prime(n) == (n in sieve)


def test_euler_phi_examples_and_brute_force():
    assert euler_phi(1) == 1
    assert euler_phi(9) == 6
    assert euler_phi(360) == 96  # count of k <= 360 coprime to 360
    for n in range(1, 600):
        assert euler_phi(n) == sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def test_phi_divisor_sum_identity():
    # sum of phi(d) over d | n equals n
    for n in range(1, 10_001):
        assert sum(euler_phi(d) for d in divisors(n)) == n


def test_carmichael_examples():
    assert carmichael_lambda(1) == 1
    assert carmichael_lambda(2) == 1
    assert carmichael_lambda(4) == 2
    assert carmichael_lambda(16) == 4
    assert carmichael_lambda(8) == 2
    assert carmichael_lambda(36) == 6
    assert carmichael_lambda(15) == 4


def test_carmichael_is_max_order_small():
    # lambda(m) equals the largest multiplicative order, by brute force
    for m in range(1, 200):
        best = 1
        for a in range(m):
            if gcd(a, m) != 1:
                continue
            one, x, k = 1 % m, a % m, 1
            while x != one:
                x = x * a % m
                k += 1
            best = max(best, k)
        assert carmichael_lambda(m) == best, m


def test_lambda_divides_phi():
    for n in range(1, 100_001):
        assert euler_phi(n) % carmichael_lambda(n) == 0, n


def test_lambda_annihilates_units():
    for n in range(1, 2001):
        lam = carmichael_lambda(n)
        for a in range(n):
            if gcd(a, n) == 1:
                assert pow(a, lam, n) == 1 % n


def test_mobius_examples_and_divisor_sum():
    assert mobius(1) == 1
    assert mobius(6) == 1
    assert mobius(12) == 0
    assert mobius(30) == -1
    for n in range(1, 10_001):
        assert sum(mobius(d) for d in divisors(n)) == unit_indicator(n)


def test_ord_p():
    assert ord_p(3, 18) == 2
    assert ord_p(5, 18) == 0
    assert ord_p(2, 48) == 4
    with pytest.raises(ValueError):
        ord_p(6, 18)


def test_rad_and_indicators():
    assert rad(1) == 1
    assert rad(12) == 6
    assert rad(49) == 7
    assert unit_indicator(1) == 1
    assert unit_indicator(2) == 0
    assert unit_indicator(100) == 0
    assert divides_indicator(3, 12) == 1
    assert divides_indicator(5, 12) == 0
    assert divides_indicator(1, 97) == 1


def test_mod_pow():
    assert mod_pow(2, 6, 9) == 1
    assert mod_pow(5, 0, 7) == 1
    assert mod_pow(123456789, 987654321, 10**9 + 7) == pow(123456789, 987654321, 10**9 + 7)
    with pytest.raises(ValueError):
        mod_pow(2, -1, 9)
    with pytest.raises(ValueError):
        mod_pow(2, 3, 0)


def test_crt_examples():
    assert crt([(1, 4), (2, 9)]) == 29
    assert crt([]) == 0
    assert crt([(5, 7)]) == 5
    assert lcm(4, 6) == 12


def test_crt_rejects_non_coprime():
    with pytest.raises(ValueError):
        crt([(1, 4), (3, 6)])


def test_crt_vs_scan():
    for m1 in range(1, 12):
        for m2 in range(1, 12):
            if gcd(m1, m2) != 1:
                continue
            for r1 in range(m1):
                for r2 in range(m2):
                    x = crt([(r1, m1), (r2, m2)])
                    assert 0 <= x < m1 * m2
                    assert x % m1 == r1 and x % m2 == r2


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(min_value=0, max_value=10**6), min_size=1, max_size=4))
def test_crt_hypothesis(residues):
    moduli = [7, 11, 13, 27][: len(residues)]
    pairs = [(r % m, m) for r, m in zip(residues, moduli)]
    x = crt(pairs)
    for r, m in pairs:
        assert x % m == r
