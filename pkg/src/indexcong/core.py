"""Exact integer arithmetic primitives.

Factorization by deterministic trial division, the standard arithmetic
functions (Euler phi, Carmichael lambda, Moebius, radical, p-adic valuation),
modular exponentiation and the Chinese remainder theorem.  Everything is
arbitrary precision: no value is ever rounded or silently truncated.

All functions are pure and safe for concurrent use.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

__all__ = [
    "Factorization",
    "Rational",
    "factorize",
    "divisors",
    "primes_upto",
    "is_prime",
    "euler_phi",
    "carmichael_lambda",
    "mobius",
    "ord_p",
    "rad",
    "unit_indicator",
    "divides_indicator",
    "gcd",
    "lcm",
    "mod_pow",
    "crt",
]

# Canonical prime-power decomposition: ((p1, e1), (p2, e2), ...) with the
# primes strictly increasing and every exponent >= 1.  1 factors to ().
Factorization = tuple[tuple[int, int], ...]

# Exact rational values; fractions.Fraction is always in lowest terms with a
# positive denominator.
Rational = Fraction


def _check_positive(n: int, name: str = "n") -> None:
    if n < 1:
        raise ValueError(f"{name} must be a positive integer, got {n}")


@lru_cache(maxsize=1 << 16)
def factorize(n: int) -> Factorization:
    """Prime-power factorization of n >= 1 by trial division; 1 -> ()."""
    _check_positive(n)
    out: list[tuple[int, int]] = []
    for p in (2, 3):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            if e:
                out.append((p, e))
        f += 6
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@lru_cache(maxsize=1 << 16)
def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of n, sorted ascending."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return tuple(sorted(divs))


def primes_upto(n: int) -> list[int]:
    """All primes <= n (sieve of Eratosthenes)."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i in range(n + 1) if sieve[i]]


@lru_cache(maxsize=1 << 16)
def is_prime(n: int) -> bool:
    """Deterministic primality test by trial division."""
    if n < 2:
        return False
    f = factorize(n)
    return len(f) == 1 and f[0][1] == 1


def euler_phi(n: int) -> int:
    """Euler's totient: the number of units modulo n."""
    result = 1
    for p, e in factorize(n):
        result *= (p - 1) * p ** (e - 1)
    return result


def carmichael_lambda(n: int) -> int:
    """Carmichael's function: the exponent of the unit group modulo n.

    lambda(1) = lambda(2) = 1, lambda(4) = 2, lambda(2^a) = 2^(a-2) for
    a >= 3, lambda(p^a) = phi(p^a) for odd p, and lambda of a product of
    coprime parts is the lcm of the parts' values.
    """
    lam = 1
    for p, e in factorize(n):
        if p == 2:
            part = 1 if e == 1 else (2 if e == 2 else 2 ** (e - 2))
        else:
            part = (p - 1) * p ** (e - 1)
        lam = lcm(lam, part)
    return lam


def mobius(n: int) -> int:
    """Moebius function: 0 unless n is squarefree, else (-1)^(prime count)."""
    fact = factorize(n)
    if any(e > 1 for _, e in fact):
        return 0
    return -1 if len(fact) % 2 else 1


def ord_p(p: int, n: int) -> int:
    """p-adic valuation of n: the largest k with p^k | n.  p must be prime."""
    if not is_prime(p):
        raise ValueError(f"ord_p requires a prime base, got {p}")
    _check_positive(n)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def rad(n: int) -> int:
    """Radical of n: the product of its distinct prime divisors."""
    result = 1
    for p, _ in factorize(n):
        result *= p
    return result


def unit_indicator(n: int) -> int:
    """1 if n == 1, else 0 (identity for Dirichlet convolution)."""
    _check_positive(n)
    return 1 if n == 1 else 0


def divides_indicator(a: int, n: int) -> int:
    """1 if a | n, else 0."""
    _check_positive(a, "a")
    _check_positive(n)
    return 1 if n % a == 0 else 0


def mod_pow(base: int, exp: int, m: int) -> int:
    """base**exp mod m, exact for any operand sizes."""
    _check_positive(m, "m")
    if exp < 0:
        raise ValueError("negative exponents are not supported")
    return pow(base, exp, m)


def crt(congruences: list[tuple[int, int]] | tuple[tuple[int, int], ...]) -> int:
    """Simultaneous solution of x = r_i (mod m_i) for pairwise coprime m_i.

    Returns the unique residue in [0, prod m_i).  Raises ValueError when the
    moduli are not pairwise coprime; an empty list yields 0 (mod 1).
    """
    x, modulus = 0, 1
    for r, m in congruences:
        _check_positive(m, "modulus")
        g = gcd(modulus, m)
        if g != 1:
            raise ValueError(f"crt moduli are not pairwise coprime (gcd {g})")
        # x' = x (mod modulus), x' = r (mod m)
        inv = pow(modulus % m, -1, m) if m > 1 else 0
        x = x + modulus * ((r - x) * inv % m)
        modulus *= m
        x %= modulus
    return x
