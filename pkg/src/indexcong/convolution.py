"""Exact-rational algebra of arithmetical functions.

An arithmetical function here is a total map from the positive integers to
exact rationals.  Two convolutions are provided: the Dirichlet convolution

    (f * g)(n) = sum over ab = n of f(a) g(b)

and the lcm convolution

    (f o g)(n) = sum over ordered divisor pairs with lcm(a, b) = n of f(a) g(b)

together with Dirichlet inversion, Lehmer's rational-valued function M (the
lcm-convolution inverse of the constant function u), and closed forms for a
few specific lcm convolutions that are otherwise expensive to expand.

Values are exact rationals throughout; nothing is ever rounded, so results
can be compared for equality and reduced into congruences safely.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, Union

from .core import (
    divides_indicator,
    divisors,
    euler_phi,
    factorize,
    gcd,
    lcm,
    mobius,
    ord_p,
    unit_indicator,
)

__all__ = [
    "ArithFn",
    "u",
    "I",
    "mu",
    "phi",
    "M",
    "chi",
    "multiplicative",
    "random_multiplicative",
    "dirichlet_conv",
    "lcm_conv",
    "dirichlet_inverse",
    "lehmer_M",
    "mu_chi_lcm_g",
    "phi_chi_chain",
    "mu_f_lcm_u",
]

Scalar = Union[int, Fraction]


class ArithFn:
    """A memoized arithmetical function with exact rational values.

    Evaluation must be pure: the same argument always yields the same value,
    which makes the per-instance cache safe to share (a racing duplicate
    computation stores the identical result).

    Supports ``f * g`` for the pointwise product and ``c * f`` / ``f * c``
    for scalar multiples; the convolutions live in module functions.
    """

    def __init__(self, rule: Callable[[int], Scalar], name: str | None = None):
        self._rule = rule
        self.name = name
        self._cache: dict[int, Fraction] = {}

    def __call__(self, n: int) -> Fraction:
        if n < 1:
            raise ValueError(f"arithmetical functions are defined on n >= 1, got {n}")
        value = self._cache.get(n)
        if value is None:
            value = Fraction(self._rule(n))
            self._cache[n] = value
        return value

    def __mul__(self, other: "ArithFn | Scalar") -> "ArithFn":
        if isinstance(other, ArithFn):
            name = f"({self.name})({other.name})" if self.name and other.name else None
            return ArithFn(lambda n: self(n) * other(n), name)
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return ArithFn(lambda n: c * self(n))
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"ArithFn({self.name or self._rule!r})"


def lehmer_M(n: int) -> Fraction:
    """Lehmer's M: multiplicative with M(p^a) = 1/(a+1) - 1/a; M(1) = 1.

    This is the lcm-convolution inverse of the constant function u.
    """
    value = Fraction(1)
    for _, a in factorize(n):
        value *= Fraction(1, a + 1) - Fraction(1, a)
    return value


# Named functions.  Module-level singletons so their caches are shared.
u = ArithFn(lambda n: 1 if n >= 1 else 0, name="u")
I = ArithFn(unit_indicator, name="I")  # noqa: E741 - standard name
mu = ArithFn(mobius, name="mu")
phi = ArithFn(euler_phi, name="phi")
M = ArithFn(lehmer_M, name="M")


def chi(a: int) -> ArithFn:
    """Divisibility indicator chi_a(n) = 1 iff n | a."""
    return ArithFn(lambda n: divides_indicator(n, a), name=f"chi_{a}")


def multiplicative(
    prime_power_value: Callable[[int, int], Scalar], name: str | None = None
) -> ArithFn:
    """Multiplicative function from its values at prime powers."""

    def rule(n: int) -> Fraction:
        value = Fraction(1)
        for p, e in factorize(n):
            value *= Fraction(prime_power_value(p, e))
        return value

    return ArithFn(rule, name)


def random_multiplicative(key: int | str) -> ArithFn:
    """Seeded random multiplicative function for property checks.

    Values at prime powers are small nonzero rationals (numerator in
    [-5, 5] \\ {0}, denominator in [1, 5]).  The value at each prime power is
    derived from (key, p, e) alone, so evaluation order, caching and process
    boundaries cannot change it.
    """

    def prime_power_value(p: int, e: int) -> Fraction:
        rng = random.Random(f"{key}|{p}^{e}")
        num = rng.choice((-5, -4, -3, -2, -1, 1, 2, 3, 4, 5))
        den = rng.randint(1, 5)
        return Fraction(num, den)

    return multiplicative(prime_power_value, name=f"rand[{key}]")


def dirichlet_conv(f: ArithFn, g: ArithFn) -> ArithFn:
    """Dirichlet convolution: (f * g)(n) = sum over d | n of f(d) g(n/d)."""

    def rule(n: int) -> Fraction:
        return sum((f(d) * g(n // d) for d in divisors(n)), Fraction(0))

    name = f"({f.name} * {g.name})" if f.name and g.name else None
    return ArithFn(rule, name)


def lcm_conv(f: ArithFn, g: ArithFn) -> ArithFn:
    """lcm convolution: sum of f(a) g(b) over divisor pairs with lcm(a, b) = n.

    Evaluation enumerates the ordered divisor pairs of n, so a single call
    costs O(tau(n)^2); results are memoized on the returned function.
    """

    def rule(n: int) -> Fraction:
        divs = divisors(n)
        total = Fraction(0)
        for a in divs:
            fa = f(a)
            if not fa:
                continue
            for b in divs:
                if lcm(a, b) == n:
                    total += fa * g(b)
        return total

    name = f"({f.name} o {g.name})" if f.name and g.name else None
    return ArithFn(rule, name)


def dirichlet_inverse(f: ArithFn) -> ArithFn:
    """Inverse of f under Dirichlet convolution; requires f(1) != 0.

    Defined by g(1) = 1/f(1) and, for n > 1,
    g(n) = -1/f(1) * sum over proper divisors d of n of g(d) f(n/d).
    """
    f1 = f(1)
    if f1 == 0:
        raise ValueError("not invertible: f(1) == 0")
    cache: dict[int, Fraction] = {1: 1 / f1}

    def rule(n: int) -> Fraction:
        # Fill bottom-up over the divisors of n; avoids deep recursion.
        for d in divisors(n):
            if d in cache:
                continue
            acc = Fraction(0)
            for e in divisors(d):
                if e != d:
                    acc += cache[e] * f(d // e)
            cache[d] = -acc / f1
        return cache[n]

    name = f"({f.name})^-1" if f.name else None
    return ArithFn(rule, name)


def mu_chi_lcm_g(a: int, g: ArithFn, n: int) -> Fraction:
    """Closed form of ((mu chi_a) o g)(n) for multiplicative g with g(1) = 1:

        mu((n, a)) * I((n/(n, a), a)) * g(n/(n, a))

    The caller is responsible for g being multiplicative; the value is
    undefined otherwise.
    """
    d = gcd(n, a)
    rest = n // d
    m_part = mobius(d)
    if m_part == 0 or gcd(rest, a) != 1:
        return Fraction(0)
    return m_part * g(rest)


def phi_chi_chain(b_list: list[int] | tuple[int, ...], n: int) -> Fraction:
    """Closed form of (phi chi_{b_1} o ... o phi chi_{b_k})(n).

    For every prime power r^beta exactly dividing n, with t_i = ord_r(b_i)
    and s = #{i : t_i >= beta}, the factor is

        (product of r^{t_i} over t_i < beta) * (r^(beta*s) - r^((beta-1)*s)).

    With s = 1 this is the familiar r^{t_i}-times-phi(r^beta) product; it is
    the grouped difference that stays correct when several b_i (or none)
    reach the threshold, as divisor-pair enumeration confirms.
    """
    if not b_list:
        raise ValueError("b_list must be nonempty")
    value = Fraction(1)
    for r, beta in factorize(n):
        low = 1
        s = 0
        for b in b_list:
            t = ord_p(r, b)
            if t < beta:
                low *= r**t
            else:
                s += 1
        value *= low * (r ** (beta * s) - r ** ((beta - 1) * s))
    return value


def mu_f_lcm_u(f: ArithFn, n: int) -> Fraction:
    """Closed form of ((mu f) o u)(n) for multiplicative f:

        product over p^2 | n of (1 - f(p)) times
        product over p || n of (1 - 2 f(p)).
    """
    value = Fraction(1)
    for p, e in factorize(n):
        fp = f(p)
        value *= (1 - 2 * fp) if e == 1 else (1 - fp)
    return value
