"""Closed-form congruences for index-class sums and products.

Every evaluator predicts, without enumerating anything, the sum or product
of the units of a given index delta modulo m, as a canonical residue
together with the modulus the congruence is asserted for (the full m, or a
single prime-power part of it).  The oracle in :mod:`indexcong.orders` is
the ground truth these predictions are verified against.

Evaluators require delta | lambda(m) (every such class is nonempty); they
raise :class:`EmptyClassError` otherwise rather than returning a vacuous
value.  Congruences that are only valid for part of the parameter space
refuse the unsupported part with :class:`NotSupportedError`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Factorization,
    carmichael_lambda,
    euler_phi,
    factorize,
    gcd,
    is_prime,
    mobius,
    ord_p,
    unit_indicator,
)
from .orders import has_primitive_root

__all__ = [
    "EmptyClassError",
    "NotSupportedError",
    "CongruencePrediction",
    "FERMAT_PRIMES",
    "product_closed_form",
    "sum_small_delta",
    "is_constructible_gon",
    "constructible_gon_sum",
    "sum_power_of_two",
    "sum_odd_prime_power",
    "gauss_cai_primitive_root_sum",
    "gauss_cai_primitive_root_product",
    "sum_two_primes_mod_p",
    "F_function",
    "sum_general_mod_prime_power",
    "predictions_for_sum",
    "predictions_for_product",
]

# All known Fermat primes; covers any modulus this toolkit can enumerate.
FERMAT_PRIMES = (3, 5, 17, 257, 65537)


class EmptyClassError(ValueError):
    """Raised when delta does not divide lambda(m): the class is empty."""


class NotSupportedError(ValueError):
    """Raised when a congruence is asked outside its domain of validity."""


@dataclass(frozen=True)
class CongruencePrediction:
    """A closed-form value together with the modulus it is asserted for.

    ``value`` is the canonical representative in [0, asserted_modulus); the
    asserted modulus divides the source modulus when a congruence only pins
    the sum down modulo one prime-power part.
    """

    value: int
    asserted_modulus: int
    theorem_id: str

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.asserted_modulus:
            raise ValueError(
                f"value {self.value} is not canonical mod {self.asserted_modulus}"
            )


def _require_divides(delta: int, lam: int, m: int) -> None:
    if delta < 1 or lam % delta:
        raise EmptyClassError(
            f"delta={delta} does not divide lambda({m})={lam}: empty index class"
        )


def product_closed_form(m: int, delta: int) -> CongruencePrediction:
    """Product of the index class (m, delta) mod m.

    -1 when delta = 2 and the unit group mod m is cyclic; 1 otherwise
    (elements of index > 2 pair off with their inverses).
    """
    _require_divides(delta, carmichael_lambda(m), m)
    if delta == 2 and has_primitive_root(m):
        value = -1 % m
    else:
        value = 1 % m
    return CongruencePrediction(value, m, "T1.5")


def sum_small_delta(m: int, delta: int) -> CongruencePrediction | None:
    """Sum of the index class (m, delta) mod m for delta = 1, 2 or 4 | delta.

    The sums are 1, -1 and 0 respectively; other deltas are not covered by
    this family and yield None.
    """
    _require_divides(delta, carmichael_lambda(m), m)
    if delta == 1:
        return CongruencePrediction(1 % m, m, "T1.6")
    if delta == 2:
        return CongruencePrediction(-1 % m, m, "T1.6")
    if delta % 4 == 0:
        return CongruencePrediction(0, m, "T1.6")
    return None


def is_constructible_gon(m: int) -> bool:
    """Whether the regular m-gon is compass-and-straightedge constructible.

    True iff m = 2^k times a product of distinct Fermat primes; m >= 3.
    """
    if m < 3:
        raise ValueError(f"polygon needs at least 3 vertices, got {m}")
    for p, e in factorize(m):
        if p == 2:
            continue
        if e > 1 or p not in FERMAT_PRIMES:
            return False
    return True


def constructible_gon_sum(m: int, delta: int) -> CongruencePrediction:
    """Sum of the index class (m, delta) mod m for constructible m, delta > 2.

    Constructible m have lambda(m) a power of two, so delta > 2 forces
    4 | delta and the sum vanishes.  The cases delta = 1 and 2 (sums 1 and
    -1) are deliberately excluded.
    """
    if not is_constructible_gon(m):
        raise NotSupportedError(f"{m}-gon is not constructible")
    lam = carmichael_lambda(m)
    _require_divides(delta, lam, m)
    if delta <= 2:
        raise NotSupportedError(
            f"delta={delta}: sum is {1 if delta == 1 else -1 % m} mod {m}, not 0; "
            "the vanishing statement needs delta > 2"
        )
    assert delta % 4 == 0, "lambda of a constructible modulus is a power of two"
    return CongruencePrediction(0, m, "Corollary")


def sum_power_of_two(alpha: int, delta: int) -> CongruencePrediction:
    """Sum of the index class (2^alpha, delta) mod 2^alpha.

    alpha = 1: 1.  alpha in {2, 3}: (-1)^(delta+1).  alpha > 3: 1 for
    delta = 1, -1 for delta = 2, and 0 for delta = 2^beta with
    1 < beta <= alpha - 2.
    """
    if alpha < 1:
        raise ValueError(f"alpha must be >= 1, got {alpha}")
    m = 2**alpha
    _require_divides(delta, carmichael_lambda(m), m)
    if alpha == 1:
        value = 1 % m
    elif alpha <= 3:
        value = (-1) ** (delta + 1) % m
    elif delta == 1:
        value = 1
    elif delta == 2:
        value = -1 % m
    else:
        value = 0
    return CongruencePrediction(value, m, "T1.7")


def sum_odd_prime_power(p: int, alpha: int, delta: int) -> CongruencePrediction:
    """Sum of the index class (p^alpha, delta) mod p^alpha for odd prime p:

        mu((delta, p-1)) * phi(p^ord_p(delta))
    """
    if p == 2 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if alpha < 1:
        raise ValueError(f"alpha must be >= 1, got {alpha}")
    m = p**alpha
    _require_divides(delta, euler_phi(m), m)
    value = mobius(gcd(delta, p - 1)) * euler_phi(p ** ord_p(p, delta))
    return CongruencePrediction(value % m, m, "T1.7")


def gauss_cai_primitive_root_sum(p: int, alpha: int = 1) -> CongruencePrediction:
    """Sum of the primitive roots mod p^alpha (odd p):

        mu(p-1) * phi(p^(alpha-1))

    which is the full-index case delta = phi(p^alpha) of the odd prime-power
    sum; both routes are computed and must agree.
    """
    m = p**alpha
    pred = sum_odd_prime_power(p, alpha, euler_phi(m))
    direct = mobius(p - 1) * euler_phi(p ** (alpha - 1)) % m
    assert pred.value == direct, "full-index specialization must be consistent"
    return CongruencePrediction(direct, m, "GaussCai")


def gauss_cai_primitive_root_product(p: int, alpha: int = 1) -> CongruencePrediction:
    """Product of the primitive roots mod p^alpha: 1, for prime p > 3.

    p = 2 and p = 3 are excluded: mod 3 and mod 9 the product of the
    primitive roots is -1 (the class of index 2 in a cyclic group).
    """
    if p in (2, 3):
        raise NotSupportedError(f"product congruence requires a prime > 3, got {p}")
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if alpha < 1:
        raise ValueError(f"alpha must be >= 1, got {alpha}")
    return CongruencePrediction(1, p**alpha, "GaussCai")


def sum_two_primes_mod_p(p: int, q: int, delta: int) -> CongruencePrediction:
    """Sum of the index class (pq, delta), asserted modulo p only:

        mu(g) * I((delta/g, p-1)) * phi(delta) / phi(g),  g = (delta, p-1)

    for distinct odd primes p, q.  The quotient phi(delta)/phi(g) is exact
    because g | delta.
    """
    if p == q:
        raise ValueError("p and q must be distinct")
    for x in (p, q):
        if x == 2 or not is_prime(x):
            raise ValueError(f"p and q must be odd primes, got {x}")
    _require_divides(delta, carmichael_lambda(p * q), p * q)
    g = gcd(delta, p - 1)
    phi_delta, phi_g = euler_phi(delta), euler_phi(g)
    if phi_delta % phi_g:
        raise AssertionError("phi(g) | phi(delta) whenever g | delta")
    value = (
        mobius(g) * unit_indicator(gcd(delta // g, p - 1)) * (phi_delta // phi_g)
    )
    return CongruencePrediction(value % p, p, "T1.8")


def F_function(a_list: list[int] | tuple[int, ...], n: int) -> int:
    """Multiplicative correction factor F(a_1, ..., a_k; n).

    For each prime power r^beta exactly dividing n, with t_i = ord_r(a_i)
    and s = #{i : t_i >= beta}:

        factor = (product of r^{t_i} over t_i < beta) * (r^(beta*s) - r^((beta-1)*s))

    The integer-valued twin of :func:`indexcong.convolution.phi_chi_chain`;
    the two agree everywhere.
    """
    if not a_list:
        raise ValueError("a_list must be nonempty")
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    value = 1
    for r, beta in factorize(n):
        low = 1
        s = 0
        for a in a_list:
            t = ord_p(r, a)
            if t < beta:
                low *= r**t
            else:
                s += 1
        value *= low * (r ** (beta * s) - r ** ((beta - 1) * s))
    return value


def sum_general_mod_prime_power(
    m_fact: Factorization, p: int, delta: int
) -> CongruencePrediction:
    """Sum of the index class (m, delta), asserted modulo the part p^alpha.

    For m with factorization m_fact, odd prime p with p^alpha exactly
    dividing m, and g = (delta, p-1):

        mu(g) * I((delta/g, p-1)) * F(phi of every prime-power part of m;
                                      delta/g)   (mod p^alpha)

    The even part of m is not covered: mod 4 the formula already fails at
    m = 4, delta = 2 (enumeration gives 3, the formula 1; per-argument
    variants of F fail at m = 12, delta = 2 the same way), so p = 2 is
    refused rather than silently wrong.
    """
    m_fact = tuple(m_fact)
    m = 1
    for r, e in m_fact:
        m *= r**e
    if p == 2:
        raise NotSupportedError(
            "the congruence covers odd prime-power parts only; "
            "for the even part see the power-of-two sums"
        )
    alpha = next((e for r, e in m_fact if r == p), 0)
    if alpha == 0 or not is_prime(p):
        raise ValueError(f"p={p} is not a prime-power part of m={m}")
    _require_divides(delta, carmichael_lambda(m), m)
    g = gcd(delta, p - 1)
    pk = p**alpha
    value = mobius(g) * unit_indicator(gcd(delta // g, p - 1))
    if value:
        value *= F_function([euler_phi(r**e) for r, e in m_fact], delta // g)
    return CongruencePrediction(value % pk, pk, "T1.9")


def predictions_for_sum(m: int, delta: int) -> list[CongruencePrediction]:
    """Every closed form that predicts the sum of the class (m, delta).

    Requires delta | lambda(m).  Redundant predictions (a prime power is
    covered both by its dedicated congruence and by the general one) are all
    included: agreement between them is part of the point.
    """
    _require_divides(delta, carmichael_lambda(m), m)
    preds: list[CongruencePrediction] = []
    small = sum_small_delta(m, delta)
    if small is not None:
        preds.append(small)
    fact = factorize(m)
    if len(fact) == 1:
        p, alpha = fact[0]
        if p == 2:
            preds.append(sum_power_of_two(alpha, delta))
        else:
            preds.append(sum_odd_prime_power(p, alpha, delta))
            if delta == euler_phi(m):
                preds.append(gauss_cai_primitive_root_sum(p, alpha))
    if (
        len(fact) == 2
        and fact[0][0] != 2
        and fact[0][1] == 1
        and fact[1][1] == 1
    ):
        p, q = fact[0][0], fact[1][0]
        preds.append(sum_two_primes_mod_p(p, q, delta))
        preds.append(sum_two_primes_mod_p(q, p, delta))
    for p, _ in fact:
        if p != 2:
            preds.append(sum_general_mod_prime_power(fact, p, delta))
    if m >= 3 and delta > 2 and is_constructible_gon(m):
        preds.append(constructible_gon_sum(m, delta))
    return preds


def predictions_for_product(m: int, delta: int) -> list[CongruencePrediction]:
    """Every closed form that predicts the product of the class (m, delta)."""
    preds = [product_closed_form(m, delta)]
    fact = factorize(m)
    if len(fact) == 1 and fact[0][0] > 3 and delta == euler_phi(m):
        preds.append(gauss_cai_primitive_root_product(*fact[0]))
    return preds
