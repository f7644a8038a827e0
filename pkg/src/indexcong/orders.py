"""Ground-truth enumeration of index classes.

The index of a unit a modulo m is its multiplicative order: the smallest
k >= 1 with a^k = 1 (mod m).  The index class (m, delta) is the set of units
whose index is exactly delta.  This module enumerates those classes by
scanning the whole unit group and computing every element's order, and it is
the oracle that all closed-form congruence evaluators are checked against.

Bulk enumeration is vectorized with int64 numpy arrays when the modulus is
small enough that a product of two residues cannot overflow; otherwise it
falls back to scalar arbitrary-precision arithmetic.  Either way the values
are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .core import (
    carmichael_lambda,
    divisors,
    euler_phi,
    factorize,
    gcd,
)

__all__ = [
    "NonUnitError",
    "IndexClassSummary",
    "ClassStats",
    "multiplicative_order",
    "index_of_power",
    "has_primitive_root",
    "find_primitive_root",
    "unit_residues",
    "unit_orders",
    "index_class_table",
    "enumerate_index_class",
    "count_index_class",
    "count_square_roots_of_unity",
]

# Largest modulus for which (m-1)^2 still fits in int64; beyond this the
# scalar fallback is used so that no product can silently overflow.
_INT64_MOD_MAX = 3_037_000_499


class NonUnitError(ValueError):
    """The index is undefined for residues not coprime to the modulus."""


@dataclass(frozen=True)
class IndexClassSummary:
    """Exact census of one index class: count, sum and product modulo m."""

    modulus: int
    delta: int
    count: int
    sum_mod: int
    product_mod: int
    elements: tuple[int, ...] | None = None


class ClassStats(NamedTuple):
    count: int
    sum_mod: int
    product_mod: int


def multiplicative_order(a: int, m: int) -> int:
    """Smallest k >= 1 with a^k = 1 (mod m); requires gcd(a, m) = 1.

    Found by testing the divisors of lambda(m) in increasing order, so the
    first exponent that works is the order.  For m = 1 the answer is 1.
    """
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    if m == 1:
        return 1
    a %= m
    if gcd(a, m) != 1:
        raise NonUnitError(f"index undefined for non-units: gcd({a}, {m}) != 1")
    for d in divisors(carmichael_lambda(m)):
        if pow(a, d, m) == 1:
            return d
    raise AssertionError("unreachable: order divides lambda(m)")


def index_of_power(a: int, k: int, m: int) -> int:
    """Order of a^k modulo m, computed as ind(a) / gcd(k, ind(a))."""
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    ind = multiplicative_order(a, m)
    return ind // gcd(k, ind)


def has_primitive_root(m: int) -> bool:
    """True iff the unit group mod m is cyclic: m in {1, 2, 4, p^a, 2p^a}."""
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    if m in (1, 2, 4):
        return True
    fact = factorize(m)
    if len(fact) == 1:
        return fact[0][0] != 2
    if len(fact) == 2 and fact[0] == (2, 1):
        return True
    return False


def find_primitive_root(m: int) -> int | None:
    """Smallest unit of order phi(m) modulo m, or None when none exists."""
    if not has_primitive_root(m):
        return None
    if m == 1:
        return 0
    phi = euler_phi(m)
    prime_quotients = [phi // p for p, _ in factorize(phi)]
    for g in range(1, m):
        if gcd(g, m) != 1:
            continue
        if all(pow(g, q, m) != 1 for q in prime_quotients):
            return g
    raise AssertionError("unreachable: a cyclic unit group has a generator")


def _vec_pow_mod(base: np.ndarray, exp: int, m: int) -> np.ndarray:
    """Elementwise base**exp mod m by square-and-multiply (int64 exact)."""
    result = np.ones_like(base)
    b = base % m
    while exp:
        if exp & 1:
            result = result * b % m
        exp >>= 1
        if exp:
            b = b * b % m
    return result


def _vec_prod_mod(arr: np.ndarray, m: int) -> int:
    """Product of all entries mod m by pairwise folding (int64 exact)."""
    carry = 1
    while len(arr) > 1:
        if len(arr) & 1:
            carry = carry * int(arr[-1]) % m
            arr = arr[:-1]
        arr = arr[0::2] * arr[1::2] % m
    if len(arr):
        carry = carry * int(arr[0]) % m
    return carry % m


def unit_residues(m: int) -> np.ndarray:
    """Canonical residues of the units of Z/m, ascending (int64 array)."""
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    if m == 1:
        return np.zeros(1, dtype=np.int64)
    fact = factorize(m)
    a = np.arange(1, m, dtype=np.int64)
    if len(fact) == 1:
        p = fact[0][0]
        return a if fact[0][1] == 1 else a[a % p != 0]
    return a[np.gcd(a, m) == 1]


def _unit_orders_vectorized(m: int) -> tuple[np.ndarray, np.ndarray]:
    units = unit_residues(m)
    lam = carmichael_lambda(m)
    ords = np.ones_like(units)
    for r, c in factorize(lam):
        # The r-part of each order is r^t where t is the number of extra
        # r-th powerings needed to bring a^(lambda / r^c) to 1.
        x = _vec_pow_mod(units, lam // r**c, m)
        alive = np.flatnonzero(x != 1)
        x = x[alive]
        rt = 1
        while len(alive):
            rt *= r
            x = _vec_pow_mod(x, r, m)
            done = x == 1
            ords[alive[done]] *= rt
            keep = ~done
            alive = alive[keep]
            x = x[keep]
    return units, ords


def _unit_orders_scalar(m: int) -> tuple[list[int], list[int]]:
    if m == 1:
        return [0], [1]
    lam = carmichael_lambda(m)
    lam_fact = factorize(lam)
    units: list[int] = []
    ords: list[int] = []
    for a in range(1, m):
        if gcd(a, m) != 1:
            continue
        e = lam
        for r, c in lam_fact:
            for _ in range(c):
                cand = e // r
                if pow(a, cand, m) == 1:
                    e = cand
                    if e % r:
                        break
                else:
                    break
        units.append(a)
        ords.append(e)
    return units, ords


def unit_orders(m: int) -> tuple[np.ndarray, np.ndarray]:
    """All units of Z/m with their multiplicative orders, as parallel arrays.

    Units appear in increasing residue order.  For m = 1 the unit group is
    the trivial group on the residue 0.
    """
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    if m <= _INT64_MOD_MAX:
        return _unit_orders_vectorized(m)
    units, ords = _unit_orders_scalar(m)
    return np.array(units, dtype=object), np.array(ords, dtype=object)


def class_table_from_orders(
    units: np.ndarray, ords: np.ndarray, m: int
) -> dict[int, ClassStats]:
    """Group precomputed unit orders into per-delta (count, sum, product)."""
    idx = np.argsort(ords, kind="stable")
    so = ords[idx]
    su = units[idx]
    starts = np.concatenate(([0], np.flatnonzero(np.diff(so)) + 1))
    ends = np.concatenate((starts[1:], [len(so)]))
    table: dict[int, ClassStats] = {}
    for s, e in zip(starts, ends):
        chunk = su[s:e]
        # int64 accumulation is exact: the sum is < phi(m) * m <= m^2 <= 2^63 - 1
        table[int(so[s])] = ClassStats(
            count=int(e - s),
            sum_mod=int(chunk.sum()) % m,
            product_mod=_vec_prod_mod(chunk, m),
        )
    return table


def index_class_table(m: int) -> dict[int, ClassStats]:
    """Oracle census of every nonempty index class modulo m.

    Scans the whole unit group; the keys are exactly the divisors of
    lambda(m) (every such class is nonempty) and the counts add up to phi(m).
    """
    units, ords = unit_orders(m)
    return class_table_from_orders(units, ords, m)


def enumerate_index_class(m: int, delta: int) -> IndexClassSummary:
    """Oracle enumeration of the index class (m, delta), elements included.

    An empty class (delta not dividing lambda(m)) yields count 0, sum 0 and
    product 1 (the empty sum and product), reduced modulo m.
    """
    if delta < 1:
        raise ValueError(f"delta must be a positive integer, got {delta}")
    units, ords = unit_orders(m)
    elements = tuple(int(a) for a in units[ords == delta])
    total = 0
    prod = 1 % m
    for a in elements:
        total = (total + a) % m
        prod = prod * a % m
    return IndexClassSummary(
        modulus=m,
        delta=delta,
        count=len(elements),
        sum_mod=total,
        product_mod=prod,
        elements=elements,
    )


def _power_of_two_class_counts(e: int) -> dict[int, int]:
    # Unit group of Z/2^e: trivial (e<=1), C2 (e=2), C2 x C2^(e-2) (e>=3).
    if e <= 1:
        return {1: 1}
    if e == 2:
        return {1: 1, 2: 1}
    counts = {1: 1, 2: 3}
    for beta in range(2, e - 1):
        counts[2**beta] = 2**beta
    return counts


def count_index_class(m: int, delta: int) -> int:
    """Closed-form size of the index class (m, delta), no enumeration.

    Per odd prime power p^e | m there are phi(d) units of order d for every
    d | phi(p^e); the power-of-two part follows the two-generator structure
    of its unit group.  The total is the sum over divisor tuples with lcm
    delta of the per-factor counts.
    """
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    if delta < 1:
        raise ValueError(f"delta must be a positive integer, got {delta}")
    acc = {1: 1}
    for p, e in factorize(m):
        if p == 2:
            part = _power_of_two_class_counts(e)
        else:
            part = {d: euler_phi(d) for d in divisors((p - 1) * p ** (e - 1))}
        nxt: dict[int, int] = {}
        for cur, ways in acc.items():
            for d, cnt in part.items():
                if delta % d:
                    continue
                key = cur * d // gcd(cur, d)
                if delta % key == 0:
                    nxt[key] = nxt.get(key, 0) + ways * cnt
        acc = nxt
    return acc.get(delta, 0)


def count_square_roots_of_unity(m: int) -> int:
    """Number of x in U_m with x^2 = 1 (mod m), in closed form.

    With m = 2^a * (k odd prime powers): 2^k for a <= 1, 2^(k+1) for a = 2,
    and 2^(k+2) for a >= 3.
    """
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    fact = factorize(m)
    k = sum(1 for p, _ in fact if p != 2)
    a = next((e for p, e in fact if p == 2), 0)
    if a <= 1:
        return 2**k
    if a == 2:
        return 2 ** (k + 1)
    return 2 ** (k + 2)
