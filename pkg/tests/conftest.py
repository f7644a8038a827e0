"""Shared brute-force oracles, deliberately independent of the library.

Orders are found by repeated multiplication (never by divisor testing), and
class tables by scanning every residue, so these helpers share no code path
with the implementations they check.
"""

from __future__ import annotations

from math import gcd


def brute_units(m: int) -> list[int]:
    return [a for a in range(m) if gcd(a, m) == 1]


def order_by_iteration(a: int, m: int) -> int:
    """Multiply a by itself until reaching 1 mod m; count the steps."""
    one = 1 % m
    x = a % m
    k = 1
    while x != one:
        x = x * a % m
        k += 1
    return k


def brute_class_table(m: int) -> dict[int, tuple[int, int, int]]:
    """delta -> (count, sum mod m, product mod m) by residue scan."""
    table: dict[int, tuple[int, int, int]] = {}
    for a in brute_units(m):
        d = order_by_iteration(a, m)
        count, total, prod = table.get(d, (0, 0, 1 % m))
        table[d] = (count + 1, (total + a) % m, prod * a % m)
    return table


def brute_class_elements(m: int, delta: int) -> list[int]:
    return [a for a in brute_units(m) if order_by_iteration(a, m) == delta]
