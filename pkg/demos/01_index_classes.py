#!/usr/bin/env python3
"""Index classes of a modulus, from the ground up.

The index of a unit a modulo m is its multiplicative order: the smallest
k >= 1 with a^k = 1 (mod m).  Grouping the unit group U_m by index carves it
into "index classes", one per divisor of the Carmichael function lambda(m).
This script enumerates the classes of a few moduli and shows the structural
facts everything else in the package is built on.

Run:  python demos/01_index_classes.py
"""

from indexcong import (
    carmichael_lambda,
    count_index_class,
    count_square_roots_of_unity,
    divisors,
    enumerate_index_class,
    euler_phi,
    find_primitive_root,
    has_primitive_root,
    index_class_table,
    multiplicative_order,
)


def section(title):
    print()
    print(title)
    print("-" * len(title))


section("Orders of the units modulo 16")
for a in range(1, 16, 2):
    print(f"  ord(a={a:2d}) = {multiplicative_order(a, 16)}")
print("lambda(16) =", carmichael_lambda(16), " phi(16) =", euler_phi(16))
print("Every order divides lambda, and lambda < phi here: 16 has no primitive root.")

section("The index classes of m = 16")
for delta in divisors(carmichael_lambda(16)):
    cls = enumerate_index_class(16, delta)
    print(
        f"  delta={delta}: elements {list(cls.elements)}, "
        f"sum = {cls.sum_mod} (mod 16), product = {cls.product_mod} (mod 16)"
    )
print("The class sums 1, -1, 0 for delta = 1, 2, 4 are not a coincidence;")
print("see demos/02_closed_form_congruences.py.")

section("Class sizes come in closed form (no enumeration needed)")
for m in (15, 16, 63, 360):
    lam = carmichael_lambda(m)
    table = index_class_table(m)
    closed = {d: count_index_class(m, d) for d in divisors(lam)}
    oracle = {d: s.count for d, s in table.items()}
    assert closed == oracle
    print(f"  m={m:4d}: lambda={lam:4d},  sizes {closed}  (oracle agrees)")
    assert sum(closed.values()) == euler_phi(m)
print("And each modulus's sizes add up to phi(m): the classes partition U_m.")

section("Primitive roots")
for m in (7, 9, 16, 18, 22, 24):
    if has_primitive_root(m):
        print(f"  m={m:2d}: cyclic, smallest primitive root g = {find_primitive_root(m)}")
    else:
        print(f"  m={m:2d}: not cyclic (no primitive root)")

section("Square roots of unity")
for m in (15, 16, 105, 480):
    cnt = count_square_roots_of_unity(m)
    small_classes = (
        enumerate_index_class(m, 1).count + enumerate_index_class(m, 2).count
    )
    print(f"  m={m:4d}: {cnt} solutions of x^2 = 1, "
          f"= size of the index-1 and index-2 classes ({small_classes})")
    assert cnt == small_classes
