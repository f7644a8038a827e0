#!/usr/bin/env python3
"""The closed-form congruences, each checked live against enumeration.

The classical starting point: modulo a prime p > 3, the primitive roots
multiply to 1 and add up to mu(p-1).  Both facts generalize, first to prime
powers, then to every index class of every modulus.  This script walks the
whole family of closed forms with the oracle alongside.

Run:  python demos/02_closed_form_congruences.py
"""

from indexcong import (
    carmichael_lambda,
    divisors,
    enumerate_index_class,
    euler_phi,
    factorize,
    gauss_cai_primitive_root_product,
    gauss_cai_primitive_root_sum,
    index_class_table,
    mobius,
    product_closed_form,
    sum_general_mod_prime_power,
    sum_odd_prime_power,
    sum_small_delta,
    sum_two_primes_mod_p,
)


def section(title):
    print()
    print(title)
    print("-" * len(title))


section("Primitive roots modulo a prime: product 1, sum mu(p-1)")
for p in (5, 7, 11, 13, 31):
    roots = enumerate_index_class(p, p - 1)
    print(
        f"  p={p:2d}: roots {list(roots.elements)},  "
        f"product = {roots.product_mod} (predicted {gauss_cai_primitive_root_product(p).value}),  "
        f"sum = {roots.sum_mod} (predicted {gauss_cai_primitive_root_sum(p).value} "
        f"= mu({p - 1}) = {mobius(p - 1) % p})"
    )

section("The same modulo prime powers")
for p, alpha in ((3, 2), (5, 2), (7, 2), (3, 3)):
    m = p**alpha
    roots = enumerate_index_class(m, euler_phi(m))
    predicted = gauss_cai_primitive_root_sum(p, alpha).value
    print(
        f"  m={m:3d}: {roots.count} primitive roots, sum = {roots.sum_mod}, "
        f"predicted mu(p-1) phi(p^(a-1)) = {predicted}"
    )
    assert roots.sum_mod == predicted

section("Products of whole index classes: always 1, except one -1")
for m, delta in ((7, 2), (7, 3), (8, 2), (25, 2), (16, 4), (63, 6)):
    cls = enumerate_index_class(m, delta)
    pred = product_closed_form(m, delta)
    tag = "(delta=2 and m cyclic)" if pred.value == m - 1 else ""
    print(f"  m={m:2d} delta={delta}: product = {cls.product_mod}, "
          f"closed form {pred.value} {tag}")
    assert cls.product_mod == pred.value

section("Sums for special deltas: 1, -1, 0")
for m, delta in ((97, 1), (8, 2), (24, 2), (15, 4), (16, 4), (40, 4)):
    cls = enumerate_index_class(m, delta)
    pred = sum_small_delta(m, delta)
    print(f"  m={m:2d} delta={delta}: sum = {cls.sum_mod:3d} (mod {m}), "
          f"closed form {pred.value}")
    assert cls.sum_mod == pred.value

section("Odd prime powers: sum = mu((delta, p-1)) phi(p^ord_p(delta))")
for p, alpha in ((7, 1), (3, 2), (11, 1), (5, 3)):
    m = p**alpha
    for delta in divisors(euler_phi(m)):
        cls = enumerate_index_class(m, delta)
        pred = sum_odd_prime_power(p, alpha, delta)
        assert cls.sum_mod == pred.value
    print(f"  m={m:3d}: verified for every delta | phi({m})")

section("Two odd primes: the sum is pinned down mod p and mod q separately")
m = 21
for delta in divisors(carmichael_lambda(m)):
    cls = enumerate_index_class(m, delta)
    mod3 = sum_two_primes_mod_p(3, 7, delta)
    mod7 = sum_two_primes_mod_p(7, 3, delta)
    print(
        f"  m=21 delta={delta}: sum = {cls.sum_mod:2d}; "
        f"predicted {mod3.value} (mod 3) and {mod7.value} (mod 7); "
        f"actual {cls.sum_mod % 3} and {cls.sum_mod % 7}"
    )
    assert cls.sum_mod % 3 == mod3.value and cls.sum_mod % 7 == mod7.value

section("Arbitrary moduli, one odd prime-power part at a time")
for m in (63, 360, 455, 2925):
    fact = factorize(m)
    table = index_class_table(m)
    checked = 0
    for delta in divisors(carmichael_lambda(m)):
        for p, a in fact:
            if p == 2:
                continue  # the even part is outside this congruence's scope
            pred = sum_general_mod_prime_power(fact, p, delta)
            assert table[delta].sum_mod % p**a == pred.value, (m, delta, p)
            checked += 1
    print(f"  m={m:4d} = {dict(fact)}: {checked} congruences, all agree")

print()
print("m = 63 above matters: its two parts share the prime 3, which is")
print("exactly the case where the grouped form of the F factor is required.")
