#!/usr/bin/env python3
"""Dirichlet and lcm convolutions with exact rational arithmetic.

Two ways to combine arithmetical functions: sum f(a) g(b) over ab = n
(Dirichlet), or over lcm(a, b) = n.  The Dirichlet world has mu as the
inverse of the constant function u; the lcm world has Lehmer's rational
function M in that role.  Everything here is exact fractions, so identities
are checked with ==, not with tolerances.

Run:  python demos/03_convolutions.py
"""

from fractions import Fraction

from indexcong import (
    dirichlet_conv,
    dirichlet_inverse,
    divisors,
    lcm_conv,
    lehmer_M,
    mobius,
    mu_chi_lcm_g,
    mu_f_lcm_u,
    phi_chi_chain,
    random_multiplicative,
    unit_indicator,
)
from indexcong.convolution import I, M, chi, mu, phi, u


def section(title):
    print()
    print(title)
    print("-" * len(title))


section("Dirichlet convolution basics")
print("  (phi * u)(n) = n:        ", [int(dirichlet_conv(phi, u)(n)) for n in range(1, 13)])
print("  (mu * u)(n) = [n == 1]:  ", [int(dirichlet_conv(mu, u)(n)) for n in range(1, 13)])
inv = dirichlet_inverse(u)
print("  inverse of u is mu:      ", all(inv(n) == mobius(n) for n in range(1, 2000)))

section("The lcm convolution counts pairs by least common multiple")
uu = lcm_conv(u, u)
print("  (u o u)(n) = number of ordered pairs with lcm n:")
print("   n:        ", list(range(1, 13)))
print("   (u o u):  ", [int(uu(n)) for n in range(1, 13)])
print("  at a prime p it is 3: the pairs (1,p), (p,1), (p,p).")

section("Lehmer's M inverts u in the lcm world")
print("  M(p) = -1/2, M(p^2) = -1/6, M(12) =", lehmer_M(12))
conv = lcm_conv(M, u)
print("  (M o u)(n) = [n == 1]:   ", all(conv(n) == unit_indicator(n) for n in range(1, 2000)))
print("  equivalently sum of M over divisors is 1/tau(n):")
for n in (6, 12, 360):
    total = sum((lehmer_M(d) for d in divisors(n)), Fraction(0))
    print(f"    n={n:3d}: sum = {total} = 1/{len(divisors(n))}")

section("The bridge identity: (f*u)(g*u) = (f o g)*u")
f = random_multiplicative("demo-f")
g = random_multiplicative("demo-g")
lhs_f, lhs_g = dirichlet_conv(f, u), dirichlet_conv(g, u)
rhs = dirichlet_conv(lcm_conv(f, g), u)
ok = all(lhs_f(n) * lhs_g(n) == rhs(n) for n in range(1, 800))
print("  holds for a seeded random multiplicative pair on n <= 800:", ok)

section("Closed forms for the convolutions the congruences need")
print("  ((mu chi_a) o g)(n) collapses to mu((n,a)) [gcd(n/(n,a), a) = 1] g(n/(n,a)):")
for a, n in ((6, 3), (2, 3), (12, 18)):
    direct = lcm_conv(mu * chi(a), phi)(n)
    closed = mu_chi_lcm_g(a, phi, n)
    print(f"    a={a:2d}, n={n:2d}: enumeration {direct}, closed form {closed}")
    assert direct == closed

print("  chains (phi chi_b1 o ... o phi chi_bk)(n) in closed form:")
for b_list, n in (([2, 6], 3), ([4, 2], 4), ([6, 6], 3)):
    iterated = phi * chi(b_list[0])
    for b in b_list[1:]:
        iterated = lcm_conv(iterated, phi * chi(b))
    closed = phi_chi_chain(b_list, n)
    note = "  <- two arguments at the threshold: grouped difference" if b_list == [6, 6] else ""
    print(f"    b={b_list}, n={n}: enumeration {iterated(n)}, closed form {closed}{note}")
    assert iterated(n) == closed

print("  ((mu f) o u)(n) = prod (1 - f(p)) over p^2 | n times (1 - 2 f(p)) over p || n:")
for n in (7, 49, 12):
    direct = lcm_conv(mu * u, u)(n)
    closed = mu_f_lcm_u(u, n)
    print(f"    f=u, n={n:2d}: enumeration {direct}, closed form {closed}")
    assert direct == closed

section("I is the Dirichlet identity")
h = random_multiplicative("demo-h")
print("  (h * I) == h on n <= 500:", all(dirichlet_conv(h, I)(n) == h(n) for n in range(1, 501)))
