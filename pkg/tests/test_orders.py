"""Oracle enumeration against independent brute force (pure iteration)."""

from math import gcd, lcm

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_class_elements, brute_class_table, brute_units, order_by_iteration
from indexcong.core import carmichael_lambda, divisors, euler_phi
from indexcong.orders import (
    NonUnitError,
    _unit_orders_scalar,
    count_index_class,
    count_square_roots_of_unity,
    enumerate_index_class,
    find_primitive_root,
    has_primitive_root,
    index_class_table,
    index_of_power,
    multiplicative_order,
    unit_orders,
    unit_residues,
)


def test_multiplicative_order_examples():
    assert multiplicative_order(2, 7) == 3
    assert multiplicative_order(1, 100) == 1
    assert multiplicative_order(3, 16) == 4
    assert multiplicative_order(0, 1) == 1
    assert multiplicative_order(4, 1) == 1


def test_multiplicative_order_rejects_non_units():
    with pytest.raises(NonUnitError, match="non-unit"):
        multiplicative_order(6, 9)
    with pytest.raises(NonUnitError):
        multiplicative_order(0, 5)


def test_multiplicative_order_vs_iteration():
    for m in range(1, 301):
        for a in brute_units(m):
            assert multiplicative_order(a, m) == order_by_iteration(a, m), (a, m)


def test_index_of_power():
    assert index_of_power(3, 2, 16) == 2
    assert index_of_power(2, 2, 7) == 3
    assert index_of_power(3, multiplicative_order(3, 16), 16) == 1
    with pytest.raises(ValueError):
        index_of_power(3, 0, 16)


def test_index_of_power_matches_direct_order():
    # order of a^k = ind(a) / gcd(k, ind(a)), cross-checked by iteration
    for m in range(2, 120):
        for a in brute_units(m):
            for k in (1, 2, 3, 5, 8, 13):
                assert index_of_power(a, k, m) == order_by_iteration(pow(a, k, m), m)


def test_order_mod_coprime_product_is_lcm():
    for m in range(2, 30):
        for n in range(2, 30):
            if gcd(m, n) != 1 or m * n > 500:
                continue
            for a in brute_units(m * n):
                assert multiplicative_order(a, m * n) == lcm(
                    multiplicative_order(a % m, m), multiplicative_order(a % n, n)
                )


def test_has_primitive_root():
    assert has_primitive_root(1)
    assert has_primitive_root(2)
    assert has_primitive_root(4)
    assert not has_primitive_root(8)
    assert has_primitive_root(18)
    assert has_primitive_root(27)
    assert not has_primitive_root(12)
    # against the definition: some unit has order phi(m)
    for m in range(1, 400):
        exists = any(order_by_iteration(a, m) == euler_phi(m) for a in brute_units(m))
        assert has_primitive_root(m) == exists, m


def test_find_primitive_root():
    assert find_primitive_root(7) == 3
    assert find_primitive_root(8) is None
    assert find_primitive_root(9) == 2
    assert find_primitive_root(1) == 0
    assert find_primitive_root(2) == 1
    for m in range(3, 300):
        g = find_primitive_root(m)
        if g is None:
            continue
        assert order_by_iteration(g, m) == euler_phi(m)
        # smallest such unit
        for smaller in range(1, g):
            if gcd(smaller, m) == 1:
                assert order_by_iteration(smaller, m) < euler_phi(m)


def test_enumerate_index_class_examples():
    s = enumerate_index_class(7, 3)
    assert (s.elements, s.sum_mod, s.product_mod) == ((2, 4), 6, 1)
    s = enumerate_index_class(16, 4)
    assert s.elements == (3, 5, 11, 13)
    assert s.sum_mod == 0
    s = enumerate_index_class(7, 5)  # 5 does not divide lambda(7): empty
    assert (s.count, s.sum_mod, s.product_mod, s.elements) == (0, 0, 1, ())


def test_enumerate_index_class_vs_brute():
    for m in range(1, 150):
        lam = carmichael_lambda(m)
        for delta in divisors(lam) + (lam + 1,):
            s = enumerate_index_class(m, delta)
            elements = brute_class_elements(m, delta)
            assert list(s.elements) == elements, (m, delta)
            assert s.count == len(elements)
            assert s.sum_mod == sum(elements) % m
            prod = 1 % m
            for a in elements:
                prod = prod * a % m
            assert s.product_mod == prod


def test_index_class_table_vs_brute():
    for m in range(1, 400):
        table = {d: tuple(v) for d, v in index_class_table(m).items()}
        assert table == brute_class_table(m), m


def test_index_class_table_keys_are_lambda_divisors():
    for m in range(1, 400):
        table = index_class_table(m)
        assert set(table) == set(divisors(carmichael_lambda(m)))
        assert sum(v.count for v in table.values()) == euler_phi(m)


def test_scalar_and_vectorized_paths_agree():
    for m in (1, 2, 3, 4, 97, 128, 360, 1024, 2187, 4096, 9973):
        units_s, ords_s = _unit_orders_scalar(m)
        units_v, ords_v = unit_orders(m)
        assert list(units_v) == units_s
        assert list(ords_v) == ords_s


def test_unit_residues():
    assert list(unit_residues(1)) == [0]
    assert list(unit_residues(2)) == [1]
    assert list(unit_residues(12)) == [1, 5, 7, 11]
    for m in range(1, 200):
        assert list(unit_residues(m)) == brute_units(m)


def test_count_index_class_examples():
    assert count_index_class(7, 3) == 2
    assert count_index_class(15, 4) == 4
    assert count_index_class(8, 2) == 3
    assert count_index_class(1, 1) == 1
    assert count_index_class(7, 5) == 0


def test_count_index_class_vs_oracle():
    for m in range(1, 500):
        table = index_class_table(m)
        lam = carmichael_lambda(m)
        for delta in divisors(lam):
            assert count_index_class(m, delta) == table[delta].count, (m, delta)
        assert count_index_class(m, lam + 1) == 0
        assert sum(count_index_class(m, d) for d in divisors(lam)) == euler_phi(m)


def test_count_square_roots_of_unity():
    assert count_square_roots_of_unity(15) == 4
    assert count_square_roots_of_unity(8) == 4
    for p in (3, 5, 7, 11, 13):
        assert count_square_roots_of_unity(p) == 2
    for m in range(1, 600):
        brute = sum(1 for x in brute_units(m) if x * x % m == 1 % m)
        assert count_square_roots_of_unity(m) == brute, m


def test_power_of_two_class_counts():
    # two-generator structure of the units mod 2^a, against the oracle
    for alpha in range(1, 12):
        m = 2**alpha
        table = index_class_table(m)
        expected = {1: 1}
        if alpha == 2:
            expected[2] = 1
        elif alpha >= 3:
            expected[2] = 3
            for beta in range(2, alpha - 1):
                expected[2**beta] = 2**beta
        assert {d: v.count for d, v in table.items()} == expected


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=1, max_value=3000), st.integers(min_value=0, max_value=10**6))
def test_order_divides_lambda(m, a):
    a %= m
    if gcd(a, m) != 1:
        a = 1
    assert carmichael_lambda(m) % multiplicative_order(a, m) == 0


@settings(max_examples=200, deadline=None)
@given(
    st.integers(min_value=2, max_value=800),
    st.integers(min_value=0, max_value=10**6),
    st.integers(min_value=1, max_value=50),
)
def test_index_of_power_property(m, a, k):
    a %= m
    if gcd(a, m) != 1:
        a = 1
    assert index_of_power(a, k, m) == multiplicative_order(pow(a, k, m), m)


def test_bulk_orders_dtype_is_exact():
    units, ords = unit_orders(10**6 + 3)  # prime, well inside the int64 guard
    assert units.dtype == np.int64 and ords.dtype == np.int64
    assert len(units) == 10**6 + 2
    assert int(ords.max()) == 10**6 + 2
