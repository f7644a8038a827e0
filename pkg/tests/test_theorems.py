"""Closed-form congruence evaluators against the enumeration oracle."""

import pytest

from conftest import brute_class_table
from indexcong.core import (
    carmichael_lambda,
    divisors,
    euler_phi,
    factorize,
    mobius,
    primes_upto,
)
from indexcong.convolution import phi_chi_chain
from indexcong.orders import index_class_table
from indexcong.theorems import (
    CongruencePrediction,
    EmptyClassError,
    F_function,
    NotSupportedError,
    constructible_gon_sum,
    gauss_cai_primitive_root_product,
    gauss_cai_primitive_root_sum,
    is_constructible_gon,
    predictions_for_product,
    predictions_for_sum,
    product_closed_form,
    sum_general_mod_prime_power,
    sum_odd_prime_power,
    sum_power_of_two,
    sum_small_delta,
    sum_two_primes_mod_p,
)

ODD_PRIMES = [p for p in primes_upto(100) if p > 2]


def test_congruence_prediction_is_canonical():
    with pytest.raises(ValueError):
        CongruencePrediction(7, 7, "T1.5")
    with pytest.raises(ValueError):
        CongruencePrediction(-1, 7, "T1.5")
    assert CongruencePrediction(0, 1, "T1.5").value == 0


def test_product_closed_form_examples():
    assert product_closed_form(7, 2).value == 6  # class {6}
    assert product_closed_form(8, 2).value == 1  # 3*5*7 = 105 = 1 mod 8
    assert product_closed_form(7, 3).value == 1  # 2*4 = 8 = 1 mod 7
    assert product_closed_form(1, 1).value == 0
    with pytest.raises(EmptyClassError):
        product_closed_form(7, 4)


def test_product_closed_form_vs_oracle():
    for m in range(1, 400):
        table = brute_class_table(m)
        for delta, (_, _, prod) in table.items():
            assert product_closed_form(m, delta).value == prod, (m, delta)


def test_sum_small_delta_examples():
    assert sum_small_delta(97, 1).value == 1
    assert sum_small_delta(8, 2).value == 7  # 3+5+7 = 15 = -1 mod 8
    assert sum_small_delta(15, 4).value == 0  # 2+7+8+13 = 30
    assert sum_small_delta(7, 3) is None
    assert sum_small_delta(7, 6) is None
    with pytest.raises(EmptyClassError):
        sum_small_delta(7, 5)


def test_sum_small_delta_vs_oracle():
    for m in range(1, 400):
        table = brute_class_table(m)
        for delta, (_, total, _) in table.items():
            pred = sum_small_delta(m, delta)
            if delta == 1 or delta == 2 or delta % 4 == 0:
                assert pred is not None and pred.value == total, (m, delta)
            else:
                assert pred is None


def test_is_constructible_gon():
    constructible = {3, 4, 5, 6, 8, 10, 12, 15, 16, 17, 20, 24, 30, 32, 34, 40, 48, 51, 60}
    for m in range(3, 61):
        assert is_constructible_gon(m) == (m in constructible), m
    assert is_constructible_gon(257)
    assert is_constructible_gon(65537)
    assert not is_constructible_gon(9)  # squared Fermat prime
    assert not is_constructible_gon(7)
    with pytest.raises(ValueError):
        is_constructible_gon(2)


def test_constructible_gon_sum():
    assert constructible_gon_sum(16, 4).value == 0
    assert constructible_gon_sum(17, 16).value == 0
    with pytest.raises(NotSupportedError):
        constructible_gon_sum(17, 1)  # sum is 1, not 0
    with pytest.raises(NotSupportedError):
        constructible_gon_sum(17, 2)  # sum is -1, not 0
    with pytest.raises(NotSupportedError):
        constructible_gon_sum(7, 3)  # not constructible
    with pytest.raises(EmptyClassError):
        constructible_gon_sum(17, 3)


def test_constructible_sums_vanish_vs_oracle():
    for m in range(3, 600):
        if not is_constructible_gon(m):
            continue
        table = brute_class_table(m)
        for delta, (_, total, _) in table.items():
            if delta > 2:
                assert constructible_gon_sum(m, delta).value == 0
                assert total == 0, (m, delta)


def test_sum_power_of_two_examples():
    assert sum_power_of_two(3, 2).value == 7  # (-1)^3 mod 8
    assert sum_power_of_two(4, 4).value == 0  # 3+5+11+13 = 32
    assert sum_power_of_two(2, 1).value == 1
    assert sum_power_of_two(1, 1).value == 1
    with pytest.raises(EmptyClassError):
        sum_power_of_two(4, 8)  # lambda(16) = 4
    with pytest.raises(ValueError):
        sum_power_of_two(0, 1)


def test_sum_power_of_two_vs_oracle():
    for alpha in range(1, 13):
        m = 2**alpha
        table = index_class_table(m)
        for delta, stats in table.items():
            assert sum_power_of_two(alpha, delta).value == stats.sum_mod, (alpha, delta)


def test_sum_odd_prime_power_examples():
    assert sum_odd_prime_power(7, 1, 3).value == 6  # mu(3) phi(1) = -1; 2+4 = 6
    assert sum_odd_prime_power(3, 2, 6).value == 7  # mu(2) phi(3) = -2
    assert sum_odd_prime_power(3, 2, 3).value == 2  # mu(1) phi(3) = 2
    with pytest.raises(ValueError):
        sum_odd_prime_power(2, 3, 2)
    with pytest.raises(ValueError):
        sum_odd_prime_power(9, 1, 2)
    with pytest.raises(EmptyClassError):
        sum_odd_prime_power(7, 1, 4)


def test_sum_odd_prime_power_vs_oracle():
    for p in ODD_PRIMES:
        q, alpha = p, 1
        while q <= 2500:
            table = index_class_table(q)
            for delta, stats in table.items():
                assert (
                    sum_odd_prime_power(p, alpha, delta).value == stats.sum_mod
                ), (q, delta)
            q, alpha = q * p, alpha + 1


def test_gauss_cai_sum():
    assert gauss_cai_primitive_root_sum(7).value == 1  # roots {3, 5}
    assert gauss_cai_primitive_root_sum(5).value == 0  # mu(4) = 0; roots {2, 3}
    assert gauss_cai_primitive_root_sum(3, 2).value == 7  # roots {2, 5} mod 9
    for p in ODD_PRIMES:
        for alpha in (1, 2):
            m = p**alpha
            if m > 2500:
                break
            expected = mobius(p - 1) * euler_phi(p ** (alpha - 1)) % m
            table = brute_class_table(m)
            assert table[euler_phi(m)][1] == expected, (p, alpha)
            assert gauss_cai_primitive_root_sum(p, alpha).value == expected


def test_gauss_cai_product():
    assert gauss_cai_primitive_root_product(5).value == 1  # 2*3 = 6
    assert gauss_cai_primitive_root_product(7).value == 1  # 3*5 = 15
    assert gauss_cai_primitive_root_product(5, 2).value == 1
    for p in (2, 3):
        with pytest.raises(NotSupportedError):
            gauss_cai_primitive_root_product(p)
    with pytest.raises(ValueError):
        gauss_cai_primitive_root_product(15)
    # mod 3 the primitive-root product is -1, which is why p = 3 is excluded
    assert brute_class_table(3)[2][2] == 2
    for p in ODD_PRIMES:
        if p == 3:
            continue
        q, alpha = p, 1
        while q <= 2500:
            assert brute_class_table(q)[euler_phi(q)][2] == 1, q
            q, alpha = q * p, alpha + 1


def test_sum_two_primes_examples():
    assert sum_two_primes_mod_p(3, 7, 3).value == 2
    assert sum_two_primes_mod_p(7, 3, 3).value == 6
    assert sum_two_primes_mod_p(3, 5, 4).value == 0
    with pytest.raises(ValueError):
        sum_two_primes_mod_p(3, 3, 1)
    with pytest.raises(ValueError):
        sum_two_primes_mod_p(2, 7, 1)
    with pytest.raises(EmptyClassError):
        sum_two_primes_mod_p(3, 7, 5)


def test_sum_two_primes_vs_oracle():
    for i, p in enumerate(ODD_PRIMES):
        for q in ODD_PRIMES[i + 1 :]:
            m = p * q
            if m > 1200:
                break
            table = index_class_table(m)
            for delta, stats in table.items():
                for first, second in ((p, q), (q, p)):
                    assert (
                        sum_two_primes_mod_p(first, second, delta).value
                        == stats.sum_mod % first
                    ), (m, delta, first)


def test_F_function_rows():
    assert F_function([2, 6], 3) == 2
    assert F_function([9, 14], 1) == 1
    assert F_function([4, 2], 4) == 4  # direct evaluation of the formula
    assert F_function([6, 6], 3) == 8  # two arguments at the threshold
    with pytest.raises(ValueError):
        F_function([], 3)
    with pytest.raises(ValueError):
        F_function([2], 0)


def test_F_function_matches_phi_chi_chain():
    lists = [
        [euler_phi(q)]
        for q in (4, 8, 9, 27, 25, 49)
    ] + [
        [euler_phi(4), euler_phi(9)],
        [euler_phi(9), euler_phi(7)],
        [euler_phi(8), euler_phi(3), euler_phi(25)],
        [euler_phi(16), euler_phi(81), euler_phi(5)],
    ]
    for a_list in lists:
        for n in range(1, 600):
            assert F_function(a_list, n) == phi_chi_chain(a_list, n), (a_list, n)


def test_sum_general_examples():
    assert sum_general_mod_prime_power(factorize(21), 3, 3).value == 2
    assert sum_general_mod_prime_power(factorize(21), 7, 3).value == 6
    assert sum_general_mod_prime_power(factorize(36), 3, 6).value == 7
    with pytest.raises(NotSupportedError):
        sum_general_mod_prime_power(factorize(12), 2, 2)
    with pytest.raises(ValueError):
        sum_general_mod_prime_power(factorize(21), 5, 3)
    with pytest.raises(EmptyClassError):
        sum_general_mod_prime_power(factorize(21), 3, 5)


def classical_F(a_list, n):
    """Per-argument product form of F: phi(r^beta) once per argument at the
    threshold.  Correct only when at most one argument reaches it; kept here
    to document where the even-part restriction historically comes from."""
    from indexcong.core import ord_p

    value = 1
    for r, beta in factorize(n):
        for a in a_list:
            t = ord_p(r, a)
            value *= r**t if t < beta else euler_phi(r**beta)
    return value


def test_even_part_counterexamples_documented():
    # m = 12, delta = 2: enumeration gives 3 mod 4; the classical form gives 1
    table = brute_class_table(12)
    assert table[2][1] % 4 == 3
    assert mobius(1) * 1 * classical_F([euler_phi(4), euler_phi(3)], 2) % 4 == 1
    # the grouped form happens to agree at m = 12 ...
    assert mobius(1) * 1 * F_function([euler_phi(4), euler_phi(3)], 2) % 4 == 3
    # ... but still fails at m = 4, delta = 2, so the even part stays refused
    assert brute_class_table(4)[2][1] == 3
    assert mobius(1) * 1 * F_function([euler_phi(4)], 2) % 4 == 1


def test_sum_general_vs_oracle_includes_grouped_cases():
    # m = 63 exercises the grouped F factor: two parts share the prime 3
    table = index_class_table(63)
    pred = sum_general_mod_prime_power(factorize(63), 3, 3)
    assert pred.value == 8 and table[3].sum_mod % 9 == 8
    for m in range(2, 500):
        fact = factorize(m)
        table = index_class_table(m)
        for delta, stats in table.items():
            for p, alpha in fact:
                if p == 2:
                    continue
                pred = sum_general_mod_prime_power(fact, p, delta)
                assert pred.asserted_modulus == p**alpha
                assert pred.value == stats.sum_mod % p**alpha, (m, delta, p)


def test_general_specializes_to_prime_power():
    for p in ODD_PRIMES:
        q, alpha = p, 1
        while q <= 2000:
            fact = factorize(q)
            for delta in divisors(euler_phi(q)):
                assert (
                    sum_general_mod_prime_power(fact, p, delta).value
                    == sum_odd_prime_power(p, alpha, delta).value
                ), (q, delta)
            q, alpha = q * p, alpha + 1


def test_predictions_for_sum_and_product():
    preds = predictions_for_sum(21, 3)
    ids = sorted((p.theorem_id, p.asserted_modulus) for p in preds)
    assert ("T1.8", 3) in ids and ("T1.8", 7) in ids
    assert ("T1.9", 3) in ids and ("T1.9", 7) in ids
    for pred in preds:
        assert 20 % pred.asserted_modulus == pred.value  # oracle sum is 20

    preds = predictions_for_sum(9, 6)
    assert {p.theorem_id for p in preds} == {"T1.7", "GaussCai", "T1.9"}
    assert all(p.value == 7 for p in preds)

    preds = predictions_for_product(25, 20)
    assert {p.theorem_id for p in preds} == {"T1.5", "GaussCai"}
    assert all(p.value == 1 for p in preds)

    preds = predictions_for_sum(16, 4)
    assert {p.theorem_id for p in preds} == {"T1.6", "T1.7", "Corollary"}
    assert all(p.value == 0 for p in preds)

    with pytest.raises(EmptyClassError):
        predictions_for_sum(7, 4)


def test_predictions_agree_with_oracle_everywhere_small():
    for m in range(1, 300):
        table = index_class_table(m)
        for delta, stats in table.items():
            for pred in predictions_for_sum(m, delta):
                assert stats.sum_mod % pred.asserted_modulus == pred.value, (m, delta)
            for pred in predictions_for_product(m, delta):
                assert stats.product_mod % pred.asserted_modulus == pred.value, (m, delta)
