"""indexcong: sums and products of units of a given index modulo m.

The index of a unit a modulo m is its multiplicative order.  This package
computes the sum and the product of every index class (the units of a fixed
order delta) through closed-form congruences, enumerates the classes exactly
as a brute-force oracle, and cross-checks the two exhaustively.

Layers:

- :mod:`indexcong.core` - exact integer arithmetic and the classical
  arithmetic functions (phi, lambda, mu, ...).
- :mod:`indexcong.orders` - the oracle: orders, primitive roots, index-class
  enumeration and closed-form class counts.
- :mod:`indexcong.convolution` - Dirichlet and lcm convolutions of
  exact-rational arithmetical functions.
- :mod:`indexcong.theorems` - the closed-form congruence evaluators.
- :mod:`indexcong.verifier` - the exhaustive verification harness.
- :mod:`indexcong.cli` - the ``indexcong`` command-line front end.
"""

from ._version import __version__
from .core import (
    Factorization,
    Rational,
    carmichael_lambda,
    crt,
    divides_indicator,
    divisors,
    euler_phi,
    factorize,
    gcd,
    is_prime,
    lcm,
    mobius,
    mod_pow,
    ord_p,
    primes_upto,
    rad,
    unit_indicator,
)
from .orders import (
    ClassStats,
    IndexClassSummary,
    NonUnitError,
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
from .convolution import (
    ArithFn,
    dirichlet_conv,
    dirichlet_inverse,
    lcm_conv,
    lehmer_M,
    mu_chi_lcm_g,
    mu_f_lcm_u,
    multiplicative,
    phi_chi_chain,
    random_multiplicative,
)
from .theorems import (
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
from .verifier import (
    DEFAULT_RANGES,
    THEOREM_IDS,
    Mismatch,
    Skip,
    SuiteConfig,
    TheoremResult,
    VerificationReport,
    VerificationTask,
    run_suite,
    verify_theorem,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
