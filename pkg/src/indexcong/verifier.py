"""Exhaustive cross-checking of every closed-form congruence against the oracle.

A verification run partitions its work by modulus: for each modulus in range
the unit group is enumerated once, every unit's order computed, and all
congruences that apply to that modulus are checked against the resulting
class sums, products and counts.  Convolution-identity checks are organized
the same way over their argument range.  Work units are independent, so they
can be spread over worker processes; results are merged in a deterministic
order regardless of worker count.

A mismatch never aborts a run: finding where a formula's validity ends is a
supported outcome, not an error.  Contract refusals (such as the even
prime-power part of the general sum congruence) are counted as skips with a
reason, separate from mismatches.

Checks come in two flavors, distinguished by ``asserted_modulus`` on a
mismatch: congruence checks carry the positive modulus they are asserted
for, while exact rational identity checks (the L2.* families) carry the
sentinel 0 and compare values verbatim.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import convolution as cv
from ._version import __version__
from .core import (
    carmichael_lambda,
    divisors,
    euler_phi,
    factorize,
    gcd,
    primes_upto,
    unit_indicator,
)
from .orders import (
    class_table_from_orders,
    count_index_class,
    count_square_roots_of_unity,
    enumerate_index_class,
    unit_orders,
    unit_residues,
)
from .theorems import (
    FERMAT_PRIMES,
    gauss_cai_primitive_root_product,
    gauss_cai_primitive_root_sum,
    product_closed_form,
    sum_general_mod_prime_power,
    sum_odd_prime_power,
    sum_power_of_two,
    sum_small_delta,
    sum_two_primes_mod_p,
)

__all__ = [
    "THEOREM_IDS",
    "DEFAULT_RANGES",
    "VerificationTask",
    "SuiteConfig",
    "Mismatch",
    "Skip",
    "TheoremResult",
    "VerificationReport",
    "verify_theorem",
    "run_suite",
]

# Closed set of verifiable statement families.
THEOREM_IDS = (
    "T1.5",
    "T1.6",
    "T1.7",
    "T1.8",
    "T1.9",
    "Corollary",
    "GaussCai",
    "L2.1",
    "L2.2",
    "L2.3",
    "L2.4",
    "L2.5",
    "CountSqrt1",
    "CountClass",
)

# Default exhaustive ranges; these are the acceptance ranges of the suite.
DEFAULT_RANGES: dict[str, tuple[int, int]] = {
    "T1.5": (1, 2000),
    "T1.6": (1, 2000),
    "T1.7": (1, 50000),
    "T1.8": (1, 5000),
    "T1.9": (1, 3000),
    "Corollary": (1, 4096),
    "GaussCai": (1, 50000),
    "L2.1": (1, 500),
    "L2.2": (1, 2000),
    "L2.3": (1, 10000),
    "L2.4": (1, 2000),
    "L2.5": (1, 2000),
    "CountSqrt1": (1, 5000),
    "CountClass": (1, 2000),
}

# Fixed side parameters (independent of the modulus range, all cheap):
_L21_MAX_K = 20  # powers a^k checked for k = 1..20
_L24_PAIRS = 20  # random multiplicative function pairs
_L25_SQUARE_BOUND = 10**4  # perfect squares checked up to here
_L25_PP_POINTS = tuple(
    p**a for p in (2, 3, 5) for a in range(1, 7)
)  # prime-power expansion points
_GAUSS_CAI_MAX_P = 1000
_GAUSS_CAI_MAX_ALPHA = 3

_JSON_INT_MAX = 2**53 - 1


@dataclass(frozen=True)
class VerificationTask:
    """One theorem family checked over an inclusive modulus range."""

    theorem_id: str
    modulus_range: tuple[int, int]
    include_elements: bool = False
    seed: int = 0


@dataclass
class SuiteConfig:
    """Ranges per theorem id plus the options shared by a whole run.

    ``jobs`` is an execution detail (worker processes; None means the
    machine's cpu count) and deliberately not part of serialized reports:
    worker count must never change a result.
    """

    ranges: dict[str, tuple[int, int]] = field(
        default_factory=lambda: dict(DEFAULT_RANGES)
    )
    seed: int = 0
    jobs: int | None = None
    include_elements: bool = False

    def __post_init__(self) -> None:
        for tid, (lo, _) in self.ranges.items():
            if tid not in THEOREM_IDS:
                raise ValueError(f"unknown theorem id: {tid!r}")
            if lo < 1:
                raise ValueError(f"range lower bound must be >= 1, got {lo} for {tid}")


@dataclass(frozen=True)
class Mismatch:
    """One failed check: expected (closed form) vs actual (oracle).

    ``asserted_modulus`` > 0 for congruence checks (both values canonical
    residues); 0 for exact rational identity checks, whose values are
    rendered as strings like ``"8"`` or ``"-1/3"``.
    """

    theorem_id: str
    m: int
    delta: int
    asserted_modulus: int
    expected: int | str
    actual: int | str


@dataclass(frozen=True)
class Skip:
    """One check refused by contract, with the reason."""

    theorem_id: str
    m: int
    delta: int
    reason: str


@dataclass
class TheoremResult:
    theorem_id: str
    cases: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)
    skip_details: list[Skip] = field(default_factory=list)
    skips: int = 0  # kept in sync with skip_details when produced locally

    def merge(self, cases: int, mismatches: list[Mismatch], skips: list[Skip]) -> None:
        self.cases += cases
        self.mismatches.extend(mismatches)
        self.skip_details.extend(skips)
        self.skips += len(skips)


@dataclass
class VerificationReport:
    """Aggregate outcome of a verification run.

    ``elapsed_ms`` is the only field two identical configurations may differ
    in; everything else is deterministic, including under parallel execution.
    """

    version: str
    config: dict
    per_theorem: list[TheoremResult]
    elapsed_ms: int
    diagnostics: dict = field(default_factory=dict)

    @property
    def total_cases(self) -> int:
        return sum(r.cases for r in self.per_theorem)

    @property
    def total_skips(self) -> int:
        return sum(r.skips for r in self.per_theorem)

    @property
    def mismatches(self) -> list[Mismatch]:
        return [mm for r in self.per_theorem for mm in r.mismatches]

    @property
    def status(self) -> str:
        return "FAIL" if self.mismatches else "PASS"

    def to_json_dict(self) -> dict:
        return {
            "version": self.version,
            "config": {
                "seed": self.config.get("seed", 0),
                "ranges": {
                    tid: list(rng) for tid, rng in self.config.get("ranges", {}).items()
                },
            },
            "per_theorem": [
                {
                    "theorem_id": r.theorem_id,
                    "cases": r.cases,
                    "skips": r.skips,
                    "mismatches": [
                        {
                            "m": _enc_int(mm.m),
                            "delta": _enc_int(mm.delta),
                            "asserted_modulus": _enc_int(mm.asserted_modulus),
                            "expected": _enc_int(mm.expected),
                            "actual": _enc_int(mm.actual),
                        }
                        for mm in r.mismatches
                    ],
                }
                for r in self.per_theorem
            ],
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        raw = json.loads(text)
        per_theorem = []
        for entry in raw["per_theorem"]:
            result = TheoremResult(theorem_id=entry["theorem_id"])
            result.cases = entry["cases"]
            result.skips = entry["skips"]
            result.mismatches = [
                Mismatch(
                    theorem_id=entry["theorem_id"],
                    m=_dec_int(mm["m"]),
                    delta=_dec_int(mm["delta"]),
                    asserted_modulus=_dec_int(mm["asserted_modulus"]),
                    expected=_dec_int(mm["expected"]),
                    actual=_dec_int(mm["actual"]),
                )
                for mm in entry["mismatches"]
            ]
            per_theorem.append(result)
        config = raw.get("config", {})
        config["ranges"] = {
            tid: tuple(rng) for tid, rng in config.get("ranges", {}).items()
        }
        return cls(
            version=raw["version"],
            config=config,
            per_theorem=per_theorem,
            elapsed_ms=raw["elapsed_ms"],
        )

    def to_csv(self) -> str:
        lines = ["theorem_id,m,delta,asserted_modulus,expected,actual,status"]
        for r in self.per_theorem:
            for mm in r.mismatches:
                lines.append(
                    f"{r.theorem_id},{mm.m},{mm.delta},{mm.asserted_modulus},"
                    f"{mm.expected},{mm.actual},MISMATCH"
                )
        return "\n".join(lines) + "\n"

    def render_text(self) -> str:
        head = f"{'theorem':<10} {'range':<14} {'cases':>9} {'skips':>7} {'mismatches':>11}"
        lines = [head, "-" * len(head)]
        ranges = self.config.get("ranges", {})
        for r in self.per_theorem:
            lo, hi = ranges.get(r.theorem_id, ("?", "?"))
            lines.append(
                f"{r.theorem_id:<10} {f'[{lo}, {hi}]':<14} {r.cases:>9} "
                f"{r.skips:>7} {len(r.mismatches):>11}"
            )
        lines.append("-" * len(head))
        lines.append(
            f"{self.status}: {self.total_cases} cases, {self.total_skips} skips, "
            f"{len(self.mismatches)} mismatches ({self.elapsed_ms} ms, v{self.version})"
        )
        for mm in self.mismatches:
            lines.append(
                f"  MISMATCH {mm.theorem_id} m={mm.m} delta={mm.delta} "
                f"mod {mm.asserted_modulus}: expected {mm.expected}, got {mm.actual}"
            )
        return "\n".join(lines) + "\n"


def _enc_int(v: int | str) -> int | str:
    if isinstance(v, str):
        return v
    return str(v) if abs(v) > _JSON_INT_MAX else v


def _dec_int(v: int | str) -> int | str:
    if isinstance(v, str):
        try:
            return int(v)
        except ValueError:
            return v
    return v


def _frac_str(x: Fraction | int) -> str:
    return str(Fraction(x))


# ---------------------------------------------------------------------------
# Applicability: which moduli a theorem family covers within a range.
# Modulus 1 is excluded everywhere: every congruence degenerates to 0 = 0.


def _prime_powers(lo: int, hi: int, odd_only: bool = False) -> list[int]:
    out = []
    for p in primes_upto(hi):
        if odd_only and p == 2:
            continue
        q = p
        while q <= hi:
            if q >= lo:
                out.append(q)
            q *= p
    return sorted(out)


def _semiprimes_odd(lo: int, hi: int) -> list[int]:
    primes = [p for p in primes_upto(hi // 3) if p > 2]
    out = []
    for i, p in enumerate(primes):
        for q in primes[i + 1 :]:
            if p * q > hi:
                break
            if p * q >= lo:
                out.append(p * q)
    return sorted(out)


def _constructible_moduli(lo: int, hi: int) -> list[int]:
    odd_parts = [1]
    for fp in FERMAT_PRIMES:
        odd_parts += [x * fp for x in odd_parts if x * fp <= hi]
    out = set()
    for odd in odd_parts:
        m = odd
        while m <= hi:
            if m >= max(lo, 3):
                out.add(m)
            m *= 2
    return sorted(out)


def _applicable_moduli(tid: str, lo: int, hi: int) -> list[int]:
    lo = max(lo, 2)
    if hi < lo:
        return []
    if tid in ("T1.5", "T1.6", "T1.9", "CountClass", "CountSqrt1", "L2.1"):
        return list(range(lo, hi + 1))
    if tid == "T1.7":
        return _prime_powers(lo, hi)
    if tid == "GaussCai":
        return [
            q
            for q in _prime_powers(lo, hi, odd_only=True)
            if factorize(q)[0][0] <= _GAUSS_CAI_MAX_P
            and factorize(q)[0][1] <= _GAUSS_CAI_MAX_ALPHA
        ]
    if tid == "T1.8":
        return _semiprimes_odd(lo, hi)
    if tid == "Corollary":
        return _constructible_moduli(lo, hi)
    if tid == "L2.2":
        return [n for n in range(lo, hi + 1) if len(factorize(n)) >= 2]
    raise ValueError(f"{tid} is not a modulus-partitioned family")


# ---------------------------------------------------------------------------
# Per-modulus checks.  Each returns (cases, mismatches, skips).

_CheckOut = tuple[int, list[Mismatch], list[Skip]]


def _check_t15(m: int, table) -> _CheckOut:
    mismatches = []
    cases = 0
    for delta in sorted(table):
        expected = product_closed_form(m, delta).value
        actual = table[delta].product_mod
        cases += 1
        if expected != actual:
            mismatches.append(Mismatch("T1.5", m, delta, m, expected, actual))
    return cases, mismatches, []


def _check_t16(m: int, table) -> _CheckOut:
    mismatches = []
    skips = []
    cases = 0
    for delta in sorted(table):
        pred = sum_small_delta(m, delta)
        if pred is None:
            skips.append(Skip("T1.6", m, delta, "delta not 1, 2 or divisible by 4"))
            continue
        cases += 1
        if pred.value != table[delta].sum_mod:
            mismatches.append(
                Mismatch("T1.6", m, delta, m, pred.value, table[delta].sum_mod)
            )
    return cases, mismatches, skips


def _check_t17(m: int, table) -> _CheckOut:
    ((p, alpha),) = factorize(m)
    mismatches = []
    cases = 0
    for delta in sorted(table):
        if p == 2:
            expected = sum_power_of_two(alpha, delta).value
        else:
            expected = sum_odd_prime_power(p, alpha, delta).value
        cases += 1
        if expected != table[delta].sum_mod:
            mismatches.append(
                Mismatch("T1.7", m, delta, m, expected, table[delta].sum_mod)
            )
    return cases, mismatches, []


def _check_t18(m: int, table) -> _CheckOut:
    (p, _), (q, _) = factorize(m)
    mismatches = []
    cases = 0
    for delta in sorted(table):
        for first, second in ((p, q), (q, p)):
            expected = sum_two_primes_mod_p(first, second, delta).value
            actual = table[delta].sum_mod % first
            cases += 1
            if expected != actual:
                mismatches.append(
                    Mismatch("T1.8", m, delta, first, expected, actual)
                )
    return cases, mismatches, []


def _check_t19(m: int, table) -> _CheckOut:
    fact = factorize(m)
    mismatches = []
    skips = []
    cases = 0
    for delta in sorted(table):
        for p, alpha in fact:
            if p == 2:
                skips.append(
                    Skip(
                        "T1.9",
                        m,
                        delta,
                        "even prime-power part: the congruence is not valid mod 2^a "
                        "(m=12, delta=2: classical form 1 vs enumeration 3 mod 4; "
                        "m=4, delta=2: grouped form 1 vs 3)",
                    )
                )
                continue
            expected = sum_general_mod_prime_power(fact, p, delta).value
            actual = table[delta].sum_mod % p**alpha
            cases += 1
            if expected != actual:
                mismatches.append(
                    Mismatch("T1.9", m, delta, p**alpha, expected, actual)
                )
    return cases, mismatches, skips


def _check_corollary(m: int, table) -> _CheckOut:
    mismatches = []
    skips = []
    cases = 0
    for delta in sorted(table):
        if delta <= 2:
            skips.append(
                Skip(
                    "Corollary",
                    m,
                    delta,
                    f"vanishing needs delta > 2 (the sum is {table[delta].sum_mod} here)",
                )
            )
            continue
        cases += 1
        if table[delta].sum_mod != 0:
            mismatches.append(Mismatch("Corollary", m, delta, m, 0, table[delta].sum_mod))
    return cases, mismatches, skips


def _check_gauss_cai(m: int, table) -> _CheckOut:
    ((p, alpha),) = factorize(m)
    delta = euler_phi(m)
    mismatches = []
    skips = []
    cases = 1
    expected = gauss_cai_primitive_root_sum(p, alpha).value
    if expected != table[delta].sum_mod:
        mismatches.append(Mismatch("GaussCai", m, delta, m, expected, table[delta].sum_mod))
    if p > 3:
        cases += 1
        expected = gauss_cai_primitive_root_product(p, alpha).value
        if expected != table[delta].product_mod:
            mismatches.append(
                Mismatch("GaussCai", m, delta, m, expected, table[delta].product_mod)
            )
    else:
        skips.append(
            Skip("GaussCai", m, delta, "primitive-root product congruence needs p > 3")
        )
    return cases, mismatches, skips


def _check_count_class(m: int, table) -> _CheckOut:
    mismatches = []
    cases = 1
    total = sum(stats.count for stats in table.values())
    phi = euler_phi(m)
    if total != phi:
        mismatches.append(Mismatch("CountClass", m, 0, m, phi, total))
    for delta in sorted(table):
        cases += 1
        expected = count_index_class(m, delta)
        if expected != table[delta].count:
            mismatches.append(Mismatch("CountClass", m, delta, m, expected, table[delta].count))
    return cases, mismatches, []


def _check_count_sqrt(m: int) -> _CheckOut:
    units = unit_residues(m)
    actual = int(((units * units) % m == 1 % m).sum())
    expected = count_square_roots_of_unity(m)
    if expected != actual:
        return 1, [Mismatch("CountSqrt1", m, 0, m, expected, actual)], []
    return 1, [], []


def _check_l21(m: int, units: np.ndarray, ords: np.ndarray) -> _CheckOut:
    by_residue = np.zeros(m, dtype=ords.dtype)
    by_residue[units] = ords
    mismatches = []
    cases = 0
    powers = units.copy()
    for k in range(1, _L21_MAX_K + 1):
        if k > 1:
            powers = powers * units % m
        actual = by_residue[powers]
        expected = ords // np.gcd(ords, k)
        cases += len(units)
        for i in np.flatnonzero(actual != expected):
            mismatches.append(
                Mismatch("L2.1", m, int(units[i]), m, int(expected[i]), int(actual[i]))
            )
    return cases, mismatches, []


@lru_cache(maxsize=4096)
def _orders_by_residue(m: int) -> np.ndarray:
    # read-only lookup table; cached because divisor moduli repeat heavily
    units, ords = unit_orders(m)
    table = np.zeros(m, dtype=ords.dtype)
    table[units] = ords
    return table


def _check_l22(m: int, units: np.ndarray, ords: np.ndarray) -> _CheckOut:
    mismatches = []
    cases = 0
    for d in divisors(m):
        e = m // d
        if d >= e or d == 1 or gcd(d, e) != 1:
            continue
        part_d = _orders_by_residue(d)[units % d]
        part_e = _orders_by_residue(e)[units % e]
        expected = np.lcm(part_d, part_e)
        cases += len(units)
        for i in np.flatnonzero(expected != ords):
            mismatches.append(
                Mismatch("L2.2", m, int(units[i]), m, int(expected[i]), int(ords[i]))
            )
    return cases, mismatches, []


# ---------------------------------------------------------------------------
# Convolution-identity checks over an argument range (exact rational
# comparisons, asserted_modulus 0).


def _rational_mismatch(tid: str, n: int, delta: int, expected, actual) -> Mismatch:
    return Mismatch(tid, n, delta, 0, _frac_str(expected), _frac_str(actual))


def _check_l23_chunk(lo: int, hi: int) -> _CheckOut:
    conv = cv.lcm_conv(cv.M, cv.u)
    mismatches = []
    cases = 0
    for n in range(lo, hi + 1):
        cases += 1
        expected = Fraction(unit_indicator(n))
        actual = conv(n)
        if expected != actual:
            mismatches.append(_rational_mismatch("L2.3", n, 0, expected, actual))
    return cases, mismatches, []


def _check_l24_pair(pair_index: int, lo: int, hi: int, seed: int) -> _CheckOut:
    f = cv.random_multiplicative(f"{seed}/L2.4/{pair_index}/f")
    g = cv.random_multiplicative(f"{seed}/L2.4/{pair_index}/g")
    fu = cv.dirichlet_conv(f, cv.u)
    gu = cv.dirichlet_conv(g, cv.u)
    rhs = cv.dirichlet_conv(cv.lcm_conv(f, g), cv.u)
    mismatches = []
    cases = 0
    for n in range(lo, hi + 1):
        cases += 1
        expected = fu(n) * gu(n)
        actual = rhs(n)
        if expected != actual:
            mismatches.append(_rational_mismatch("L2.4", n, pair_index, expected, actual))
    return cases, mismatches, []


def _check_l25_part(part: int, lo: int, hi: int, seed: int) -> _CheckOut:
    mismatches = []
    cases = 0

    if part == 1:
        # f o mu = f(1) mu, for arbitrary f
        fns = [cv.u, cv.M, cv.phi] + [
            cv.random_multiplicative(f"{seed}/L2.5.1/{i}") for i in range(2)
        ]
        for f in fns:
            conv = cv.lcm_conv(f, cv.mu)
            f1 = f(1)
            for n in range(lo, hi + 1):
                cases += 1
                expected = f1 * cv.mu(n)
                actual = conv(n)
                if expected != actual:
                    mismatches.append(_rational_mismatch("L2.5", n, 1, expected, actual))

    elif part == 2:
        # f o g = I iff the divisor sums of f and g multiply to 1; both
        # directions exercised with f = M, g = u.
        conv = cv.lcm_conv(cv.M, cv.u)
        m_sum = cv.dirichlet_conv(cv.M, cv.u)
        for n in range(lo, hi + 1):
            cases += 2
            actual = conv(n)
            expected = Fraction(unit_indicator(n))
            if actual != expected:
                mismatches.append(_rational_mismatch("L2.5", n, 2, expected, actual))
            product = m_sum(n) * len(divisors(n))
            if product != 1:
                mismatches.append(_rational_mismatch("L2.5", n, 2, 1, product))

    elif part == 3:
        # prime-power expansion of (f o g)(p^a), against enumeration
        pairs = [
            (cv.random_multiplicative(f"{seed}/L2.5.3/f"), cv.random_multiplicative(f"{seed}/L2.5.3/g")),
            (cv.phi, cv.u),
            (cv.M, cv.u),
        ]
        for f, g in pairs:
            conv = cv.lcm_conv(f, g)
            for point in _L25_PP_POINTS:
                ((p, a),) = factorize(point)
                cases += 1
                expected = (
                    f(point) * sum(g(p**i) for i in range(a))
                    + g(point) * sum(f(p**j) for j in range(a))
                    + f(point) * g(point)
                )
                actual = conv(point)
                if expected != actual:
                    mismatches.append(
                        _rational_mismatch("L2.5", point, 3, expected, actual)
                    )

    elif part == 4:
        # closed form of ((mu f) o u)(n) plus the perfect-square coincidence
        # with (mu f) * u; squares are checked up to the fixed bound.
        fns = [cv.u] + [cv.random_multiplicative(f"{seed}/L2.5.4/{i}") for i in range(2)]
        for f in fns:
            conv = cv.lcm_conv(cv.mu * f, cv.u)
            dirichlet = cv.dirichlet_conv(cv.mu * f, cv.u)
            for n in range(lo, hi + 1):
                cases += 1
                expected = cv.mu_f_lcm_u(f, n)
                actual = conv(n)
                if expected != actual:
                    mismatches.append(_rational_mismatch("L2.5", n, 4, expected, actual))
            for j in range(1, int(_L25_SQUARE_BOUND**0.5) + 1):
                n = j * j
                cases += 1
                expected = dirichlet(n)
                actual = conv(n)
                if expected != actual:
                    mismatches.append(_rational_mismatch("L2.5", n, 4, expected, actual))
    else:
        raise ValueError(f"unknown L2.5 part {part}")

    return cases, mismatches, []


# ---------------------------------------------------------------------------
# Job construction, execution and merging.

_TABLE_TIDS = frozenset(
    {"T1.5", "T1.6", "T1.7", "T1.8", "T1.9", "Corollary", "GaussCai", "CountClass"}
)
_ORDER_TIDS = frozenset({"L2.1", "L2.2"})


def _run_modulus_job(m: int, tids: tuple[str, ...]) -> list[tuple[str, _CheckOut]]:
    table = None
    units = ords = None
    if _TABLE_TIDS.intersection(tids) or _ORDER_TIDS.intersection(tids):
        units, ords = unit_orders(m)
        table = class_table_from_orders(units, ords, m)
    out = []
    for tid in tids:
        if tid == "T1.5":
            result = _check_t15(m, table)
        elif tid == "T1.6":
            result = _check_t16(m, table)
        elif tid == "T1.7":
            result = _check_t17(m, table)
        elif tid == "T1.8":
            result = _check_t18(m, table)
        elif tid == "T1.9":
            result = _check_t19(m, table)
        elif tid == "Corollary":
            result = _check_corollary(m, table)
        elif tid == "GaussCai":
            result = _check_gauss_cai(m, table)
        elif tid == "CountClass":
            result = _check_count_class(m, table)
        elif tid == "CountSqrt1":
            result = _check_count_sqrt(m)
        elif tid == "L2.1":
            result = _check_l21(m, units, ords)
        elif tid == "L2.2":
            result = _check_l22(m, units, ords)
        else:
            raise ValueError(f"{tid} is not a modulus-partitioned family")
        out.append((tid, result))
    return out


def _run_job(job: tuple) -> list[tuple[str, _CheckOut]]:
    kind = job[0]
    if kind == "mod":
        return _run_modulus_job(job[1], job[2])
    if kind == "L2.3":
        return [("L2.3", _check_l23_chunk(job[1], job[2]))]
    if kind == "L2.4":
        return [("L2.4", _check_l24_pair(job[1], job[2], job[3], job[4]))]
    if kind == "L2.5":
        return [("L2.5", _check_l25_part(job[1], job[2], job[3], job[4]))]
    raise ValueError(f"unknown job kind {kind!r}")


def _build_jobs(config: SuiteConfig) -> list[tuple]:
    per_modulus: dict[int, list[str]] = {}
    for tid in THEOREM_IDS:
        if tid not in config.ranges or tid in ("L2.3", "L2.4", "L2.5"):
            continue
        lo, hi = config.ranges[tid]
        for m in _applicable_moduli(tid, lo, hi):
            per_modulus.setdefault(m, []).append(tid)
    # Largest moduli first: enumerating the unit group dominates, so this
    # keeps late stragglers short when running on several workers.
    jobs: list[tuple] = [
        ("mod", m, tuple(per_modulus[m])) for m in sorted(per_modulus, reverse=True)
    ]
    if "L2.3" in config.ranges:
        lo, hi = config.ranges["L2.3"]
        step = 2500
        for start in range(lo, hi + 1, step):
            jobs.append(("L2.3", start, min(start + step - 1, hi)))
    if "L2.4" in config.ranges:
        lo, hi = config.ranges["L2.4"]
        for i in range(_L24_PAIRS):
            jobs.append(("L2.4", i, lo, hi, config.seed))
    if "L2.5" in config.ranges:
        lo, hi = config.ranges["L2.5"]
        for part in (1, 2, 3, 4):
            jobs.append(("L2.5", part, lo, hi, config.seed))
    return jobs


def run_suite(config: SuiteConfig | None = None) -> VerificationReport:
    """Run every configured theorem family over its range and aggregate.

    The default configuration runs the full exhaustive acceptance ranges.
    Results are independent of the worker count and deterministic for a
    fixed (ranges, seed) configuration; only ``elapsed_ms`` varies.
    """
    if config is None:
        config = SuiteConfig()
    start = time.perf_counter()
    jobs = _build_jobs(config)
    njobs = config.jobs if config.jobs is not None else (os.cpu_count() or 1)
    if njobs < 1:
        raise ValueError(f"jobs must be >= 1, got {njobs}")
    if njobs == 1 or len(jobs) < 2:
        outcomes = [_run_job(job) for job in jobs]
    else:
        with ProcessPoolExecutor(max_workers=njobs) as pool:
            chunksize = max(1, len(jobs) // (njobs * 8))
            outcomes = list(pool.map(_run_job, jobs, chunksize=chunksize))

    results = {tid: TheoremResult(tid) for tid in THEOREM_IDS if tid in config.ranges}
    for outcome in outcomes:
        for tid, (cases, mismatches, skips) in outcome:
            results[tid].merge(cases, mismatches, skips)

    for result in results.values():
        result.mismatches.sort(key=lambda mm: (mm.m, mm.delta, mm.asserted_modulus))
        result.skip_details.sort(key=lambda sk: (sk.m, sk.delta))

    report = VerificationReport(
        version=__version__,
        config={"seed": config.seed, "ranges": dict(config.ranges)},
        per_theorem=[results[tid] for tid in THEOREM_IDS if tid in results],
        elapsed_ms=int((time.perf_counter() - start) * 1000),
    )
    if config.include_elements:
        for mm in report.mismatches:
            if mm.asserted_modulus and mm.delta:
                key = (mm.theorem_id, mm.m, mm.delta)
                report.diagnostics[key] = enumerate_index_class(mm.m, mm.delta).elements
    return report


def verify_theorem(task: VerificationTask) -> VerificationReport:
    """Check a single theorem family over the task's modulus range."""
    if task.theorem_id not in THEOREM_IDS:
        raise ValueError(f"unknown theorem id: {task.theorem_id!r}")
    config = SuiteConfig(
        ranges={task.theorem_id: tuple(task.modulus_range)},
        seed=task.seed,
        jobs=1,
        include_elements=task.include_elements,
    )
    return run_suite(config)
