#!/usr/bin/env python3
"""The exhaustive verification harness, on a quick range.

Every closed form in the package is re-checked against brute-force
enumeration over configurable ranges.  The default configuration sweeps the
full acceptance ranges (moduli up to 50000 for prime powers); here we run a
faster sweep up to 600 and look inside the report, including the deliberate
skip entries that document where a formula's validity ends.

Run:  python demos/04_verification.py
"""

from indexcong import SuiteConfig, THEOREM_IDS, run_suite, verify_theorem
from indexcong.verifier import VerificationReport, VerificationTask

print("Sweeping every congruence family over moduli <= 600 ...")
report = run_suite(SuiteConfig(ranges={tid: (1, 600) for tid in THEOREM_IDS}, seed=0))
print()
print(report.render_text())

print("The T1.9 skips are the even prime-power parts, refused by contract:")
t19 = next(r for r in report.per_theorem if r.theorem_id == "T1.9")
note = next(s for s in t19.skip_details if s.m == 12 and s.delta == 2)
print(f"  example skip: m={note.m}, delta={note.delta}")
print(f"  reason: {note.reason}")
print()

print("Reports serialize to a stable JSON schema and round-trip losslessly:")
text = report.to_json()
back = VerificationReport.from_json(text)
assert back.to_json() == text
print(f"  {len(text)} bytes, status {back.status}, {back.total_cases} cases,")
print(f"  {back.total_skips} skips, {len(back.mismatches)} mismatches")
print()

print("Single-family runs take a task object; ranges are inclusive:")
single = verify_theorem(VerificationTask("T1.8", (1, 1000)))
print(single.render_text())

print("Determinism: a rerun with the same config differs only in elapsed_ms.")
rerun = run_suite(SuiteConfig(ranges={tid: (1, 600) for tid in THEOREM_IDS}, seed=0))
a, b = report.to_json_dict(), rerun.to_json_dict()
a.pop("elapsed_ms"), b.pop("elapsed_ms")
assert a == b
print("  verified.")
