#!/usr/bin/env python3
"""Ground truth by brute force: subset-sum reachability.

Independently of any gap arithmetic, a bit-vector dynamic program lists
every integer expressible as a sum of distinct prefix terms.  If some
integer below the next term is missing, it stays missing forever -- a
self-contained incompleteness witness anyone can re-check by hand.
"""

from plrs import (
    generate_terms,
    oracle_verdict,
    prefix_report,
    reachable_sums,
    smallest_unrepresentable,
    validate,
)

t = generate_terms(validate([1, 3]), 3)
mask = reachable_sums(t)
print("Subset sums of (1, 2, 5):", sorted(s for s in range(9) if mask >> s & 1))
print("4 is missing, and the next term is 11 -- so 4 is lost for good.\n")

report = prefix_report(validate([1, 3]), 3)
print("prefix report:", report, "\n")

print("The doubling sequence covers every integer up to its running sum:")
print("  smallest unrepresentable for [2], 6 terms:",
      smallest_unrepresentable(validate([2]), 6))

print("\nOracle verdicts agree with the gap engine but never share its")
print("reasoning on the incomplete side:")
for coeffs in ([1, 3], [1, 1], [1, 2, 0, 0, 0, 0, 15]):
    v = oracle_verdict(validate(coeffs), max_prefix=16)
    witness = f", permanently missing {v.certificate.witness}" if v.certificate.witness else ""
    print(f"  {str(v.coefficients):18s} {v.kind}{witness}")

print("\nWitness check for [1,2,0,0,0,0,15]: terms start", end=" ")
terms = generate_terms(validate([1, 2, 0, 0, 0, 0, 15]), 4).terms
print(f"{terms}; subsets of (1, 2) reach at most 3, and every later term")
print("exceeds 4, so 4 is unreachable forever.")
