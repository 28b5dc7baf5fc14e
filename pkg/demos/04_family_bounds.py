#!/usr/bin/env python3
"""Closed-form completeness bounds for structured families.

For several shapes of coefficient vector the largest completeness-
preserving last coefficient N has a closed form.  Each bound is exact --
the member at N is complete, the member at N+1 is not -- and each is
cross-validated here against the verdict engine.
"""

from plrs import (
    COMPLETE,
    OneZerosN,
    bound_one_zeros,
    bound_one_zeros_ones,
    bound_ones_zeros,
    bound_two_ones_zeros,
    check_completeness,
    classify_family,
    validate,
)


def engine_kind(values):
    return check_completeness(validate(values)).kind


print("[1,0^k,N] is complete iff N <= ceil((k+2)(k+3)/4):")
print("  k     :", *[f"{k:4d}" for k in range(7)])
print("  max N :", *[f"{bound_one_zeros(k).max_n:4d}" for k in range(7)])

print("\nEdge check via the engine for k = 3 (bound 8):")
print("  [1,0,0,0,8] ->", engine_kind([1, 0, 0, 0, 8]))
print("  [1,0,0,0,9] ->", engine_kind([1, 0, 0, 0, 9]))

print("\n[1^g,0^k,N]: for fixed k the bound grows with g, then freezes at")
print("2^(k+1)-1 once g reaches k + ceil(log2 k):")
for k in (2, 3, 4):
    row = [bound_ones_zeros(g, k).max_n for g in range(k, 9)]
    print(f"  k={k}, g={k}..8: {row}")

print("\n[1,1,0^k,N] has a conjectured bound built from shifted Fibonacci")
print("numbers (f_1=1, f_2=2); classifications inherit the conjectural flag:")
for k in range(4):
    b = bound_two_ones_zeros(k)
    print(f"  k={k}: max N = {b.max_n} (proven={b.proven})")

print("\n[1,0^(L-m-2),1^m,N]: swapping zeros for trailing ones moves the")
print("bound non-monotonically at first, then upward once the ones block")
print("dominates (shown for L = 8):")
for m in (0, 1, 2, 3):
    b = bound_one_zeros_ones(8, m)
    print(f"  m={m}: max N = {b.max_n}")

print("\nclassify_family wraps a bound into a verdict:")
v = classify_family(OneZerosN(5), 15)
print(f"  {v.coefficients} -> {v.kind}, certificate {v.certificate.tag()},"
      f" conjectural={v.conjectural}")
assert classify_family(OneZerosN(5), 14).kind == COMPLETE
