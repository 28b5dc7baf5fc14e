#!/usr/bin/env python3
"""Coefficient moves that provably preserve completeness or its absence.

Three tail operations come with guarantees: appending any positive
coefficient keeps an incomplete sequence incomplete, lowering the last
coefficient keeps a complete sequence complete, and folding the last
coefficient into its neighbour keeps an incomplete sequence incomplete.
Chained, they turn single classified vectors into whole families.
"""

from plrs import (
    append_coeff,
    check_completeness,
    decrease_last,
    merge_last_two,
    validate,
)


def kind(c):
    return check_completeness(c).kind


print("Append onto the incomplete [1,3]: it never recovers, whatever we add.")
c = validate([1, 3])
for extra in (1, 2, 5):
    rec = append_coeff(c, extra)
    print(f"  {rec.input} + [{extra}] -> {rec.output}: {kind(rec.output)}")

print("\nDecrease the last coefficient of the complete [1,0,3]:")
c = validate([1, 0, 3])
for k_last in (3, 2, 1):
    rec = decrease_last(c, k_last)
    print(f"  {rec.input} -> {rec.output}: {kind(rec.output)}")

print("\nMerge the tail of incomplete vectors:")
for values in ([1, 0, 4], [2, 1], [1, 1, 0, 4]):
    rec = merge_last_two(validate(values))
    print(f"  {rec.input} -> {rec.output}: {kind(rec.output)}")

print("\nA chain: start from the incomplete [1,4] and append repeatedly;")
print("incompleteness rides along the whole family:")
c = validate([1, 4])
for extra in (1, 1, 2):
    c = append_coeff(c, extra).output
    print(f"  {c}: {kind(c)}")

print("\nMoves always return a record, even when the guarantee's hypothesis")
print("does not hold; the guarantee field is about the *rule*, not the input:")
rec = append_coeff(validate([1, 1]), 1)  # complete input
print(f"  {rec.input} -> {rec.output}, rule={rec.rule}, guarantee={rec.guarantee}")
print(f"  (output is {kind(rec.output)}: appending to a complete vector proves nothing)")
