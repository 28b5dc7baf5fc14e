"""Closed-form completeness bounds for structured coefficient families.

Each family fixes every coefficient except the last one, N, and carries a
closed-form bound max_n such that the sequence is complete iff
1 <= N <= max_n.  Decreasing the last coefficient of a complete sequence
preserves completeness, which is what turns each bound into a classifier.

Fibonacci numbers in the two-ones family use the shifted convention
f_1 = 1, f_2 = 2, f_{n+1} = f_n + f_{n-1}; mixing this up with the
f_1 = f_2 = 1 convention silently shifts the bound, so it is pinned here
once and used nowhere else.

Bounds whose derivation rests on an unproven conjecture report
proven=False, and classifications made with them are flagged conjectural.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from . import brown
from .core import Coefficients, validate

RULE_ONE_ZEROS = "one-zeros"
RULE_ONES_ZEROS = "ones-zeros"
RULE_TWO_ONES_ZEROS = "two-ones-zeros"
RULE_ONE_ZEROS_ONES = "one-zeros-ones"


class OutOfProvenRange(ValueError):
    """Parameters fall outside the range the bound is proved for."""


class ShapeViolation(ValueError):
    """Parameters do not describe a member of the family."""


@dataclass(frozen=True)
class FamilyBound:
    """Largest last coefficient keeping the family member complete."""

    max_n: int
    proven: bool
    rule_id: str


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _ceil_log2(k: int) -> int:
    if k < 1:
        raise ValueError("k must be >= 1")
    return (k - 1).bit_length()


def _fib_shifted(n: int) -> int:
    # f_1 = 1, f_2 = 2 convention.
    a, b = 1, 2
    for _ in range(n - 1):
        a, b = b, a + b
    return a


def bound_one_zeros(k: int) -> FamilyBound:
    """Bound for [1, 0^k, N]: complete iff N <= ceil((k+2)(k+3)/4)."""
    if k < 0:
        raise ShapeViolation(f"k must be >= 0, got {k}")
    return FamilyBound(_ceil_div((k + 2) * (k + 3), 4), True, RULE_ONE_ZEROS)


def bound_ones_zeros(g: int, k: int) -> FamilyBound:
    """Bound for [1^g, 0^k, N] with g >= k >= 1.

    For g >= k + ceil(log2 k) the bound stabilizes at 2^(k+1) - 1; below
    that it is 2^(k+1) - ceil(k / 2^(g-k)).  The region g < k is open and
    is rejected here; the search tooling explores it empirically instead.
    """
    if g < 1 or k < 1:
        raise ShapeViolation(f"need g >= 1 and k >= 1, got g={g}, k={k}")
    if g < k:
        raise OutOfProvenRange(f"bound proved only for g >= k, got g={g}, k={k}")
    if g >= k + _ceil_log2(k):
        return FamilyBound(2 ** (k + 1) - 1, True, RULE_ONES_ZEROS)
    return FamilyBound(2 ** (k + 1) - _ceil_div(k, 2 ** (g - k)), True, RULE_ONES_ZEROS)


def bound_two_ones_zeros(k: int) -> FamilyBound:
    """Conjectured bound for [1, 1, 0^k, N]: floor((f_{k+6} - k - 5) / 4)."""
    if k < 0:
        raise ShapeViolation(f"k must be >= 0, got {k}")
    return FamilyBound((_fib_shifted(k + 6) - k - 5) // 4, False, RULE_TWO_ONES_ZEROS)


def bound_one_zeros_ones(L: int, m: int) -> FamilyBound:
    """Bound for [1, 0^(L-m-2), 1^m, N] with L coefficients and m ones.

    max_n = floor((L-m)(L+m+1)/4 + m(m+1)(m+2)(m+3)/48 + (1-2m)/2),
    evaluated in exact integer arithmetic over the common denominator 48.
    The derivation passes through a conditional lemma that itself rests on
    an open conjecture, so the bound is reported proven=False.
    """
    if m < 0:
        raise ShapeViolation(f"m must be >= 0, got {m}")
    if L < 2 * m + 2 or L - m < 3:
        raise ShapeViolation(f"need L >= 2m+2 and L-m >= 3, got L={L}, m={m}")
    numerator = (
        12 * (L - m) * (L + m + 1)
        + m * (m + 1) * (m + 2) * (m + 3)
        + 24 * (1 - 2 * m)
    )
    return FamilyBound(numerator // 48, False, RULE_ONE_ZEROS_ONES)


@dataclass(frozen=True)
class OneZerosN:
    """[1, 0^k, N]"""

    k: int

    def coefficients(self, n: int) -> Coefficients:
        return validate([1] + [0] * self.k + [n])

    def bound(self) -> FamilyBound:
        return bound_one_zeros(self.k)


@dataclass(frozen=True)
class OnesZerosN:
    """[1^g, 0^k, N]"""

    g: int
    k: int

    def coefficients(self, n: int) -> Coefficients:
        return validate([1] * self.g + [0] * self.k + [n])

    def bound(self) -> FamilyBound:
        if self.g == 1:
            # A single leading one is the sparse family in disguise.
            return bound_one_zeros(self.k)
        return bound_ones_zeros(self.g, self.k)


@dataclass(frozen=True)
class TwoOnesZerosN:
    """[1, 1, 0^k, N]"""

    k: int

    def coefficients(self, n: int) -> Coefficients:
        return validate([1, 1] + [0] * self.k + [n])

    def bound(self) -> FamilyBound:
        return bound_two_ones_zeros(self.k)


@dataclass(frozen=True)
class OneZerosOnesN:
    """[1, 0^(L-m-2), 1^m, N] with L coefficients"""

    L: int
    m: int

    def coefficients(self, n: int) -> Coefficients:
        zeros = self.L - self.m - 2
        if zeros < 1 or self.m < 0:
            raise ShapeViolation(f"need L >= m+3, got L={self.L}, m={self.m}")
        return validate([1] + [0] * zeros + [1] * self.m + [n])

    def bound(self) -> FamilyBound:
        return bound_one_zeros_ones(self.L, self.m)


FamilyShape = Union[OneZerosN, OnesZerosN, TwoOnesZerosN, OneZerosOnesN]


def classify_family(shape: FamilyShape, n: int) -> brown.Verdict:
    """Classify a family member by its closed-form bound.

    Complete iff n <= max_n; the conjectural flag is inherited from the
    rule that produced the bound.
    """
    if n < 1:
        raise ValueError(f"N must be >= 1, got {n}")
    b = shape.bound()
    c = shape.coefficients(n)
    kind = brown.COMPLETE if n <= b.max_n else brown.INCOMPLETE
    return brown.Verdict(c, kind, brown.family_rule(b.rule_id), not b.proven, 0)
