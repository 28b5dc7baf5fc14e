"""Coefficient vectors and exact term generation.

A positive linear recurrence sequence (PLRS) is defined by a coefficient
vector ``[c_1, ..., c_L]`` of non-negative integers with ``c_1 >= 1`` and
``c_L >= 1``.  Terms are seeded with ``H_1 = 1`` and grown by

    H_{n+1} = c_1*H_n + c_2*H_{n-1} + ... + c_n*H_1 + 1     for 1 <= n < L,
    H_{n+1} = c_1*H_n + c_2*H_{n-1} + ... + c_L*H_{n+1-L}   for n >= L.

All arithmetic is exact; terms are Python integers of unbounded size.
Term and coefficient indices in the public API are 1-based, matching
the conventions above.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence


class InvalidCoefficients(ValueError):
    """A coefficient vector violates the PLRS shape requirements."""


class EmptyVector(InvalidCoefficients):
    pass


class LeadingZero(InvalidCoefficients):
    pass


class TrailingZero(InvalidCoefficients):
    pass


class NegativeEntry(InvalidCoefficients):
    pass


@dataclass(frozen=True)
class Coefficients:
    """A validated coefficient vector ``[c_1, ..., c_L]``.

    Equality is element-wise; ``[1, 2]`` and ``[1, 2, 0]`` are distinct
    vectors (and the latter is rejected outright).
    """

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        vals = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if not vals:
            raise EmptyVector("coefficient vector is empty")
        if any(v < 0 for v in vals):
            raise NegativeEntry(f"negative coefficient in {list(vals)}")
        if vals[0] == 0:
            raise LeadingZero(f"c_1 must be positive, got {list(vals)}")
        if vals[-1] == 0:
            raise TrailingZero(f"c_L must be positive, got {list(vals)}")

    @property
    def L(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def c(self, i: int) -> int:
        """The coefficient c_i, 1-based."""
        if not 1 <= i <= len(self.values):
            raise IndexError(f"coefficient index {i} out of range 1..{len(self.values)}")
        return self.values[i - 1]

    def __str__(self) -> str:
        return "[" + ",".join(str(v) for v in self.values) + "]"


def validate(values: Sequence[int]) -> Coefficients:
    """Validate a raw integer sequence as a PLRS coefficient vector.

    Raises EmptyVector, LeadingZero, TrailingZero, or NegativeEntry when
    the vector is not a legal shape.
    """
    return Coefficients(tuple(values))


def _grow(values: tuple[int, ...], terms: list[int], upto: int) -> list[int]:
    # Extends `terms` in place to `upto` entries following the recurrence.
    L = len(values)
    while len(terms) < upto:
        n = len(terms)  # terms holds H_1..H_n; we compute H_{n+1}
        if n == 0:
            terms.append(1)
        elif n < L:
            terms.append(1 + sum(values[i] * terms[n - 1 - i] for i in range(n)))
        else:
            terms.append(sum(values[i] * terms[n - 1 - i] for i in range(L)))
    return terms


@dataclass(frozen=True)
class TermSequence:
    """An exact prefix ``(H_1, ..., H_n)`` of a PLRS.

    Immutable; `extended` returns a longer prefix sharing the same
    coefficients, so callers can grow a sequence incrementally without
    recomputing what they already have.
    """

    coefficients: Coefficients
    terms: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.terms)

    def term(self, n: int) -> int:
        """The term H_n, 1-based."""
        if not 1 <= n <= len(self.terms):
            raise IndexError(f"term index {n} out of range 1..{len(self.terms)}")
        return self.terms[n - 1]

    def extended(self, n: int) -> "TermSequence":
        """A prefix of length max(n, len(self)) extending this one."""
        if n <= len(self.terms):
            return self
        grown = _grow(self.coefficients.values, list(self.terms), n)
        return TermSequence(self.coefficients, tuple(grown))

    def __str__(self) -> str:
        return "(" + ", ".join(str(t) for t in self.terms) + ")"


def generate_terms(c: Coefficients, n: int) -> TermSequence:
    """Generate the exact first ``n`` terms of the PLRS defined by ``c``."""
    if n < 1:
        raise ValueError(f"need at least one term, got n={n}")
    return TermSequence(c, tuple(_grow(c.values, [], n)))
