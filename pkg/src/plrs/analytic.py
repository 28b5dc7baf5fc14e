"""Characteristic polynomials, certified principal roots, and root triage.

The characteristic polynomial of a coefficient vector [c_1, ..., c_L] is

    p(x) = x^L - c_1*x^(L-1) - ... - c_L,

which has exactly one positive real root r_1 (simple, and of greatest
magnitude since c_1 >= 1).  Because p(x) -> +inf, the sign of p at a
non-negative rational point t decides the comparison with r_1 outright:
p(t) > 0 iff t > r_1 and p(t) < 0 iff t < r_1.  Every root produced here
is therefore a *certified* bracket: exact rational endpoints with
p(lo) < 0 < p(hi) (or an exact integer hit), never a bare float.  Floats
appear only in display helpers; tolerances control bracket width, not any
verdict logic.

The triage test classifies fast: p(2) < 0 proves incompleteness (the root
exceeds 2, too fast to be complete), while a root certified below the
lambda threshold of the same length is conjecturally complete.  Roots in
between land in an indeterminate band where gap arithmetic must decide.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence, Union

from . import brown, oracle
from .core import Coefficients, validate

Rational = Union[int, Fraction]

#: Default bracket width for reported roots; display precision only.
DEFAULT_TOL = Fraction(1, 10**12)

#: Enumeration ceiling for exact_threshold_search.
THRESHOLD_SEARCH_MAX_L = 5

TRIAGE_FAST = "p2_negative"
TRIAGE_SLOW = "below_lambda"
TRIAGE_INDETERMINATE = "indeterminate"


class CostCap(RuntimeError):
    """An enumeration would exceed its cost budget."""


def _as_fraction(tol) -> Fraction:
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    return tol


@dataclass(frozen=True)
class CharPoly:
    """Characteristic polynomial p(x) = x^L - sum c_i x^(L-i)."""

    coefficients: Coefficients

    @property
    def degree(self) -> int:
        return self.coefficients.L

    def eval(self, t: Rational) -> Rational:
        """Exact value of p(t) for rational t (int in, int out)."""
        acc: Rational = 1
        for ci in self.coefficients.values:
            acc = acc * t - ci
        return acc

    def sign_at(self, num: int, den: int = 1) -> int:
        """Sign of p(num/den) using integer arithmetic only."""
        acc = 1
        dp = 1
        for ci in self.coefficients.values:
            dp *= den
            acc = acc * num - ci * dp
        return (acc > 0) - (acc < 0)

    def dense(self) -> list[Fraction]:
        """Descending coefficient list [1, -c_1, ..., -c_L] as Fractions."""
        return [Fraction(1)] + [Fraction(-ci) for ci in self.coefficients.values]


def char_poly_eval(c: Coefficients, t: Rational) -> Rational:
    """Exact evaluation of the characteristic polynomial of ``c`` at ``t``."""
    if t < 0:
        raise ValueError(f"evaluation point must be >= 0, got {t}")
    return CharPoly(c).eval(t)


@dataclass(frozen=True)
class RootBracket:
    """Certified isolating interval for the principal root.

    Either ``exact_root`` is set (and lo == hi == that integer), or
    p(lo) < 0 < p(hi) holds under exact rational evaluation.
    """

    poly: CharPoly
    lo: Fraction
    hi: Fraction
    exact_root: Optional[int] = None

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def approx(self) -> float:
        """Float approximation, for display and reports."""
        return float(self.exact_root) if self.exact_root is not None else float(self.mid)

    def refined(self, tol) -> "RootBracket":
        """Bisect further until the width is at most ``tol``."""
        tol = _as_fraction(tol)
        if self.exact_root is not None or self.width <= tol:
            return self
        lo, hi = _bisect(self.poly, self.lo, self.hi, tol)
        return RootBracket(self.poly, lo, hi, None)


def _bisect(poly: CharPoly, lo: Fraction, hi: Fraction, tol: Fraction):
    # Maintains p(lo) < 0 < p(hi).  Midpoints are non-integer dyadics and
    # the polynomial is monic with integer coefficients, so a midpoint can
    # never be an exact root (rational roots would have to be integers).
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if poly.sign_at(mid.numerator, mid.denominator) < 0:
            lo = mid
        else:
            hi = mid
    return lo, hi


def _integer_bracket(poly: CharPoly):
    # Returns ("exact", t) or ("bracket", a, a+1) with p(a) < 0 < p(a+1).
    s1 = poly.sign_at(1)
    if s1 == 0:
        return "exact", 1
    # p(1) = 1 - sum(c_i) < 0 for every other valid vector.
    hi = 2
    while poly.sign_at(hi) < 0:
        hi *= 2  # bounded: p(1 + max c_i) > 0
    if poly.sign_at(hi) == 0:
        return "exact", hi
    lo = hi // 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        s = poly.sign_at(mid)
        if s == 0:
            return "exact", mid
        if s < 0:
            lo = mid
        else:
            hi = mid
    return "bracket", lo, hi


def principal_root(c: Coefficients, tol=DEFAULT_TOL) -> RootBracket:
    """Certified bracket of width <= tol around the unique positive root.

    Integer roots are detected exactly (monic integer polynomials have no
    other rational roots); otherwise the bracket endpoints carry strict
    signs p(lo) < 0 < p(hi).
    """
    tol = _as_fraction(tol)
    poly = CharPoly(c)
    found = _integer_bracket(poly)
    if found[0] == "exact":
        t = found[1]
        return RootBracket(poly, Fraction(t), Fraction(t), exact_root=t)
    lo, hi = _bisect(poly, Fraction(found[1]), Fraction(found[2]), tol)
    return RootBracket(poly, lo, hi, None)


# ---------------------------------------------------------------------------
# Exact root comparison


def _strip_leading_zeros(p: Sequence[Fraction]) -> list[Fraction]:
    p = list(p)
    while p and p[0] == 0:
        p.pop(0)
    return p


def _poly_rem(p: Sequence[Fraction], q: Sequence[Fraction]) -> list[Fraction]:
    # Remainder of dense descending p by nonzero q over Q.
    p = _strip_leading_zeros(p)
    while len(p) >= len(q):
        factor = p[0] / q[0]
        for i in range(len(q)):
            p[i] -= factor * q[i]
        p.pop(0)  # leading term cancelled exactly
        p = _strip_leading_zeros(p)
    return p


def _poly_gcd(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    # Euclidean gcd of dense descending coefficient lists over Q, monic.
    a, b = _strip_leading_zeros(a), _strip_leading_zeros(b)
    while b:
        a, b = b, _poly_rem(a, b)
    if not a:
        return [Fraction(1)]
    return [x / a[0] for x in a]


def _eval_dense(p: Sequence[Fraction], t: Fraction) -> Fraction:
    acc = Fraction(0)
    for coef in p:
        acc = acc * t + coef
    return acc


def _roots_equal(a: RootBracket, b: RootBracket) -> bool:
    # Equal principal roots iff the polynomial gcd vanishes inside the
    # overlap; each polynomial has a single positive root, so a sign change
    # of the gcd across the overlap pins it down.
    g = _poly_gcd(a.poly.dense(), b.poly.dense())
    if len(g) <= 1:
        return False
    lo = max(a.lo, b.lo)
    hi = min(a.hi, b.hi)
    s1, s2 = _eval_dense(g, lo), _eval_dense(g, hi)
    return s1 == 0 or s2 == 0 or (s1 < 0) != (s2 < 0)


def compare_roots(a: RootBracket, b: RootBracket, max_rounds: int = 1000) -> int:
    """Exact three-way comparison of two principal roots: -1, 0, or +1.

    Decides by refining the brackets until they separate; equal roots are
    recognized through the polynomial gcd instead of looping forever.
    """
    if a.exact_root is not None and b.exact_root is not None:
        return (a.exact_root > b.exact_root) - (a.exact_root < b.exact_root)
    if a.exact_root is not None:
        s = b.poly.sign_at(a.exact_root)
        return s  # p_b(r_a) > 0 iff r_a > r_b
    if b.exact_root is not None:
        s = a.poly.sign_at(b.exact_root)
        return -s
    for round_no in range(max_rounds):
        if a.hi <= b.lo:
            return -1
        if b.hi <= a.lo:
            return 1
        if round_no % 16 == 8 and _roots_equal(a, b):
            return 0
        a = a.refined(a.width / 4)
        b = b.refined(b.width / 4)
    raise RuntimeError("root comparison failed to converge")


# ---------------------------------------------------------------------------
# Lambda thresholds


@dataclass(frozen=True)
class LambdaThreshold:
    """Conjectured least principal root among incomplete length-L vectors.

    ``max_complete_n`` is ceil(L(L+1)/4), the largest N for which
    [1, 0^(L-2), N] stays complete; the threshold is the principal root of
    x^L - x^(L-1) - (max_complete_n + 1), i.e. of the first incomplete
    member of that family.
    """

    L: int
    max_complete_n: int
    root: RootBracket


def sparse_vector(L: int, last: int) -> Coefficients:
    """The vector [1, 0^(L-2), last] of length L (just [last] when L=1)."""
    if L == 1:
        return validate([last])
    return validate([1] + [0] * (L - 2) + [last])


_lambda_cache: dict[tuple[int, Fraction], LambdaThreshold] = {}


def lambda_threshold(L: int, tol=DEFAULT_TOL) -> LambdaThreshold:
    """Threshold root for length L >= 2, bracketed to ``tol``."""
    if L < 2:
        raise ValueError(f"threshold defined for L >= 2, got {L}")
    tol = _as_fraction(tol)
    key = (L, tol)
    if key not in _lambda_cache:
        n_l = ((L * (L + 1)) + 3) // 4  # ceil(L(L+1)/4), exact
        root = principal_root(sparse_vector(L, n_l + 1), tol)
        _lambda_cache[key] = LambdaThreshold(L, n_l, root)
    return _lambda_cache[key]


# ---------------------------------------------------------------------------
# Triage


def triage(c: Coefficients, tol=DEFAULT_TOL) -> brown.Verdict:
    """Classify by root position alone; no terms are generated.

    * p(2) < 0: the root exceeds 2, incomplete (sound).
    * root certified below the lambda threshold: complete, conjectural.
    * otherwise unknown: the root lies in the indeterminate band.
    """
    if c.L < 2:
        raise ValueError("triage needs L >= 2")
    poly = CharPoly(c)
    s2 = poly.sign_at(2)
    if s2 < 0:
        return brown.Verdict(c, brown.INCOMPLETE, brown.root_triage(TRIAGE_FAST), False, 0)
    lam = lambda_threshold(c.L, tol).root
    if lam.exact_root is not None:
        below = poly.sign_at(lam.exact_root) > 0
    else:
        # Positive sign at the bracket's lower end certifies root < lambda.
        below = poly.sign_at(lam.lo.numerator, lam.lo.denominator) > 0
    if below:
        return brown.Verdict(c, brown.COMPLETE, brown.root_triage(TRIAGE_SLOW), True, 0)
    return brown.Verdict(
        c,
        brown.UNKNOWN,
        brown.root_triage(TRIAGE_INDETERMINATE),
        False,
        0,
        note="principal root in indeterminate region [lambda_L, 2]",
    )


# ---------------------------------------------------------------------------
# Enumeration helpers


def vectors_with_sum(L: int, total: int) -> Iterator[Coefficients]:
    """All valid vectors of length L with coefficient sum ``total``."""
    if L == 1:
        if total >= 1:
            yield validate([total])
        return
    for c1 in range(1, total):
        for middle in _compositions(total - c1, L - 2):
            last = total - c1 - sum(middle)
            if last >= 1:
                yield validate([c1, *middle, last])


def _compositions(budget: int, slots: int) -> Iterator[tuple[int, ...]]:
    if slots == 0:
        yield ()
        return
    for first in range(budget + 1):
        for rest in _compositions(budget - first, slots - 1):
            yield (first, *rest)


def min_root_in_pls(
    L: int, S: int, tol=DEFAULT_TOL, verify: bool = False
) -> tuple[Coefficients, RootBracket]:
    """Minimizer of the principal root over vectors of length L, sum S+1.

    The minimum is attained by [1, 0^(L-2), S]; with ``verify`` the whole
    class is enumerated and minimality is asserted by exact comparison.
    """
    if L < 1 or S < 1:
        raise ValueError(f"need L >= 1 and S >= 1, got L={L}, S={S}")
    claimed = sparse_vector(L, S if L > 1 else S + 1)
    bracket = principal_root(claimed, tol)
    if verify:
        for v in vectors_with_sum(L, S + 1):
            if v == claimed:
                continue
            if compare_roots(bracket, principal_root(v, tol)) > 0:
                raise AssertionError(f"{v} has a smaller principal root than {claimed}")
    return claimed, bracket


# ---------------------------------------------------------------------------
# Exhaustive threshold audit


@dataclass(frozen=True)
class ThresholdSearchReport:
    """Outcome of the exhaustive sub-2 frontier search at one length.

    ``frontier`` is the smallest certified principal root among vectors the
    engines judge incomplete whose root lies strictly below 2, or None when
    no such vector exists.  Any vector the engines cannot decide is listed
    in ``undecided`` rather than silently dropped.
    """

    L: int
    candidates: int
    frontier_coefficients: Optional[Coefficients]
    frontier: Optional[RootBracket]
    lam: LambdaThreshold
    agrees_with_lambda: bool
    undecided: tuple[Coefficients, ...]


def exact_threshold_search(L: int, tol=DEFAULT_TOL) -> ThresholdSearchReport:
    """Audit the lambda threshold by brute force at small length.

    Any incomplete vector with principal root below 2 must satisfy
    c_i < 2^i (else p(2) <= 0), so enumerating c_i <= 2^i is exhaustive
    for the sub-2 frontier.  Cost grows like prod 2^i; lengths above
    THRESHOLD_SEARCH_MAX_L are refused.
    """
    if L < 2:
        raise ValueError(f"need L >= 2, got {L}")
    if L > THRESHOLD_SEARCH_MAX_L:
        raise CostCap(f"threshold search capped at L <= {THRESHOLD_SEARCH_MAX_L}")
    tol = _as_fraction(tol)
    lam = lambda_threshold(L, tol)
    ranges = [range(1, 3)]  # c_1 <= 2
    ranges += [range(0, 2**i + 1) for i in range(2, L)]
    ranges += [range(1, 2**L + 1)]
    best: Optional[RootBracket] = None
    best_c: Optional[Coefficients] = None
    undecided = []
    candidates = 0
    for values in itertools.product(*ranges):
        candidates += 1
        c = Coefficients(values)
        poly = CharPoly(c)
        if poly.sign_at(2) <= 0:
            continue  # root >= 2
        verdict = brown.check_completeness(c)
        if verdict.kind == brown.UNKNOWN:
            verdict = oracle.oracle_verdict(c, max_prefix=max(4 * L, 32))
        if verdict.kind == brown.UNKNOWN:
            undecided.append(c)
            continue
        if verdict.kind != brown.INCOMPLETE:
            continue
        bracket = principal_root(c, tol)
        if best is None:
            best, best_c = bracket, c
            continue
        cmp = compare_roots(bracket, best)
        if cmp < 0 or (cmp == 0 and c.values < best_c.values):
            best, best_c = bracket, c
    if best_c is None:
        # No sub-2 incomplete vector: consistent iff the threshold is >= 2.
        lam_poly = lam.root.poly
        agrees = lam_poly.sign_at(2) <= 0
    else:
        agrees = best_c == sparse_vector(L, lam.max_complete_n + 1)
    return ThresholdSearchReport(
        L, candidates, best_c, best, lam, agrees, tuple(undecided)
    )


# ---------------------------------------------------------------------------
# Root ordering and denseness


def root_order_gap(L: int, k: int, tol=DEFAULT_TOL) -> tuple[float, float]:
    """Consecutive root gaps of x^L - x^(L-1) - t for t = k, k+1, k+2.

    Returns (r-q, s-r) as floats after certifying r-q > s-r exactly: the
    map t -> root is increasing and concave, so the gaps shrink.
    """
    if L <= 2 or k <= 0:
        raise ValueError(f"need L > 2 and k > 0, got L={L}, k={k}")
    tol = _as_fraction(tol)
    bq, br, bs = (principal_root(sparse_vector(L, t), tol) for t in (k, k + 1, k + 2))
    for _ in range(200):
        # gap1 >= br.lo - bq.hi and gap2 <= bs.hi - br.lo
        if 2 * br.lo > bq.hi + bs.hi:
            break
        bq, br, bs = (b.refined(b.width / 4) for b in (bq, br, bs))
    else:
        raise RuntimeError("gap ordering certification failed to converge")
    return br.approx - bq.approx, bs.approx - br.approx


@dataclass(frozen=True)
class DensenessReport:
    """Roots of [1, 0^(L-2), k] for k across the incomplete range.

    Certifies that the roots increase strictly in k, that consecutive gaps
    shrink strictly, and that the last root (k = 2^(L-1)) is exactly 2.
    """

    L: int
    k_min: int
    k_max: int
    roots: tuple[tuple[int, float], ...]
    max_gap: float
    max_gap_at: int
    covered: tuple[float, float]
    increasing_certified: bool
    gaps_decreasing_certified: bool
    terminal_root_exact_two: bool
    epsilon: Optional[float]
    epsilon_met: Optional[bool]


def denseness_scan(
    L: int,
    epsilon: Optional[float] = None,
    tol=DEFAULT_TOL,
    budget: int = 1 << 16,
) -> DensenessReport:
    """Sweep the sparse family's roots from the threshold up to exactly 2."""
    if L < 2:
        raise ValueError(f"need L >= 2, got {L}")
    if epsilon is not None and epsilon <= 0:
        raise ValueError("epsilon must be positive")
    tol = _as_fraction(tol)
    n_l = ((L * (L + 1)) + 3) // 4
    k_min, k_max = n_l + 1, 2 ** (L - 1)
    count = k_max - k_min + 1
    if count > budget:
        raise CostCap(f"{count} roots exceed budget {budget}")
    brackets = [principal_root(sparse_vector(L, k), tol) for k in range(k_min, k_max + 1)]

    increasing = True
    for a, b in zip(brackets, brackets[1:]):
        if compare_roots(a, b) != -1:
            increasing = False
            break

    decreasing = True
    work = list(brackets)
    for i in range(len(work) - 2):
        for _ in range(200):
            if 2 * work[i + 1].lo > work[i].hi + work[i + 2].hi:
                break
            for j in (i, i + 1, i + 2):
                work[j] = work[j].refined(work[j].width / 4)
        else:
            decreasing = False
            break

    gaps = [b.approx - a.approx for a, b in zip(brackets, brackets[1:])]
    max_gap = max(gaps)
    max_gap_at = k_min + gaps.index(max_gap)
    report = DensenessReport(
        L=L,
        k_min=k_min,
        k_max=k_max,
        roots=tuple((k_min + i, b.approx) for i, b in enumerate(brackets)),
        max_gap=max_gap,
        max_gap_at=max_gap_at,
        covered=(brackets[0].approx, brackets[-1].approx),
        increasing_certified=increasing,
        gaps_decreasing_certified=decreasing,
        terminal_root_exact_two=brackets[-1].exact_root == 2,
        epsilon=epsilon,
        epsilon_met=None if epsilon is None else max_gap < epsilon,
    )
    return report
