"""Brown's-criterion gap traces and completeness verdicts.

A nondecreasing positive sequence with first term 1 is complete (every
positive integer is a sum of distinct terms) iff H_{n+1} <= 1 + sum of the
first n terms for every n.  The slack of that inequality is the gap

    B_n = 1 + H_1 + ... + H_{n-1} - H_n,

so completeness is exactly "B_n >= 0 for all n".  The engine here decides
completeness on a finite horizon using two sound certificates:

* strict window: B_n >= 0 for n < L and B_n > 0 for L <= n <= 2L-1 force
  B_n > 0 forever.
* doubling window: the margins D_n = 2*H_n - H_{n+1} satisfy the recurrence
  D_n = c_1*D_{n-1} + ... + c_L*D_{n-L} once n >= L+1, so a full window of
  L consecutive non-negative margins located past index L propagates
  forever, making B nondecreasing from there on.

Gap arithmetic is exact integer arithmetic throughout; no floating point
enters any verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import Coefficients, TermSequence, generate_terms

COMPLETE = "complete"
INCOMPLETE = "incomplete"
UNKNOWN = "unknown"

#: Hard cap on the automatically extended horizon.
DEFAULT_MAX_HORIZON = 1024

#: Conjectural rule id for the opt-in "non-negative through 2L-1" shortcut.
RULE_2L1 = "2l-1"


class HorizonTooSmall(ValueError):
    """The requested horizon cannot even cover the 2L-1 window."""


@dataclass(frozen=True)
class Certificate:
    """Machine-checkable evidence attached to a verdict.

    kind is one of ``strict_window``, ``doubling_window``, ``family``,
    ``root``, ``failure``, ``horizon``.  ``index`` is the window end, the
    failure position, or the exhausted horizon.  ``rule`` names a family
    rule or a root-triage path.  ``witness`` carries the failing gap value
    (failure found by gap arithmetic) or the permanently missing integer
    (failure found by subset sums).
    """

    kind: str
    index: Optional[int] = None
    rule: Optional[str] = None
    witness: Optional[int] = None

    def tag(self) -> str:
        if self.kind == "family":
            return f"family:{self.rule}"
        if self.kind == "root":
            return f"root:{self.rule}"
        return self.kind


def strict_window(m: int) -> Certificate:
    return Certificate("strict_window", index=m)


def doubling_window(m: int) -> Certificate:
    return Certificate("doubling_window", index=m)


def family_rule(rule_id: str) -> Certificate:
    return Certificate("family", rule=rule_id)


def root_triage(path: str) -> Certificate:
    return Certificate("root", rule=path)


def failure(index: int, witness: Optional[int] = None) -> Certificate:
    return Certificate("failure", index=index, witness=witness)


def horizon_exhausted(m: int) -> Certificate:
    return Certificate("horizon", index=m)


@dataclass(frozen=True)
class Verdict:
    """Completeness verdict for one coefficient vector.

    ``conjectural`` is True whenever the verdict rests on an unproven
    conjecture rather than a sound certificate.
    """

    coefficients: Coefficients
    kind: str
    certificate: Certificate
    conjectural: bool
    horizon_used: int
    note: Optional[str] = None

    def to_json_dict(self) -> dict:
        """Serialize to the documented wire format."""
        out = {
            "coefficients": list(self.coefficients.values),
            "kind": self.kind,
            "certificate": self.certificate.tag(),
            "index": self.certificate.index,
            "conjectural": self.conjectural,
            "horizon_used": self.horizon_used,
        }
        if self.certificate.witness is not None:
            out["witness"] = self.certificate.witness
        if self.note:
            out["note"] = self.note
        return out


@dataclass(frozen=True)
class GapTrace:
    """Brown's gaps B_1..B_m and doubling margins D_1..D_{m-1} of a prefix.

    The exact identity B_{n+1} - B_n = D_n holds for every n.
    """

    gaps: tuple[int, ...]
    margins: tuple[int, ...]

    def gap(self, n: int) -> int:
        return self.gaps[n - 1]

    def margin(self, n: int) -> int:
        return self.margins[n - 1]


def gap_trace(t: TermSequence) -> GapTrace:
    """Exact gap and margin trace of a term prefix."""
    if len(t) < 1:
        raise ValueError("need at least one term")
    gaps = []
    running = 0  # sum of H_1..H_{n-1}
    for h in t.terms:
        gaps.append(1 + running - h)
        running += h
    margins = [2 * a - b for a, b in zip(t.terms, t.terms[1:])]
    return GapTrace(tuple(gaps), tuple(margins))


def doubling_holds(t: TermSequence) -> bool:
    """True iff H_n <= 2*H_{n-1} across the prefix.

    Diagnostic only: on a finite prefix this is neither necessary nor, by
    itself, sufficient evidence of completeness.
    """
    if len(t) < 2:
        raise ValueError("need at least two terms")
    return all(b <= 2 * a for a, b in zip(t.terms, t.terms[1:]))


def first_failure_index(c: Coefficients, horizon: int) -> Optional[int]:
    """Smallest n <= horizon with B_n < 0, or None if there is no failure."""
    if horizon < 1:
        raise ValueError(f"horizon must be positive, got {horizon}")
    t = generate_terms(c, horizon)
    running = 0
    for n, h in enumerate(t.terms, start=1):
        if 1 + running - h < 0:
            return n
        running += h
    return None


def check_completeness(
    c: Coefficients,
    horizon: Optional[int] = None,
    assume_2l1: bool = False,
    max_horizon: int = DEFAULT_MAX_HORIZON,
) -> Verdict:
    """Decide completeness of the PLRS defined by ``c`` on a finite horizon.

    Outcomes, in priority order:

    1. some B_n < 0 with n <= horizon: incomplete, with the first failing
       index (sound: Brown's criterion is necessary).
    2. strict window holds: complete, non-conjectural.
    3. a doubling window [m-L, m-1] of non-negative margins starting past
       index L exists with B_n >= 0 through m: complete, non-conjectural.
    4. ``assume_2l1`` and B_n >= 0 for all n <= 2L-1: complete, flagged
       conjectural (the 2L-1 shortcut is an open conjecture).
    5. otherwise unknown; the horizon is reported.

    When ``horizon`` is None the engine starts at max(4L, 64) and doubles
    it up to ``max_horizon`` before giving up, so the per-candidate cost
    of large scans stays bounded.
    """
    L = c.L
    explicit = horizon is not None
    h = horizon if explicit else min(max(4 * L, 64), max_horizon)
    if h < 2 * L - 1:
        raise HorizonTooSmall(f"horizon {h} < 2L-1 = {2 * L - 1}")

    t = generate_terms(c, 1)
    running = 0  # sum of H_1..H_{n-1}
    strict_ok = True  # B_n > 0 for L <= n <= 2L-1, so far
    nonneg_margin_run = 0  # consecutive D_j >= 0 ending at the latest margin
    ok_through_2l1 = False

    n = 0
    while True:
        target = h
        t = t.extended(target + 1)  # +1 so D_target is available
        while n < target:
            n += 1
            h_n = t.term(n)
            gap = 1 + running - h_n
            running += h_n
            if gap < 0:
                return Verdict(c, INCOMPLETE, failure(n, witness=gap), False, n)
            if L <= n <= 2 * L - 1 and gap == 0:
                strict_ok = False
            if n == 2 * L - 1:
                ok_through_2l1 = True  # no failure so far
                if strict_ok and L >= 2:  # the strict-window theorem needs L >= 2
                    return Verdict(c, COMPLETE, strict_window(n), False, n)
            # Margin D_n = B_{n+1} - B_n, available from the extra term.
            margin = 2 * h_n - t.term(n + 1)
            if margin >= 0:
                nonneg_margin_run += 1
            else:
                nonneg_margin_run = 0
            # Window [m-L, m-1] with m = n+1 needs L margins and m-L >= L+1,
            # plus B_m >= 0, checked at the top of the next iteration.
            m = n + 1
            if nonneg_margin_run >= L and m - L >= L + 1 and m <= target:
                b_m = 1 + running - t.term(m)
                if b_m >= 0:
                    return Verdict(c, COMPLETE, doubling_window(m), False, m)
        if explicit or h >= max_horizon:
            break
        h = min(2 * h, max_horizon)

    if assume_2l1 and ok_through_2l1:
        return Verdict(c, COMPLETE, family_rule(RULE_2L1), True, h)
    return Verdict(c, UNKNOWN, horizon_exhausted(h), False, h)


def recheck(verdict: Verdict) -> bool:
    """Re-validate a gap-based certificate from scratch.

    Recomputes terms and gaps independently of the engine run that produced
    the verdict and confirms the certificate's claim.  Family and root
    certificates are produced by other modules and are re-validated there;
    for those this returns True only for the structural fields.
    """
    c = verdict.coefficients
    cert = verdict.certificate
    L = c.L
    if cert.kind == "failure":
        if cert.witness is not None and cert.witness > 0:
            # Subset-sum witness: a positive integer missing from the
            # prefix of `index` terms and below the next term.
            from .oracle import reachable_sums  # local: oracle imports brown

            t = generate_terms(c, cert.index + 1)
            prefix = TermSequence(c, t.terms[: cert.index])
            mask = reachable_sums(prefix)
            unreachable = not (mask >> cert.witness) & 1 or cert.witness > sum(prefix.terms)
            return unreachable and cert.witness < t.term(cert.index + 1)
        n = cert.index
        trace = gap_trace(generate_terms(c, n))
        if trace.gap(n) >= 0:
            return False
        if any(g < 0 for g in trace.gaps[: n - 1]):
            return False  # not the first failure
        return cert.witness is None or trace.gap(n) == cert.witness
    if cert.kind == "strict_window":
        m = cert.index
        if m != 2 * L - 1:
            return False
        trace = gap_trace(generate_terms(c, m))
        head = all(trace.gap(i) >= 0 for i in range(1, L))
        window = all(trace.gap(i) > 0 for i in range(L, m + 1))
        return head and window
    if cert.kind == "doubling_window":
        m = cert.index
        if m - L < L + 1:
            return False
        trace = gap_trace(generate_terms(c, m + 1))
        gaps_ok = all(trace.gap(i) >= 0 for i in range(1, m + 1))
        margins_ok = all(trace.margin(j) >= 0 for j in range(m - L, m))
        return gaps_ok and margins_ok
    if cert.kind == "family" and cert.rule == RULE_2L1:
        trace = gap_trace(generate_terms(c, 2 * L - 1))
        return all(g >= 0 for g in trace.gaps)
    if cert.kind == "horizon":
        return verdict.kind == UNKNOWN
    return True
