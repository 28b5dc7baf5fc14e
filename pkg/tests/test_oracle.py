import pytest

from plrs import (
    COMPLETE,
    INCOMPLETE,
    BudgetExceeded,
    HorizonTooSmall,
    generate_terms,
    oracle_verdict,
    prefix_report,
    reachable_sums,
    smallest_unrepresentable,
    validate,
)
from helpers import all_vectors, brute_subset_sums, mask_to_set


class TestReachableSums:
    @pytest.mark.parametrize(
        "coeffs,n,expected",
        [
            ([1, 3], 3, {0, 1, 2, 3, 5, 6, 7, 8}),
            ([1], 1, {0, 1}),
            ([2], 3, set(range(8))),
        ],
    )
    def test_known_sets(self, coeffs, n, expected):
        t = generate_terms(validate(coeffs), n)
        mask = reachable_sums(t)
        assert mask_to_set(mask, sum(t.terms)) == expected

    def test_matches_brute_force_enumeration(self):
        for coeffs in ([1, 3], [2, 1], [1, 0, 2], [3], [1, 1, 1]):
            t = generate_terms(validate(coeffs), 6)
            total = sum(t.terms)
            assert mask_to_set(reachable_sums(t), total) == brute_subset_sums(t.terms)

    def test_monotone_in_prefix_length(self):
        c = validate([1, 0, 3])
        prev = 0
        for n in range(1, 10):
            mask = reachable_sums(generate_terms(c, n))
            assert mask | prev == mask  # superset of the shorter prefix
            prev = mask

    def test_budget_enforced(self):
        t = generate_terms(validate([2]), 40)  # sums reach 2^40
        with pytest.raises(BudgetExceeded):
            reachable_sums(t, budget_bits=1 << 20)


class TestSmallestUnrepresentable:
    def test_one_three(self):
        assert smallest_unrepresentable(validate([1, 3]), 4) == 4

    def test_doubling_covers_everything(self):
        assert smallest_unrepresentable(validate([2]), 6) is None

    def test_sparse_family_at_bound(self):
        assert smallest_unrepresentable(validate([1, 0, 3]), 6) is None


class TestPrefixReport:
    def test_witness_is_checkable(self):
        report = prefix_report(validate([1, 3]), 3)
        assert report.smallest_missing == 4
        assert report.permanently_missing == 4
        t = generate_terms(validate([1, 3]), 4)
        assert 4 not in brute_subset_sums(t.terms[:3])
        assert 4 < t.term(4)

    def test_no_witness_for_complete_prefix(self):
        report = prefix_report(validate([1, 1]), 6)
        assert report.smallest_missing is None
        assert report.permanently_missing is None

    def test_bound_is_sum_of_prefix(self):
        report = prefix_report(validate([2]), 5)
        assert report.reachable_bound == 31


class TestOracleVerdict:
    def test_one_three_incomplete_with_witness_four(self):
        v = oracle_verdict(validate([1, 3]), max_prefix=12)
        assert v.kind == INCOMPLETE
        assert v.certificate.witness == 4

    def test_fibonacci_complete(self):
        v = oracle_verdict(validate([1, 1]), max_prefix=12)
        assert v.kind == COMPLETE
        assert not v.conjectural

    def test_section_two_two_example(self):
        v = oracle_verdict(validate([1, 2, 0, 0, 0, 0, 15]), max_prefix=16)
        assert v.kind == INCOMPLETE

    def test_rejects_short_prefix(self):
        with pytest.raises(HorizonTooSmall):
            oracle_verdict(validate([1, 0, 0, 2]), max_prefix=4)

    def test_witnesses_are_valid_across_space(self):
        # Every incompleteness witness is genuinely unreachable and below
        # the next term, re-checked by explicit enumeration.
        for vals in all_vectors(3, 3):
            c = validate(vals)
            v = oracle_verdict(c, max_prefix=2 * c.L + 2)
            if v.kind == INCOMPLETE:
                n, witness = v.certificate.index, v.certificate.witness
                t = generate_terms(c, n + 1)
                assert witness not in brute_subset_sums(t.terms[:n]), vals
                assert witness < t.term(n + 1), vals

    def test_failure_certificates_recheck_from_scratch(self):
        from plrs import brown, recheck

        for vals in ([1, 3], [1, 2, 0, 0, 0, 0, 15], [3], [2, 2]):
            v = oracle_verdict(validate(vals), max_prefix=16)
            assert v.kind == INCOMPLETE
            assert recheck(v), vals
        # a tampered witness must be rejected
        v = oracle_verdict(validate([1, 3]), max_prefix=16)
        bad = brown.Verdict(
            v.coefficients, v.kind,
            brown.failure(v.certificate.index, witness=3),
            False, v.horizon_used,
        )
        assert not recheck(bad)

    def test_agreement_with_gap_engine_beyond_the_acceptance_space(self):
        # Wider than the acceptance sweep: longer vectors at cap 3.
        from plrs import check_completeness

        for vals in all_vectors(6, 3):
            c = validate(vals)
            engine = check_completeness(c)
            horizon = max(4 * c.L, (engine.certificate.index or 0) + 1)
            orc = oracle_verdict(c, max_prefix=horizon)
            assert {engine.kind, orc.kind} != {COMPLETE, INCOMPLETE}, vals
            assert engine.kind == orc.kind, vals
