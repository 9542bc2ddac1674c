"""Range scanning, structural rules, residue statistics, determinism."""

import pytest

from erdos_straus import (
    HARD_RESIDUES_840,
    DomainError,
    SolutionType,
    check_divisor_k_rule,
    check_k0_type1_rule,
    divisors,
    enumerate_witnesses,
    residue_stats,
    scan_primes,
)


def record_by_p(report):
    return {r.p: r for r in report.records}


@pytest.fixture(scope="module")
def report():
    return scan_primes(2, 100, mode="exhaustive")


class TestScanExhaustive:
    def test_one_record_per_prime(self, report):
        assert len(report.records) == 25
        assert [r.p for r in report.records] == sorted(r.p for r in report.records)

    def test_spot_rows(self, report):
        recs = record_by_p(report)
        assert recs[41].type2_k_set == (0, 1, 3)
        assert recs[71].type1_k_set == (0, 1, 2, 3, 4, 6, 8, 9, 12, 14, 18)
        assert recs[2].type1_k_set == ()
        assert recs[2].type2_k_set == (0,)
        assert recs[73].type1_k_set == (1, 2, 3)

    def test_no_counterexamples(self, report):
        assert report.counterexamples == ()

    def test_counts_match_enumeration(self, report):
        for r in report.records:
            ws = enumerate_witnesses(r.p)
            n1 = sum(1 for w in ws if w.type is SolutionType.TYPE_I)
            n2 = len(ws) - n1
            assert r.witness_count_by_type == (n1, n2)
            assert r.first == (ws[0] if ws else None)

    def test_k_sets_within_bound(self, report):
        for r in report.records:
            bound = (r.p + 1) // 2 - (r.p + 3) // 4
            for k in (*r.type1_k_set, *r.type2_k_set):
                assert 0 <= k <= bound

    def test_residue_fields(self, report):
        for r in report.records:
            assert r.residue_24 == r.p % 24
            assert r.residue_840 == r.p % 840

    def test_first_absent_iff_no_witnesses(self, report):
        for r in report.records:
            assert (r.first is None) == (not r.type1_k_set and not r.type2_k_set)

    def test_builtin_summary_matches_residue_stats(self, report):
        assert report.residue_summary == residue_stats(report, 24)


class TestScanFirstOnly:
    def test_fills_only_first(self):
        report = scan_primes(2, 100, mode="first-only")
        for r in report.records:
            assert r.type1_k_set is None
            assert r.type2_k_set is None
            assert r.witness_count_by_type is None
            assert r.first is not None

    def test_agrees_with_exhaustive_on_witness_existence(self):
        first = scan_primes(2, 300, mode="first-only")
        full = scan_primes(2, 300, mode="exhaustive")
        assert [r.p for r in first.records] == [r.p for r in full.records]
        for a, b in zip(first.records, full.records):
            assert (a.first is None) == (b.first is None)
            assert a.first == b.first

    def test_summary_stats_unknown(self):
        report = scan_primes(2, 100, mode="first-only")
        for entry in report.residue_summary.values():
            assert entry["min_witness_count"] is None
            assert entry["k0_type1_fraction"] is None
            assert entry["count"] >= 1


class TestScanParallel:
    def test_worker_counts_agree(self):
        base = scan_primes(2, 1500, mode="exhaustive", workers=1)
        multi = scan_primes(2, 1500, mode="exhaustive", workers=3)
        assert base.records == multi.records
        assert base.counterexamples == multi.counterexamples
        assert base.residue_summary == multi.residue_summary

    def test_worker_counts_agree_first_only(self):
        base = scan_primes(2, 1500, mode="first-only", workers=1)
        multi = scan_primes(2, 1500, mode="first-only", workers=4)
        assert base.records == multi.records


class TestScanDomain:
    def test_bad_ranges(self):
        with pytest.raises(DomainError):
            scan_primes(1, 10)
        with pytest.raises(DomainError):
            scan_primes(10, 2)
        with pytest.raises(DomainError):
            scan_primes(2, (1 << 32) + 1)

    def test_bad_mode_and_workers(self):
        with pytest.raises(DomainError):
            scan_primes(2, 10, mode="everything")
        with pytest.raises(DomainError):
            scan_primes(2, 10, workers=0)


class TestRules:
    def test_k0_rule_clean_to_2000(self):
        assert check_k0_type1_rule(2000) == []

    def test_k0_rule_exempts_1_mod_24(self):
        # 73 lacks a k=0 witness yet is exempt, so it must not appear.
        assert 73 not in check_k0_type1_rule(100)
        assert check_k0_type1_rule(100) == []

    def test_divisor_rule_clean_to_2000(self):
        assert check_divisor_k_rule(2000) == []

    def test_divisor_rule_offsets_really_appear(self):
        # p=11: ceil(11/4)=3, divisors {1, 3} and 0 all admit type I.
        ks = {w.k for w in enumerate_witnesses(11) if w.type is SolutionType.TYPE_I}
        assert {0, 1, 3} <= ks
        assert set(divisors(3)) == {1, 3}
        # p=19: ceil(19/4)=5, divisors {1, 5}.
        ks19 = {w.k for w in enumerate_witnesses(19) if w.type is SolutionType.TYPE_I}
        assert {0, 1, 5} <= ks19

    def test_domain_guards(self):
        with pytest.raises(DomainError):
            check_k0_type1_rule(2)
        with pytest.raises(DomainError):
            check_divisor_k_rule(1)


class TestResidueStats:
    def test_mod_24_class_1_below_100(self):
        report = scan_primes(2, 100, mode="exhaustive")
        stats = residue_stats(report, 24)
        klass = stats[1]
        assert klass["count"] == 2  # 73 and 97
        assert klass["k0_type1_fraction"] == 0.5  # 97 has k=0, 73 does not
        assert klass["hard"] is False

    def test_mod_2_is_parity(self):
        report = scan_primes(2, 100, mode="exhaustive")
        stats = residue_stats(report, 2)
        assert stats[0]["count"] == 1  # p = 2 alone
        assert stats[1]["count"] == 24

    def test_mod_840_flags_hard_classes(self):
        report = scan_primes(2, 3000, mode="exhaustive")
        stats = residue_stats(report, 840)
        assert 169 in stats and stats[169]["hard"] is True  # e.g. p = 1009
        for residue, entry in stats.items():
            assert entry["hard"] == (residue in HARD_RESIDUES_840)

    def test_requires_exhaustive_and_sane_modulus(self):
        exhaustive = scan_primes(2, 50, mode="exhaustive")
        first_only = scan_primes(2, 50, mode="first-only")
        with pytest.raises(DomainError):
            residue_stats(first_only, 24)
        with pytest.raises(DomainError):
            residue_stats(exhaustive, 1)
