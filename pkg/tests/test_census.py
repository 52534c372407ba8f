import itertools
import json
import math

import pytest

from sumset_census import (
    BudgetExceededError,
    SizeHistogram,
    count_pair_solutions,
    detect_gaps,
    merge_histograms,
    multiset_count,
    run_census,
    tetrahedral,
)
from sumset_census.compositions import compositions_table

from oracles import (
    composition_count,
    order_of,
    pair_solution_count_4,
    representation_counter,
)


@pytest.fixture(scope="module")
def small_census():
    return run_census(q=12, k=4, h_cap=4)


class TestRunCensusAgainstOracle:
    def test_histograms_match_multiset_oracle(self, small_census):
        q, k, h_cap = 12, 4, 4
        expected = {h: {} for h in range(1, h_cap + 1)}
        for elems in itertools.combinations(range(1, q + 1), k):
            for h in range(1, h_cap + 1):
                size = len(representation_counter(elems, h))
                expected[h][size] = expected[h].get(size, 0) + 1
        for h in range(1, h_cap + 1):
            assert small_census.histograms[h].counts == expected[h]

    def test_classification_matches_oracle(self, small_census):
        q, k, h_cap = 12, 4, 4
        bstar = {}
        capped = 0
        for elems in itertools.combinations(range(1, q + 1), k):
            h_star, is_capped = order_of(elems, h_cap)
            if is_capped:
                capped += 1
            else:
                bstar[h_star] = bstar.get(h_star, 0) + 1
        assert small_census.bstar_counts == bstar
        assert small_census.capped == capped

    def test_exceptional_matches_oracle(self, small_census):
        q, k, h_cap = 12, 4, 4
        exceptional = {}
        for elems in itertools.combinations(range(1, q + 1), k):
            h_star, is_capped = order_of(elems, h_cap)
            if is_capped:
                continue
            counter = representation_counter(elems, h_star + 1)
            deficit = composition_count(h_star + 1, k) - len(counter)
            if deficit >= 2:
                exceptional[h_star] = exceptional.get(h_star, 0) + 1
        assert small_census.exceptional_counts == exceptional

    def test_mass_conservation_and_partition(self, small_census):
        total = math.comb(12, 4)
        for h in range(1, 5):
            assert small_census.histograms[h].total == total
        assert sum(small_census.bstar_counts.values()) + small_census.capped == total

    def test_no_lemma_violations(self, small_census):
        assert small_census.ladder_violations == ()
        assert small_census.rep_violations == ()
        assert small_census.support_violations == ()

    def test_rep_profiles_within_bound(self, small_census):
        for profile in small_census.rep_profiles.values():
            assert set(profile) == {2}


class TestSharding:
    def test_shard_counts_agree(self):
        reference = run_census(q=14, k=4, h_cap=4, shards=1)
        for shards in (4, 16):
            other = run_census(q=14, k=4, h_cap=4, shards=shards)
            assert other.to_json() == reference.to_json()
            assert other.histograms_csv() == reference.histograms_csv()
            assert other == reference

    def test_worker_processes_agree(self):
        reference = run_census(q=12, k=4, h_cap=3, shards=4, workers=1)
        parallel = run_census(q=12, k=4, h_cap=3, shards=4, workers=2)
        assert parallel == reference

    def test_histogram_merge_is_addition(self):
        left = SizeHistogram(2, {10: 3, 9: 1})
        right = SizeHistogram(2, {10: 2, 7: 5})
        merged = left.merged(right)
        assert merged.counts == {10: 5, 9: 1, 7: 5}
        assert merged.total == 11
        assert merge_histograms([left, right]).counts == merged.counts
        with pytest.raises(ValueError):
            left.merged(SizeHistogram(3, {}))
        with pytest.raises(ValueError):
            merge_histograms([])


class TestBudget:
    def test_subset_budget_parameter(self):
        with pytest.raises(BudgetExceededError) as excinfo:
            run_census(q=30, k=4, h_cap=3, max_subsets=1000)
        assert excinfo.value.required == math.comb(30, 4)

    def test_subset_budget_environment(self, monkeypatch):
        monkeypatch.setenv("SUMSET_MAX_SUBSETS", "100")
        with pytest.raises(BudgetExceededError):
            run_census(q=20, k=4, h_cap=3)
        monkeypatch.setenv("SUMSET_MAX_SUBSETS", str(math.comb(20, 4)))
        run_census(q=20, k=4, h_cap=2)

    def test_rejects_bad_parameters(self):
        with pytest.raises(ValueError):
            run_census(q=3, k=4)
        with pytest.raises(ValueError):
            run_census(q=10, k=1)
        with pytest.raises(ValueError):
            run_census(q=10, k=4, h_cap=0)
        with pytest.raises(ValueError):
            run_census(q=10, k=4, shards=0)


class TestDetectGaps:
    def test_synthetic_example(self):
        hist = SizeHistogram(5, {56: 1000, 55: 100, 54: 1, 53: 1, 52: 90})
        report = detect_gaps(hist, 5)
        assert report.ladder == (56, 55, 52, 46, 36)
        assert report.confirmed[:3] == (True, True, True)
        assert report.confirmed[3] is False and report.confirmed[4] is False
        assert report.inconclusive  # two rungs were never attained
        assert report.ratios[1] == 100.0
        assert report.strongly_confirmed[1] is True

    def test_empty_band_is_infinite_ratio(self):
        hist = SizeHistogram(2, {10: 50, 9: 20})
        report = detect_gaps(hist, 2)
        assert report.ladder == (10, 9)
        assert report.ratios == (None, None)
        assert report.confirmed == (True, True)
        assert report.inconclusive  # no sizes exist between adjacent rungs

    def test_gap_differences_are_triangular(self):
        for h in range(2, 9):
            hist = SizeHistogram(h, {multiset_count(h, 4): 1})
            report = detect_gaps(hist, h)
            assert report.gap_differences == tuple(
                (j + 1) * (j + 2) // 2 for j in range(h - 1)
            )
            assert report.ladder == tuple(
                multiset_count(h, 4) - tetrahedral(j) for j in range(h)
            )

    def test_rung_must_beat_both_adjacent_bands(self):
        counts = {20: 500, 19: 80, 18: 90, 17: 1, 16: 300}
        report = detect_gaps(SizeHistogram(3, counts), 3)
        # rung 19 loses to size 18 sitting in the gap below it
        assert report.ladder == (20, 19, 16)
        assert report.confirmed == (True, False, True)

    def test_mismatched_fold_rejected(self):
        with pytest.raises(ValueError):
            detect_gaps(SizeHistogram(3, {}), 4)


class TestCountPairSolutions:
    def test_worked_example_vectors(self):
        count = count_pair_solutions((2, 0, 0, 1), (0, 2, 1, 0), 12)
        assert count == 54 == pair_solution_count_4((2, 0, 0, 1), (0, 2, 1, 0), 12)
        # the worked example set solves this equation
        assert 2 * 1 + 10 == 2 * 2 + 8

    def test_slot_monotone_pair_is_empty(self):
        count = count_pair_solutions((1, 1, 0, 0), (0, 0, 1, 1), 15)
        assert count == 0 == pair_solution_count_4((1, 1, 0, 0), (0, 0, 1, 1), 15)

    def test_singleton_pair_restricted_is_empty(self):
        for h in (2, 3):
            assert count_pair_solutions(
                (h, 0, 0, 0), (0, h, 0, 0), 20, restrict_bstar=True
            ) == 0

    def test_restriction_filters_by_order(self):
        x, y = (2, 0, 0, 1), (0, 2, 1, 0)
        unrestricted = count_pair_solutions(x, y, 12)
        restricted = count_pair_solutions(x, y, 12, restrict_bstar=True)
        oracle = 0
        for elems in itertools.combinations(range(1, 13), 4):
            if sum(c * e for c, e in zip(x, elems)) != sum(
                c * e for c, e in zip(y, elems)
            ):
                continue
            if order_of(elems, 3)[0] == 2 and not order_of(elems, 3)[1]:
                oracle += 1
        assert restricted == oracle
        assert restricted <= unrestricted

    def test_preconditions(self):
        with pytest.raises(ValueError):
            count_pair_solutions((1, 1, 0, 0), (1, 1, 0, 0), 10)
        with pytest.raises(ValueError):
            count_pair_solutions((1, 1, 0, 0), (0, 1, 1, 1), 10)
        with pytest.raises(ValueError):
            count_pair_solutions((2, 0, 0, 1), (0, 2, 1), 10)
        with pytest.raises(ValueError):
            count_pair_solutions((2, 1, 0, 0), (2, 0, 1, 0), 10, restrict_bstar=True)

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            count_pair_solutions((2, 0, 0, 1), (0, 2, 1, 0), 50, max_subsets=100)


class TestBStarCrossCheck:
    def test_order_one_count_equals_pair_equation_union(self):
        q = 12
        report = run_census(q=q, k=4, h_cap=2)
        comps = compositions_table(2, 4)
        nontrivial_pairs = [
            (x, y)
            for i, x in enumerate(comps)
            for y in comps[i + 1 :]
            if sum(a * b for a, b in zip(x, y)) == 0
            and not (max(x) == 2 and max(y) == 2)
        ]
        assert len(nontrivial_pairs) == 15
        union = set()
        for elems in itertools.combinations(range(1, q + 1), 4):
            for x, y in nontrivial_pairs:
                if sum(c * e for c, e in zip(x, elems)) == sum(
                    c * e for c, e in zip(y, elems)
                ):
                    union.add(elems)
                    break
        # ground truth: direct classification of every subset
        direct = sum(
            1
            for elems in itertools.combinations(range(1, q + 1), 4)
            if order_of(elems, 2) == (1, False)
        )
        assert report.bstar_counts[1] == direct == len(union)


class TestReportSerialization:
    def test_json_schema_and_determinism(self, small_census):
        text = small_census.to_json()
        assert text == run_census(q=12, k=4, h_cap=4).to_json()
        payload = json.loads(text)
        assert list(payload) == [
            "q",
            "k",
            "h_cap",
            "histograms",
            "bstar_counts",
            "exceptional_counts",
            "capped",
            "gaps",
        ]
        assert payload["q"] == 12 and payload["k"] == 4 and payload["h_cap"] == 4
        assert set(payload["histograms"]) == {"1", "2", "3", "4"}
        assert sum(payload["histograms"]["2"].values()) == math.comb(12, 4)
        assert set(payload["bstar_counts"]) == {"1", "2", "3"}
        for h, gap in payload["gaps"].items():
            assert set(gap) == {"ladder", "confirmed", "ratios"}
            assert len(gap["ladder"]) == int(h)

    def test_csv_format(self, small_census):
        lines = small_census.histograms_csv().splitlines()
        assert lines[0] == "h,size,count"
        rows = [tuple(int(v) for v in line.split(",")) for line in lines[1:]]
        assert rows == sorted(rows, key=lambda r: (r[0], -r[1]))
        total_by_h = {}
        for h, _, count in rows:
            total_by_h[h] = total_by_h.get(h, 0) + count
        assert total_by_h == {h: math.comb(12, 4) for h in range(1, 5)}
