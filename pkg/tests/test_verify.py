import json

import pytest

import hyperbetti.verify as verify
from hyperbetti.betti import BettiTable
from hyperbetti.errors import DomainError
from hyperbetti.hypergraph import Hypergraph
from hyperbetti.verify import (CheckReport, ComputeCache, builtin_corpus,
                               check_first_power_simplex, check_lower_bounds,
                               check_min_gens, check_reg_upper, check_second_power,
                               check_survivor_sandwich, check_taylor_agreement,
                               check_vanishing, enumerate_hypergraphs,
                               random_hypergraph, run_checks, run_corpus, summarize)


class TestRandomHypergraph:
    def test_deterministic(self):
        a = random_hypergraph(6, 3, 2, seed=1)
        b = random_hypergraph(6, 3, 2, seed=1)
        assert a == b

    def test_seed_changes_output(self):
        results = {random_hypergraph(7, 3, 2, seed=s) for s in range(8)}
        assert len(results) > 1

    def test_forced_complete_graph(self):
        h = random_hypergraph(5, 10, 2, seed=0)
        assert h.num_edges == 10

    def test_infeasible(self):
        with pytest.raises(DomainError):
            random_hypergraph(4, 7, 2, seed=0)
        with pytest.raises(DomainError):
            random_hypergraph(3, 1, 4, seed=0)


class TestEnumeration:
    def test_union_covers_all_vertices(self):
        for h in enumerate_hypergraphs(4, 2, 3):
            assert h.union_mask(range(h.num_edges)) == (1 << 4) - 1

    def test_disjoint_pair_count(self):
        assert sum(1 for _ in enumerate_hypergraphs(4, 2, 2)) == 3
        assert sum(1 for _ in enumerate_hypergraphs(6, 3, 2)) == 10


class TestIndividualChecks:
    def test_lower_bounds_path5_cube_equality(self, path5):
        report = check_lower_bounds(path5, 3)
        assert report.hypothesis_satisfied and report.conclusion_holds
        reg_case = [c for c in report.witness["cases"] if c["kind"] == "regularity"][0]
        assert reg_case["excess_bound"] == 9 and reg_case["reg"] == 9

    def test_lower_bounds_nonuniform(self):
        h = Hypergraph(5, [[1, 2], [2, 3, 4], [4, 5]])
        for t in (1, 2):
            report = check_lower_bounds(h, t)
            assert report.hypothesis_satisfied and report.conclusion_holds

    def test_reg_upper_path5(self, path5):
        r3 = check_reg_upper(path5, 3)
        assert r3.conclusion_holds
        edge_case = [c for c in r3.witness["cases"] if c["kind"] == "edge_count"][0]
        assert edge_case["reg"] == 9 and edge_case["bound"] == 10
        r1 = check_reg_upper(path5, 1)
        edge_case = [c for c in r1.witness["cases"] if c["kind"] == "edge_count"][0]
        assert edge_case["reg"] == 3 and edge_case["bound"] == 4

    def test_reg_upper_single_edge_equality(self):
        h = Hypergraph(3, [[1, 2, 3]])
        for t in (1, 2, 3):
            report = check_reg_upper(h, t)
            assert report.conclusion_holds
            case = report.witness["cases"][0]
            assert case["reg"] == case["bound"] == 3 * t - 1

    def test_reg_upper_gated_on_mixed_sizes(self):
        report = check_reg_upper(Hypergraph(4, [[1, 2], [2, 3, 4]]), 2)
        assert report.gated

    def test_min_gens_path5(self, path5):
        report = check_min_gens(path5, 3)
        assert report.conclusion_holds
        assert report.witness["products_checked"] >= 4
        assert report.witness["missing"] == []

    def test_second_power_two_disjoint(self):
        report = check_second_power(Hypergraph(4, [[1, 2], [3, 4]]))
        assert report.hypothesis_satisfied and report.conclusion_holds
        case = [c for c in report.witness["cases"] if c["i"] == 2][0]
        assert case["matchings"] == 1 and case["beta"] == 0

    def test_second_power_gated_on_mixed_sizes(self):
        report = check_second_power(Hypergraph(4, [[1, 2], [2, 3, 4]]))
        assert report.gated

    def test_vanishing_window_path5(self, path5):
        report = check_vanishing(path5, 3, 9, 0)
        assert report.hypothesis_satisfied
        assert report.conclusion_holds
        assert report.witness["beta_mid"] == 4

    def test_vanishing_gate_rejects_busy_window(self, path5):
        # degree 11 occurs among the dimension-1 faces, so the window is dirty
        report = check_vanishing(path5, 3, 11, 0)
        assert report.gated
        assert report.witness["window_clear"] is False

    def test_taylor_agreement_path5(self, path5):
        for t in (1, 2, 3):
            report = check_taylor_agreement(path5, t)
            assert report.hypothesis_satisfied and report.conclusion_holds

    def test_taylor_agreement_gated_by_cap(self, path5):
        cache = ComputeCache(max_faces=8)
        report = check_taylor_agreement(path5, 3, cache)
        assert report.gated
        assert "resource cap" in report.witness["reason"]

    def test_first_power_simplex(self, four_cycle):
        report = check_first_power_simplex(four_cycle)
        assert report.conclusion_holds

    def test_survivor_sandwich(self, example39):
        for t in (1, 2):
            report = check_survivor_sandwich(example39, t)
            assert report.hypothesis_satisfied and report.conclusion_holds


class TestHarness:
    def test_run_checks_clean(self, path5):
        reports = run_checks(path5, t_max=3)
        assert all(not r.failed for r in reports)
        names = {r.check for r in reports}
        assert "taylor_faridi_agreement" in names
        assert "betti_vanishing_window" in names

    def test_summary_counts(self, path5):
        reports = run_checks(path5, t_max=2)
        summary = summarize(reports)
        assert summary["failed"] == 0
        assert summary["passed"] + summary["gated"] == len(reports)

    def test_corrupted_betti_is_caught(self, path5, monkeypatch):
        real = verify.graded_betti

        def corrupted(cx, char=0, power=None):
            table = real(cx, char=char, power=power)
            shifted = {(i, j + (1 if i else 0)): b for (i, j), b in table.entries.items()}
            return BettiTable(shifted, power=power, char=char)

        monkeypatch.setattr(verify, "graded_betti", corrupted)
        reports = run_checks(path5, t_max=2)
        assert summarize(reports)["failed"] > 0

    def test_report_json_is_deterministic(self, path5):
        a = [r.to_json() for r in run_checks(path5, t_max=2)]
        b = [r.to_json() for r in run_checks(path5, t_max=2)]
        assert a == b
        parsed = json.loads(a[0])
        assert set(parsed) == {"check", "instance", "hypothesis_satisfied",
                               "conclusion_holds", "witness"}

    def test_gated_report_shape(self):
        report = CheckReport("x", "y", False, None, {"reason": "nope"})
        assert report.gated and not report.failed

    def test_run_corpus_named_slice(self):
        entries = [(name, h) for name, h in builtin_corpus()
                   if not name.startswith(("grid", "random"))]
        reports, summary = run_corpus(entries, t_max=2)
        assert summary["failed"] == 0
        assert summary["passed"] > 0

    def test_builtin_corpus_names_unique(self):
        names = [name for name, _ in builtin_corpus()]
        assert len(names) == len(set(names))
