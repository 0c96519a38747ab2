"""Repair metrics: exact-fraction identities and the published-count replay."""
from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from javafix.metrics import (
    REPORTED_COUNTS,
    RuleStats,
    aggregate,
    percent,
    report_to_json,
    report_to_text,
    reported_replay,
    stats_from_counts,
)
from javafix.rules import RuleId


class TestRuleStats:
    def test_basic_counts(self):
        s = stats_from_counts(RuleId.S2142, dv=316, tv=315, fv=300)
        assert s.fv == 300
        assert s.tdr == Fraction(315, 316)
        assert s.ftr == Fraction(300, 315)
        assert s.fdr == Fraction(300, 316)
        assert s.trt_minutes == 300 * RuleId.S2142.remediation_minutes

    def test_zero_detected_leaves_ratios_undefined(self):
        s = stats_from_counts(RuleId.S1217, dv=0, tv=0, fv=0)
        assert s.tdr is None
        assert s.ftr is None
        assert s.fdr is None
        assert s.trt_minutes == 0

    def test_zero_targets_leaves_ftr_undefined(self):
        s = stats_from_counts(RuleId.S2225, dv=5, tv=0, fv=0)
        assert s.tdr == Fraction(0, 1)
        assert s.ftr is None
        assert s.fdr == Fraction(0, 1)

    def test_negative_counts_rejected(self):
        with pytest.raises(ValueError):
            RuleStats(rule=RuleId.S1217, dv=-1, tv=0, dv_after=0)

    def test_targets_above_detected_rejected(self):
        with pytest.raises(ValueError):
            stats_from_counts(RuleId.S1217, dv=2, tv=3, fv=0)

    def test_negative_fixed_rejected(self):
        # dv_after > dv means the run created violations; that is an error.
        with pytest.raises(ValueError):
            RuleStats(rule=RuleId.S1217, dv=2, tv=2, dv_after=3)

    def test_fixed_above_targets_warns_but_stands(self):
        s = stats_from_counts(RuleId.S1217, dv=5, tv=2, fv=3)
        assert s.warning is not None
        assert s.fv == 3

    def test_fixed_within_targets_no_warning(self):
        s = stats_from_counts(RuleId.S1217, dv=5, tv=3, fv=3)
        assert s.warning is None


@given(
    dv=st.integers(0, 10_000),
    data=st.data(),
)
def test_fdr_is_product_of_ftr_and_tdr(dv, data):
    tv = data.draw(st.integers(0, dv))
    fv = data.draw(st.integers(0, tv))
    s = stats_from_counts(RuleId.S2184, dv=dv, tv=tv, fv=fv)
    if s.fdr is not None and s.ftr is not None and s.tdr is not None:
        assert s.fdr == s.ftr * s.tdr
    if dv > 0 and tv == 0:
        assert s.ftr is None
        assert s.fdr == Fraction(0, 1)


@given(dv=st.integers(1, 10_000), data=st.data())
def test_ratios_are_exact_fractions_not_floats(dv, data):
    tv = data.draw(st.integers(0, dv))
    s = stats_from_counts(RuleId.S2095, dv=dv, tv=tv, fv=0)
    assert isinstance(s.tdr, Fraction)
    assert s.tdr == Fraction(tv, dv)


class TestPercent:
    def test_rounds_down_always(self):
        assert percent(Fraction(315, 316)) == 99
        assert percent(Fraction(999, 1000)) == 99
        assert percent(Fraction(1, 1)) == 100
        assert percent(Fraction(3, 22)) == 13
        assert percent(Fraction(0, 5)) == 0

    def test_none_passes_through(self):
        assert percent(None) is None


class TestAggregate:
    def test_totals_are_sums(self):
        stats = [
            stats_from_counts(RuleId.S1217, dv=2, tv=2, fv=2),
            stats_from_counts(RuleId.S4973, dv=10, tv=8, fv=5),
        ]
        report = aggregate(stats)
        assert report.totals.dv == 12
        assert report.totals.tv == 10
        assert report.totals.fv == 7
        assert report.totals.trt_minutes == sum(s.trt_minutes for s in stats)

    def test_rules_sorted_by_id(self):
        report = aggregate(
            [
                stats_from_counts(RuleId.S4973, dv=1, tv=1, fv=1),
                stats_from_counts(RuleId.S1217, dv=1, tv=1, fv=1),
            ]
        )
        assert [s.rule for s in report.rules] == [RuleId.S1217, RuleId.S4973]

    def test_duplicate_rule_rejected(self):
        with pytest.raises(ValueError):
            aggregate(
                [
                    stats_from_counts(RuleId.S1217, dv=1, tv=1, fv=1),
                    stats_from_counts(RuleId.S1217, dv=2, tv=2, fv=2),
                ]
            )

    def test_total_ratios_recomputed_from_sums(self):
        report = aggregate(
            [
                stats_from_counts(RuleId.S1217, dv=1, tv=1, fv=1),
                stats_from_counts(RuleId.S4973, dv=3, tv=0, fv=0),
            ]
        )
        assert report.totals.tdr == Fraction(1, 4)
        assert report.totals.fdr == Fraction(1, 4)


class TestPublishedReplay:
    """The frozen large-scale counts must reproduce the published table."""

    EXPECTED_ROWS = {
        # rule: (tdr%, ftr%, fdr%, trt minutes)
        RuleId.S1217: (100, 100, 100, 40),
        RuleId.S1860: (100, 100, 100, 75),
        RuleId.S2095: (46, 9, 4, 170),
        RuleId.S2111: (100, 53, 53, 185),
        RuleId.S2116: (100, 100, 100, 5),
        RuleId.S2142: (99, 95, 94, 4500),
        RuleId.S2184: (97, 85, 83, 1840),
        RuleId.S2225: (13, 100, 13, 15),
        RuleId.S2272: (97, 85, 82, 170),
        RuleId.S4973: (98, 85, 83, 340),
    }

    def test_every_rule_row(self):
        report = reported_replay()
        by_rule = {s.rule: s for s in report.rules}
        for rule, (tdr, ftr, fdr, trt) in self.EXPECTED_ROWS.items():
            s = by_rule[rule]
            assert percent(s.tdr) == tdr, rule
            assert percent(s.ftr) == ftr, rule
            assert percent(s.fdr) == fdr, rule
            assert s.trt_minutes == trt, rule

    def test_grand_totals(self):
        report = reported_replay()
        totals = report.totals
        assert totals.dv == 1759
        assert totals.tv == 1307
        assert totals.fv == 852
        assert percent(totals.tdr) == 74
        assert percent(totals.ftr) == 65
        assert percent(totals.fdr) == 48
        assert totals.trt_minutes == 7340

    def test_counts_cover_all_rules(self):
        assert set(REPORTED_COUNTS) == set(RuleId)


class TestRendering:
    def test_json_shape(self):
        report = reported_replay()
        data = report_to_json(report)
        assert {row["rule"] for row in data["rules"]} == {r.value for r in RuleId}
        row = next(r for r in data["rules"] if r["rule"] == "S2142")
        assert row["dv"] == 316
        assert row["tv"] == 315
        assert row["fv"] == 300
        assert row["tdr"] == 99
        assert row["trtMinutes"] == 4500
        assert data["all"]["trtMinutes"] == 7340

    def test_text_table_cells(self):
        text = report_to_text(reported_replay())
        assert "99% (315/316)" in text
        assert "48% (852/1,759)" in text
        assert "4,500" in text
        assert text.count("\n") >= 11  # header + 10 rules + ALL row

    def test_undefined_ratio_renders_as_dashes(self):
        report = aggregate([stats_from_counts(RuleId.S1217, dv=0, tv=0, fv=0)])
        assert "--" in report_to_text(report)

    def test_warning_surfaced_in_both_formats(self):
        report = aggregate([stats_from_counts(RuleId.S1217, dv=5, tv=2, fv=3)])
        assert "warnings" in report_to_json(report)
        assert "warning" in report_to_text(report).lower()
