"""Repair templates: golden diffs, idempotence, deferral, and plan errors."""
from __future__ import annotations

from pathlib import Path

import pytest

from javafix.engine import repair_file
from javafix.fixes import (
    FIX_TEMPLATES,
    NotTarget,
    StaleAnchor,
    apply_plans,
    build_plan,
)
from javafix.printer import apply_patch_text, make_patch
from javafix.rules import RuleId, detect
from javafix.sourcefile import SourceFile
from javafix.typehints import build_scopes

from conftest import detect_in, fixture_cases, parse_text

REPO_ROOT = Path(__file__).resolve().parent.parent


class TestGoldenDiffs:
    @pytest.mark.parametrize("rule,path", fixture_cases("bad"))
    def test_repair_matches_frozen_golden(self, rule, path):
        golden = path.with_name(path.name + ".diff")
        assert golden.exists(), f"missing golden for {path.name}"
        fo = repair_file(path, [rule])
        assert fo.error is None
        assert not fo.deferred
        assert fo.changed
        src = SourceFile.from_path(path)
        rel = path.relative_to(REPO_ROOT)
        patch = make_patch(str(rel), src.text, fo.new_text)
        assert patch.diff == golden.read_text(encoding="utf-8")

    @pytest.mark.parametrize("rule,path", fixture_cases("bad"))
    def test_repair_clears_the_rule(self, rule, path):
        fo = repair_file(path, [rule])
        assert [v for v in fo.after if v.rule is rule] == []

    @pytest.mark.parametrize("rule,path", fixture_cases("bad"))
    def test_golden_diff_applies_back(self, rule, path):
        fo = repair_file(path, [rule])
        src = SourceFile.from_path(path)
        rel = path.relative_to(REPO_ROOT)
        patch = make_patch(str(rel), src.text, fo.new_text)
        assert apply_patch_text(src.text, patch.diff) == fo.new_text


class TestIdempotence:
    @pytest.mark.parametrize("rule,path", fixture_cases("bad"))
    def test_second_repair_is_a_no_op(self, rule, path, tmp_path):
        first = repair_file(path, [rule])
        repaired = tmp_path / path.name
        repaired.write_text(first.new_text, encoding="utf-8")
        second = repair_file(repaired, [rule])
        assert second.error is None
        assert second.applied == []
        assert second.patch is None
        assert second.new_text is None, "no plans means the text is left alone"
        assert not second.changed


class TestExcludedFixtures:
    @pytest.mark.parametrize("rule,path", fixture_cases("excluded"))
    def test_plan_refuses_non_target(self, rule, path):
        text = path.read_text(encoding="utf-8")
        parsed = parse_text(text, path=str(path))
        scopes = build_scopes(parsed.tree)
        found = detect(parsed.tree, scopes, rule, path=str(path))
        assert found
        for v in found:
            with pytest.raises(NotTarget):
                build_plan(v, parsed, scopes)

    @pytest.mark.parametrize("rule,path", fixture_cases("excluded"))
    def test_repair_leaves_excluded_files_untouched(self, rule, path):
        fo = repair_file(path, [rule])
        assert fo.error is None
        assert not fo.changed
        assert fo.applied == []


class TestPlanErrors:
    def test_every_rule_has_a_template(self):
        assert set(FIX_TEMPLATES) == set(RuleId)

    def test_stale_anchor_rejected(self):
        text = "public class A { void m(Thread t) { t.run(); } }\n"
        (v, _), = detect_in(text, RuleId.S1217)
        fresh = parse_text(text)  # a different tree than the violation's
        scopes = build_scopes(fresh.tree)
        plan = build_plan(v, parse_text(text), None)
        # The plan's anchors belong to a third tree; applying against
        # `fresh` must be refused rather than guessed at.
        with pytest.raises(StaleAnchor):
            apply_plans(fresh, [plan])


class TestConflictDeferral:
    TWO_RESOURCES = (
        "import java.io.FileInputStream;\n"
        "import java.io.IOException;\n"
        "\n"
        "public class Two {\n"
        "    void m(String p) throws IOException {\n"
        "        FileInputStream a = new FileInputStream(p);\n"
        "        FileInputStream b = new FileInputStream(p);\n"
        "        System.out.println(a.read() + b.read());\n"
        "    }\n"
        "}\n"
    )

    def test_overlapping_wrap_regions_defer_the_later_plan(self):
        parsed = parse_text(self.TWO_RESOURCES)
        scopes = build_scopes(parsed.tree)
        found = detect(parsed.tree, scopes, RuleId.S2095, path="<t>")
        assert len(found) == 2
        plans = [build_plan(v, parsed, scopes) for v in found]
        outcome = apply_plans(parsed, plans)
        assert len(outcome.applied) == 1
        assert len(outcome.deferred) == 1
        assert outcome.deferred[0].reason == "overlapping statement-wrapping repairs"

    def test_deferred_plan_succeeds_on_rerun(self, tmp_path):
        f = tmp_path / "Two.java"
        f.write_text(self.TWO_RESOURCES, encoding="utf-8")
        first = repair_file(f, [RuleId.S2095])
        assert len(first.applied) == 1
        assert len(first.deferred) == 1
        f.write_text(first.new_text, encoding="utf-8")
        second = repair_file(f, [RuleId.S2095])
        assert second.error is None
        assert len(second.applied) == 1
        assert not second.deferred
        f.write_text(second.new_text, encoding="utf-8")
        final = repair_file(f, [RuleId.S2095])
        assert final.applied == []
        assert [v for v in final.after if v.rule is RuleId.S2095] == []


class TestComposition:
    def test_plain_fix_inside_wrap_region_is_adopted(self):
        text = (
            "import java.io.FileInputStream;\n"
            "import java.io.IOException;\n"
            "\n"
            "public class Mix {\n"
            "    void m(String p, int[] data) throws IOException {\n"
            "        FileInputStream in = new FileInputStream(p);\n"
            "        System.out.println(in.read() + data.toString());\n"
            "    }\n"
            "}\n"
        )
        parsed = parse_text(text)
        scopes = build_scopes(parsed.tree)
        plans = []
        for rule in (RuleId.S2095, RuleId.S2116):
            for v in detect(parsed.tree, scopes, rule, path="<t>"):
                plans.append(build_plan(v, parsed, scopes))
        plans.sort(key=lambda p: (p.span.start, p.rule.value))
        outcome = apply_plans(parsed, plans)
        assert len(outcome.applied) == 2
        assert not outcome.deferred
        assert "try (FileInputStream in = new FileInputStream(p)) {" in outcome.text
        assert "Arrays.toString(data)" in outcome.text
        assert "import java.util.Arrays;" in outcome.text
        # Composition preserved well-formedness for both rules at once.
        reparsed = parse_text(outcome.text)
        rescopes = build_scopes(reparsed.tree)
        assert detect(reparsed.tree, rescopes, RuleId.S2095, path="<t>") == []
        assert detect(reparsed.tree, rescopes, RuleId.S2116, path="<t>") == []


class TestTemplateDetails:
    def test_interrupt_insert_lands_before_trailing_break(self):
        text = (
            "public class Retry {\n"
            "    void spin() {\n"
            "        while (true) {\n"
            "            try {\n"
            "                Thread.sleep(1000);\n"
            "            } catch (InterruptedException e) {\n"
            "                break;\n"
            "            }\n"
            "        }\n"
            "    }\n"
            "}\n"
        )
        parsed = parse_text(text)
        scopes = build_scopes(parsed.tree)
        (v,) = detect(parsed.tree, scopes, RuleId.S2142, path="<t>")
        outcome = apply_plans(parsed, [build_plan(v, parsed, scopes)])
        body = outcome.text
        assert body.index("Thread.currentThread().interrupt();") < body.index("break;")

    def test_lock_name_avoids_collision(self):
        text = (
            "public class Cache {\n"
            "    private final String data = \"d\";\n"
            "    private final Object lockData = new Object();\n"
            "\n"
            "    void refresh() {\n"
            "        synchronized (data) {\n"
            "            System.out.println(1);\n"
            "        }\n"
            "    }\n"
            "}\n"
        )
        parsed = parse_text(text)
        scopes = build_scopes(parsed.tree)
        (v,) = detect(parsed.tree, scopes, RuleId.S1860, path="<t>")
        outcome = apply_plans(parsed, [build_plan(v, parsed, scopes)])
        assert "lockData2" in outcome.text

    def test_equals_receiver_parenthesized_when_composite(self):
        text = (
            "public class Cmp {\n"
            "    boolean same(String a, String b, boolean flag) {\n"
            "        return (flag ? a : b) == b;\n"
            "    }\n"
            "}\n"
        )
        parsed = parse_text(text)
        scopes = build_scopes(parsed.tree)
        (v,) = detect(parsed.tree, scopes, RuleId.S4973, path="<t>")
        outcome = apply_plans(parsed, [build_plan(v, parsed, scopes)])
        assert "(flag ? a : b).equals(b)" in outcome.text

    def test_static_lock_field_for_static_context(self):
        text = (
            "public class Cfg {\n"
            "    private static final String MODE = \"m\";\n"
            "\n"
            "    static void flip() {\n"
            "        synchronized (MODE) {\n"
            "            System.out.println(1);\n"
            "        }\n"
            "    }\n"
            "}\n"
        )
        parsed = parse_text(text)
        scopes = build_scopes(parsed.tree)
        (v,) = detect(parsed.tree, scopes, RuleId.S1860, path="<t>")
        outcome = apply_plans(parsed, [build_plan(v, parsed, scopes)])
        assert "private static final Object lockMODE = new Object();" in outcome.text

    def test_touched_spans_recorded_per_plan(self):
        text = "public class A { void m(Thread t) { t.run(); } }\n"
        parsed = parse_text(text)
        scopes = build_scopes(parsed.tree)
        (v,) = detect(parsed.tree, scopes, RuleId.S1217, path="<t>")
        plan = build_plan(v, parsed, scopes)
        outcome = apply_plans(parsed, [plan])
        spans = outcome.touched_spans(plan)
        assert spans, "applied plans must record the spans they may change"
        run_at = text.index("run")
        assert any(s.start <= run_at < s.end for s in spans)
