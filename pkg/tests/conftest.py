"""Shared fixtures and helpers for the javafix test suite."""
from __future__ import annotations

from pathlib import Path

import pytest

from javafix.parser import ParseResult, parse
from javafix.rules import RuleId, TargetStatus, Violation, check_assumptions, detect
from javafix.sourcefile import SourceFile
from javafix.typehints import ScopeTable, build_scopes

FIXTURES = Path(__file__).parent / "fixtures"
RULE_FIXTURES = FIXTURES / "rules"
ROUNDTRIP_FIXTURES = FIXTURES / "roundtrip"


def parse_text(text: str, path: str = "<test>") -> ParseResult:
    return parse(SourceFile.from_text(text, path=path))


def scopes_for(parsed: ParseResult) -> ScopeTable:
    return build_scopes(parsed.tree)


def detect_in(
    text: str, rule: RuleId, path: str = "<test>"
) -> list[tuple[Violation, TargetStatus]]:
    parsed = parse_text(text, path)
    scopes = build_scopes(parsed.tree)
    found = detect(parsed.tree, scopes, rule, path=path)
    return [(v, check_assumptions(v, parsed.tree, scopes)) for v in found]


def marker_lines(text: str) -> list[int]:
    """1-based lines carrying a `// violation` hand label."""
    return [i + 1 for i, line in enumerate(text.splitlines()) if "// violation" in line]


def fixture_cases(kind_prefix: str) -> list[pytest.param]:
    """All rule fixtures whose file name starts with kind_prefix."""
    cases = []
    for rule_dir in sorted(RULE_FIXTURES.iterdir()):
        rule = RuleId(rule_dir.name)
        for f in sorted(rule_dir.glob(f"{kind_prefix}_*.java")):
            cases.append(pytest.param(rule, f, id=f"{rule.value}-{f.stem}"))
    return cases
