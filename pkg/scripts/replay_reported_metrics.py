"""Replay the published large-scale evaluation counts through the metrics code.

The per-rule detected/target/fixed counts from the published 161-repository
run are frozen in javafix.metrics.REPORTED_COUNTS. This script recomputes
every ratio and remediation total from those raw counts and prints the
resulting table, then asserts the spot-check rows the counts must reproduce.
"""
from __future__ import annotations

import sys

from javafix.metrics import percent, report_to_text, reported_replay


def main() -> int:
    report = reported_replay()
    print(report_to_text(report))

    by_rule = {stats.rule.value: stats for stats in report.rules}
    checks = [
        ("S2142", by_rule["S2142"].tdr, 99),
        ("S2142", by_rule["S2142"].ftr, 95),
        ("S2142", by_rule["S2142"].fdr, 94),
        ("S1217", by_rule["S1217"].tdr, 100),
        ("S1217", by_rule["S1217"].ftr, 100),
        ("S1217", by_rule["S1217"].fdr, 100),
    ]
    ok = True
    for rule, ratio, expected in checks:
        got = percent(ratio)
        if got != expected:
            print(f"MISMATCH {rule}: got {got}%, expected {expected}%", file=sys.stderr)
            ok = False
    if by_rule["S2142"].trt_minutes != 4500:
        print("MISMATCH S2142 remediation minutes", file=sys.stderr)
        ok = False
    if by_rule["S1217"].trt_minutes != 40:
        print("MISMATCH S1217 remediation minutes", file=sys.stderr)
        ok = False
    totals = report.totals
    for name, ratio, expected in [
        ("ALL tdr", totals.tdr, 74),
        ("ALL ftr", totals.ftr, 65),
        ("ALL fdr", totals.fdr, 48),
    ]:
        if percent(ratio) != expected:
            print(f"MISMATCH {name}: got {percent(ratio)}%, expected {expected}%", file=sys.stderr)
            ok = False
    if totals.trt_minutes != 7340:
        print("MISMATCH total remediation minutes", file=sys.stderr)
        ok = False
    print("replay consistent" if ok else "replay INCONSISTENT")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
