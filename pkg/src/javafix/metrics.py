"""Repair applicability metrics: TDR, FTR, FDR, and remediation time.

Ratios are exact fractions; dividing by a zero denominator leaves the
ratio undefined (serialized as null). Rendered percentages truncate
toward zero, which is the arithmetic the reference result table uses.
"""

from dataclasses import dataclass
from fractions import Fraction

from .rules import ALL_RULES, RuleId, TargetStatus, Violation


@dataclass(frozen=True)
class RuleStats:
    """Before/after detection counts for one rule, with derived ratios."""

    rule: RuleId
    dv: int
    tv: int
    dv_after: int

    def __post_init__(self):
        if self.dv < 0 or self.tv < 0 or self.dv_after < 0:
            raise ValueError("violation counts cannot be negative")
        if self.tv > self.dv:
            raise ValueError(f"target count {self.tv} exceeds detected count {self.dv}")
        if self.dv_after > self.dv:
            raise ValueError(
                f"post-repair count {self.dv_after} exceeds pre-repair count {self.dv}"
            )

    @property
    def fv(self) -> int:
        return self.dv - self.dv_after

    @property
    def tdr(self) -> Fraction | None:
        return Fraction(self.tv, self.dv) if self.dv else None

    @property
    def ftr(self) -> Fraction | None:
        return Fraction(self.fv, self.tv) if self.tv else None

    @property
    def fdr(self) -> Fraction | None:
        return Fraction(self.fv, self.dv) if self.dv else None

    @property
    def trt_minutes(self) -> int:
        return self.fv * self.rule.remediation_minutes

    @property
    def warning(self) -> str | None:
        # A fix can incidentally remove a non-target violation, pushing
        # fv past tv; that is reported, not clamped.
        if self.fv > self.tv:
            return f"fixed count {self.fv} exceeds target count {self.tv}"
        return None


@dataclass(frozen=True)
class ReportTotals:
    dv: int
    tv: int
    fv: int
    trt_minutes: int

    @property
    def tdr(self) -> Fraction | None:
        return Fraction(self.tv, self.dv) if self.dv else None

    @property
    def ftr(self) -> Fraction | None:
        return Fraction(self.fv, self.tv) if self.tv else None

    @property
    def fdr(self) -> Fraction | None:
        return Fraction(self.fv, self.dv) if self.dv else None


@dataclass(frozen=True)
class RepairReport:
    rules: tuple[RuleStats, ...]
    totals: ReportTotals


def compute_stats(
    rule: RuleId,
    before: list[tuple[Violation, TargetStatus]],
    after: list[Violation],
) -> RuleStats:
    """Counts for one rule from pre-repair and post-repair detections."""
    mine = [(v, s) for v, s in before if v.rule is rule]
    dv = len(mine)
    tv = sum(1 for _, s in mine if s.is_target)
    dv_after = sum(1 for v in after if v.rule is rule)
    return RuleStats(rule=rule, dv=dv, tv=tv, dv_after=dv_after)


def stats_from_counts(rule: RuleId, dv: int, tv: int, fv: int) -> RuleStats:
    """Build stats from published-style counts (dv, tv, fv)."""
    return RuleStats(rule=rule, dv=dv, tv=tv, dv_after=dv - fv)


def aggregate(stats: list[RuleStats]) -> RepairReport:
    """Totals sum the counts, then recompute ratios from the sums."""
    seen: set[RuleId] = set()
    for s in stats:
        if s.rule in seen:
            raise ValueError(f"duplicate stats for rule {s.rule.value}")
        seen.add(s.rule)
    ordered = tuple(sorted(stats, key=lambda s: s.rule.value))
    totals = ReportTotals(
        dv=sum(s.dv for s in ordered),
        tv=sum(s.tv for s in ordered),
        fv=sum(s.fv for s in ordered),
        trt_minutes=sum(s.trt_minutes for s in ordered),
    )
    return RepairReport(rules=ordered, totals=totals)


def percent(ratio: Fraction | None) -> int | None:
    """Whole-number percentage, truncated toward zero."""
    if ratio is None:
        return None
    return int(ratio * 100)


def _ratio_cell(ratio: Fraction | None, numerator: int, denominator: int) -> str:
    if ratio is None:
        return "--"
    return f"{percent(ratio)}% ({numerator:,}/{denominator:,})"


def report_to_json(report: RepairReport) -> dict:
    rows = []
    warnings = []
    for s in report.rules:
        rows.append(
            {
                "rule": s.rule.value,
                "dv": s.dv,
                "tv": s.tv,
                "fv": s.fv,
                "tdr": percent(s.tdr),
                "ftr": percent(s.ftr),
                "fdr": percent(s.fdr),
                "trtMinutes": s.trt_minutes,
            }
        )
        if s.warning:
            warnings.append({"rule": s.rule.value, "message": s.warning})
    t = report.totals
    out = {
        "rules": rows,
        "all": {
            "dv": t.dv,
            "tv": t.tv,
            "fv": t.fv,
            "tdr": percent(t.tdr),
            "ftr": percent(t.ftr),
            "fdr": percent(t.fdr),
            "trtMinutes": t.trt_minutes,
        },
    }
    if warnings:
        out["warnings"] = warnings
    return out


def report_to_text(report: RepairReport) -> str:
    header = ["Rule", "DV", "TV", "FV", "TDR", "FTR", "FDR", "TRT (min)"]
    rows = [header]
    for s in report.rules:
        rows.append(
            [
                s.rule.value,
                f"{s.dv:,}",
                f"{s.tv:,}",
                f"{s.fv:,}",
                _ratio_cell(s.tdr, s.tv, s.dv),
                _ratio_cell(s.ftr, s.fv, s.tv),
                _ratio_cell(s.fdr, s.fv, s.dv),
                f"{s.trt_minutes:,}",
            ]
        )
    t = report.totals
    rows.append(
        [
            "ALL",
            f"{t.dv:,}",
            f"{t.tv:,}",
            f"{t.fv:,}",
            _ratio_cell(t.tdr, t.tv, t.dv),
            _ratio_cell(t.ftr, t.fv, t.tv),
            _ratio_cell(t.fdr, t.fv, t.dv),
            f"{t.trt_minutes:,}",
        ]
    )
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    lines = []
    for idx, row in enumerate(rows):
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
        if idx == 0:
            lines.append("  ".join("-" * widths[i] for i in range(len(header))))
    warnings = [s.warning for s in report.rules if s.warning]
    for w in warnings:
        lines.append(f"warning: {w}")
    return "\n".join(lines)


REPORTED_COUNTS: dict[RuleId, tuple[int, int, int]] = {
    RuleId.S1217: (2, 2, 2),
    RuleId.S1860: (5, 5, 5),
    RuleId.S2095: (782, 361, 34),
    RuleId.S2111: (69, 69, 37),
    RuleId.S2116: (1, 1, 1),
    RuleId.S2142: (316, 315, 300),
    RuleId.S2184: (440, 431, 368),
    RuleId.S2225: (22, 3, 3),
    RuleId.S2272: (41, 40, 34),
    RuleId.S4973: (81, 80, 68),
}


def reported_replay() -> RepairReport:
    """The published evaluation counts replayed through this module."""
    stats = [
        stats_from_counts(rule, dv, tv, fv)
        for rule, (dv, tv, fv) in REPORTED_COUNTS.items()
    ]
    return aggregate(stats)
