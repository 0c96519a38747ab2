"""File discovery and the per-file detect/repair pipeline.

Files are processed independently (optionally in parallel) and results
are assembled in path order, so a run's output does not depend on
scheduling. A file that fails to read or lex is reported and skipped;
it never aborts the run.
"""

import fnmatch
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .fixes import ApplyOutcome, DeferredPlan, FixPlan, apply_plans, build_plan
from .lexer import LexError
from .metrics import RepairReport, aggregate, compute_stats
from .parser import ParseError, parse
from .printer import PatchArtifact, make_patch
from .rules import ALL_RULES, RuleId, TargetStatus, Violation, check_assumptions, detect_all
from .sourcefile import SourceDecodeError, SourceFile
from .typehints import build_scopes


@dataclass
class FileOutcome:
    """Everything the pipeline learned about one file."""

    path: str
    error: str | None = None
    violations: list[tuple[Violation, TargetStatus]] = field(default_factory=list)
    new_text: str | None = None
    applied: list[FixPlan] = field(default_factory=list)
    deferred: list[DeferredPlan] = field(default_factory=list)
    after: list[Violation] = field(default_factory=list)
    patch: PatchArtifact | None = None
    outcome: ApplyOutcome | None = None

    @property
    def changed(self) -> bool:
        return self.patch is not None


@dataclass
class MineRun:
    outcomes: list[FileOutcome]

    @property
    def violations(self) -> list[tuple[Violation, TargetStatus]]:
        out = []
        for fo in self.outcomes:
            out.extend(fo.violations)
        return out

    @property
    def errors(self) -> list[str]:
        return [f"{fo.path}: {fo.error}" for fo in self.outcomes if fo.error]


@dataclass
class RepairRun:
    outcomes: list[FileOutcome]
    report: RepairReport

    @property
    def patches(self) -> list[PatchArtifact]:
        return [fo.patch for fo in self.outcomes if fo.patch]

    @property
    def deferred(self) -> list[DeferredPlan]:
        out = []
        for fo in self.outcomes:
            out.extend(fo.deferred)
        return out

    @property
    def errors(self) -> list[str]:
        return [f"{fo.path}: {fo.error}" for fo in self.outcomes if fo.error]


def discover_files(roots: list[str], exclude: list[str] | None = None) -> list[Path]:
    """All .java files under the roots, path-sorted, minus excluded globs.

    Exclusion globs match the path relative to its root (with forward
    slashes) or the bare file name.
    """
    exclude = exclude or []
    found: dict[str, Path] = {}
    for root in roots:
        base = Path(root)
        if base.is_file():
            candidates = [(base, base.name)]
        else:
            candidates = [
                (p, p.relative_to(base).as_posix())
                for p in sorted(base.rglob("*.java"))
            ]
        for path, rel in candidates:
            if any(
                fnmatch.fnmatch(rel, pat) or fnmatch.fnmatch(path.name, pat)
                for pat in exclude
            ):
                continue
            found[str(path)] = path
    return [found[k] for k in sorted(found)]


def mine_file(path: Path, rules: list[RuleId]) -> FileOutcome:
    try:
        source = SourceFile.from_path(path)
        result = parse(source)
    except (SourceDecodeError, LexError, ParseError) as exc:
        return FileOutcome(path=str(path), error=str(exc))
    scopes = build_scopes(result.tree)
    found = detect_all(result.tree, scopes, rules, path=str(path))
    pairs = [(v, check_assumptions(v, result.tree, scopes)) for v in found]
    return FileOutcome(path=str(path), violations=pairs)


def repair_file(path: Path, rules: list[RuleId]) -> FileOutcome:
    try:
        source = SourceFile.from_path(path)
        result = parse(source)
    except (SourceDecodeError, LexError, ParseError) as exc:
        return FileOutcome(path=str(path), error=str(exc))
    scopes = build_scopes(result.tree)
    found = detect_all(result.tree, scopes, rules, path=str(path))
    pairs = [(v, check_assumptions(v, result.tree, scopes)) for v in found]
    targets = [v for v, status in pairs if status.is_target]
    fo = FileOutcome(path=str(path), violations=pairs)
    if not targets:
        fo.after = found
        return fo
    plans = [build_plan(v, result, scopes) for v in targets]
    outcome = apply_plans(result, plans)
    fo.applied = outcome.applied
    fo.deferred = outcome.deferred
    fo.outcome = outcome
    fo.new_text = outcome.text
    if outcome.text != source.text:
        fo.patch = make_patch(str(path), source.text, outcome.text)
    after_result = parse(outcome.text)
    fo.after = detect_all(
        after_result.tree, build_scopes(after_result.tree), rules, path=str(path)
    )
    return fo


def _run(paths: list[Path], worker, jobs: int) -> list[FileOutcome]:
    if jobs <= 1 or len(paths) <= 1:
        return [worker(p) for p in paths]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, paths))


def run_mine(
    roots: list[str],
    rules: list[RuleId] | None = None,
    exclude: list[str] | None = None,
    jobs: int = 1,
) -> MineRun:
    rules = rules or list(ALL_RULES)
    paths = discover_files(roots, exclude)
    outcomes = _run(paths, lambda p: mine_file(p, rules), jobs)
    outcomes.sort(key=lambda fo: fo.path)
    return MineRun(outcomes=outcomes)


def run_repair(
    roots: list[str],
    rules: list[RuleId] | None = None,
    exclude: list[str] | None = None,
    jobs: int = 1,
) -> RepairRun:
    rules = rules or list(ALL_RULES)
    paths = discover_files(roots, exclude)
    outcomes = _run(paths, lambda p: repair_file(p, rules), jobs)
    outcomes.sort(key=lambda fo: fo.path)
    report = build_report(outcomes, rules)
    return RepairRun(outcomes=outcomes, report=report)


def build_report(outcomes: list[FileOutcome], rules: list[RuleId]) -> RepairReport:
    before: list[tuple[Violation, TargetStatus]] = []
    after: list[Violation] = []
    for fo in outcomes:
        if fo.error:
            continue
        before.extend(fo.violations)
        after.extend(fo.after)
    stats = [compute_stats(rule, before, after) for rule in sorted(rules, key=lambda r: r.value)]
    return aggregate(stats)
