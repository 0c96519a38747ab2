"""Command-line interface: mine, repair, scan-history, and report.

Exit codes are scriptable: 0 means clean (no violations, all targets
fixed, or nothing introduced), 1 means findings (violations present,
fixes deferred or incomplete, or introducing commits found), 2 means
an operational error.
"""

import argparse
import json
import sys
from pathlib import Path

from .config import ConfigError, RunConfig, build_config
from .engine import FileOutcome, RepairRun, run_mine, run_repair
from .history import RepoError, history_to_json, scan_history
from .metrics import (
    aggregate,
    report_to_json,
    report_to_text,
    reported_replay,
    stats_from_counts,
)
from .rules import RuleId, violation_to_json

PROG = "javafix"


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--rule",
        action="append",
        metavar="SQID",
        help="restrict to a rule id (repeatable; default: all ten)",
    )
    parser.add_argument(
        "--format",
        choices=("text", "json"),
        default=None,
        help="output format (default: text)",
    )
    parser.add_argument(
        "--jobs",
        type=int,
        default=None,
        metavar="N",
        help="number of files processed in parallel (default: 1)",
    )


def _add_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--source",
        action="append",
        metavar="PATH",
        help="source root or file to analyze (repeatable)",
    )
    parser.add_argument(
        "--exclude",
        action="append",
        metavar="GLOB",
        help="exclude files whose root-relative path or name matches (repeatable)",
    )


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Detect and automatically repair SonarJava bug-rule violations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    mine = sub.add_parser("mine", help="detect violations and report them")
    _add_source(mine)
    _add_common(mine)

    repair = sub.add_parser("repair", help="repair target violations")
    _add_source(repair)
    _add_common(repair)
    mode = repair.add_mutually_exclusive_group()
    mode.add_argument(
        "--in-place", action="store_true", default=False,
        help="rewrite source files instead of emitting diffs",
    )
    mode.add_argument(
        "--patch-dir", metavar="DIR", default=None,
        help="write one .diff per changed file into DIR",
    )

    scan = sub.add_parser(
        "scan-history", help="find violation-introducing commits and emit patches"
    )
    scan.add_argument("--repo", metavar="PATH", help="path to a git repository clone")
    scan.add_argument("--since", metavar="DATE", help="lower bound on commit date")
    scan.add_argument("--until", metavar="DATE", help="upper bound on commit date")
    scan.add_argument(
        "--patch-dir", metavar="DIR", default=None,
        help="directory for <shortsha>-<rule>.patch files (default: patches)",
    )
    _add_common(scan)

    report = sub.add_parser("report", help="render a repair report")
    report.add_argument(
        "--reported", action="store_true",
        help="replay the published evaluation counts",
    )
    report.add_argument(
        "--from-json", metavar="FILE",
        help="re-render a repair report previously emitted as JSON",
    )
    _add_common(report)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_arg_parser()
    args = parser.parse_args(argv)
    try:
        config = build_config(args)
    except ConfigError as exc:
        print(f"{PROG}: {exc}", file=sys.stderr)
        return 2
    handler = {
        "mine": cmd_mine,
        "repair": cmd_repair,
        "scan-history": cmd_scan_history,
        "report": lambda cfg: cmd_report(cfg, args),
    }[args.command]
    try:
        return handler(config)
    except (ConfigError, RepoError, OSError) as exc:
        print(f"{PROG}: {exc}", file=sys.stderr)
        return 2


def _check_sources(config: RunConfig) -> None:
    if not config.sources:
        raise ConfigError("no source roots given (use --source)")
    for root in config.sources:
        if not Path(root).exists():
            raise ConfigError(f"source root does not exist: {root}")


def cmd_mine(config: RunConfig) -> int:
    _check_sources(config)
    run = run_mine(config.sources, config.rules, config.exclude, config.jobs)
    payload = []
    for fo in run.outcomes:
        for v, status in fo.violations:
            payload.append(violation_to_json(v, status))
    if config.fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        for item in payload:
            suffix = ""
            if not item["target"]:
                suffix = f" (excluded: {item['exclusionReason']})"
            print(
                f"{item['path']}:{item['startLine']}:{item['startCol']}: "
                f"{item['message']}{suffix}"
            )
    for err in run.errors:
        print(f"{PROG}: error: {err}", file=sys.stderr)
    if run.errors:
        return 2
    return 1 if payload else 0


def _patch_destination(patch_dir: Path, source_path: str, roots: list[str]) -> Path:
    p = Path(source_path)
    for root in roots:
        try:
            rel = p.relative_to(root)
            return patch_dir / rel.with_suffix(rel.suffix + ".diff")
        except ValueError:
            continue
    return patch_dir / (p.name + ".diff")


def _repair_json(run: RepairRun) -> dict:
    patches = []
    for fo in run.outcomes:
        if not fo.patch:
            continue
        patches.append(
            {
                "path": fo.path,
                "diff": fo.patch.diff,
                "applied": [
                    {"rule": plan.rule.value, "line": plan.violation.span.start_line}
                    for plan in fo.applied
                ],
            }
        )
    deferred = []
    for fo in run.outcomes:
        for d in fo.deferred:
            deferred.append(
                {
                    "rule": d.plan.rule.value,
                    "path": d.plan.violation.file,
                    "line": d.plan.violation.span.start_line,
                    "reason": d.reason,
                }
            )
    return {
        "report": report_to_json(run.report),
        "patches": patches,
        "deferred": deferred,
        "errors": run.errors,
    }


def _excluded_counts(fo: FileOutcome) -> dict[RuleId, int]:
    counts: dict[RuleId, int] = {}
    for v, status in fo.violations:
        if not status.is_target:
            counts[v.rule] = counts.get(v.rule, 0) + 1
    return counts


def _targets_remaining(run: RepairRun) -> bool:
    """True when some file still detects more than its excluded violations."""
    for fo in run.outcomes:
        if fo.error:
            continue
        allowed = _excluded_counts(fo)
        remaining: dict[RuleId, int] = {}
        for v in fo.after:
            remaining[v.rule] = remaining.get(v.rule, 0) + 1
        for rule, count in remaining.items():
            if count > allowed.get(rule, 0):
                return True
    return False


def cmd_repair(config: RunConfig) -> int:
    _check_sources(config)
    run = run_repair(config.sources, config.rules, config.exclude, config.jobs)

    if config.in_place:
        for fo in run.outcomes:
            if fo.patch and fo.new_text is not None:
                Path(fo.path).write_text(fo.new_text, encoding="utf-8")
    elif config.patch_dir:
        patch_dir = Path(config.patch_dir)
        patch_dir.mkdir(parents=True, exist_ok=True)
        for fo in run.outcomes:
            if fo.patch:
                dest = _patch_destination(patch_dir, fo.path, config.sources)
                dest.parent.mkdir(parents=True, exist_ok=True)
                dest.write_text(fo.patch.diff, encoding="utf-8")

    if config.fmt == "json":
        print(json.dumps(_repair_json(run), indent=2))
    else:
        if not config.in_place and not config.patch_dir:
            for fo in run.outcomes:
                if fo.patch:
                    sys.stdout.write(fo.patch.diff)
        print(report_to_text(run.report))
        for fo in run.outcomes:
            for plan in fo.applied:
                line = plan.violation.span.start_line
                print(f"fixed {plan.rule.value} at {fo.path}:{line}")
            for d in fo.deferred:
                line = d.plan.violation.span.start_line
                print(f"deferred {d.plan.rule.value} at {fo.path}:{line} ({d.reason})")
    for err in run.errors:
        print(f"{PROG}: error: {err}", file=sys.stderr)
    if run.errors:
        return 2
    if run.deferred or _targets_remaining(run):
        return 1
    return 0


def cmd_scan_history(config: RunConfig) -> int:
    if not config.repo:
        raise ConfigError("no repository given (use --repo)")
    run = scan_history(
        config.repo,
        since=config.since,
        until=config.until,
        rules=config.rules,
        jobs=config.jobs,
    )
    patch_dir = Path(config.patch_dir or "patches")
    patch_dir.mkdir(parents=True, exist_ok=True)
    for patch in run.patches:
        (patch_dir / patch.file_name).write_text(patch.diff_text, encoding="utf-8")
    payload = history_to_json(run)
    (patch_dir / "scan-report.json").write_text(
        json.dumps(payload, indent=2) + "\n", encoding="utf-8"
    )
    if config.fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        for scan in run.scans:
            rules = ", ".join(
                f"{r.value}+{scan.deltas[r].introduced}" for r in scan.introducing_rules
            )
            label = rules if rules else "no new violations"
            print(f"{scan.commit[:7]}: {label}")
        for patch in run.patches:
            print(
                f"wrote {patch.file_name} ({patch.fixed} fixed in "
                f"{len(patch.artifacts)} file(s))"
            )
        for commit, rule, reason in run.empty:
            print(f"no patch for {commit[:7]} {rule.value}: {reason}")
        for commit, reason in run.skipped:
            print(f"skipped {commit[:7]}: {reason}")
    return 1 if run.patches else 0


def cmd_report(config: RunConfig, args) -> int:
    if getattr(args, "from_json", None):
        data = json.loads(Path(args.from_json).read_text(encoding="utf-8"))
        report_obj = data.get("report", data)
        stats = [
            stats_from_counts(
                RuleId(row["rule"]), row["dv"], row["tv"], row["fv"]
            )
            for row in report_obj["rules"]
        ]
        report = aggregate(stats)
    else:
        report = reported_replay()
    if config.fmt == "json":
        print(json.dumps(report_to_json(report), indent=2))
    else:
        print(report_to_text(report))
    return 0


if __name__ == "__main__":
    sys.exit(main())
