"""Mining a git history for commits that introduce rule violations.

A commit "introduces" violations of a rule when its changed .java files
contain more violations at the commit than the same files at its first
parent: per file, max(0, count_at_commit - count_at_parent), summed.
This count-delta definition is position-insensitive, so moving an
existing violation around a file does not count as introducing one.

Each (commit, rule) with a positive introduced count yields one patch
produced by running the repair pipeline on the changed files as they
exist at that commit. The repository is read purely through git
plumbing commands; the working tree is never touched.
"""

import subprocess
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .fixes import apply_plans, build_plan
from .lexer import LexError
from .parser import ParseError, parse
from .printer import PatchArtifact, make_patch
from .rules import ALL_RULES, RuleId, check_assumptions, detect_all
from .typehints import build_scopes

EMPTY_TREE = "4b825dc642cb6eb9a060e54bf8d69288fbee4904"


class RepoError(Exception):
    """The given path is not a usable git repository."""


class EmptyPatch(Exception):
    """Every introduced violation of the rule was excluded, so no patch."""


class GitRepo:
    """Read-only accessor over an on-disk repository.

    Calls are serialized so parallel commit scans cannot interleave
    reads against a repository being concurrently repacked.
    """

    def __init__(self, path: str):
        self.path = path
        self._lock = threading.Lock()
        try:
            self._git("rev-parse", "--git-dir")
        except RepoError:
            raise
        except FileNotFoundError as exc:
            raise RepoError(f"git executable not found: {exc}") from exc

    def _git(self, *args: str) -> str:
        with self._lock:
            proc = subprocess.run(
                ["git", "-C", self.path, *args],
                capture_output=True,
                text=True,
            )
        if proc.returncode != 0:
            raise RepoError(
                f"git {' '.join(args)} failed in {self.path}: {proc.stderr.strip()}"
            )
        return proc.stdout

    def first_parent_commits(self, since: str | None, until: str | None) -> list[str]:
        args = ["rev-list", "--first-parent", "--reverse"]
        if since:
            args.append(f"--since={since}")
        if until:
            args.append(f"--until={until}")
        args.append("HEAD")
        out = self._git(*args)
        return out.split()

    def parents(self, commit: str) -> list[str]:
        out = self._git("rev-list", "--parents", "-n", "1", commit)
        return out.split()[1:]

    def short(self, commit: str) -> str:
        return self._git("rev-parse", "--short", commit).strip()

    def changed_java_files(self, parent: str, commit: str) -> list[tuple[str, str]]:
        """(status, path) pairs for .java files differing between the trees."""
        out = self._git("diff-tree", "-r", "--name-status", parent, commit)
        changes = []
        for line in out.splitlines():
            if not line.strip():
                continue
            status, _, path = line.partition("\t")
            if path.endswith(".java"):
                changes.append((status.strip(), path))
        return changes

    def blob_text(self, commit: str, path: str) -> str:
        out = self._git("cat-file", "blob", f"{commit}:{path}")
        return out


@dataclass
class RuleDelta:
    at_commit: int
    at_parent: int
    introduced: int


@dataclass
class CommitScan:
    commit: str
    parent: str
    changed_paths: list[str]
    deltas: dict[RuleId, RuleDelta]
    diagnostics: list[str] = field(default_factory=list)

    @property
    def introducing_rules(self) -> list[RuleId]:
        return sorted(
            (r for r, d in self.deltas.items() if d.introduced > 0),
            key=lambda r: r.value,
        )

    @property
    def has_any_violations(self) -> bool:
        return any(d.at_commit or d.at_parent for d in self.deltas.values())


@dataclass
class CommitPatch:
    commit: str
    short: str
    rule: RuleId
    artifacts: list[PatchArtifact]
    fixed: int

    @property
    def file_name(self) -> str:
        return f"{self.short}-{self.rule.value}.patch"

    @property
    def diff_text(self) -> str:
        return "".join(a.diff for a in self.artifacts)


@dataclass
class HistoryRun:
    repo: str
    since: str | None
    until: str | None
    scans: list[CommitScan]
    patches: list[CommitPatch]
    empty: list[tuple[str, RuleId, str]]  # (commit, rule, reason)
    skipped: list[tuple[str, str]]  # (commit, reason)


def enumerate_commits(
    repo: GitRepo, since: str | None = None, until: str | None = None
) -> list[str]:
    """First-parent chronological commits touching at least one .java file."""
    commits = []
    for sha in repo.first_parent_commits(since, until):
        parents = repo.parents(sha)
        parent = parents[0] if parents else EMPTY_TREE
        if repo.changed_java_files(parent, sha):
            commits.append(sha)
    return commits


def _count_violations(
    repo: GitRepo, commit: str, path: str, rules: list[RuleId], diagnostics: list[str]
) -> dict[RuleId, int] | None:
    try:
        text = repo.blob_text(commit, path)
    except RepoError:
        return {r: 0 for r in rules}  # file absent at this revision
    try:
        result = parse(text)
    except (LexError, ParseError) as exc:
        diagnostics.append(f"{path} at {commit[:7]}: {exc}")
        return None
    scopes = build_scopes(result.tree)
    found = detect_all(result.tree, scopes, rules, path=path)
    counts = {r: 0 for r in rules}
    for v in found:
        counts[v.rule] += 1
    return counts


def scan_commit(repo: GitRepo, commit: str, rules: list[RuleId] | None = None) -> CommitScan:
    rules = rules or list(ALL_RULES)
    parents = repo.parents(commit)
    parent = parents[0] if parents else EMPTY_TREE
    changes = repo.changed_java_files(parent, commit)
    diagnostics: list[str] = []
    totals = {r: RuleDelta(0, 0, 0) for r in rules}
    changed_paths = []
    for status, path in changes:
        changed_paths.append(path)
        at_commit = (
            {r: 0 for r in rules}
            if status == "D"
            else _count_violations(repo, commit, path, rules, diagnostics)
        )
        at_parent = (
            {r: 0 for r in rules}
            if status == "A"
            else _count_violations(repo, parent, path, rules, diagnostics)
        )
        if at_commit is None or at_parent is None:
            continue  # unparseable at one side: skip the file entirely
        for r in rules:
            totals[r].at_commit += at_commit[r]
            totals[r].at_parent += at_parent[r]
            totals[r].introduced += max(0, at_commit[r] - at_parent[r])
    return CommitScan(
        commit=commit,
        parent=parent,
        changed_paths=changed_paths,
        deltas=totals,
        diagnostics=diagnostics,
    )


def generate_commit_patch(repo: GitRepo, scan: CommitScan, rule: RuleId) -> CommitPatch:
    """Repair every target violation of the rule in the commit's changed files."""
    artifacts = []
    fixed = 0
    reasons = []
    for path in scan.changed_paths:
        try:
            text = repo.blob_text(scan.commit, path)
        except RepoError:
            continue  # deleted at this commit
        try:
            result = parse(text)
        except (LexError, ParseError):
            continue
        scopes = build_scopes(result.tree)
        found = detect_all(result.tree, scopes, [rule], path=path)
        if not found:
            continue
        targets = []
        for v in found:
            status = check_assumptions(v, result.tree, scopes)
            if status.is_target:
                targets.append(v)
            else:
                reasons.append(f"{path}:{v.span.start_line}: {status.exclusion_reason}")
        if not targets:
            continue
        plans = [build_plan(v, result, scopes) for v in targets]
        outcome = apply_plans(result, plans)
        if outcome.text == text:
            continue
        after = parse(outcome.text)
        remaining = detect_all(after.tree, build_scopes(after.tree), [rule], path=path)
        fixed += len(found) - len(remaining)
        artifacts.append(make_patch(path, text, outcome.text))
    if not artifacts:
        detail = "; ".join(reasons) if reasons else "no repairable violations"
        raise EmptyPatch(f"{scan.commit[:7]} {rule.value}: {detail}")
    return CommitPatch(
        commit=scan.commit,
        short=repo.short(scan.commit),
        rule=rule,
        artifacts=artifacts,
        fixed=fixed,
    )


def scan_history(
    repo_path: str,
    since: str | None = None,
    until: str | None = None,
    rules: list[RuleId] | None = None,
    jobs: int = 1,
) -> HistoryRun:
    """Scan a repository range and build one patch per introducing (commit, rule)."""
    rules = rules or list(ALL_RULES)
    repo = GitRepo(repo_path)
    ordered = repo.first_parent_commits(since, until)
    skipped: list[tuple[str, str]] = []
    to_scan: list[tuple[str, str]] = []  # (commit, first parent)
    for sha in ordered:
        parents = repo.parents(sha)
        if len(parents) > 2:
            skipped.append((sha, "octopus merge"))
            continue
        parent = parents[0] if parents else EMPTY_TREE
        if repo.changed_java_files(parent, sha):
            to_scan.append((sha, parent))

    def scan_one(item: tuple[str, str]) -> CommitScan:
        return scan_commit(repo, item[0], rules)

    if jobs > 1 and len(to_scan) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            scans = list(pool.map(scan_one, to_scan))
    else:
        scans = [scan_one(item) for item in to_scan]

    scans = [s for s in scans if s.has_any_violations]
    patches: list[CommitPatch] = []
    empty: list[tuple[str, RuleId, str]] = []
    for scan in scans:
        for rule in scan.introducing_rules:
            try:
                patches.append(generate_commit_patch(repo, scan, rule))
            except EmptyPatch as exc:
                empty.append((scan.commit, rule, str(exc)))
    return HistoryRun(
        repo=repo_path,
        since=since,
        until=until,
        scans=scans,
        patches=patches,
        empty=empty,
        skipped=skipped,
    )


def history_to_json(run: HistoryRun) -> dict:
    commits = []
    for scan in run.scans:
        commits.append(
            {
                "commit": scan.commit,
                "parent": scan.parent,
                "changedFiles": scan.changed_paths,
                "rules": {
                    r.value: {
                        "atCommit": d.at_commit,
                        "atParent": d.at_parent,
                        "introduced": d.introduced,
                    }
                    for r, d in sorted(scan.deltas.items(), key=lambda kv: kv[0].value)
                    if d.at_commit or d.at_parent
                },
                "diagnostics": scan.diagnostics,
            }
        )
    return {
        "repo": run.repo,
        "since": run.since,
        "until": run.until,
        "introducedDefinition": (
            "per changed file, max(0, violations at commit - violations at "
            "first parent), summed per rule"
        ),
        "commits": commits,
        "patches": [
            {
                "commit": p.commit,
                "rule": p.rule.value,
                "file": p.file_name,
                "fixed": p.fixed,
                "files": [a.path for a in p.artifacts],
            }
            for p in run.patches
        ],
        "emptyPatches": [
            {"commit": c, "rule": r.value, "reason": reason} for c, r, reason in run.empty
        ],
        "skippedCommits": [
            {"commit": c, "reason": reason} for c, reason in run.skipped
        ],
    }
