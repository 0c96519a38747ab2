"""History mining against a scripted fixture repository with known counts."""
from __future__ import annotations

import importlib.util
import json
import subprocess
from pathlib import Path

import pytest

from javafix.history import (
    EMPTY_TREE,
    GitRepo,
    RepoError,
    enumerate_commits,
    history_to_json,
    scan_commit,
    scan_history,
)
from javafix.rules import RuleId

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


def _load_fixture_builder():
    spec = importlib.util.spec_from_file_location(
        "make_history_fixture", SCRIPTS / "make_history_fixture.py"
    )
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


@pytest.fixture(scope="session")
def fixture_repo(tmp_path_factory) -> Path:
    root = tmp_path_factory.mktemp("history")
    repo = root / "repo"
    builder = _load_fixture_builder()
    builder.build(repo)
    return repo


@pytest.fixture(scope="session")
def expected(fixture_repo: Path) -> dict:
    return json.loads((fixture_repo.parent / "expected.json").read_text(encoding="utf-8"))


class TestGitAccess:
    def test_non_repo_rejected(self, tmp_path):
        with pytest.raises(RepoError):
            GitRepo(tmp_path)

    def test_commit_enumeration_counts(self, fixture_repo, expected):
        repo = GitRepo(fixture_repo)
        all_commits = repo.first_parent_commits(None, None)
        assert len(all_commits) == expected["commits"]
        touching = enumerate_commits(repo)
        assert len(touching) == expected["javaTouchingCommits"]

    def test_root_commit_parent_is_empty_tree(self, fixture_repo):
        repo = GitRepo(fixture_repo)
        first = repo.first_parent_commits(None, None)[0]
        assert repo.parents(first) == []
        scan = scan_commit(repo, first)
        # Violation-free initial import: nothing introduced against the
        # empty tree baseline.
        assert not scan.has_any_violations

    def test_short_sha_prefixes_full(self, fixture_repo):
        repo = GitRepo(fixture_repo)
        sha = repo.first_parent_commits(None, None)[0]
        assert sha.startswith(repo.short(sha))


class TestScan:
    def test_introducing_commits_and_rules(self, fixture_repo, expected):
        run = scan_history(str(fixture_repo))
        introduced = {}
        for scan in run.scans:
            for rule in scan.introducing_rules:
                introduced.setdefault(scan.commit, {})[rule.value] = (
                    scan.deltas[rule].introduced
                )
        repo = GitRepo(fixture_repo)
        by_subject = {}
        for sha in repo.first_parent_commits(None, None):
            subject = subprocess.run(
                ["git", "-C", str(fixture_repo), "log", "-1", "--format=%s", sha],
                capture_output=True,
                text=True,
                check=True,
            ).stdout.strip()
            by_subject[subject] = sha
        expected_introducing = {
            by_subject[entry["subject"]]: entry["rules"]
            for entry in expected["introducing"]
        }
        assert introduced == expected_introducing

    def test_moved_code_introduces_nothing(self, fixture_repo):
        # The commit that only reorders methods keeps per-file counts level,
        # so its delta must be zero everywhere.
        repo = GitRepo(fixture_repo)
        shas = repo.first_parent_commits(None, None)
        for sha in shas:
            subject = subprocess.run(
                ["git", "-C", str(fixture_repo), "log", "-1", "--format=%s", sha],
                capture_output=True,
                text=True,
                check=True,
            ).stdout.strip()
            if "reorder" in subject.lower() or "move" in subject.lower():
                scan = scan_commit(repo, sha)
                assert not scan.introducing_rules
                return
        pytest.fail("fixture lost its method-move commit")

    def test_patch_inventory(self, fixture_repo, expected):
        run = scan_history(str(fixture_repo))
        assert len(run.patches) == expected["patches"]
        keys = {(p.commit, p.rule.value) for p in run.patches}
        assert len(keys) == expected["patches"], "patches keyed by (commit, rule)"
        fixed_by_rule = {p.rule.value: p.fixed for p in run.patches}
        assert fixed_by_rule == expected["fixedPerPatch"]
        assert run.empty == []
        assert run.skipped == []

    def test_patch_file_names(self, fixture_repo):
        repo = GitRepo(fixture_repo)
        run = scan_history(str(fixture_repo))
        for patch in run.patches:
            assert patch.file_name == f"{repo.short(patch.commit)}-{patch.rule.value}.patch"
            assert patch.diff_text.strip(), "patches carry a real diff"

    def test_scan_is_deterministic(self, fixture_repo):
        a = scan_history(str(fixture_repo))
        b = scan_history(str(fixture_repo), jobs=4)
        assert [p.file_name for p in a.patches] == [p.file_name for p in b.patches]
        assert [p.diff_text for p in a.patches] == [p.diff_text for p in b.patches]
        assert history_to_json(a) == history_to_json(b)

    def test_since_until_narrow_the_range(self, fixture_repo):
        # The fixture commits carry fixed dates in March 2021.
        run = scan_history(str(fixture_repo), since="2021-04-01")
        assert run.scans == []
        assert run.patches == []

    def test_json_shape(self, fixture_repo, expected):
        run = scan_history(str(fixture_repo))
        data = history_to_json(run)
        assert data["introducedDefinition"]
        assert len(data["patches"]) == expected["patches"]
        for entry in data["patches"]:
            assert set(entry) >= {"commit", "rule", "file", "fixed", "files"}
        for commit in data["commits"]:
            assert set(commit) >= {"commit", "parent", "changedFiles", "rules"}


class TestOctopusAndEdgeCases:
    def test_octopus_merge_skipped_with_note(self, tmp_path):
        repo = tmp_path / "octo"
        repo.mkdir()
        env_dates = {"GIT_AUTHOR_DATE": "2021-05-01T10:00:00", "GIT_COMMITTER_DATE": "2021-05-01T10:00:00"}

        def git(*args):
            subprocess.run(
                ["git", "-C", str(repo), *args],
                check=True,
                capture_output=True,
                env={
                    "GIT_AUTHOR_NAME": "t",
                    "GIT_AUTHOR_EMAIL": "t@example.com",
                    "GIT_COMMITTER_NAME": "t",
                    "GIT_COMMITTER_EMAIL": "t@example.com",
                    "PATH": "/usr/bin:/bin",
                    **env_dates,
                },
            )

        git("init", "-q", "-b", "main")
        (repo / "A.java").write_text("class A { }\n", encoding="utf-8")
        git("add", "A.java")
        git("commit", "-q", "-m", "base")
        for branch in ("b1", "b2", "b3"):
            git("checkout", "-q", "-b", branch, "main")
            (repo / f"{branch.upper()}.java").write_text(
                f"class {branch.upper()} {{ }}\n", encoding="utf-8"
            )
            git("add", ".")
            git("commit", "-q", "-m", f"add {branch}")
        git("checkout", "-q", "main")
        git("merge", "-q", "--no-ff", "-m", "octopus", "b1", "b2", "b3")
        run = scan_history(str(repo))
        assert any("octopus" in reason for _, reason in run.skipped)

    def test_empty_tree_constant(self):
        assert EMPTY_TREE == "4b825dc642cb6eb9a060e54bf8d69288fbee4904"
