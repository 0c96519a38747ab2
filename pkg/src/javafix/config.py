"""Run configuration: defaults, TOML config file, command-line merge.

Precedence, lowest to highest: built-in defaults, config file values,
command-line flags. The config file is ./javafix.toml when present,
overridable through the JAVAFIX_CONFIG environment variable.
"""

import os
from dataclasses import dataclass, field
from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .rules import ALL_RULES, RuleId

ENV_CONFIG_PATH = "JAVAFIX_CONFIG"
DEFAULT_CONFIG_NAME = "javafix.toml"

_VALID_KEYS = {
    "source",
    "rule",
    "exclude",
    "format",
    "jobs",
    "in_place",
    "patch_dir",
    "repo",
    "since",
    "until",
}


class ConfigError(Exception):
    """Invalid configuration value or combination."""


@dataclass
class RunConfig:
    sources: list[str] = field(default_factory=list)
    rules: list[RuleId] = field(default_factory=lambda: list(ALL_RULES))
    exclude: list[str] = field(default_factory=list)
    fmt: str = "text"
    jobs: int = 1
    in_place: bool = False
    patch_dir: str | None = None
    repo: str | None = None
    since: str | None = None
    until: str | None = None

    def __post_init__(self):
        if self.in_place and self.patch_dir:
            raise ConfigError("in-place and patch-dir are mutually exclusive")
        if self.fmt not in ("text", "json"):
            raise ConfigError(f"unknown output format {self.fmt!r}")
        if self.jobs < 1:
            raise ConfigError("jobs must be at least 1")


def parse_rule_ids(names: list[str]) -> list[RuleId]:
    rules = []
    valid = {r.value: r for r in ALL_RULES}
    for name in names:
        if name not in valid:
            known = ", ".join(sorted(valid))
            raise ConfigError(f"unknown rule {name!r}; known rules: {known}")
        rule = valid[name]
        if rule not in rules:
            rules.append(rule)
    return rules


def find_config_file(cwd: str | None = None) -> Path | None:
    override = os.environ.get(ENV_CONFIG_PATH)
    if override:
        path = Path(override)
        if not path.is_file():
            raise ConfigError(f"{ENV_CONFIG_PATH} points to a missing file: {override}")
        return path
    candidate = Path(cwd or ".") / DEFAULT_CONFIG_NAME
    return candidate if candidate.is_file() else None


def load_config_file(path: Path) -> dict:
    with open(path, "rb") as fh:
        try:
            data = tomllib.load(fh)
        except tomllib.TOMLDecodeError as exc:
            raise ConfigError(f"{path}: {exc}") from exc
    unknown = set(data) - _VALID_KEYS
    if unknown:
        raise ConfigError(f"{path}: unknown keys {sorted(unknown)}")
    return data


def _as_list(value) -> list[str]:
    if isinstance(value, str):
        return [value]
    if isinstance(value, list):
        return [str(v) for v in value]
    raise ConfigError(f"expected string or list, got {value!r}")


def build_config(args, cwd: str | None = None) -> RunConfig:
    """Merge config-file values under the parsed command-line flags."""
    values: dict = {}
    path = find_config_file(cwd)
    if path is not None:
        values = load_config_file(path)

    sources = getattr(args, "source", None) or _as_list(values.get("source", []))
    rule_names = getattr(args, "rule", None) or _as_list(values.get("rule", []))
    exclude = getattr(args, "exclude", None) or _as_list(values.get("exclude", []))
    fmt = getattr(args, "format", None) or values.get("format", "text")
    jobs = getattr(args, "jobs", None) or values.get("jobs", 1)
    in_place = getattr(args, "in_place", False) or bool(values.get("in_place", False))
    patch_dir = getattr(args, "patch_dir", None) or values.get("patch_dir")
    repo = getattr(args, "repo", None) or values.get("repo")
    since = getattr(args, "since", None) or values.get("since")
    until = getattr(args, "until", None) or values.get("until")

    rules = parse_rule_ids(rule_names) if rule_names else list(ALL_RULES)
    if not isinstance(jobs, int):
        raise ConfigError(f"jobs must be an integer, got {jobs!r}")
    return RunConfig(
        sources=sources,
        rules=rules,
        exclude=exclude,
        fmt=str(fmt),
        jobs=jobs,
        in_place=bool(in_place),
        patch_dir=patch_dir,
        repo=repo,
        since=since,
        until=until,
    )
