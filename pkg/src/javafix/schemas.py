"""JSON schemas for the machine-readable outputs.

Kept as plain dicts so tests can validate tool output with jsonschema
and downstream consumers can vendor them.
"""

RULE_ID_PATTERN = "^S[0-9]{4}$"

VIOLATION_SCHEMA = {
    "type": "object",
    "required": ["rule", "path", "startLine", "startCol", "endLine", "endCol", "message"],
    "properties": {
        "rule": {"type": "string", "pattern": RULE_ID_PATTERN},
        "path": {"type": "string"},
        "startLine": {"type": "integer", "minimum": 1},
        "startCol": {"type": "integer", "minimum": 1},
        "endLine": {"type": "integer", "minimum": 1},
        "endCol": {"type": "integer", "minimum": 1},
        "message": {"type": "string"},
        "target": {"type": "boolean"},
        "exclusionReason": {"type": "string"},
    },
    "additionalProperties": False,
}

MINE_SCHEMA = {
    "type": "array",
    "items": VIOLATION_SCHEMA,
}

_RATIO = {"type": ["integer", "null"], "minimum": 0, "maximum": 100}

_STATS_ROW = {
    "type": "object",
    "required": ["dv", "tv", "fv", "tdr", "ftr", "fdr", "trtMinutes"],
    "properties": {
        "rule": {"type": "string", "pattern": RULE_ID_PATTERN},
        "dv": {"type": "integer", "minimum": 0},
        "tv": {"type": "integer", "minimum": 0},
        "fv": {"type": "integer"},
        "tdr": _RATIO,
        "ftr": _RATIO,
        "fdr": _RATIO,
        "trtMinutes": {"type": "integer", "minimum": 0},
    },
    "additionalProperties": False,
}

REPORT_SCHEMA = {
    "type": "object",
    "required": ["rules", "all"],
    "properties": {
        "rules": {"type": "array", "items": _STATS_ROW},
        "all": _STATS_ROW,
        "warnings": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["rule", "message"],
                "properties": {
                    "rule": {"type": "string", "pattern": RULE_ID_PATTERN},
                    "message": {"type": "string"},
                },
                "additionalProperties": False,
            },
        },
    },
    "additionalProperties": False,
}

REPAIR_SCHEMA = {
    "type": "object",
    "required": ["report", "patches", "deferred", "errors"],
    "properties": {
        "report": REPORT_SCHEMA,
        "patches": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["path", "diff", "applied"],
                "properties": {
                    "path": {"type": "string"},
                    "diff": {"type": "string"},
                    "applied": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["rule", "line"],
                            "properties": {
                                "rule": {"type": "string", "pattern": RULE_ID_PATTERN},
                                "line": {"type": "integer", "minimum": 1},
                            },
                            "additionalProperties": False,
                        },
                    },
                },
                "additionalProperties": False,
            },
        },
        "deferred": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["rule", "path", "line", "reason"],
                "properties": {
                    "rule": {"type": "string", "pattern": RULE_ID_PATTERN},
                    "path": {"type": "string"},
                    "line": {"type": "integer", "minimum": 1},
                    "reason": {"type": "string"},
                },
                "additionalProperties": False,
            },
        },
        "errors": {"type": "array", "items": {"type": "string"}},
    },
    "additionalProperties": False,
}

_RULE_DELTA = {
    "type": "object",
    "required": ["atCommit", "atParent", "introduced"],
    "properties": {
        "atCommit": {"type": "integer", "minimum": 0},
        "atParent": {"type": "integer", "minimum": 0},
        "introduced": {"type": "integer", "minimum": 0},
    },
    "additionalProperties": False,
}

HISTORY_SCHEMA = {
    "type": "object",
    "required": ["repo", "introducedDefinition", "commits", "patches"],
    "properties": {
        "repo": {"type": "string"},
        "since": {"type": ["string", "null"]},
        "until": {"type": ["string", "null"]},
        "introducedDefinition": {"type": "string"},
        "commits": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["commit", "parent", "changedFiles", "rules"],
                "properties": {
                    "commit": {"type": "string"},
                    "parent": {"type": "string"},
                    "changedFiles": {"type": "array", "items": {"type": "string"}},
                    "rules": {
                        "type": "object",
                        "patternProperties": {RULE_ID_PATTERN: _RULE_DELTA},
                        "additionalProperties": False,
                    },
                    "diagnostics": {"type": "array", "items": {"type": "string"}},
                },
                "additionalProperties": False,
            },
        },
        "patches": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["commit", "rule", "file", "fixed", "files"],
                "properties": {
                    "commit": {"type": "string"},
                    "rule": {"type": "string", "pattern": RULE_ID_PATTERN},
                    "file": {"type": "string"},
                    "fixed": {"type": "integer", "minimum": 0},
                    "files": {"type": "array", "items": {"type": "string"}},
                },
                "additionalProperties": False,
            },
        },
        "emptyPatches": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["commit", "rule", "reason"],
                "properties": {
                    "commit": {"type": "string"},
                    "rule": {"type": "string", "pattern": RULE_ID_PATTERN},
                    "reason": {"type": "string"},
                },
                "additionalProperties": False,
            },
        },
        "skippedCommits": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["commit", "reason"],
                "properties": {
                    "commit": {"type": "string"},
                    "reason": {"type": "string"},
                },
                "additionalProperties": False,
            },
        },
    },
    "additionalProperties": False,
}
