"""High-fidelity printing: splices, indentation inference, unified diffs.

Printing is anchored to the original text. A tree with no edits prints as
the original bytes; edits are expressed as non-overlapping text splices
(byte range plus replacement) so everything outside an edited fragment is
reproduced exactly, comments and odd spacing included.
"""

import difflib
from dataclasses import dataclass

from .sourcefile import SourceFile
from .tree import SyntaxNode


class SpliceConflict(Exception):
    """Two splices overlap; the edit set cannot be applied together."""


@dataclass(frozen=True)
class Splice:
    """Replace text[start:end] with replacement."""

    start: int
    end: int
    replacement: str

    def __post_init__(self):
        if self.start > self.end:
            raise ValueError(f"splice range reversed: {self.start}..{self.end}")


def render(text: str, splices: list[Splice] | tuple[Splice, ...] = ()) -> str:
    """Apply splices to text. Zero splices returns text unchanged."""
    if not splices:
        return text
    ordered = sorted(splices, key=lambda s: (s.start, s.end))
    for prev, nxt in zip(ordered, ordered[1:]):
        if nxt.start < prev.end:
            raise SpliceConflict(
                f"splice {nxt.start}..{nxt.end} overlaps {prev.start}..{prev.end}"
            )
        if nxt.start == prev.start == prev.end == nxt.end:
            # Two insertions at the same point have no defined order.
            raise SpliceConflict(f"duplicate insertion point at {nxt.start}")
    out: list[str] = []
    cursor = 0
    for s in ordered:
        out.append(text[cursor:s.start])
        out.append(s.replacement)
        cursor = s.end
    out.append(text[cursor:])
    return "".join(out)


def print_tree(source: SourceFile, splices: list[Splice] | tuple[Splice, ...] = ()) -> str:
    """Print a parsed file, applying any pending splices."""
    return render(source.text, splices)


def verify_token_coverage(source: SourceFile, root: SyntaxNode) -> None:
    """Check that tree leaves cover every significant token, in order.

    This is the lossless-tree invariant: printing works by slicing the
    original text, so the tree must account for each significant token
    exactly once and in file order.
    """
    from .lexer import TokenKind, tokenize

    expected = [
        (t.start, t.end)
        for t in tokenize(source)
        if not t.is_documentary() and t.kind is not TokenKind.EOF
    ]
    actual = [(leaf.span.start, leaf.span.end) for leaf in root.leaves()]
    if actual != expected:
        raise AssertionError(
            f"leaf spans diverge from token stream: {len(actual)} leaves "
            f"vs {len(expected)} tokens"
        )


def line_start(text: str, offset: int) -> int:
    """Offset of the first character of the line containing offset."""
    return text.rfind("\n", 0, offset) + 1


def leading_whitespace(text: str, offset: int) -> str:
    """Indentation of the line containing offset."""
    start = line_start(text, offset)
    end = start
    while end < len(text) and text[end] in (" ", "\t"):
        end += 1
    return text[start:end]


def infer_indent_unit(text: str) -> str:
    """Guess one indentation step from the file's own lines.

    Tabs win if any indented line uses them; otherwise the most common
    positive indent increase between consecutive code lines decides
    between two and four spaces, defaulting to four.
    """
    indents: list[str] = []
    for line in text.splitlines():
        stripped = line.lstrip(" \t")
        if not stripped:
            continue
        indents.append(line[: len(line) - len(stripped)])
    if any("\t" in ind for ind in indents):
        return "\t"
    votes: dict[int, int] = {}
    prev = 0
    for ind in indents:
        width = len(ind)
        if width > prev:
            step = width - prev
            votes[step] = votes.get(step, 0) + 1
        prev = width
    if votes:
        best = max(sorted(votes), key=lambda k: votes[k])
        if best in (2, 4):
            return " " * best
    return "    "


def indent_block(text: str, unit: str, eol: str) -> str:
    """Add one indent level to every non-empty line of text."""
    lines = text.split("\n")
    out = []
    for line in lines:
        body = line[:-1] if line.endswith("\r") else line
        if body.strip():
            out.append(unit + line)
        else:
            out.append(line)
    return "\n".join(out)


@dataclass(frozen=True)
class PatchArtifact:
    """A unified diff for one file, plus the texts it connects."""

    path: str
    old_text: str
    new_text: str
    diff: str


def make_patch(path: str, old_text: str, new_text: str, context: int = 3) -> PatchArtifact:
    """Unified diff in git style: a/<path> vs b/<path>."""
    old_lines = old_text.splitlines(keepends=True)
    new_lines = new_text.splitlines(keepends=True)
    label = path.replace("\\", "/").lstrip("/")
    chunks = list(
        difflib.unified_diff(
            old_lines,
            new_lines,
            fromfile=f"a/{label}",
            tofile=f"b/{label}",
            n=context,
        )
    )
    out: list[str] = []
    for chunk in chunks:
        if not chunk.endswith("\n"):
            out.append(chunk + "\n")
            out.append("\\ No newline at end of file\n")
        else:
            out.append(chunk)
    return PatchArtifact(path=path, old_text=old_text, new_text=new_text, diff="".join(out))


def apply_patch_text(old_text: str, diff: str) -> str:
    """Re-apply a unified diff produced by make_patch. Used as an oracle."""
    old_lines = old_text.splitlines(keepends=True)
    new_lines: list[str] = []
    cursor = 0
    prev_tag = ""
    for line in diff.splitlines(keepends=True):
        if line.startswith(("---", "+++")):
            prev_tag = ""
            continue
        if line.startswith("@@"):
            old_range = line.split()[1]
            start = int(old_range.lstrip("-").split(",")[0])
            length = int(old_range.split(",")[1]) if "," in old_range else 1
            hunk_start = start - 1 if length > 0 else start
            new_lines.extend(old_lines[cursor:hunk_start])
            cursor = hunk_start
            prev_tag = "@"
            continue
        if line.startswith("\\"):
            # Missing-trailing-newline marker. After "+" the emitted line
            # must lose the "\n" the patch format added; after " " the
            # emitted line came straight from old_lines and is already
            # unterminated; after "-" only the old side is affected.
            if prev_tag == "+" and new_lines and new_lines[-1].endswith("\n"):
                new_lines[-1] = new_lines[-1][:-1]
            continue
        if line.startswith("-"):
            cursor += 1
        elif line.startswith("+"):
            new_lines.append(line[1:])
        elif line.startswith(" "):
            new_lines.append(old_lines[cursor])
            cursor += 1
        prev_tag = line[0] if line else ""
    new_lines.extend(old_lines[cursor:])
    return "".join(new_lines)
