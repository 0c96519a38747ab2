"""Source file loading and byte-position bookkeeping."""

from dataclasses import dataclass
from pathlib import Path


@dataclass(frozen=True)
class Span:
    """Half-open byte range [start, end) with 1-based line/column endpoints."""

    start: int
    end: int
    start_line: int
    start_col: int
    end_line: int
    end_col: int

    def contains(self, other: "Span") -> bool:
        return self.start <= other.start and other.end <= self.end

    def overlaps(self, other: "Span") -> bool:
        return self.start < other.end and other.start < self.end

    def __repr__(self) -> str:
        return f"Span({self.start}:{self.end} L{self.start_line}.{self.start_col}-L{self.end_line}.{self.end_col})"


class SourceDecodeError(Exception):
    """File content is not valid UTF-8; such files are skipped upstream."""


@dataclass(frozen=True)
class SourceFile:
    """One Java source file, decoded as UTF-8.

    newline_style and trailing_newline are derived from the text so that
    output can reproduce the original byte stream exactly.
    """

    path: str
    text: str
    newline_style: str  # "lf" | "crlf" | "mixed"
    trailing_newline: bool

    @classmethod
    def from_text(cls, text: str, path: str = "<memory>") -> "SourceFile":
        crlf = text.count("\r\n")
        lf = text.count("\n") - crlf
        if crlf and lf:
            style = "mixed"
        elif crlf:
            style = "crlf"
        else:
            style = "lf"
        return cls(
            path=path,
            text=text,
            newline_style=style,
            trailing_newline=text.endswith("\n"),
        )

    @classmethod
    def from_path(cls, path: str | Path) -> "SourceFile":
        raw = Path(path).read_bytes()
        try:
            text = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise SourceDecodeError(f"{path}: not valid UTF-8 ({exc})") from None
        return cls.from_text(text, str(path))

    @property
    def eol(self) -> str:
        """Newline sequence to use for synthesized lines."""
        return "\r\n" if self.newline_style == "crlf" else "\n"

    def encode(self) -> bytes:
        return self.text.encode("utf-8")


def line_starts(text: str) -> list[int]:
    """Character offsets of line starts; index i holds the offset of line i+1."""
    starts = [0]
    for i, ch in enumerate(text):
        if ch == "\n":
            starts.append(i + 1)
    return starts


def position(starts: list[int], offset: int) -> tuple[int, int]:
    """(line, col), both 1-based, for a character offset."""
    import bisect

    line = bisect.bisect_right(starts, offset)
    return line, offset - starts[line - 1] + 1


def span_from_offsets(starts: list[int], start: int, end: int) -> Span:
    sl, sc = position(starts, start)
    el, ec = position(starts, end)
    return Span(start, end, sl, sc, el, ec)
