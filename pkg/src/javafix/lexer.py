"""Java tokenizer that keeps every byte of the input.

Whitespace and comments are emitted as documentary tokens, so the
concatenation of all lexemes always reproduces the file text exactly.
"""

import re
from dataclasses import dataclass
from enum import Enum, auto

from .sourcefile import SourceFile, Span, line_starts, span_from_offsets


class TokenKind(Enum):
    WHITESPACE = auto()
    LINE_COMMENT = auto()
    BLOCK_COMMENT = auto()
    IDENT = auto()
    KEYWORD = auto()
    INT = auto()
    FLOAT = auto()
    CHAR = auto()
    STRING = auto()
    BOOL = auto()
    NULL = auto()
    OP = auto()
    EOF = auto()


DOCUMENTARY = frozenset({TokenKind.WHITESPACE, TokenKind.LINE_COMMENT, TokenKind.BLOCK_COMMENT})

KEYWORDS = frozenset(
    """abstract assert boolean break byte case catch char class const continue
    default do double else enum extends final finally float for goto if
    implements import instanceof int interface long native new package private
    protected public return short static strictfp super switch synchronized
    this throw throws transient try void volatile while""".split()
)

# Longest-first so the scanner is maximal-munch.
OPERATORS = [
    ">>>=",
    ">>>", "<<=", ">>=", "...",
    "->", "::", "<<", ">>", "<=", ">=", "==", "!=", "&&", "||", "++", "--",
    "+=", "-=", "*=", "/=", "&=", "|=", "^=", "%=",
    "+", "-", "*", "/", "%", "=", "<", ">", "!", "&", "|", "^", "~", "?", ":",
    ";", ",", ".", "(", ")", "{", "}", "[", "]", "@",
]

_FLOAT = (
    r"(?:\d[\d_]*\.[\d_]*(?:[eE][+-]?\d[\d_]*)?[fFdD]?"
    r"|\.\d[\d_]*(?:[eE][+-]?\d[\d_]*)?[fFdD]?"
    r"|\d[\d_]*[eE][+-]?\d[\d_]*[fFdD]?"
    r"|\d[\d_]*[fFdD])"
)
_INT = r"(?:0[xX][0-9a-fA-F_]+[lL]?|0[bB][01_]+[lL]?|\d[\d_]*[lL]?)"

_MASTER = re.compile(
    "|".join(
        f"(?P<{name}>{pattern})"
        for name, pattern in [
            ("ws", r"[ \t\f\r\n]+"),
            ("blockcomment", r"/\*(?s:.*?)\*/"),
            ("linecomment", r"//[^\n]*"),
            ("floatlit", _FLOAT),
            ("intlit", _INT),
            ("charlit", r"'(?:[^'\\\n]|\\.)+'"),
            ("stringlit", r'"(?:[^"\\\n]|\\.)*"'),
            ("ident", r"(?:[^\W\d]|\$)(?:\w|\$)*"),
            ("op", "|".join(re.escape(op) for op in OPERATORS)),
        ]
    ),
)

_GROUP_KIND = {
    "ws": TokenKind.WHITESPACE,
    "blockcomment": TokenKind.BLOCK_COMMENT,
    "linecomment": TokenKind.LINE_COMMENT,
    "floatlit": TokenKind.FLOAT,
    "intlit": TokenKind.INT,
    "charlit": TokenKind.CHAR,
    "stringlit": TokenKind.STRING,
    "ident": TokenKind.IDENT,
    "op": TokenKind.OP,
}


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    span: Span

    @property
    def start(self) -> int:
        return self.span.start

    @property
    def end(self) -> int:
        return self.span.end

    def is_documentary(self) -> bool:
        return self.kind in DOCUMENTARY

    def __repr__(self) -> str:
        return f"Token({self.kind.name}, {self.text!r})"


class LexError(Exception):
    def __init__(self, message: str, span: Span):
        self.span = span
        super().__init__(f"{message} at line {span.start_line}, col {span.start_col}")


def _error_at(text: str, starts: list[int], pos: int) -> LexError:
    rest = text[pos:]
    span = span_from_offsets(starts, pos, min(pos + 1, len(text)))
    if rest.startswith('"'):
        return LexError("unterminated string literal", span)
    if rest.startswith("'"):
        return LexError("unterminated character literal", span)
    if rest.startswith("/*"):
        return LexError("unterminated block comment", span)
    return LexError(f"illegal character {text[pos]!r}", span)


def tokenize(source: SourceFile | str) -> list[Token]:
    """Full token stream including documentary tokens and a trailing EOF.

    Raises LexError with the offending span on unterminated literals,
    unterminated block comments, or characters outside the Java lexicon.
    """
    text = source.text if isinstance(source, SourceFile) else source
    starts = line_starts(text)
    tokens: list[Token] = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _MASTER.match(text, pos)
        if m is None:
            raise _error_at(text, starts, pos)
        # "/*" only reaches the operator alternative when the block-comment
        # pattern found no closing "*/" ahead of it.
        if m.lastgroup == "op" and m.group() == "/" and text.startswith("/*", pos):
            raise _error_at(text, starts, pos)
        kind = _GROUP_KIND[m.lastgroup]
        lexeme = m.group()
        if kind is TokenKind.IDENT:
            if lexeme in KEYWORDS:
                kind = TokenKind.KEYWORD
            elif lexeme in ("true", "false"):
                kind = TokenKind.BOOL
            elif lexeme == "null":
                kind = TokenKind.NULL
        tokens.append(Token(kind, lexeme, span_from_offsets(starts, pos, m.end())))
        pos = m.end()
    tokens.append(Token(TokenKind.EOF, "", span_from_offsets(starts, n, n)))
    return tokens
