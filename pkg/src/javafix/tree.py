"""Concrete syntax tree with exact byte-range bookkeeping.

Every significant token of the file is a leaf of the tree; documentary
text (whitespace, comments) lives in the gaps between leaf spans and is
never attached to a node, so reprinting an unedited tree is just a slice
of the original text.
"""

from .lexer import Token
from .sourcefile import SourceFile, Span


class NotFound(Exception):
    """node_at query outside the parsed file."""


class SyntaxNode:
    """One grammar production (or a leaf token).

    kind uses hyphenated production names ("method-invocation",
    "class-declaration", ...); leaves have kind "token". Nodes whose kind
    starts with "verbatim" cover constructs outside the supported grammar:
    they reprint byte-identically but are skipped by analysis.
    """

    __slots__ = ("kind", "children", "token", "fields", "parent", "_span")

    def __init__(
        self,
        kind: str,
        children: list["SyntaxNode"] | None = None,
        token: Token | None = None,
        fields: dict | None = None,
        span: Span | None = None,
    ):
        self.kind = kind
        self.children = children or []
        self.token = token
        self.fields = fields or {}
        self.parent: SyntaxNode | None = None
        if span is not None:
            self._span = span
        elif token is not None:
            self._span = token.span
        else:
            if not self.children:
                raise ValueError(f"non-leaf node {kind!r} must have children")
            self._span = None

    @property
    def span(self) -> Span:
        if self._span is None:
            first = self.children[0].span
            last = self.children[-1].span
            self._span = Span(
                first.start,
                last.end,
                first.start_line,
                first.start_col,
                last.end_line,
                last.end_col,
            )
        return self._span

    @property
    def is_leaf(self) -> bool:
        return self.token is not None

    @property
    def is_verbatim(self) -> bool:
        return self.kind.startswith("verbatim")

    def field(self, name: str):
        return self.fields.get(name)

    def walk(self):
        """Pre-order traversal of the subtree, self included."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def leaves(self):
        for node in self.walk():
            if node.is_leaf:
                yield node

    def find_all(self, kind: str):
        return [n for n in self.walk() if n.kind == kind]

    def ancestors(self):
        node = self.parent
        while node is not None:
            yield node
            node = node.parent

    def enclosing(self, *kinds: str) -> "SyntaxNode | None":
        for anc in self.ancestors():
            if anc.kind in kinds:
                return anc
        return None

    def text_in(self, source_text: str) -> str:
        """Original source slice covered by this node, gaps included."""
        return source_text[self.span.start : self.span.end]

    def structurally_equal(self, other: "SyntaxNode") -> bool:
        if self.kind != other.kind or len(self.children) != len(other.children):
            return False
        if self.is_leaf != other.is_leaf:
            return False
        if self.is_leaf and (
            self.token.kind != other.token.kind or self.token.text != other.token.text
        ):
            return False
        return all(
            a.structurally_equal(b) for a, b in zip(self.children, other.children)
        )

    def __repr__(self) -> str:
        if self.is_leaf:
            return f"SyntaxNode(token {self.token.text!r})"
        return f"SyntaxNode({self.kind}, {len(self.children)} children, {self.span})"


def link_parents(root: SyntaxNode) -> None:
    for node in root.walk():
        for child in node.children:
            child.parent = node


def node_at(root: SyntaxNode, start: int, end: int | None = None) -> SyntaxNode:
    """Smallest node whose span contains [start, end); degenerate queries allowed.

    Raises NotFound when the query lies outside the root span (file bounds).
    """
    if end is None:
        end = start
    span = root.span
    if start < span.start or end > span.end:
        raise NotFound(f"query [{start}, {end}) outside file bounds [{span.start}, {span.end})")
    node = root
    while True:
        for child in node.children:
            if child.span.start <= start and end <= child.span.end:
                node = child
                break
        else:
            return node


class FragmentTree:
    """Position-indexed map from nodes to their original source fragments.

    Separate from the syntax tree: a node's fragment is the byte range of
    its own tokens; documentary text between sibling fragments belongs to
    the enclosing gap, so there is never an ambiguous comment owner.
    Edits mark nodes dirty; untouched nodes keep printing their fragment.
    """

    def __init__(self, source: SourceFile, root: SyntaxNode):
        self.source = source
        self.root = root
        self._edited: set[int] = set()
        self._edited_nodes: list[SyntaxNode] = []

    def fragment(self, node: SyntaxNode) -> str:
        return node.text_in(self.source.text)

    def fragment_range(self, node: SyntaxNode) -> tuple[int, int]:
        return node.span.start, node.span.end

    def mark_edited(self, node: SyntaxNode) -> None:
        if id(node) not in self._edited:
            self._edited.add(id(node))
            self._edited_nodes.append(node)

    def is_dirty(self, node: SyntaxNode) -> bool:
        """True iff the node or one of its descendants was structurally edited."""
        if not self._edited:
            return False
        return any(id(n) in self._edited for n in node.walk())

    @property
    def has_edits(self) -> bool:
        return bool(self._edited)
