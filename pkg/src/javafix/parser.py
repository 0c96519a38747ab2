"""Recursive-descent Java parser producing a lossless syntax tree.

Covers the Java subset the rule engine analyzes: classes, interfaces,
fields, methods, constructors, the full statement set, and an operator
precedence expression grammar. Constructs outside that subset (enums,
records, sealed types, annotation declarations, arrow switches) degrade
to verbatim nodes that reprint byte-identically but are opaque to
analysis. With recovery enabled a malformed member or statement also
degrades to a verbatim node instead of failing the file.
"""

from dataclasses import dataclass, field

from .lexer import Token, TokenKind, tokenize
from .sourcefile import SourceFile, Span, line_starts, span_from_offsets
from .tree import FragmentTree, SyntaxNode, link_parents

PRIMITIVE_TYPES = frozenset(
    ["boolean", "byte", "short", "int", "long", "char", "float", "double"]
)

MODIFIER_KEYWORDS = frozenset(
    [
        "public",
        "protected",
        "private",
        "static",
        "final",
        "abstract",
        "synchronized",
        "native",
        "transient",
        "volatile",
        "strictfp",
        "default",
    ]
)

# Token texts permitted inside a type-argument list. Anything else means
# the "<" opened a comparison, not generics.
_TYPE_ARG_TEXTS = frozenset(
    [",", ".", "?", "<", ">", ">>", ">>>", "extends", "super", "[", "]", "@", "&"]
)

_LITERAL_KINDS = frozenset(
    [TokenKind.INT, TokenKind.FLOAT, TokenKind.CHAR, TokenKind.STRING, TokenKind.BOOL, TokenKind.NULL]
)

# Binary operator precedence, loosest first. instanceof is folded into
# the relational level.
_BINARY_LEVELS = [
    frozenset(["||"]),
    frozenset(["&&"]),
    frozenset(["|"]),
    frozenset(["^"]),
    frozenset(["&"]),
    frozenset(["==", "!="]),
    frozenset(["<", ">", "<=", ">=", "instanceof"]),
    frozenset(["<<", ">>", ">>>"]),
    frozenset(["+", "-"]),
    frozenset(["*", "/", "%"]),
]

_ASSIGN_OPS = frozenset(
    ["=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>="]
)


class ParseError(Exception):
    """Input does not match the grammar at a specific token."""

    def __init__(self, message: str, span: Span, expected: str | None = None):
        super().__init__(message)
        self.message = message
        self.span = span
        self.expected = expected


@dataclass(frozen=True)
class Diagnostic:
    """A construct that was degraded to a verbatim node during recovery."""

    message: str
    span: Span


@dataclass
class ParseResult:
    source: SourceFile
    tree: SyntaxNode
    fragments: FragmentTree
    diagnostics: list[Diagnostic] = field(default_factory=list)


def parse(source: SourceFile | str, recover: bool = True) -> ParseResult:
    """Parse a source file into a tree plus its fragment bookkeeping."""
    if isinstance(source, str):
        source = SourceFile.from_text(source)
    parser = _Parser(source, recover=recover)
    root = parser.parse_compilation_unit()
    link_parents(root)
    return ParseResult(source, root, FragmentTree(source, root), parser.diagnostics)


def parse_expression_text(text: str) -> SyntaxNode:
    """Parse a standalone expression; raises ParseError on leftovers."""
    parser = _Parser(SourceFile.from_text(text), recover=False)
    node = parser.parse_expression()
    parser.expect_eof()
    link_parents(node)
    return node


def parse_statement_text(text: str) -> SyntaxNode:
    """Parse a standalone statement; raises ParseError on leftovers."""
    parser = _Parser(SourceFile.from_text(text), recover=False)
    node = parser.parse_statement()
    parser.expect_eof()
    link_parents(node)
    return node


def parse_member_text(text: str) -> SyntaxNode:
    """Parse a standalone class member; raises ParseError on leftovers."""
    parser = _Parser(SourceFile.from_text(text), recover=False)
    node = parser.parse_member()
    parser.expect_eof()
    link_parents(node)
    return node


def leaf(token: Token) -> SyntaxNode:
    return SyntaxNode("token", token=token)


class _Parser:
    def __init__(self, source: SourceFile, recover: bool = True):
        self.source = source
        self.recover = recover
        self.tokens = [t for t in tokenize(source) if not t.is_documentary()]
        self.pos = 0
        self.diagnostics: list[Diagnostic] = []

    # ---- cursor helpers ----

    def la(self, k: int = 0) -> Token:
        i = self.pos + k
        if i >= len(self.tokens):
            i = len(self.tokens) - 1
        return self.tokens[i]

    @property
    def cur(self) -> Token:
        return self.tokens[self.pos]

    def at_eof(self) -> bool:
        return self.cur.kind is TokenKind.EOF

    def at(self, text: str, k: int = 0) -> bool:
        tok = self.la(k)
        return tok.kind is not TokenKind.EOF and tok.text == text

    def at_kind(self, kind: TokenKind, k: int = 0) -> bool:
        return self.la(k).kind is kind

    def at_ident(self, k: int = 0) -> bool:
        return self.la(k).kind is TokenKind.IDENT

    def take(self) -> SyntaxNode:
        tok = self.cur
        if tok.kind is TokenKind.EOF:
            raise ParseError("unexpected end of file", tok.span)
        self.pos += 1
        return leaf(tok)

    def expect(self, text: str) -> SyntaxNode:
        if not self.at(text):
            self.fail(f"'{text}'")
        return self.take()

    def expect_ident(self) -> SyntaxNode:
        if not self.at_ident():
            self.fail("identifier")
        return self.take()

    def expect_eof(self) -> None:
        if not self.at_eof():
            self.fail("end of input")

    def fail(self, expected: str) -> None:
        tok = self.cur
        got = "end of file" if tok.kind is TokenKind.EOF else repr(tok.text)
        raise ParseError(f"expected {expected}, got {got}", tok.span, expected)

    def node(self, kind: str, children: list[SyntaxNode], **fields) -> SyntaxNode:
        return SyntaxNode(kind, children=children, fields=fields)

    # ---- compilation unit ----

    def parse_compilation_unit(self) -> SyntaxNode:
        children: list[SyntaxNode] = []
        package = None
        imports: list[SyntaxNode] = []
        types: list[SyntaxNode] = []
        if self.at("package") or (self.at("@") and self._package_after_annotations()):
            package = self.parse_package_declaration()
            children.append(package)
        while self.at("import"):
            imp = self.parse_import_declaration()
            imports.append(imp)
            children.append(imp)
        while not self.at_eof():
            if self.at(";"):
                children.append(self.take())
                continue
            decl = self.parse_type_declaration()
            types.append(decl)
            children.append(decl)
        text = self.source.text
        starts = line_starts(text)
        whole = span_from_offsets(starts, 0, len(text))
        return SyntaxNode(
            "compilation-unit",
            children=children,
            fields={"package": package, "imports": imports, "types": types},
            span=whole,
        )

    def _package_after_annotations(self) -> bool:
        # package-info.java files may put annotations before "package".
        mark = self.pos
        try:
            while self.at("@"):
                self.parse_annotation()
            return self.at("package")
        except ParseError:
            return False
        finally:
            self.pos = mark

    def parse_package_declaration(self) -> SyntaxNode:
        children = []
        while self.at("@"):
            children.append(self.parse_annotation())
        children.append(self.expect("package"))
        name, name_children = self.parse_qualified_name()
        children.extend(name_children)
        children.append(self.expect(";"))
        return self.node("package-declaration", children, name=name)

    def parse_import_declaration(self) -> SyntaxNode:
        children = [self.expect("import")]
        static = False
        if self.at("static"):
            children.append(self.take())
            static = True
        parts = [self.expect_ident()]
        children.append(parts[0])
        name = parts[0].token.text
        while self.at("."):
            children.append(self.take())
            if self.at("*"):
                children.append(self.take())
                name += ".*"
                break
            nxt = self.expect_ident()
            children.append(nxt)
            name += "." + nxt.token.text
        children.append(self.expect(";"))
        return self.node("import-declaration", children, name=name, static=static)

    def parse_qualified_name(self) -> tuple[str, list[SyntaxNode]]:
        children = [self.expect_ident()]
        name = children[0].token.text
        while self.at(".") and self.at_ident(1):
            children.append(self.take())
            nxt = self.take()
            children.append(nxt)
            name += "." + nxt.token.text
        return name, children

    # ---- type declarations ----

    def parse_type_declaration(self) -> SyntaxNode:
        start = self.pos
        try:
            mods = self.parse_modifiers()
            if self.at("class"):
                return self.parse_class_declaration(mods)
            if self.at("interface"):
                return self.parse_interface_declaration(mods)
            self.fail("class or interface declaration")
        except ParseError as err:
            if not self.recover:
                raise
            return self.recover_verbatim(start, "verbatim-type", err)
        raise AssertionError("unreachable")

    def parse_modifiers(self) -> list[SyntaxNode]:
        mods: list[SyntaxNode] = []
        while True:
            if self.at("@") and not self.at("interface", 1):
                mods.append(self.parse_annotation())
            elif self.cur.kind is TokenKind.KEYWORD and self.cur.text in MODIFIER_KEYWORDS:
                mods.append(self.take())
            else:
                return mods

    def parse_annotation(self) -> SyntaxNode:
        children = [self.expect("@")]
        name, name_children = self.parse_qualified_name()
        children.extend(name_children)
        if self.at("("):
            children.extend(self.take_balanced("(", ")"))
        return self.node("annotation", children, name=name)

    def take_balanced(self, open_text: str, close_text: str) -> list[SyntaxNode]:
        """Consume a balanced bracket region (any tokens inside)."""
        children = [self.expect(open_text)]
        depth = 1
        pairs = {"(": ")", "[": "]", "{": "}"}
        while depth > 0:
            if self.at_eof():
                self.fail(f"'{close_text}'")
            tok = self.cur
            if tok.text in pairs:
                depth += 1
            elif tok.text in pairs.values():
                depth -= 1
            children.append(self.take())
        return children

    def parse_class_declaration(self, mods: list[SyntaxNode]) -> SyntaxNode:
        children = list(mods)
        children.append(self.expect("class"))
        name = self.expect_ident()
        children.append(name)
        if self.at("<"):
            children.extend(self.scan_type_arguments())
        extends = None
        implements: list[SyntaxNode] = []
        if self.at("extends"):
            children.append(self.take())
            extends = self.parse_type()
            children.append(extends)
        if self.at("implements"):
            children.append(self.take())
            implements.append(self.parse_type())
            children.append(implements[-1])
            while self.at(","):
                children.append(self.take())
                implements.append(self.parse_type())
                children.append(implements[-1])
        body = self.parse_class_body()
        children.append(body)
        return self.node(
            "class-declaration",
            children,
            name=name,
            type_name=name.token.text,
            extends=extends,
            implements=implements,
            body=body,
            modifiers=mods,
        )

    def parse_interface_declaration(self, mods: list[SyntaxNode]) -> SyntaxNode:
        children = list(mods)
        children.append(self.expect("interface"))
        name = self.expect_ident()
        children.append(name)
        if self.at("<"):
            children.extend(self.scan_type_arguments())
        extends_list: list[SyntaxNode] = []
        if self.at("extends"):
            children.append(self.take())
            extends_list.append(self.parse_type())
            children.append(extends_list[-1])
            while self.at(","):
                children.append(self.take())
                extends_list.append(self.parse_type())
                children.append(extends_list[-1])
        body = self.parse_class_body()
        children.append(body)
        return self.node(
            "interface-declaration",
            children,
            name=name,
            type_name=name.token.text,
            extends_list=extends_list,
            body=body,
            modifiers=mods,
        )

    def parse_class_body(self) -> SyntaxNode:
        children = [self.expect("{")]
        members: list[SyntaxNode] = []
        while not self.at("}"):
            if self.at_eof():
                self.fail("'}'")
            member = self.parse_member_recovering()
            members.append(member)
            children.append(member)
        children.append(self.expect("}"))
        return self.node("class-body", children, members=members)

    def parse_member_recovering(self) -> SyntaxNode:
        start = self.pos
        try:
            return self.parse_member()
        except ParseError as err:
            if not self.recover:
                raise
            return self.recover_verbatim(start, "verbatim-member", err)

    def parse_member(self) -> SyntaxNode:
        if self.at(";"):
            tok = self.take()
            return self.node("empty-member", [tok])
        mods = self.parse_modifiers()
        if self.at("{"):
            body = self.parse_block()
            return self.node("initializer-block", mods + [body], body=body, modifiers=mods)
        if self.at("class"):
            return self.parse_class_declaration(mods)
        if self.at("interface"):
            return self.parse_interface_declaration(mods)
        if self.at("enum") or (self.at_ident() and self.cur.text == "record" and self.at_ident(1)):
            self.fail("supported member")
        type_params: list[SyntaxNode] = []
        if self.at("<"):
            type_params = self.scan_type_arguments()
        # Constructor: identifier immediately followed by its parameter list.
        if self.at_ident() and self.at("(", 1):
            return self.parse_constructor(mods, type_params)
        if self.at("void"):
            ret = self.node("type", [self.take()], text="void", base="void", dims=0,
                            has_args=False, primitive=True, is_var=False)
            name = self.expect_ident()
            return self.parse_method_rest(mods, type_params, ret, name)
        ty = self.parse_type()
        name = self.expect_ident()
        if self.at("("):
            return self.parse_method_rest(mods, type_params, ty, name)
        return self.parse_field_rest(mods, ty, name)

    def parse_constructor(self, mods: list[SyntaxNode], type_params: list[SyntaxNode]) -> SyntaxNode:
        name = self.expect_ident()
        children = list(mods) + list(type_params) + [name]
        params, param_children = self.parse_parameters()
        children.extend(param_children)
        throws = self.parse_throws(children)
        body = self.parse_block()
        children.append(body)
        return self.node(
            "constructor-declaration",
            children,
            name=name,
            name_text=name.token.text,
            params=params,
            throws=throws,
            body=body,
            modifiers=mods,
        )

    def parse_method_rest(
        self,
        mods: list[SyntaxNode],
        type_params: list[SyntaxNode],
        return_type: SyntaxNode,
        name: SyntaxNode,
    ) -> SyntaxNode:
        children = list(mods) + list(type_params) + [return_type, name]
        params, param_children = self.parse_parameters()
        children.extend(param_children)
        while self.at("[") and self.at("]", 1):
            children.append(self.take())
            children.append(self.take())
        throws = self.parse_throws(children)
        body = None
        if self.at("{"):
            body = self.parse_block()
            children.append(body)
        else:
            children.append(self.expect(";"))
        return self.node(
            "method-declaration",
            children,
            name=name,
            name_text=name.token.text,
            return_type=return_type,
            params=params,
            throws=throws,
            body=body,
            modifiers=mods,
        )

    def parse_parameters(self) -> tuple[list[SyntaxNode], list[SyntaxNode]]:
        children = [self.expect("(")]
        params: list[SyntaxNode] = []
        while not self.at(")"):
            if params:
                children.append(self.expect(","))
            param = self.parse_parameter()
            params.append(param)
            children.append(param)
        children.append(self.expect(")"))
        return params, children

    def parse_parameter(self) -> SyntaxNode:
        children = []
        mods = self.parse_modifiers()
        children.extend(mods)
        ty = self.parse_type()
        children.append(ty)
        varargs = False
        if self.at(".") and self.at(".", 1) and self.at(".", 2):
            children.append(self.take())
            children.append(self.take())
            children.append(self.take())
            varargs = True
        if self.at("this"):
            name = self.take()
        else:
            name = self.expect_ident()
        children.append(name)
        dims = 0
        while self.at("[") and self.at("]", 1):
            children.append(self.take())
            children.append(self.take())
            dims += 1
        return self.node(
            "parameter",
            children,
            type=ty,
            name=name,
            name_text=name.token.text,
            varargs=varargs,
            extra_dims=dims,
        )

    def parse_throws(self, children: list[SyntaxNode]) -> list[SyntaxNode]:
        throws: list[SyntaxNode] = []
        if self.at("throws"):
            children.append(self.take())
            throws.append(self.parse_type())
            children.append(throws[-1])
            while self.at(","):
                children.append(self.take())
                throws.append(self.parse_type())
                children.append(throws[-1])
        return throws

    def parse_field_rest(self, mods: list[SyntaxNode], ty: SyntaxNode, first_name: SyntaxNode) -> SyntaxNode:
        children = list(mods) + [ty]
        declarators: list[SyntaxNode] = []
        decl = self.parse_declarator(first_name)
        declarators.append(decl)
        children.append(decl)
        while self.at(","):
            children.append(self.take())
            name = self.expect_ident()
            decl = self.parse_declarator(name)
            declarators.append(decl)
            children.append(decl)
        children.append(self.expect(";"))
        return self.node(
            "field-declaration",
            children,
            type=ty,
            declarators=declarators,
            modifiers=mods,
        )

    def parse_declarator(self, name: SyntaxNode) -> SyntaxNode:
        children = [name]
        dims = 0
        while self.at("[") and self.at("]", 1):
            children.append(self.take())
            children.append(self.take())
            dims += 1
        init = None
        if self.at("="):
            children.append(self.take())
            init = self.parse_variable_initializer()
            children.append(init)
        return self.node(
            "variable-declarator",
            children,
            name=name,
            name_text=name.token.text,
            dims=dims,
            init=init,
        )

    def parse_variable_initializer(self) -> SyntaxNode:
        if self.at("{"):
            return self.parse_array_initializer()
        return self.parse_expression()

    def parse_array_initializer(self) -> SyntaxNode:
        children = [self.expect("{")]
        items: list[SyntaxNode] = []
        while not self.at("}"):
            if items:
                children.append(self.expect(","))
                if self.at("}"):
                    break
            item = self.parse_variable_initializer()
            items.append(item)
            children.append(item)
        children.append(self.expect("}"))
        return self.node("array-initializer", children, items=items)

    # ---- types ----

    def parse_type(self) -> SyntaxNode:
        children = []
        while self.at("@"):
            children.append(self.parse_annotation())
        if self.cur.kind is TokenKind.KEYWORD and self.cur.text in PRIMITIVE_TYPES:
            first = self.take()
            children.append(first)
            text = first.token.text
            primitive = True
            is_var = False
        elif self.at_ident():
            if self.cur.text == "var" and self.at_ident(1):
                first = self.take()
                children.append(first)
                return self.node(
                    "type", children, text="var", base="var", dims=0,
                    has_args=False, primitive=False, is_var=True,
                )
            first = self.take()
            children.append(first)
            text = first.token.text
            primitive = False
            is_var = False
            if self.at("<"):
                children.extend(self.scan_type_arguments())
            while self.at(".") and self.at_ident(1):
                children.append(self.take())
                nxt = self.take()
                children.append(nxt)
                text += "." + nxt.token.text
                if self.at("<"):
                    children.extend(self.scan_type_arguments())
        else:
            self.fail("type")
        has_args = any(c.kind == "token" and c.token.text.startswith("<") for c in children)
        dims = 0
        while self.at("[") and self.at("]", 1):
            children.append(self.take())
            children.append(self.take())
            dims += 1
        base = text.rsplit(".", 1)[-1]
        return self.node(
            "type",
            children,
            text=text,
            base=base,
            dims=dims,
            has_args=has_args,
            primitive=primitive,
            is_var=is_var,
        )

    def scan_type_arguments(self) -> list[SyntaxNode]:
        """Consume a validated <...> region, or fail if it is a comparison.

        ">>" and ">>>" tokens close two and three levels. Only tokens that
        can appear inside a type-argument list are accepted.
        """
        children = [self.expect("<")]
        depth = 1
        while depth > 0:
            tok = self.cur
            if tok.kind is TokenKind.EOF:
                self.fail("'>'")
            if tok.text == "<":
                depth += 1
            elif tok.text == ">":
                depth -= 1
            elif tok.text == ">>":
                depth -= 2
            elif tok.text == ">>>":
                depth -= 3
            elif not self._valid_type_arg_token(tok):
                self.fail("type argument")
            if depth < 0:
                self.fail("type argument")
            children.append(self.take())
        return children

    def _valid_type_arg_token(self, tok: Token) -> bool:
        if tok.kind is TokenKind.IDENT:
            return True
        if tok.kind is TokenKind.KEYWORD:
            return tok.text in PRIMITIVE_TYPES or tok.text in ("extends", "super")
        return tok.text in _TYPE_ARG_TEXTS

    # ---- statements ----

    def parse_block(self) -> SyntaxNode:
        children = [self.expect("{")]
        statements: list[SyntaxNode] = []
        while not self.at("}"):
            if self.at_eof():
                self.fail("'}'")
            stmt = self.parse_statement_recovering()
            statements.append(stmt)
            children.append(stmt)
        children.append(self.expect("}"))
        return self.node("block", children, statements=statements)

    def parse_statement_recovering(self) -> SyntaxNode:
        start = self.pos
        try:
            return self.parse_statement()
        except ParseError as err:
            if not self.recover:
                raise
            return self.recover_verbatim(start, "verbatim-statement", err)

    def parse_statement(self) -> SyntaxNode:
        tok = self.cur
        text = tok.text
        if tok.kind is TokenKind.KEYWORD:
            handler = {
                "if": self.parse_if,
                "while": self.parse_while,
                "do": self.parse_do,
                "for": self.parse_for,
                "try": self.parse_try,
                "switch": self.parse_switch,
                "synchronized": self.parse_synchronized_or_decl,
                "return": self.parse_return,
                "throw": self.parse_throw,
                "break": self.parse_break_continue,
                "continue": self.parse_break_continue,
                "assert": self.parse_assert,
                "class": self.parse_local_class,
            }.get(text)
            if handler is not None:
                return handler()
        if text == "{":
            return self.parse_block()
        if text == ";":
            return self.node("empty-statement", [self.take()])
        if self.at_ident() and self.at(":", 1):
            label = self.take()
            colon = self.take()
            body = self.parse_statement()
            return self.node(
                "labeled-statement", [label, colon, body],
                label=label, label_text=label.token.text, body=body,
            )
        decl = self.try_local_variable_declaration()
        if decl is not None:
            return decl
        expr = self.parse_expression()
        semi = self.expect(";")
        return self.node("expression-statement", [expr, semi], expression=expr)

    def parse_local_class(self) -> SyntaxNode:
        return self.parse_class_declaration([])

    def parse_synchronized_or_decl(self) -> SyntaxNode:
        # "synchronized" is also a method modifier, but as a statement it
        # is always followed by "(".
        children = [self.expect("synchronized")]
        children.append(self.expect("("))
        lock = self.parse_expression()
        children.append(lock)
        children.append(self.expect(")"))
        body = self.parse_block()
        children.append(body)
        return self.node("synchronized-statement", children, lock=lock, body=body)

    def try_local_variable_declaration(self) -> SyntaxNode | None:
        mark = self.pos
        mods = []
        try:
            while self.at("final") or (self.at("@") and not self.at("interface", 1)):
                if self.at("final"):
                    mods.append(self.take())
                else:
                    mods.append(self.parse_annotation())
            starts_like_type = (
                self.at_ident()
                or (self.cur.kind is TokenKind.KEYWORD and self.cur.text in PRIMITIVE_TYPES)
            )
            if not starts_like_type:
                raise ParseError("not a declaration", self.cur.span)
            ty = self.parse_type()
            if not self.at_ident():
                raise ParseError("not a declaration", self.cur.span)
            follow = self.la(1).text
            if follow not in ("=", ";", ",", "["):
                raise ParseError("not a declaration", self.cur.span)
        except ParseError:
            self.pos = mark
            return None
        name = self.take()
        children = mods + [ty]
        declarators = []
        decl = self.parse_declarator(name)
        declarators.append(decl)
        children.append(decl)
        while self.at(","):
            children.append(self.take())
            nxt = self.expect_ident()
            decl = self.parse_declarator(nxt)
            declarators.append(decl)
            children.append(decl)
        children.append(self.expect(";"))
        return self.node(
            "local-variable-declaration",
            children,
            type=ty,
            declarators=declarators,
            modifiers=mods,
        )

    def parse_if(self) -> SyntaxNode:
        children = [self.expect("if"), self.expect("(")]
        cond = self.parse_expression()
        children.append(cond)
        children.append(self.expect(")"))
        then = self.parse_statement()
        children.append(then)
        else_branch = None
        if self.at("else"):
            children.append(self.take())
            else_branch = self.parse_statement()
            children.append(else_branch)
        return self.node("if-statement", children, cond=cond, then=then, orelse=else_branch)

    def parse_while(self) -> SyntaxNode:
        children = [self.expect("while"), self.expect("(")]
        cond = self.parse_expression()
        children.append(cond)
        children.append(self.expect(")"))
        body = self.parse_statement()
        children.append(body)
        return self.node("while-statement", children, cond=cond, body=body)

    def parse_do(self) -> SyntaxNode:
        children = [self.expect("do")]
        body = self.parse_statement()
        children.append(body)
        children.append(self.expect("while"))
        children.append(self.expect("("))
        cond = self.parse_expression()
        children.append(cond)
        children.append(self.expect(")"))
        children.append(self.expect(";"))
        return self.node("do-statement", children, cond=cond, body=body)

    def parse_for(self) -> SyntaxNode:
        kw = self.expect("for")
        open_paren = self.expect("(")
        if self._for_is_enhanced():
            children = [kw, open_paren]
            mods = []
            while self.at("final") or (self.at("@") and not self.at("interface", 1)):
                if self.at("final"):
                    mods.append(self.take())
                else:
                    mods.append(self.parse_annotation())
            children.extend(mods)
            ty = self.parse_type()
            children.append(ty)
            name = self.expect_ident()
            children.append(name)
            children.append(self.expect(":"))
            iterable = self.parse_expression()
            children.append(iterable)
            children.append(self.expect(")"))
            body = self.parse_statement()
            children.append(body)
            return self.node(
                "foreach-statement",
                children,
                type=ty,
                name=name,
                name_text=name.token.text,
                iterable=iterable,
                body=body,
            )
        children = [kw, open_paren]
        init: list[SyntaxNode] = []
        if not self.at(";"):
            decl = self.try_for_init_declaration()
            if decl is not None:
                init.append(decl)
                children.append(decl)
            else:
                expr = self.parse_expression()
                init.append(expr)
                children.append(expr)
                while self.at(","):
                    children.append(self.take())
                    expr = self.parse_expression()
                    init.append(expr)
                    children.append(expr)
        children.append(self.expect(";"))
        cond = None
        if not self.at(";"):
            cond = self.parse_expression()
            children.append(cond)
        children.append(self.expect(";"))
        update: list[SyntaxNode] = []
        if not self.at(")"):
            expr = self.parse_expression()
            update.append(expr)
            children.append(expr)
            while self.at(","):
                children.append(self.take())
                expr = self.parse_expression()
                update.append(expr)
                children.append(expr)
        children.append(self.expect(")"))
        body = self.parse_statement()
        children.append(body)
        return self.node(
            "for-statement", children, init=init, cond=cond, update=update, body=body
        )

    def _for_is_enhanced(self) -> bool:
        # After "for (", a classic header always contains a ";" before the
        # matching ")"; an enhanced header never does.
        depth = 1
        k = 0
        while True:
            tok = self.la(k)
            if tok.kind is TokenKind.EOF:
                return False
            text = tok.text
            if text in ("(", "["):
                depth += 1
            elif text in (")", "]"):
                depth -= 1
                if depth == 0:
                    return True
            elif text == ";" and depth == 1:
                return False
            k += 1

    def try_for_init_declaration(self) -> SyntaxNode | None:
        mark = self.pos
        mods = []
        try:
            while self.at("final"):
                mods.append(self.take())
            starts_like_type = (
                self.at_ident()
                or (self.cur.kind is TokenKind.KEYWORD and self.cur.text in PRIMITIVE_TYPES)
            )
            if not starts_like_type:
                raise ParseError("not a declaration", self.cur.span)
            ty = self.parse_type()
            if not self.at_ident():
                raise ParseError("not a declaration", self.cur.span)
            follow = self.la(1).text
            if follow not in ("=", ",", "[", ";", ":"):
                raise ParseError("not a declaration", self.cur.span)
            if follow == ":":
                raise ParseError("not a declaration", self.cur.span)
        except ParseError:
            self.pos = mark
            return None
        name = self.take()
        children = mods + [ty]
        declarators = []
        decl = self.parse_declarator(name)
        declarators.append(decl)
        children.append(decl)
        while self.at(","):
            children.append(self.take())
            nxt = self.expect_ident()
            decl = self.parse_declarator(nxt)
            declarators.append(decl)
            children.append(decl)
        return self.node(
            "local-variable-declaration",
            children,
            type=ty,
            declarators=declarators,
            modifiers=mods,
        )

    def parse_try(self) -> SyntaxNode:
        children = [self.expect("try")]
        resources: list[SyntaxNode] = []
        if self.at("("):
            children.append(self.take())
            while not self.at(")"):
                if resources:
                    children.append(self.expect(";"))
                    if self.at(")"):
                        break
                res = self.parse_resource()
                resources.append(res)
                children.append(res)
            children.append(self.expect(")"))
        body = self.parse_block()
        children.append(body)
        catches: list[SyntaxNode] = []
        while self.at("catch"):
            clause = self.parse_catch_clause()
            catches.append(clause)
            children.append(clause)
        finally_block = None
        if self.at("finally"):
            children.append(self.take())
            finally_block = self.parse_block()
            children.append(finally_block)
        if not resources and not catches and finally_block is None:
            self.fail("'catch' or 'finally'")
        return self.node(
            "try-statement",
            children,
            resources=resources,
            body=body,
            catches=catches,
            finally_block=finally_block,
        )

    def parse_resource(self) -> SyntaxNode:
        mark = self.pos
        try:
            mods = []
            while self.at("final"):
                mods.append(self.take())
            ty = self.parse_type()
            name = self.expect_ident()
            eq = self.expect("=")
            init = self.parse_expression()
            children = mods + [ty, name, eq, init]
            return self.node(
                "resource",
                children,
                type=ty,
                name=name,
                name_text=name.token.text,
                init=init,
            )
        except ParseError:
            self.pos = mark
        expr = self.parse_expression()
        return self.node(
            "resource", [expr], type=None, name=None, name_text=None, init=expr
        )

    def parse_catch_clause(self) -> SyntaxNode:
        children = [self.expect("catch"), self.expect("(")]
        mods = self.parse_modifiers()
        children.extend(mods)
        types = [self.parse_type()]
        children.append(types[0])
        while self.at("|"):
            children.append(self.take())
            types.append(self.parse_type())
            children.append(types[-1])
        name = self.expect_ident()
        children.append(name)
        children.append(self.expect(")"))
        body = self.parse_block()
        children.append(body)
        return self.node(
            "catch-clause",
            children,
            types=types,
            name=name,
            name_text=name.token.text,
            body=body,
        )

    def parse_switch(self) -> SyntaxNode:
        children = [self.expect("switch"), self.expect("(")]
        selector = self.parse_expression()
        children.append(selector)
        children.append(self.expect(")"))
        children.append(self.expect("{"))
        cases: list[SyntaxNode] = []
        while not self.at("}"):
            if self.at_eof():
                self.fail("'}'")
            group = self.parse_switch_group()
            cases.append(group)
            children.append(group)
        children.append(self.expect("}"))
        return self.node("switch-statement", children, selector=selector, cases=cases)

    def parse_switch_group(self) -> SyntaxNode:
        children: list[SyntaxNode] = []
        labels: list[SyntaxNode] = []
        while self.at("case") or self.at("default"):
            if self.at("case"):
                children.append(self.take())
                expr = self.parse_expression()
                labels.append(expr)
                children.append(expr)
                while self.at(","):
                    children.append(self.take())
                    expr = self.parse_expression()
                    labels.append(expr)
                    children.append(expr)
            else:
                children.append(self.take())
            if self.at("->"):
                # Arrow switch bodies are outside the supported grammar.
                self.fail("':'")
            children.append(self.expect(":"))
        if not children:
            self.fail("'case' or 'default'")
        statements: list[SyntaxNode] = []
        while not (self.at("case") or self.at("default") or self.at("}")):
            if self.at_eof():
                self.fail("'}'")
            stmt = self.parse_statement_recovering()
            statements.append(stmt)
            children.append(stmt)
        return self.node("switch-group", children, labels=labels, statements=statements)

    def parse_return(self) -> SyntaxNode:
        children = [self.expect("return")]
        value = None
        if not self.at(";"):
            value = self.parse_expression()
            children.append(value)
        children.append(self.expect(";"))
        return self.node("return-statement", children, value=value)

    def parse_throw(self) -> SyntaxNode:
        children = [self.expect("throw")]
        value = self.parse_expression()
        children.append(value)
        children.append(self.expect(";"))
        return self.node("throw-statement", children, value=value)

    def parse_break_continue(self) -> SyntaxNode:
        kw = self.take()
        kind = "break-statement" if kw.token.text == "break" else "continue-statement"
        children = [kw]
        label = None
        if self.at_ident():
            label = self.take()
            children.append(label)
        children.append(self.expect(";"))
        return self.node(kind, children, label=label)

    def parse_assert(self) -> SyntaxNode:
        children = [self.expect("assert")]
        cond = self.parse_expression()
        children.append(cond)
        message = None
        if self.at(":"):
            children.append(self.take())
            message = self.parse_expression()
            children.append(message)
        children.append(self.expect(";"))
        return self.node("assert-statement", children, cond=cond, message=message)

    # ---- expressions ----

    def parse_expression(self) -> SyntaxNode:
        lam = self.try_lambda()
        if lam is not None:
            return lam
        left = self.parse_conditional()
        if self.cur.text in _ASSIGN_OPS and self.cur.kind is TokenKind.OP:
            op = self.take()
            value = self.parse_expression()
            return self.node(
                "assignment-expression", [left, op, value],
                target=left, op=op, op_text=op.token.text, value=value,
            )
        return left

    def try_lambda(self) -> SyntaxNode | None:
        if self.at_ident() and self.at("->", 1):
            params = [self.take()]
            arrow = self.take()
            body = self.parse_lambda_body()
            return self.node("lambda", params + [arrow, body], body=body)
        if self.at("(") and self._paren_precedes_arrow():
            children = self.take_balanced("(", ")")
            arrow = self.expect("->")
            children.append(arrow)
            body = self.parse_lambda_body()
            children.append(body)
            return self.node("lambda", children, body=body)
        return None

    def _paren_precedes_arrow(self) -> bool:
        depth = 0
        k = 0
        while True:
            tok = self.la(k)
            if tok.kind is TokenKind.EOF:
                return False
            if tok.text == "(":
                depth += 1
            elif tok.text == ")":
                depth -= 1
                if depth == 0:
                    return self.la(k + 1).text == "->"
            k += 1

    def parse_lambda_body(self) -> SyntaxNode:
        if self.at("{"):
            return self.parse_block()
        return self.parse_expression()

    def parse_conditional(self) -> SyntaxNode:
        cond = self.parse_binary(0)
        if self.at("?"):
            q = self.take()
            then = self.parse_expression()
            colon = self.expect(":")
            orelse = self.parse_conditional_tail()
            return self.node(
                "conditional-expression", [cond, q, then, colon, orelse],
                cond=cond, then=then, orelse=orelse,
            )
        return cond

    def parse_conditional_tail(self) -> SyntaxNode:
        lam = self.try_lambda()
        if lam is not None:
            return lam
        return self.parse_conditional()

    def parse_binary(self, level: int) -> SyntaxNode:
        if level >= len(_BINARY_LEVELS):
            return self.parse_unary()
        ops = _BINARY_LEVELS[level]
        left = self.parse_binary(level + 1)
        while True:
            tok = self.cur
            if tok.text not in ops:
                return left
            if tok.text == "instanceof":
                kw = self.take()
                ty = self.parse_type()
                children = [left, kw, ty]
                binding = None
                if self.at_ident():
                    binding = self.take()
                    children.append(binding)
                left = self.node(
                    "instanceof-expression", children,
                    operand=left, type=ty, binding=binding,
                )
                continue
            # "<" may open a generic method call like Collections.<T>emptyList();
            # that form is rare and not analyzed, so it parses as comparison
            # only when it is a valid expression, otherwise the caller fails.
            op = self.take()
            right = self.parse_binary(level + 1)
            left = self.node(
                "binary-expression", [left, op, right],
                left=left, op=op, op_text=op.token.text, right=right,
            )

    def parse_unary(self) -> SyntaxNode:
        tok = self.cur
        if tok.text in ("+", "-", "++", "--", "!", "~") and tok.kind is TokenKind.OP:
            op = self.take()
            operand = self.parse_unary()
            return self.node(
                "unary-expression", [op, operand],
                op=op, op_text=op.token.text, operand=operand, prefix=True,
            )
        if tok.text == "(":
            cast = self.try_cast()
            if cast is not None:
                return cast
        return self.parse_postfix()

    def try_cast(self) -> SyntaxNode | None:
        mark = self.pos
        try:
            open_paren = self.expect("(")
            ty = self.parse_type()
            close_paren = self.expect(")")
        except ParseError:
            self.pos = mark
            return None
        if ty.fields["is_var"]:
            self.pos = mark
            return None
        nxt = self.cur
        operand_ahead = (
            nxt.kind in (TokenKind.IDENT,)
            or nxt.kind in _LITERAL_KINDS
            or nxt.text in ("(", "!", "~", "this", "super", "new")
        )
        if ty.fields["primitive"] or ty.fields["dims"] > 0 or ty.fields["has_args"]:
            # (int) -x is a cast even though "-" follows.
            operand_ahead = operand_ahead or nxt.text in ("+", "-")
        if not operand_ahead:
            self.pos = mark
            return None
        try:
            operand = self.parse_unary()
        except ParseError:
            self.pos = mark
            return None
        return self.node(
            "cast-expression", [open_paren, ty, close_paren, operand],
            type=ty, operand=operand,
        )

    def parse_postfix(self) -> SyntaxNode:
        expr = self.parse_primary()
        while True:
            tok = self.cur
            text = tok.text
            if text == "." and tok.kind is TokenKind.OP:
                if self.at("<", 1):
                    # Explicit type witness: obj.<T>method(...)
                    dot = self.take()
                    witness = self.scan_type_arguments()
                    name = self.expect_ident()
                    children = [expr, dot] + witness + [name]
                    expr = self._finish_invocation_or_access(expr, children, name)
                elif self.at("new", 1):
                    # Qualified inner-class creation; treat verbatim-ish by
                    # parsing the creation with the receiver recorded.
                    dot = self.take()
                    creation = self.parse_creation()
                    expr = self.node(
                        "qualified-creation", [expr, dot, creation],
                        receiver=expr, creation=creation,
                    )
                elif self.at("this", 1) or self.at("class", 1) or self.at("super", 1):
                    dot = self.take()
                    name = self.take()
                    expr = self.node(
                        "field-access", [expr, dot, name],
                        receiver=expr, name=name, name_text=name.token.text,
                    )
                else:
                    dot = self.take()
                    name = self.expect_ident()
                    children = [expr, dot, name]
                    expr = self._finish_invocation_or_access(expr, children, name)
            elif text == "::":
                colons = self.take()
                if self.at("new"):
                    name = self.take()
                elif self.at("<"):
                    witness = self.scan_type_arguments()
                    name = self.expect_ident()
                    expr = self.node(
                        "method-reference", [expr, colons] + witness + [name],
                        receiver=expr, name=name, name_text=name.token.text,
                    )
                    continue
                else:
                    name = self.expect_ident()
                expr = self.node(
                    "method-reference", [expr, colons, name],
                    receiver=expr, name=name, name_text=name.token.text,
                )
            elif text == "[":
                open_b = self.take()
                index = self.parse_expression()
                close_b = self.expect("]")
                expr = self.node(
                    "array-access", [expr, open_b, index, close_b],
                    array=expr, index=index,
                )
            elif text in ("++", "--"):
                op = self.take()
                expr = self.node(
                    "unary-expression", [expr, op],
                    op=op, op_text=op.token.text, operand=expr, prefix=False,
                )
            else:
                return expr

    def _finish_invocation_or_access(
        self, receiver: SyntaxNode, children: list[SyntaxNode], name: SyntaxNode
    ) -> SyntaxNode:
        if self.at("("):
            args, arg_children = self.parse_arguments()
            children.extend(arg_children)
            return self.node(
                "method-invocation",
                children,
                receiver=receiver,
                name=name,
                name_text=name.token.text,
                args=args,
            )
        return self.node(
            "field-access", children,
            receiver=receiver, name=name, name_text=name.token.text,
        )

    def parse_arguments(self) -> tuple[list[SyntaxNode], list[SyntaxNode]]:
        children = [self.expect("(")]
        args: list[SyntaxNode] = []
        while not self.at(")"):
            if args:
                children.append(self.expect(","))
            arg = self.parse_expression()
            args.append(arg)
            children.append(arg)
        children.append(self.expect(")"))
        return args, children

    def parse_primary(self) -> SyntaxNode:
        tok = self.cur
        kind = tok.kind
        text = tok.text
        if kind in _LITERAL_KINDS:
            lit = self.take()
            category = {
                TokenKind.INT: "int",
                TokenKind.FLOAT: "float",
                TokenKind.CHAR: "char",
                TokenKind.STRING: "string",
                TokenKind.BOOL: "boolean",
                TokenKind.NULL: "null",
            }[kind]
            return self.node("literal", [lit], category=category, text=lit.token.text)
        if text == "(":
            open_paren = self.take()
            inner = self.parse_expression()
            close_paren = self.expect(")")
            return self.node(
                "parenthesized-expression", [open_paren, inner, close_paren], inner=inner
            )
        if text == "new":
            return self.parse_creation()
        if text == "this":
            kw = self.take()
            if self.at("("):
                args, arg_children = self.parse_arguments()
                return self.node(
                    "explicit-constructor-invocation", [kw] + arg_children,
                    keyword="this", args=args,
                )
            return self.node("this-expression", [kw])
        if text == "super":
            kw = self.take()
            if self.at("("):
                args, arg_children = self.parse_arguments()
                return self.node(
                    "explicit-constructor-invocation", [kw] + arg_children,
                    keyword="super", args=args,
                )
            return self.node("super-expression", [kw])
        if kind is TokenKind.KEYWORD and (text in PRIMITIVE_TYPES or text == "void"):
            # Primitive class literal: int.class, void.class, int[].class
            ty_leaf = self.take()
            children = [ty_leaf]
            while self.at("[") and self.at("]", 1):
                children.append(self.take())
                children.append(self.take())
            children.append(self.expect("."))
            children.append(self.expect("class"))
            return self.node("class-literal", children, type_text=text)
        if kind is TokenKind.IDENT:
            name = self.take()
            if self.at("("):
                args, arg_children = self.parse_arguments()
                return self.node(
                    "method-invocation",
                    [name] + arg_children,
                    receiver=None,
                    name=name,
                    name_text=name.token.text,
                    args=args,
                )
            return self.node("name", [name], id=name.token.text)
        self.fail("expression")
        raise AssertionError("unreachable")

    def parse_creation(self) -> SyntaxNode:
        kw = self.expect("new")
        ty = self.parse_type()
        if self.at("("):
            args, arg_children = self.parse_arguments()
            children = [kw, ty] + arg_children
            body = None
            if self.at("{"):
                body = self.parse_class_body()
                children.append(body)
            return self.node(
                "object-creation", children, type=ty, args=args, body=body
            )
        if self.at("{"):
            init = self.parse_array_initializer()
            return self.node(
                "array-creation", [kw, ty, init],
                type=ty, dim_exprs=[], initializer=init, creation_dims=0,
            )
        if self.at("["):
            children = [kw, ty]
            dim_exprs: list[SyntaxNode] = []
            dims = 0
            while self.at("["):
                children.append(self.take())
                dims += 1
                if self.at("]"):
                    children.append(self.take())
                else:
                    dim = self.parse_expression()
                    dim_exprs.append(dim)
                    children.append(dim)
                    children.append(self.expect("]"))
            init = None
            if self.at("{"):
                init = self.parse_array_initializer()
                children.append(init)
            return self.node(
                "array-creation", children,
                type=ty, dim_exprs=dim_exprs, initializer=init, creation_dims=dims,
            )
        self.fail("'(' or '['")
        raise AssertionError("unreachable")

    # ---- recovery ----

    def recover_verbatim(self, start: int, kind: str, err: ParseError) -> SyntaxNode:
        """Rewind to the construct start and swallow it as a verbatim node.

        Consumes up to a ";" at bracket depth zero or a balanced "}" region;
        stops before a "}" that closes the enclosing scope.
        """
        self.pos = start
        children: list[SyntaxNode] = []
        depth = 0
        saw_brace = False
        while not self.at_eof():
            text = self.cur.text
            if text == "}" and depth == 0:
                break
            children.append(self.take())
            if text in ("{", "(", "["):
                depth += 1
                if text == "{":
                    saw_brace = True
            elif text in ("}", ")", "]"):
                depth -= 1
                if text == "}" and depth == 0 and saw_brace:
                    break
            elif text == ";" and depth == 0:
                break
        if not children:
            # No progress is possible; swallow one token to avoid looping.
            children.append(self.take())
        node = self.node(kind, children, reason=err.message)
        self.diagnostics.append(Diagnostic(err.message, node.span))
        return node
