"""Parser oracles: tree shapes, spans, recovery, and strict-mode errors."""
from __future__ import annotations

import pytest

from javafix.parser import ParseError, parse
from javafix.printer import verify_token_coverage
from javafix.sourcefile import SourceFile
from javafix.tree import SyntaxNode

from conftest import parse_text


def find_all(root: SyntaxNode, kind: str) -> list[SyntaxNode]:
    out = []

    def walk(n: SyntaxNode) -> None:
        if n.kind == kind:
            out.append(n)
        for child in n.children:
            if isinstance(child, SyntaxNode):
                walk(child)

    walk(root)
    return out


class TestShapes:
    def test_minimal_class(self):
        result = parse_text("class A {}\n")
        assert result.tree.kind == "compilation-unit"
        classes = find_all(result.tree, "class-declaration")
        assert len(classes) == 1
        assert classes[0].fields["type_name"] == "A"

    def test_package_and_imports_recorded(self):
        result = parse_text(
            "package a.b;\nimport java.util.List;\nimport static java.lang.Math.max;\n"
            "class A {}\n"
        )
        assert len(find_all(result.tree, "package-declaration")) == 1
        assert len(find_all(result.tree, "import-declaration")) == 2

    def test_method_body_statements_in_order(self):
        result = parse_text(
            "class A {\n"
            "    int m(int a) {\n"
            "        int b = a + 1;\n"
            "        b++;\n"
            "        return b;\n"
            "    }\n"
            "}\n"
        )
        methods = find_all(result.tree, "method-declaration")
        assert len(methods) == 1
        statements = methods[0].fields["body"].fields["statements"]
        kinds = [s.kind for s in statements]
        assert kinds == [
            "local-variable-declaration",
            "expression-statement",
            "return-statement",
        ]

    def test_binary_precedence(self):
        result = parse_text("class A { int x = 1 + 2 * 3; }\n")
        binary = find_all(result.tree, "binary-expression")
        # Outermost node is the +; its right child is the *.
        outer = binary[0]
        assert outer.fields["op_text"] == "+"
        assert outer.fields["right"].kind == "binary-expression"
        assert outer.fields["right"].fields["op_text"] == "*"

    def test_method_invocation_shape(self):
        result = parse_text("class A { void m(Thread t) { t.run(); } }\n")
        calls = find_all(result.tree, "method-invocation")
        assert len(calls) == 1
        assert calls[0].fields["name_text"] == "run"

    def test_spans_cover_original_text(self):
        text = "class A { int x = 1; }\n"
        src = SourceFile.from_text(text)
        result = parse(src)
        # Every significant token is owned by exactly one leaf (EOF aside).
        verify_token_coverage(src, result.tree)

    def test_node_spans_nest(self):
        result = parse_text("class A { void m() { if (true) { m(); } } }\n")

        def walk(n: SyntaxNode) -> None:
            for child in n.children:
                if isinstance(child, SyntaxNode):
                    assert n.span.start <= child.span.start
                    assert child.span.end <= n.span.end
                    walk(child)

        walk(result.tree)

    def test_try_with_resources_resources_list(self):
        result = parse_text(
            "import java.io.FileReader;\n"
            "class A { void m(String p) throws Exception {\n"
            "    try (FileReader a = new FileReader(p); FileReader b = new FileReader(p)) {\n"
            "        a.read();\n"
            "    }\n"
            "} }\n"
        )
        tries = find_all(result.tree, "try-statement")
        assert len(tries) == 1
        assert len(tries[0].fields["resources"]) == 2

    def test_catch_clause_types(self):
        result = parse_text(
            "import java.io.IOException;\n"
            "class A { void m() {\n"
            "    try { m(); } catch (IOException | RuntimeException e) { }\n"
            "} }\n"
        )
        catches = find_all(result.tree, "catch-clause")
        assert len(catches) == 1
        names = [t.fields["text"] for t in catches[0].fields["types"]]
        assert names == ["IOException", "RuntimeException"]


class TestRecovery:
    def test_enum_degrades_to_verbatim_type(self):
        result = parse_text("enum E { A, B }\n")
        assert len(find_all(result.tree, "verbatim-type")) == 1
        assert result.diagnostics

    def test_record_degrades_to_verbatim_type(self):
        result = parse_text("public record P(int x) {}\n")
        assert len(find_all(result.tree, "verbatim-type")) == 1

    def test_annotation_decl_degrades(self):
        result = parse_text("@interface Marker { String value(); }\n")
        assert len(find_all(result.tree, "verbatim-type")) == 1

    def test_arrow_switch_statement_degrades_but_rest_parses(self):
        result = parse_text(
            "class A {\n"
            "    int pick(int y) {\n"
            "        switch (y) {\n"
            "            case 1 -> m();\n"
            "            default -> m();\n"
            "        }\n"
            "        return y;\n"
            "    }\n"
            "    void m() { }\n"
            "}\n"
        )
        assert find_all(result.tree, "verbatim-statement")
        # Surrounding members still parse normally.
        assert len(find_all(result.tree, "method-declaration")) == 2

    def test_verbatim_nodes_keep_every_token(self):
        text = "enum E { A, B }\n"
        src = SourceFile.from_text(text)
        result = parse(src)
        verify_token_coverage(src, result.tree)

    def test_diagnostics_carry_spans(self):
        result = parse_text("enum E { A }\n")
        assert all(d.span.start_line >= 1 for d in result.diagnostics)


class TestStrictErrors:
    def test_unclosed_brace_raises(self):
        with pytest.raises(ParseError):
            parse("class A { void m() {", recover=False)

    def test_error_has_line_info(self):
        with pytest.raises(ParseError) as info:
            parse("class A {\n???\n}", recover=False)
        assert info.value.span.start_line == 2

    def test_garbage_top_level_degrades_with_diagnostics(self):
        result = parse(")))")
        assert result.diagnostics
        assert find_all(result.tree, "verbatim-type")

    def test_recovered_parse_does_not_raise_on_member_garbage(self):
        result = parse("class A { ??? ; }")
        assert result.diagnostics
