"""Lightweight type inference: binding resolution and expression hints."""
from __future__ import annotations

from javafix.tree import SyntaxNode
from javafix.typehints import (
    TypeCategory,
    TypeHint,
    build_scopes,
    expr_type,
)

from conftest import parse_text


def find_first(root: SyntaxNode, kind: str, **fields) -> SyntaxNode:
    def walk(n: SyntaxNode):
        if n.kind == kind and all(n.fields.get(k) == v for k, v in fields.items()):
            yield n
        for child in n.children:
            if isinstance(child, SyntaxNode):
                yield from walk(child)

    return next(walk(root))


def hint_at_use(text: str, name: str) -> TypeHint:
    parsed = parse_text(text)
    scopes = build_scopes(parsed.tree)

    def walk(n: SyntaxNode):
        if n.kind == "name" and n.span and name in text[n.span.start : n.span.end]:
            yield n
        for child in n.children:
            if isinstance(child, SyntaxNode):
                yield from walk(child)

    # Last occurrence: the use site, not the declaration.
    nodes = list(walk(parsed.tree))
    return scopes.resolve(name, nodes[-1])


class TestBindings:
    def test_local_variable(self):
        hint = hint_at_use(
            "class A { void m() { int x = 1; System.out.println(x); } }", "x"
        )
        assert hint.category is TypeCategory.PRIMITIVE
        assert hint.name == "int"

    def test_parameter(self):
        hint = hint_at_use("class A { void m(String s) { System.out.println(s); } }", "s")
        assert hint.category is TypeCategory.STRING

    def test_field_seen_from_method(self):
        hint = hint_at_use(
            "class A { private long stamp; void m() { System.out.println(stamp); } }",
            "stamp",
        )
        assert hint.name == "long"

    def test_array_parameter(self):
        hint = hint_at_use("class A { void m(int[] data) { System.out.println(data); } }", "data")
        assert hint.category is TypeCategory.ARRAY
        assert hint.element is not None
        assert hint.element.name == "int"

    def test_foreach_variable(self):
        hint = hint_at_use(
            "class A { void m(int[] data) { for (int v : data) { System.out.println(v); } } }",
            "v",
        )
        assert hint.name == "int"

    def test_catch_parameter(self):
        hint = hint_at_use(
            "class A { void m() { try { m(); } catch (RuntimeException boom) "
            "{ System.out.println(boom); } } }",
            "boom",
        )
        assert hint.name == "RuntimeException"

    def test_shadowing_inner_wins(self):
        text = (
            "class A { private String x; void m() { int x = 1; System.out.println(x); } }"
        )
        hint = hint_at_use(text, "x")
        assert hint.name == "int"

    def test_unknown_name(self):
        parsed = parse_text("class A { void m() { } }")
        scopes = build_scopes(parsed.tree)
        assert scopes.resolve("nowhere", parsed.tree).is_unknown


class TestClassTable:
    def test_class_info_collects_fields_and_methods(self):
        parsed = parse_text(
            "class Box { private String label; public String getLabel() { return label; } }"
        )
        scopes = build_scopes(parsed.tree)
        info = scopes.class_info_of("Box")
        assert info is not None
        assert "label" in info.fields
        assert "getLabel" in info.methods
        assert info.methods["getLabel"].return_hint.category is TypeCategory.STRING

    def test_extends_chain(self):
        parsed = parse_text("class Worker extends Thread { }")
        scopes = build_scopes(parsed.tree)
        assert scopes.extends_chain_reaches("Worker", "Thread")
        assert not scopes.extends_chain_reaches("Worker", "String")

    def test_implements_names(self):
        parsed = parse_text(
            "import java.util.Iterator;\nclass W implements Iterator<String> { }"
        )
        scopes = build_scopes(parsed.tree)
        info = scopes.class_info_of("W")
        assert "Iterator" in info.implements_names


class TestExpressionHints:
    def hint_of(self, expr: str, prelude: str = "") -> TypeHint:
        text = f"class A {{ {prelude} void m() {{ Object probe = {expr}; }} }}"
        parsed = parse_text(text)
        scopes = build_scopes(parsed.tree)
        decl = find_first(parsed.tree, "variable-declarator", name_text="probe")
        return expr_type(decl.fields["init"], scopes)

    def test_int_literal(self):
        assert self.hint_of("42").name == "int"

    def test_long_literal(self):
        assert self.hint_of("42L").name == "long"

    def test_string_literal(self):
        assert self.hint_of('"x"').category is TypeCategory.STRING

    def test_binary_promotion(self):
        assert self.hint_of("1 + 2L").name == "long"

    def test_int_arithmetic_stays_int(self):
        assert self.hint_of("24 * 60 * 60 * 1000").name == "int"

    def test_string_concat(self):
        assert self.hint_of('"a" + 1').category is TypeCategory.STRING

    def test_parenthesized(self):
        assert self.hint_of("(1 + 2)").name == "int"

    def test_cast(self):
        assert self.hint_of("(long) 1").name == "long"

    def test_new_creation(self):
        hint = self.hint_of("new Thread()")
        assert hint.name == "Thread"

    def test_known_method_return(self):
        hint = self.hint_of("System.currentTimeMillis()")
        assert hint.name == "long"
