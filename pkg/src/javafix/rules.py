"""Detectors and repair-precondition checks for the ten supported rules.

Each detector is a predicate over the syntax tree plus type hints; every
violation is then classified as target (the fix template can handle it)
or excluded with a recorded reason. Detectors only ever fire on positive
type evidence, so unresolvable code produces no reports.
"""

from dataclasses import dataclass
from enum import Enum

from .sourcefile import Span
from .tree import SyntaxNode
from .typehints import (
    CLOSEABLE_CLASSES,
    ScopeTable,
    TypeCategory,
    build_scopes,
    expr_type,
)


class RuleId(Enum):
    S1217 = "S1217"
    S1860 = "S1860"
    S2095 = "S2095"
    S2111 = "S2111"
    S2116 = "S2116"
    S2142 = "S2142"
    S2184 = "S2184"
    S2225 = "S2225"
    S2272 = "S2272"
    S4973 = "S4973"

    @property
    def short_description(self) -> str:
        return _DESCRIPTIONS[self]

    @property
    def remediation_minutes(self) -> int:
        return _REMEDIATION_MINUTES[self]


_DESCRIPTIONS = {
    RuleId.S1217: "Thread.run() should not be called directly.",
    RuleId.S1860: "Synchronization should not be based on Strings or boxed primitives.",
    RuleId.S2095: "Resources should be closed.",
    RuleId.S2111: "BigDecimal(double) should not be used.",
    RuleId.S2116: "hashCode and toString should not be called on array instances.",
    RuleId.S2142: "InterruptedException should not be ignored.",
    RuleId.S2184: "Math operands should be cast before assignment.",
    RuleId.S2225: "toString() and clone() methods should not return null.",
    RuleId.S2272: "Iterator.next() methods should throw NoSuchElementException.",
    RuleId.S4973: "Strings and Boxed types should be compared using equals().",
}

_REMEDIATION_MINUTES = {
    RuleId.S1217: 20,
    RuleId.S1860: 15,
    RuleId.S2095: 5,
    RuleId.S2111: 5,
    RuleId.S2116: 5,
    RuleId.S2142: 15,
    RuleId.S2184: 5,
    RuleId.S2225: 5,
    RuleId.S2272: 5,
    RuleId.S4973: 5,
}

ALL_RULES: tuple[RuleId, ...] = tuple(RuleId)


@dataclass(frozen=True)
class Violation:
    rule: RuleId
    file: str
    anchor: SyntaxNode
    span: Span
    message: str

    def sort_key(self) -> tuple:
        return (self.span.start, self.rule.value)


@dataclass(frozen=True)
class TargetStatus:
    status: str  # "target" | "excluded"
    exclusion_reason: str = ""

    @property
    def is_target(self) -> bool:
        return self.status == "target"


TARGET = TargetStatus("target")


def _excluded(reason: str) -> TargetStatus:
    return TargetStatus("excluded", reason)


def _violation(rule: RuleId, path: str, anchor: SyntaxNode, span: Span | None = None) -> Violation:
    return Violation(
        rule=rule,
        file=path,
        anchor=anchor,
        span=span if span is not None else anchor.span,
        message=f"{rule.value}: {rule.short_description}",
    )


def detect(tree: SyntaxNode, scopes: ScopeTable, rule: RuleId, path: str = "<memory>") -> list[Violation]:
    """All violations of one rule, in source order."""
    finder = _DETECTORS[rule]
    found = finder(tree, scopes, path)
    found.sort(key=Violation.sort_key)
    return found


def detect_all(
    tree: SyntaxNode,
    scopes: ScopeTable,
    rules: "set[RuleId] | tuple[RuleId, ...] | list[RuleId]" = ALL_RULES,
    path: str = "<memory>",
) -> list[Violation]:
    """Union of per-rule detection, ordered by (span start, rule id)."""
    found: list[Violation] = []
    for rule in ALL_RULES:
        if rule in rules:
            found.extend(detect(tree, scopes, rule, path))
    found.sort(key=Violation.sort_key)
    return found


def check_assumptions(v: Violation, tree: SyntaxNode, scopes: ScopeTable | None = None) -> TargetStatus:
    """Classify a detected violation as repairable (target) or excluded."""
    if scopes is None:
        scopes = build_scopes(tree)
    checker = _CHECKERS[v.rule]
    return checker(v, tree, scopes)


# ---- S1217: Thread.run() called directly ----


def _detect_s1217(tree: SyntaxNode, scopes: ScopeTable, path: str) -> list[Violation]:
    out = []
    for node in tree.walk():
        if node.kind != "method-invocation" or node.fields["name_text"] != "run":
            continue
        if node.fields["args"]:
            continue
        receiver = node.fields["receiver"]
        if receiver is None:
            continue
        hint = expr_type(receiver, scopes)
        if _is_thread_like(hint, scopes):
            out.append(_violation(RuleId.S1217, path, node))
    return out


def _is_thread_like(hint, scopes: ScopeTable) -> bool:
    if hint.category is TypeCategory.KNOWN_CLASS and hint.name == "Thread":
        return True
    if hint.category is TypeCategory.USER_CLASS:
        info = scopes.class_info_of(hint.name)
        if info is not None and info.kind == "class-declaration":
            return scopes.extends_chain_reaches(hint.name, "Thread") or (
                info.extends_name == "Thread"
            )
    return False


def _check_s1217(v, tree, scopes) -> TargetStatus:
    return TARGET


# ---- S1860: synchronization on String or boxed primitive ----


def _detect_s1860(tree: SyntaxNode, scopes: ScopeTable, path: str) -> list[Violation]:
    out = []
    for node in tree.walk():
        if node.kind != "synchronized-statement":
            continue
        hint = expr_type(node.fields["lock"], scopes)
        if hint.category in (TypeCategory.STRING, TypeCategory.BOXED):
            out.append(_violation(RuleId.S1860, path, node, span=node.fields["lock"].span))
    return out


def lock_binding(v: Violation, scopes: ScopeTable) -> dict | None:
    """How the lock expression is rooted: a field, or a getter on a field.

    Returns {"case": "field", "field": name} or
    {"case": "getter", "field": name, "method": name, "owner": ClassInfo}.
    """
    lock = v.anchor.fields["lock"]
    enclosing = scopes.enclosing_class(v.anchor)
    if enclosing is None:
        return None
    field_name = _field_name_of(lock, enclosing)
    if field_name is not None:
        return {"case": "field", "field": field_name, "owner": enclosing}
    if lock.kind == "method-invocation" and not lock.fields["args"]:
        method = lock.fields["name_text"]
        receiver = lock.fields["receiver"]
        if method.startswith("get") and receiver is not None:
            recv_field = _field_name_of(receiver, enclosing)
            if recv_field is None:
                return None
            recv_hint = enclosing.fields.get(recv_field)
            if recv_hint is None or recv_hint.category is not TypeCategory.USER_CLASS:
                return None
            owner = scopes.class_info_of(recv_hint.name)
            if owner is None or method not in owner.methods:
                return None
            return {
                "case": "getter",
                "field": recv_field,
                "method": method,
                "owner": owner,
                "receiver": receiver,
            }
    return None


def _field_name_of(expr: SyntaxNode, enclosing) -> str | None:
    if expr.kind == "name" and expr.fields["id"] in enclosing.fields:
        return expr.fields["id"]
    if (
        expr.kind == "field-access"
        and expr.fields["receiver"].kind == "this-expression"
        and expr.fields["name_text"] in enclosing.fields
    ):
        return expr.fields["name_text"]
    return None


def _check_s1860(v, tree, scopes) -> TargetStatus:
    binding = lock_binding(v, scopes)
    if binding is None:
        return _excluded(
            "lock is neither a field of the enclosing class nor a get-style "
            "call on such a field"
        )
    if binding["case"] == "getter" and binding["owner"].kind != "class-declaration":
        return _excluded("lock owner is not a class declared in this file")
    return TARGET


# ---- S2095: resources not closed ----


def _detect_s2095(tree: SyntaxNode, scopes: ScopeTable, path: str) -> list[Violation]:
    out = []
    for node in tree.walk():
        if node.kind != "object-creation":
            continue
        ty = node.fields["type"]
        if ty.fields["base"] not in CLOSEABLE_CLASSES:
            continue
        context = _creation_context(node)
        if context is None:
            continue
        ctx_kind, ctx_node = context
        if ctx_kind == "declaration":
            decl = ctx_node
            var_name = decl.fields["name_text"]
            method = _enclosing_method_body(decl)
            if method is not None and _var_is_closed(method, var_name):
                continue
            out.append(_violation(RuleId.S2095, path, _declaration_of(decl), span=node.span))
        elif ctx_kind == "assignment":
            target = ctx_node.fields["target"]
            if target.kind == "name":
                method = _enclosing_method_body(ctx_node)
                if method is not None and _var_is_closed(method, target.fields["id"]):
                    continue
            out.append(_violation(RuleId.S2095, path, ctx_node, span=node.span))
        elif ctx_kind in ("argument", "statement"):
            out.append(_violation(RuleId.S2095, path, ctx_node, span=node.span))
    return out


def _creation_context(node: SyntaxNode) -> tuple[str, SyntaxNode] | None:
    """Classify where a closeable creation lands; None means not tracked.

    Untracked contexts: try-with-resources headers (already closed),
    return values and field initializers (ownership escapes), and
    arguments of another closeable creation (wrapper streams, closed via
    the wrapper).
    """
    child = node
    cur = node.parent
    while cur is not None:
        kind = cur.kind
        if kind == "resource":
            return None
        if kind == "variable-declarator":
            decl = cur.parent
            if decl is not None and decl.kind == "local-variable-declaration":
                return ("declaration", cur)
            return None  # field initializer
        if kind == "assignment-expression" and child is cur.fields["value"]:
            return ("assignment", cur)
        if kind == "return-statement":
            return None
        if kind == "object-creation":
            if child in cur.fields["args"] and cur.fields["type"].fields["base"] in CLOSEABLE_CLASSES:
                return None
            if child in cur.fields["args"]:
                return ("argument", cur)
        if kind == "method-invocation" and child in cur.fields["args"]:
            return ("argument", cur)
        if kind == "expression-statement":
            return ("statement", cur)
        if kind in ("block", "method-declaration", "class-body", "lambda"):
            return None
        child = cur
        cur = cur.parent
    return None


def _declaration_of(declarator: SyntaxNode) -> SyntaxNode:
    return declarator.parent


def _enclosing_method_body(node: SyntaxNode) -> SyntaxNode | None:
    cur = node.parent
    while cur is not None:
        if cur.kind in ("method-declaration", "constructor-declaration"):
            return cur.fields["body"]
        if cur.kind == "initializer-block":
            return cur.fields["body"]
        cur = cur.parent
    return None


def _var_is_closed(body: SyntaxNode, var_name: str) -> bool:
    for node in body.walk():
        if (
            node.kind == "method-invocation"
            and node.fields["name_text"] == "close"
            and node.fields["receiver"] is not None
            and node.fields["receiver"].kind == "name"
            and node.fields["receiver"].fields["id"] == var_name
        ):
            return True
        if (
            node.kind == "resource"
            and node.fields["name_text"] is None
            and node.fields["init"].kind == "name"
            and node.fields["init"].fields["id"] == var_name
        ):
            return True
    return False


def _check_s2095(v, tree, scopes) -> TargetStatus:
    anchor = v.anchor
    if anchor.kind == "local-variable-declaration":
        if len(anchor.fields["declarators"]) != 1:
            return _excluded("declaration declares multiple variables")
        parent = anchor.parent
        if parent is None or parent.kind != "block":
            return _excluded("declaration is not a direct statement of a block")
        return TARGET
    if anchor.kind == "assignment-expression":
        return _excluded("resource initialization is not a declaration statement")
    return _excluded("no enclosing statement to wrap")


# ---- S2111: new BigDecimal(double) ----


def _detect_s2111(tree: SyntaxNode, scopes: ScopeTable, path: str) -> list[Violation]:
    out = []
    for node in tree.walk():
        if node.kind != "object-creation":
            continue
        if node.fields["type"].fields["base"] != "BigDecimal":
            continue
        args = node.fields["args"]
        if not args:
            continue
        hint = expr_type(args[0], scopes)
        if hint.category is TypeCategory.PRIMITIVE and hint.name in ("double", "float"):
            out.append(_violation(RuleId.S2111, path, node))
    return out


def _check_s2111(v, tree, scopes) -> TargetStatus:
    args = v.anchor.fields["args"]
    if len(args) == 1:
        return TARGET
    if args[0].kind == "literal" and args[0].fields["category"] == "float":
        return TARGET
    return _excluded("non-literal first argument cannot be enclosed in a String")


# ---- S2116: toString/hashCode on an array ----


def _detect_s2116(tree: SyntaxNode, scopes: ScopeTable, path: str) -> list[Violation]:
    out = []
    for node in tree.walk():
        if node.kind != "method-invocation":
            continue
        if node.fields["name_text"] not in ("toString", "hashCode"):
            continue
        if node.fields["args"]:
            continue
        receiver = node.fields["receiver"]
        if receiver is None:
            continue
        if expr_type(receiver, scopes).category is TypeCategory.ARRAY:
            out.append(_violation(RuleId.S2116, path, node))
    return out


def _check_s2116(v, tree, scopes) -> TargetStatus:
    return TARGET


# ---- S2142: InterruptedException ignored ----


def _detect_s2142(tree: SyntaxNode, scopes: ScopeTable, path: str) -> list[Violation]:
    out = []
    for node in tree.walk():
        if node.kind != "catch-clause":
            continue
        caught = [t.fields["base"] for t in node.fields["types"]]
        if "InterruptedException" not in caught:
            continue
        body = node.fields["body"]
        if _reinterrupts_or_rethrows(body):
            continue
        out.append(_violation(RuleId.S2142, path, node))
    return out


def _reinterrupts_or_rethrows(body: SyntaxNode) -> bool:
    for node in body.walk():
        if node.kind == "throw-statement":
            return True
        if node.kind == "method-invocation" and node.fields["name_text"] == "interrupt":
            return True
    return False


def _check_s2142(v, tree, scopes) -> TargetStatus:
    return TARGET


# ---- S2184: int arithmetic assigned to a wider type ----

_WIDE_RANK = {"int": 2, "long": 3, "float": 4, "double": 5}


def _detect_s2184(tree: SyntaxNode, scopes: ScopeTable, path: str) -> list[Violation]:
    out = []
    for node in tree.walk():
        context_hint = None
        expr = None
        if node.kind == "variable-declarator" and node.fields["init"] is not None:
            decl = node.parent
            if decl is not None and decl.kind in (
                "local-variable-declaration",
                "field-declaration",
            ):
                ty = decl.fields["type"]
                if ty.fields["primitive"] and node.fields["dims"] == 0 and ty.fields["dims"] == 0:
                    context_hint = ty.fields["base"]
                    expr = node.fields["init"]
        elif node.kind == "assignment-expression" and node.fields["op_text"] == "=":
            target_hint = expr_type(node.fields["target"], scopes)
            if target_hint.category is TypeCategory.PRIMITIVE:
                context_hint = target_hint.name
                expr = node.fields["value"]
        elif node.kind == "return-statement" and node.fields["value"] is not None:
            method = _enclosing_method(node)
            if method is not None:
                ret = method.fields["return_type"]
                if ret is not None and ret.fields["primitive"] and ret.fields["dims"] == 0:
                    context_hint = ret.fields["base"]
                    expr = node.fields["value"]
        if context_hint not in ("long", "float", "double"):
            continue
        arithmetic = _strip_parens(expr)
        if arithmetic.kind != "binary-expression":
            continue
        if arithmetic.fields["op_text"] not in ("+", "-", "*", "/"):
            continue
        result = expr_type(arithmetic, scopes)
        if not (result.category is TypeCategory.PRIMITIVE and result.name in ("int", "long")):
            continue
        if _WIDE_RANK[result.name] < _WIDE_RANK[context_hint]:
            out.append(_violation(RuleId.S2184, path, arithmetic))
    return out


def _enclosing_method(node: SyntaxNode) -> SyntaxNode | None:
    cur = node.parent
    while cur is not None:
        if cur.kind == "method-declaration":
            return cur
        if cur.kind in ("constructor-declaration", "lambda", "class-declaration"):
            return None
        cur = cur.parent
    return None


def _strip_parens(node: SyntaxNode) -> SyntaxNode:
    while node.kind == "parenthesized-expression":
        node = node.fields["inner"]
    return node


def s2184_context_type(anchor: SyntaxNode, scopes: ScopeTable) -> str | None:
    """The declared type the arithmetic result flows into."""
    cur = anchor.parent
    while cur is not None and cur.kind == "parenthesized-expression":
        cur = cur.parent
    if cur is None:
        return None
    if cur.kind == "variable-declarator":
        decl = cur.parent
        if decl is not None and decl.kind in ("local-variable-declaration", "field-declaration"):
            return decl.fields["type"].fields["base"]
    if cur.kind == "assignment-expression":
        hint = expr_type(cur.fields["target"], scopes)
        if hint.category is TypeCategory.PRIMITIVE:
            return hint.name
    if cur.kind == "return-statement":
        method = _enclosing_method(cur)
        if method is not None and method.fields["return_type"] is not None:
            return method.fields["return_type"].fields["base"]
    return None


def _check_s2184(v, tree, scopes) -> TargetStatus:
    context = s2184_context_type(v.anchor, scopes)
    if context is None:
        return _excluded("assignment context type is not resolvable")
    for node in v.anchor.walk():
        if node.kind == "cast-expression":
            ty = node.fields["type"]
            if ty.fields["primitive"] and ty.fields["base"] in ("long", "float", "double"):
                return _excluded("expression already contains an explicit widening cast")
    return TARGET


# ---- S2225: toString()/clone() returning null ----


def _detect_s2225(tree: SyntaxNode, scopes: ScopeTable, path: str) -> list[Violation]:
    out = []
    for node in tree.walk():
        if node.kind != "return-statement":
            continue
        value = node.fields["value"]
        if value is None or value.kind != "literal" or value.fields["category"] != "null":
            continue
        method = _enclosing_method(node)
        if method is None:
            continue
        if method.fields["name_text"] in ("toString", "clone") and not method.fields["params"]:
            out.append(_violation(RuleId.S2225, path, node))
    return out


def _check_s2225(v, tree, scopes) -> TargetStatus:
    method = _enclosing_method(v.anchor)
    if method is not None and method.fields["name_text"] == "clone":
        return _excluded("clone() is not amenable to template repair")
    return TARGET


# ---- S2272: next() without NoSuchElementException ----


def _detect_s2272(tree: SyntaxNode, scopes: ScopeTable, path: str) -> list[Violation]:
    out = []
    for node in tree.walk():
        if node.kind != "method-declaration" or node.fields["name_text"] != "next":
            continue
        if node.fields["params"] or node.fields["body"] is None:
            continue
        owner = _enclosing_type(node)
        if owner is None or owner.kind != "class-declaration":
            continue
        implements = [t.fields["base"] for t in owner.fields["implements"]]
        if "Iterator" not in implements:
            continue
        if _throws_no_such_element(node.fields["body"]):
            continue
        out.append(_violation(RuleId.S2272, path, node, span=node.fields["name"].span))
    return out


def _enclosing_type(node: SyntaxNode) -> SyntaxNode | None:
    cur = node.parent
    while cur is not None:
        if cur.kind in ("class-declaration", "interface-declaration"):
            return cur
        cur = cur.parent
    return None


def _throws_no_such_element(body: SyntaxNode) -> bool:
    for node in body.walk():
        if node.kind != "throw-statement":
            continue
        value = _strip_parens(node.fields["value"])
        if (
            value.kind == "object-creation"
            and value.fields["type"].fields["base"] == "NoSuchElementException"
        ):
            return True
    return False


def _check_s2272(v, tree, scopes) -> TargetStatus:
    body = v.anchor.fields["body"]
    statements = body.fields["statements"]
    if len(statements) == 1 and statements[0].kind == "return-statement":
        value = statements[0].fields["value"]
        if value is not None:
            value = _strip_parens(value)
            if (
                value.kind == "method-invocation"
                and value.fields["name_text"] == "next"
                and value.fields["receiver"] is not None
                and value.fields["receiver"].kind != "this-expression"
            ):
                return _excluded("delegates to another iterator's next()")
    return TARGET


# ---- S4973: == / != on Strings or boxed types ----


def _detect_s4973(tree: SyntaxNode, scopes: ScopeTable, path: str) -> list[Violation]:
    out = []
    for node in tree.walk():
        if node.kind != "binary-expression":
            continue
        if node.fields["op_text"] not in ("==", "!="):
            continue
        left = node.fields["left"]
        right = node.fields["right"]
        if _is_null_literal(left) or _is_null_literal(right):
            continue
        lh = expr_type(left, scopes)
        rh = expr_type(right, scopes)
        both_strings = (
            lh.category is TypeCategory.STRING and rh.category is TypeCategory.STRING
        )
        same_boxed = (
            lh.category is TypeCategory.BOXED
            and rh.category is TypeCategory.BOXED
            and lh.name == rh.name
        )
        if both_strings or same_boxed:
            out.append(_violation(RuleId.S4973, path, node))
    return out


def _is_null_literal(node: SyntaxNode) -> bool:
    node = _strip_parens(node)
    return node.kind == "literal" and node.fields["category"] == "null"


def _check_s4973(v, tree, scopes) -> TargetStatus:
    return TARGET


_DETECTORS = {
    RuleId.S1217: _detect_s1217,
    RuleId.S1860: _detect_s1860,
    RuleId.S2095: _detect_s2095,
    RuleId.S2111: _detect_s2111,
    RuleId.S2116: _detect_s2116,
    RuleId.S2142: _detect_s2142,
    RuleId.S2184: _detect_s2184,
    RuleId.S2225: _detect_s2225,
    RuleId.S2272: _detect_s2272,
    RuleId.S4973: _detect_s4973,
}

_CHECKERS = {
    RuleId.S1217: _check_s1217,
    RuleId.S1860: _check_s1860,
    RuleId.S2095: _check_s2095,
    RuleId.S2111: _check_s2111,
    RuleId.S2116: _check_s2116,
    RuleId.S2142: _check_s2142,
    RuleId.S2184: _check_s2184,
    RuleId.S2225: _check_s2225,
    RuleId.S2272: _check_s2272,
    RuleId.S4973: _check_s4973,
}


def violation_to_json(v: Violation, status: TargetStatus | None = None) -> dict:
    record = {
        "rule": v.rule.value,
        "path": v.file,
        "startLine": v.span.start_line,
        "startCol": v.span.start_col,
        "endLine": v.span.end_line,
        "endCol": v.span.end_col,
        "message": v.message,
    }
    if status is not None:
        record["target"] = status.is_target
        if not status.is_target:
            record["exclusionReason"] = status.exclusion_reason
    return record
