"""Deterministic repair templates and their application machinery.

Each target violation gets exactly one FixPlan of TreeEdits. Application
lowers edits to text splices against the original bytes: replacements
cover exactly the edited node, insertions are zero-width, and the two
statement-wrapping repairs compose any inner edits before re-indenting,
so untouched code reprints byte-identically.
"""

import re
from dataclasses import dataclass, field

from .parser import (
    ParseError,
    ParseResult,
    parse_expression_text,
    parse_member_text,
    parse_statement_text,
)
from .printer import Splice, infer_indent_unit, leading_whitespace, line_start, render
from .rules import (
    RuleId,
    TargetStatus,
    Violation,
    check_assumptions,
    lock_binding,
    s2184_context_type,
)
from .sourcefile import Span, line_starts, span_from_offsets
from .tree import SyntaxNode
from .typehints import ScopeTable, build_scopes


class NotTarget(Exception):
    """A fix template was invoked on an excluded violation."""


class StaleAnchor(Exception):
    """A plan's anchor does not belong to the tree being edited."""


_EDIT_KINDS = frozenset(
    [
        "replace-node",
        "insert-before",
        "insert-after",
        "insert-into-block-start",
        "wrap-statements",
        "add-field",
        "add-import",
    ]
)

_IDENT_RE = re.compile(r"^[A-Za-z_$][A-Za-z0-9_$]*$")


@dataclass
class TreeEdit:
    kind: str
    anchor: SyntaxNode
    payload: str = ""
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in _EDIT_KINDS:
            raise ValueError(f"unknown edit kind {self.kind!r}")


@dataclass
class FixPlan:
    violation: Violation
    edits: list[TreeEdit]
    rule: RuleId

    @property
    def span(self) -> Span:
        return self.violation.span


def _validate_expression(text: str) -> None:
    parse_expression_text(text)


def _validate_statement(text: str) -> None:
    parse_statement_text(text)


def _validate_member(text: str) -> None:
    parse_member_text(text)


def _validate_identifier(text: str) -> None:
    if not _IDENT_RE.match(text):
        raise ParseError(f"not an identifier: {text!r}", Span(0, 0, 1, 1, 1, 1))


def _require_target(v: Violation, tree: SyntaxNode, scopes: ScopeTable) -> None:
    status: TargetStatus = check_assumptions(v, tree, scopes)
    if not status.is_target:
        raise NotTarget(f"{v.rule.value}: {status.exclusion_reason}")


def _node_text(node: SyntaxNode, parsed: ParseResult) -> str:
    return node.text_in(parsed.source.text)


# ---- templates ----


def fix_S1217(v: Violation, parsed: ParseResult, scopes: ScopeTable | None = None) -> FixPlan:
    scopes = scopes or build_scopes(parsed.tree)
    _require_target(v, parsed.tree, scopes)
    name_leaf = v.anchor.fields["name"]
    _validate_identifier("start")
    edit = TreeEdit(kind="replace-node", anchor=name_leaf, payload="start")
    return FixPlan(violation=v, edits=[edit], rule=RuleId.S1217)


def fix_S1860(v: Violation, parsed: ParseResult, scopes: ScopeTable | None = None) -> FixPlan:
    scopes = scopes or build_scopes(parsed.tree)
    _require_target(v, parsed.tree, scopes)
    binding = lock_binding(v, scopes)
    lock_expr = v.anchor.fields["lock"]
    unit = infer_indent_unit(parsed.source.text)
    if binding["case"] == "field":
        owner = binding["owner"]
        lock_name = _fresh_lock_name(binding["field"], owner)
        origin = owner.field_nodes[binding["field"]]
        static = _member_is_static(origin)
        modifiers = "private static final" if static else "private final"
        payload = f"{modifiers} Object {lock_name} = new Object();"
        _validate_member(payload)
        _validate_expression(lock_name)
        edits = [
            TreeEdit(kind="add-field", anchor=origin, payload=payload),
            TreeEdit(kind="replace-node", anchor=lock_expr, payload=lock_name),
        ]
        return FixPlan(violation=v, edits=edits, rule=RuleId.S1860)
    owner = binding["owner"]
    prop = binding["method"][3:]
    lock_name = _fresh_lock_name(prop, owner)
    getter_name = "get" + lock_name[0].upper() + lock_name[1:]
    receiver_text = _node_text(binding["receiver"], parsed)
    field_payload = f"private final Object {lock_name} = new Object();"
    getter_payload = (
        f"public Object {getter_name}() {{\n{unit}return {lock_name};\n}}"
    )
    replacement = f"{receiver_text}.{getter_name}()"
    _validate_member(field_payload)
    _validate_member(getter_payload)
    _validate_expression(replacement)
    body = owner.node.fields["body"]
    edits = [
        TreeEdit(kind="add-field", anchor=body, payload=field_payload,
                 extra={"position": "end"}),
        TreeEdit(kind="add-field", anchor=body, payload=getter_payload,
                 extra={"position": "end"}),
        TreeEdit(kind="replace-node", anchor=lock_expr, payload=replacement),
    ]
    return FixPlan(violation=v, edits=edits, rule=RuleId.S1860)


def _member_is_static(member: SyntaxNode) -> bool:
    return any(
        m.kind == "token" and m.token.text == "static"
        for m in member.fields["modifiers"]
    )


def _fresh_lock_name(base: str, owner) -> str:
    name = "lock" + base[0].upper() + base[1:]
    if name not in owner.fields and name not in owner.methods:
        return name
    n = 2
    while f"{name}{n}" in owner.fields or f"{name}{n}" in owner.methods:
        n += 1
    return f"{name}{n}"


def fix_S2095(v: Violation, parsed: ParseResult, scopes: ScopeTable | None = None) -> FixPlan:
    scopes = scopes or build_scopes(parsed.tree)
    _require_target(v, parsed.tree, scopes)
    decl = v.anchor
    block = decl.parent
    var_name = decl.fields["declarators"][0].fields["name_text"]
    statements = block.fields["statements"]
    decl_index = statements.index(decl)
    enclosing_try = block.parent
    if enclosing_try is not None and enclosing_try.kind == "try-statement" \
            and enclosing_try.fields["body"] is block:
        edit = TreeEdit(
            kind="wrap-statements",
            anchor=decl,
            extra={"mode": "convert", "try": enclosing_try, "block": block},
        )
        return FixPlan(violation=v, edits=[edit], rule=RuleId.S2095)
    last = _wrap_extent(statements, decl_index, var_name)
    edit = TreeEdit(
        kind="wrap-statements",
        anchor=decl,
        extra={
            "mode": "wrap",
            "block": block,
            "first_index": decl_index,
            "last_index": last,
        },
    )
    return FixPlan(violation=v, edits=[edit], rule=RuleId.S2095)


def _wrap_extent(statements: list[SyntaxNode], decl_index: int, var_name: str) -> int:
    """Last statement index the try block must cover.

    Starts from the last statement mentioning the resource variable, then
    grows to keep any variable declared inside the covered range in scope
    for the statements that use it.
    """
    last = decl_index
    names = {var_name}
    while True:
        for i in range(decl_index + 1, last + 1):
            names.update(_declared_names(statements[i]))
        grown = last
        for i in range(last + 1, len(statements)):
            if _mentions_any(statements[i], names):
                grown = i
        if grown == last:
            return last
        last = grown


def _declared_names(stmt: SyntaxNode) -> set[str]:
    if stmt.kind != "local-variable-declaration":
        return set()
    return {d.fields["name_text"] for d in stmt.fields["declarators"]}


def _mentions_any(node: SyntaxNode, names: set[str]) -> bool:
    for n in node.walk():
        if n.kind == "name" and n.fields["id"] in names:
            return True
    return False


def fix_S2111(v: Violation, parsed: ParseResult, scopes: ScopeTable | None = None) -> FixPlan:
    scopes = scopes or build_scopes(parsed.tree)
    _require_target(v, parsed.tree, scopes)
    creation = v.anchor
    args = creation.fields["args"]
    type_text = creation.fields["type"].fields["text"]
    if len(args) == 1:
        arg_text = _node_text(args[0], parsed)
        payload = f"{type_text}.valueOf({arg_text})"
        _validate_expression(payload)
        edit = TreeEdit(kind="replace-node", anchor=creation, payload=payload)
        return FixPlan(violation=v, edits=[edit], rule=RuleId.S2111)
    literal = args[0]
    digits = literal.fields["text"]
    # A float/double literal quoted for the String constructor must stay
    # parseable: drop the suffix letter and any underscore separators.
    if digits[-1] in "fFdD":
        digits = digits[:-1]
    digits = digits.replace("_", "")
    payload = f'"{digits}"'
    _validate_expression(payload)
    edit = TreeEdit(kind="replace-node", anchor=literal, payload=payload)
    return FixPlan(violation=v, edits=[edit], rule=RuleId.S2111)


def fix_S2116(v: Violation, parsed: ParseResult, scopes: ScopeTable | None = None) -> FixPlan:
    scopes = scopes or build_scopes(parsed.tree)
    _require_target(v, parsed.tree, scopes)
    invocation = v.anchor
    method = invocation.fields["name_text"]
    receiver_text = _node_text(invocation.fields["receiver"], parsed)
    qualifier, import_edit = _helper_class_reference(parsed, "java.util", "Arrays")
    payload = f"{qualifier}.{method}({receiver_text})"
    _validate_expression(payload)
    edits = [TreeEdit(kind="replace-node", anchor=invocation, payload=payload)]
    if import_edit is not None:
        edits.append(import_edit)
    return FixPlan(violation=v, edits=edits, rule=RuleId.S2116)


def _helper_class_reference(
    parsed: ParseResult, package: str, simple_name: str
) -> tuple[str, TreeEdit | None]:
    """Shortest safe way to name package.simple_name in this file.

    Returns the reference text plus an add-import edit when one is needed.
    If the simple name is already taken by a different import or a type
    declared in the file, the fully qualified name is used inline.
    """
    wanted = f"{package}.{simple_name}"
    root = parsed.tree
    for imp in root.fields["imports"]:
        name = imp.fields["name"]
        if name == wanted:
            return simple_name, None
        if name == f"{package}.*":
            return simple_name, None
        if name.rsplit(".", 1)[-1] == simple_name:
            return wanted, None
    for decl in root.fields["types"]:
        if decl.fields.get("type_name") == simple_name:
            return wanted, None
    edit = TreeEdit(kind="add-import", anchor=root, payload=f"import {wanted};")
    return simple_name, edit


_TRANSFER_STATEMENTS = frozenset(
    {"break-statement", "continue-statement", "return-statement", "throw-statement"}
)


def fix_S2142(v: Violation, parsed: ParseResult, scopes: ScopeTable | None = None) -> FixPlan:
    scopes = scopes or build_scopes(parsed.tree)
    _require_target(v, parsed.tree, scopes)
    body = v.anchor.fields["body"]
    payload = "Thread.currentThread().interrupt();"
    _validate_statement(payload)
    statements = body.fields["statements"]
    # Trailing break/continue/return/throw would make code inserted after it
    # unreachable, so back up to the last statement control can fall through.
    last_reachable = len(statements) - 1
    while last_reachable >= 0 and statements[last_reachable].kind in _TRANSFER_STATEMENTS:
        last_reachable -= 1
    if last_reachable >= 0:
        edit = TreeEdit(kind="insert-after", anchor=statements[last_reachable], payload=payload)
    elif statements:
        edit = TreeEdit(kind="insert-before", anchor=statements[0], payload=payload)
    else:
        edit = TreeEdit(kind="insert-into-block-start", anchor=body, payload=payload)
    return FixPlan(violation=v, edits=[edit], rule=RuleId.S2142)


_FLOAT_SUFFIX = {"long": "L", "float": "f", "double": "d"}


def fix_S2184(v: Violation, parsed: ParseResult, scopes: ScopeTable | None = None) -> FixPlan:
    scopes = scopes or build_scopes(parsed.tree)
    _require_target(v, parsed.tree, scopes)
    context = s2184_context_type(v.anchor, scopes)
    first = v.anchor
    while first.kind == "binary-expression":
        first = first.fields["left"]
    if (
        first.kind == "literal"
        and first.fields["category"] == "int"
        and first.fields["text"][-1] not in "lL"
    ):
        payload = first.fields["text"] + _FLOAT_SUFFIX[context]
    else:
        payload = f"({context}) {_node_text(first, parsed)}"
    _validate_expression(payload)
    edit = TreeEdit(kind="replace-node", anchor=first, payload=payload)
    return FixPlan(violation=v, edits=[edit], rule=RuleId.S2184)


def fix_S2225(v: Violation, parsed: ParseResult, scopes: ScopeTable | None = None) -> FixPlan:
    scopes = scopes or build_scopes(parsed.tree)
    _require_target(v, parsed.tree, scopes)
    value = v.anchor.fields["value"]
    payload = '""'
    _validate_expression(payload)
    edit = TreeEdit(kind="replace-node", anchor=value, payload=payload)
    return FixPlan(violation=v, edits=[edit], rule=RuleId.S2225)


def fix_S2272(v: Violation, parsed: ParseResult, scopes: ScopeTable | None = None) -> FixPlan:
    scopes = scopes or build_scopes(parsed.tree)
    _require_target(v, parsed.tree, scopes)
    unit = infer_indent_unit(parsed.source.text)
    qualifier, import_edit = _helper_class_reference(
        parsed, "java.util", "NoSuchElementException"
    )
    payload = f"if (!hasNext()) {{\n{unit}throw new {qualifier}();\n}}"
    _validate_statement(payload)
    body = v.anchor.fields["body"]
    statements = body.fields["statements"]
    if statements:
        edit = TreeEdit(kind="insert-before", anchor=statements[0], payload=payload)
    else:
        edit = TreeEdit(kind="insert-into-block-start", anchor=body, payload=payload)
    edits = [edit]
    if import_edit is not None:
        edits.append(import_edit)
    return FixPlan(violation=v, edits=edits, rule=RuleId.S2272)


_SIMPLE_RECEIVER_KINDS = frozenset(
    [
        "name",
        "field-access",
        "method-invocation",
        "literal",
        "parenthesized-expression",
        "this-expression",
        "array-access",
    ]
)


def fix_S4973(v: Violation, parsed: ParseResult, scopes: ScopeTable | None = None) -> FixPlan:
    scopes = scopes or build_scopes(parsed.tree)
    _require_target(v, parsed.tree, scopes)
    node = v.anchor
    left = node.fields["left"]
    right = node.fields["right"]
    left_text = _node_text(left, parsed)
    if left.kind not in _SIMPLE_RECEIVER_KINDS:
        left_text = f"({left_text})"
    right_text = _node_text(right, parsed)
    call = f"{left_text}.equals({right_text})"
    payload = call if node.fields["op_text"] == "==" else f"!{call}"
    _validate_expression(payload)
    edit = TreeEdit(kind="replace-node", anchor=node, payload=payload)
    return FixPlan(violation=v, edits=[edit], rule=RuleId.S4973)


FIX_TEMPLATES = {
    RuleId.S1217: fix_S1217,
    RuleId.S1860: fix_S1860,
    RuleId.S2095: fix_S2095,
    RuleId.S2111: fix_S2111,
    RuleId.S2116: fix_S2116,
    RuleId.S2142: fix_S2142,
    RuleId.S2184: fix_S2184,
    RuleId.S2225: fix_S2225,
    RuleId.S2272: fix_S2272,
    RuleId.S4973: fix_S4973,
}


def build_plan(v: Violation, parsed: ParseResult, scopes: ScopeTable | None = None) -> FixPlan:
    return FIX_TEMPLATES[v.rule](v, parsed, scopes)


# ---- application ----


@dataclass
class DeferredPlan:
    plan: FixPlan
    reason: str


@dataclass
class ApplyOutcome:
    text: str
    applied: list[FixPlan]
    deferred: list[DeferredPlan]
    touched: dict[int, list[Span]]  # id(plan) -> spans the plan may change

    def touched_spans(self, plan: FixPlan) -> list[Span]:
        return self.touched.get(id(plan), [])


@dataclass
class _Region:
    plan: FixPlan
    edit: TreeEdit
    start: int
    end: int
    inner: "list[tuple[FixPlan, Splice]]" = field(default_factory=list)


def apply_plans(parsed: ParseResult, plans: list[FixPlan]) -> ApplyOutcome:
    """Lower plans to splices, compose nested edits, defer conflicts.

    Plans are processed in source order. A plain edit landing fully inside
    an accepted wrap region is composed into that region instead of
    conflicting; genuine overlaps defer the later plan.
    """
    text = parsed.source.text
    eol = parsed.source.eol
    unit = infer_indent_unit(text)
    starts = line_starts(parsed.source.text)
    ordered = sorted(plans, key=lambda p: (p.span.start, p.rule.value))
    applied: list[FixPlan] = []
    deferred: list[DeferredPlan] = []
    accepted: list[tuple[FixPlan, Splice]] = []
    regions: list[_Region] = []
    touched: dict[int, list[Span]] = {}

    for plan in ordered:
        _check_anchors(plan, parsed)
        plain, region = _materialize(plan, parsed, eol, unit)
        conflict, adoptions = _resolve_placement(plain, region, accepted, regions)
        if conflict is not None:
            deferred.append(DeferredPlan(plan, conflict))
            continue
        for splice in plain:
            host = adoptions.get(splice)
            if host is not None:
                host.inner.append((plan, splice))
                continue
            duplicate = any(s == splice for _, s in accepted)
            if not duplicate:
                accepted.append((plan, splice))
        if region is not None:
            inside = [
                (p, s) for p, s in accepted
                if region.start <= s.start and s.end <= region.end
            ]
            accepted = [ps for ps in accepted if ps not in inside]
            region.inner.extend(inside)
            regions.append(region)
        applied.append(plan)
        spans = touched.setdefault(id(plan), [])
        for splice in plain:
            spans.append(span_from_offsets(starts, splice.start, splice.end))
        if region is not None:
            spans.append(span_from_offsets(starts, region.start, region.end))
            for at in _region_fixed_points(region):
                spans.append(span_from_offsets(starts, at, at))

    final: list[Splice] = [s for _, s in accepted]
    for region in regions:
        final.extend(_compose_region(region, parsed, eol, unit))
    for edit_plan in applied:
        for edit in edit_plan.edits:
            parsed.fragments.mark_edited(edit.anchor)
    new_text = render(text, final)
    return ApplyOutcome(text=new_text, applied=applied, deferred=deferred, touched=touched)


def _check_anchors(plan: FixPlan, parsed: ParseResult) -> None:
    for edit in plan.edits:
        node = edit.anchor
        while node.parent is not None:
            node = node.parent
        if node is not parsed.tree:
            raise StaleAnchor(
                f"{plan.rule.value} anchor does not belong to the current tree"
            )


def _resolve_placement(
    plain: list[Splice],
    region: "_Region | None",
    accepted: list[tuple[FixPlan, Splice]],
    regions: list[_Region],
) -> tuple[str | None, dict[Splice, "_Region"]]:
    adoptions: dict[Splice, _Region] = {}
    for splice in plain:
        for _, other in accepted:
            if _splices_conflict(splice, other):
                return "overlapping edit already planned", {}
        for other_region in regions:
            inside = other_region.start <= splice.start and splice.end <= other_region.end
            overlaps = splice.start < other_region.end and other_region.start < splice.end
            if inside:
                adoptions[splice] = other_region
            elif overlaps:
                return "edit straddles a wrapped statement range", {}
    if region is not None:
        for other_region in regions:
            if region.start < other_region.end and other_region.start < region.end:
                return "overlapping statement-wrapping repairs", {}
        for _, other in accepted:
            inside = region.start <= other.start and other.end <= region.end
            overlaps = other.start < region.end and region.start < other.end
            if overlaps and not inside:
                return "wrapped range straddles an earlier edit", {}
    return None, adoptions


def _splices_conflict(a: Splice, b: Splice) -> bool:
    if a.start == a.end == b.start == b.end:
        return a.replacement != b.replacement
    if a.start == b.start and a.end == b.end:
        return True
    return a.start < b.end and b.start < a.end


def _materialize(
    plan: FixPlan, parsed: ParseResult, eol: str, unit: str
) -> tuple[list[Splice], "_Region | None"]:
    text = parsed.source.text
    plain: list[Splice] = []
    region: _Region | None = None
    for edit in plan.edits:
        kind = edit.kind
        if kind == "replace-node":
            span = edit.anchor.span
            plain.append(Splice(span.start, span.end, edit.payload))
        elif kind == "insert-before":
            anchor_span = edit.anchor.span
            at = line_start(text, anchor_span.start)
            indent = leading_whitespace(text, anchor_span.start)
            block = _indent_payload(edit.payload, indent, eol)
            plain.append(Splice(at, at, block + eol))
        elif kind == "insert-after":
            at = _end_of_line(text, edit.anchor.span.end)
            indent = leading_whitespace(text, edit.anchor.span.start)
            block = _indent_payload(edit.payload, indent, eol)
            if text[edit.anchor.span.end:at].endswith(("\n",)):
                plain.append(Splice(at, at, block + eol))
            else:
                plain.append(Splice(at, at, eol + block))
        elif kind == "insert-into-block-start":
            plain.append(_empty_block_insert(edit, parsed, eol, unit))
        elif kind == "add-field":
            plain.append(_add_field_splice(edit, parsed, eol, unit))
        elif kind == "add-import":
            plain.append(_add_import_splice(edit, parsed, eol))
        elif kind == "wrap-statements":
            region = _wrap_region(plan, edit, parsed)
        else:
            raise ValueError(f"unhandled edit kind {kind}")
    return _merge_same_point(plain), region


def _merge_same_point(splices: list[Splice]) -> list[Splice]:
    """Concatenate a plan's insertions that land on the same offset."""
    merged: list[Splice] = []
    for splice in splices:
        if (
            merged
            and splice.start == splice.end
            and merged[-1].start == merged[-1].end == splice.start
        ):
            merged[-1] = Splice(
                splice.start, splice.end, merged[-1].replacement + splice.replacement
            )
        else:
            merged.append(splice)
    return merged


def _indent_payload(payload: str, indent: str, eol: str) -> str:
    lines = payload.split("\n")
    return eol.join(indent + line if line.strip() else line for line in lines)


def _end_of_line(text: str, offset: int) -> int:
    nl = text.find("\n", offset)
    if nl == -1:
        return len(text)
    return nl + 1


def _empty_block_insert(edit: TreeEdit, parsed: ParseResult, eol: str, unit: str) -> Splice:
    block = edit.anchor
    text = parsed.source.text
    open_brace = block.children[0]
    close_brace = block.children[-1]
    # Anchor indentation on the line holding the opening construct.
    owner = block.parent if block.parent is not None else block
    outer_indent = leading_whitespace(text, owner.span.start)
    inner_indent = outer_indent + unit
    between = text[open_brace.span.end:close_brace.span.start]
    body = _indent_payload(edit.payload, inner_indent, eol)
    if between.strip() == "":
        return Splice(
            open_brace.span.end,
            close_brace.span.start,
            eol + body + eol + outer_indent,
        )
    return Splice(open_brace.span.end, open_brace.span.end, eol + body)


def _add_field_splice(edit: TreeEdit, parsed: ParseResult, eol: str, unit: str) -> Splice:
    text = parsed.source.text
    if edit.extra.get("position") == "end":
        body = edit.anchor
        members = body.fields["members"]
        if members:
            anchor = members[-1]
            at = _end_of_line(text, anchor.span.end)
            indent = leading_whitespace(text, anchor.span.start)
            block = _indent_payload(edit.payload, indent, eol)
            if text[anchor.span.end:at].endswith("\n"):
                return Splice(at, at, block + eol)
            return Splice(at, at, eol + block)
        open_brace = body.children[0]
        close_brace = body.children[-1]
        owner = body.parent
        outer_indent = leading_whitespace(text, owner.span.start if owner else body.span.start)
        inner = _indent_payload(edit.payload, outer_indent + unit, eol)
        if text[open_brace.span.end:close_brace.span.start].strip() == "":
            return Splice(open_brace.span.end, close_brace.span.start,
                          eol + inner + eol + outer_indent)
        return Splice(open_brace.span.end, open_brace.span.end, eol + inner)
    anchor = edit.anchor
    at = _end_of_line(text, anchor.span.end)
    indent = leading_whitespace(text, anchor.span.start)
    block = _indent_payload(edit.payload, indent, eol)
    if text[anchor.span.end:at].endswith("\n"):
        return Splice(at, at, block + eol)
    return Splice(at, at, eol + block)


def _add_import_splice(edit: TreeEdit, parsed: ParseResult, eol: str) -> Splice:
    text = parsed.source.text
    root = parsed.tree
    imports = root.fields["imports"]
    if imports:
        at = _end_of_line(text, imports[-1].span.end)
        return Splice(at, at, edit.payload + eol)
    package = root.fields["package"]
    if package is not None:
        at = _end_of_line(text, package.span.end)
        return Splice(at, at, edit.payload + eol)
    return Splice(0, 0, edit.payload + eol)


def _wrap_region(plan: FixPlan, edit: TreeEdit, parsed: ParseResult) -> _Region:
    text = parsed.source.text
    decl = edit.anchor
    if edit.extra["mode"] == "convert":
        return _Region(plan=plan, edit=edit, start=decl.span.start, end=decl.span.end)
    block = edit.extra["block"]
    statements = block.fields["statements"]
    last_stmt = statements[edit.extra["last_index"]]
    return _Region(plan=plan, edit=edit, start=decl.span.start, end=last_stmt.span.end)


def _region_fixed_points(region: _Region) -> list[int]:
    """Insertion offsets outside the wrapped range that composing will edit."""
    if region.edit.extra["mode"] != "convert":
        return []
    try_node = region.edit.extra["try"]
    resources = try_node.fields["resources"]
    if resources:
        return [resources[-1].span.end]
    return [try_node.children[0].span.end]


def _compose_region(region: _Region, parsed: ParseResult, eol: str, unit: str) -> list[Splice]:
    text = parsed.source.text
    edit = region.edit
    decl = edit.anchor
    # Apply inner splices to the raw region slice first.
    slice_text = text[region.start:region.end]
    inner = sorted((s for _, s in region.inner), key=lambda s: s.start)
    shifted = [Splice(s.start - region.start, s.end - region.start, s.replacement) for s in inner]
    composed = render(slice_text, shifted)
    decl_end_local = decl.span.end - region.start
    for s in shifted:
        if s.end <= decl_end_local:
            decl_end_local += len(s.replacement) - (s.end - s.start)
    decl_text = composed[:decl_end_local].strip()
    if decl_text.endswith(";"):
        decl_text = decl_text[:-1].rstrip()
    if edit.extra["mode"] == "convert":
        return _convert_try_splices(region, decl_text, parsed, eol)
    rest = composed[decl_end_local:]
    indent = leading_whitespace(text, decl.span.start)
    body = _reindent_lines(rest, unit)
    replacement = f"try ({decl_text}) {{{body}{eol}{indent}}}"
    return [Splice(region.start, region.end, replacement)]


def _reindent_lines(fragment: str, unit: str) -> str:
    lines = fragment.split("\n")
    out = [lines[0]]
    for line in lines[1:]:
        out.append(unit + line if line.strip("\r").strip() else line)
    return "\n".join(out)


def _convert_try_splices(
    region: _Region, decl_text: str, parsed: ParseResult, eol: str
) -> list[Splice]:
    text = parsed.source.text
    decl = region.edit.anchor
    try_node = region.edit.extra["try"]
    resources = try_node.fields["resources"]
    if resources:
        at = resources[-1].span.end
        header = Splice(at, at, f"; {decl_text}")
    else:
        try_kw = try_node.children[0]
        header = Splice(try_kw.span.end, try_kw.span.end, f" ({decl_text})")
    start = line_start(text, decl.span.start)
    end = _end_of_line(text, decl.span.end)
    line_text = text[start:end]
    stmt_text = text[decl.span.start:decl.span.end]
    if line_text.strip() == stmt_text.strip():
        removal = Splice(start, end, "")
    else:
        removal = Splice(decl.span.start, decl.span.end, "")
    return [header, removal]
