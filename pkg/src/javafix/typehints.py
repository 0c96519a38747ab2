"""Heuristic single-file type resolution for the rule predicates.

No classpath and no flow typing: hints come from declared types, literal
forms, a fixed JDK signature table, and Java's binary numeric promotion.
Anything unresolvable is `unknown`, and unknown is absorbing, which
biases every detector toward precision (no evidence, no violation).
"""

from dataclasses import dataclass, field
from enum import Enum

from .tree import SyntaxNode


class TypeCategory(Enum):
    PRIMITIVE = "primitive"
    BOXED = "boxed"
    STRING = "string"
    ARRAY = "array"
    KNOWN_CLASS = "known-class"
    USER_CLASS = "user-class"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class TypeHint:
    category: TypeCategory
    name: str
    element: "TypeHint | None" = None

    @staticmethod
    def primitive(name: str) -> "TypeHint":
        return TypeHint(TypeCategory.PRIMITIVE, name)

    @staticmethod
    def boxed(name: str) -> "TypeHint":
        return TypeHint(TypeCategory.BOXED, name)

    @staticmethod
    def string() -> "TypeHint":
        return TypeHint(TypeCategory.STRING, "String")

    @staticmethod
    def array(element: "TypeHint") -> "TypeHint":
        return TypeHint(TypeCategory.ARRAY, element.name + "[]", element)

    @staticmethod
    def known(name: str) -> "TypeHint":
        return TypeHint(TypeCategory.KNOWN_CLASS, name)

    @staticmethod
    def user(name: str) -> "TypeHint":
        return TypeHint(TypeCategory.USER_CLASS, name)

    @staticmethod
    def unknown() -> "TypeHint":
        return UNKNOWN

    @property
    def is_unknown(self) -> bool:
        return self.category is TypeCategory.UNKNOWN

    @property
    def is_numeric(self) -> bool:
        return self.category is TypeCategory.PRIMITIVE and self.name in _NUMERIC_RANK

    @property
    def is_integral(self) -> bool:
        return self.category is TypeCategory.PRIMITIVE and self.name in (
            "byte", "short", "char", "int", "long"
        )


UNKNOWN = TypeHint(TypeCategory.UNKNOWN, "?")
BOOLEAN = TypeHint.primitive("boolean")

PRIMITIVE_NAMES = frozenset(
    ["boolean", "byte", "short", "int", "long", "char", "float", "double"]
)
BOXED_NAMES = frozenset(
    ["Boolean", "Byte", "Short", "Integer", "Long", "Character", "Float", "Double"]
)
BOX_OF = {
    "boolean": "Boolean",
    "byte": "Byte",
    "short": "Short",
    "int": "Integer",
    "long": "Long",
    "char": "Character",
    "float": "Float",
    "double": "Double",
}

_NUMERIC_RANK = {
    "byte": 0,
    "short": 1,
    "char": 1,
    "int": 2,
    "long": 3,
    "float": 4,
    "double": 5,
}

# Resource classes whose instances must be closed.
CLOSEABLE_CLASSES = frozenset(
    [
        "FileInputStream",
        "FileOutputStream",
        "FileReader",
        "FileWriter",
        "BufferedReader",
        "BufferedWriter",
        "BufferedInputStream",
        "BufferedOutputStream",
        "InputStreamReader",
        "OutputStreamWriter",
        "PrintWriter",
        "PrintStream",
        "RandomAccessFile",
        "Scanner",
        "Socket",
        "ServerSocket",
        "DatagramSocket",
        "ObjectInputStream",
        "ObjectOutputStream",
        "DataInputStream",
        "DataOutputStream",
        "ZipFile",
        "JarFile",
        "ZipInputStream",
        "ZipOutputStream",
        "GZIPInputStream",
        "GZIPOutputStream",
        "Formatter",
    ]
)

# Method return hints for a small JDK allowlist. Shorthand values use
# Java spellings; trailing [] marks arrays. Static and instance methods
# share the table; the distinction does not matter for hints.
CLASS_METHODS: dict[str, dict[str, str]] = {
    "Object": {
        "toString": "String",
        "hashCode": "int",
        "equals": "boolean",
        "getClass": "Class",
        "clone": "Object",
    },
    "String": {
        "length": "int",
        "charAt": "char",
        "substring": "String",
        "indexOf": "int",
        "lastIndexOf": "int",
        "equals": "boolean",
        "equalsIgnoreCase": "boolean",
        "hashCode": "int",
        "toString": "String",
        "trim": "String",
        "strip": "String",
        "toLowerCase": "String",
        "toUpperCase": "String",
        "intern": "String",
        "valueOf": "String",
        "format": "String",
        "join": "String",
        "contains": "boolean",
        "isEmpty": "boolean",
        "isBlank": "boolean",
        "startsWith": "boolean",
        "endsWith": "boolean",
        "matches": "boolean",
        "split": "String[]",
        "replace": "String",
        "replaceAll": "String",
        "concat": "String",
        "repeat": "String",
        "getBytes": "byte[]",
        "toCharArray": "char[]",
        "compareTo": "int",
    },
    "Thread": {
        "run": "void",
        "start": "void",
        "sleep": "void",
        "join": "void",
        "interrupt": "void",
        "isInterrupted": "boolean",
        "interrupted": "boolean",
        "currentThread": "Thread",
        "getName": "String",
        "setName": "void",
        "isAlive": "boolean",
        "setDaemon": "void",
    },
    "Integer": {
        "parseInt": "int",
        "valueOf": "Integer",
        "intValue": "int",
        "longValue": "long",
        "doubleValue": "double",
        "floatValue": "float",
        "toString": "String",
        "hashCode": "int",
        "equals": "boolean",
        "compareTo": "int",
        "compare": "int",
        "max": "int",
        "min": "int",
        "sum": "int",
    },
    "Long": {
        "parseLong": "long",
        "valueOf": "Long",
        "intValue": "int",
        "longValue": "long",
        "doubleValue": "double",
        "floatValue": "float",
        "toString": "String",
        "hashCode": "int",
        "equals": "boolean",
        "compareTo": "int",
        "compare": "int",
        "max": "long",
        "min": "long",
        "sum": "long",
    },
    "Double": {
        "parseDouble": "double",
        "valueOf": "Double",
        "intValue": "int",
        "longValue": "long",
        "doubleValue": "double",
        "floatValue": "float",
        "toString": "String",
        "hashCode": "int",
        "equals": "boolean",
        "isNaN": "boolean",
    },
    "Float": {
        "parseFloat": "float",
        "valueOf": "Float",
        "intValue": "int",
        "longValue": "long",
        "doubleValue": "double",
        "floatValue": "float",
        "toString": "String",
        "hashCode": "int",
        "equals": "boolean",
    },
    "Short": {
        "parseShort": "short",
        "valueOf": "Short",
        "shortValue": "short",
        "intValue": "int",
        "toString": "String",
        "equals": "boolean",
    },
    "Byte": {
        "parseByte": "byte",
        "valueOf": "Byte",
        "byteValue": "byte",
        "intValue": "int",
        "toString": "String",
        "equals": "boolean",
    },
    "Character": {
        "valueOf": "Character",
        "charValue": "char",
        "toString": "String",
        "equals": "boolean",
        "isDigit": "boolean",
        "isLetter": "boolean",
    },
    "Boolean": {
        "parseBoolean": "boolean",
        "valueOf": "Boolean",
        "booleanValue": "boolean",
        "toString": "String",
        "equals": "boolean",
    },
    "System": {
        "currentTimeMillis": "long",
        "nanoTime": "long",
        "getProperty": "String",
        "lineSeparator": "String",
        "getenv": "String",
        "exit": "void",
        "arraycopy": "void",
        "identityHashCode": "int",
    },
    "PrintStream": {
        "println": "void",
        "print": "void",
        "printf": "PrintStream",
        "flush": "void",
        "close": "void",
    },
    "PrintWriter": {
        "println": "void",
        "print": "void",
        "printf": "PrintWriter",
        "flush": "void",
        "close": "void",
    },
    "InputStream": {"read": "int", "close": "void", "available": "int"},
    "BigDecimal": {
        "add": "BigDecimal",
        "subtract": "BigDecimal",
        "multiply": "BigDecimal",
        "divide": "BigDecimal",
        "negate": "BigDecimal",
        "abs": "BigDecimal",
        "valueOf": "BigDecimal",
        "toString": "String",
        "doubleValue": "double",
        "intValue": "int",
        "longValue": "long",
        "compareTo": "int",
        "equals": "boolean",
        "setScale": "BigDecimal",
    },
    "StringBuilder": {
        "append": "StringBuilder",
        "insert": "StringBuilder",
        "reverse": "StringBuilder",
        "toString": "String",
        "length": "int",
        "charAt": "char",
        "deleteCharAt": "StringBuilder",
    },
    "StringBuffer": {
        "append": "StringBuffer",
        "toString": "String",
        "length": "int",
    },
    "Iterator": {"next": "Object", "hasNext": "boolean", "remove": "void"},
    "Math": {
        "random": "double",
        "sqrt": "double",
        "pow": "double",
        "floor": "double",
        "ceil": "double",
        "toRadians": "double",
        "toDegrees": "double",
    },
    "Objects": {
        "equals": "boolean",
        "hashCode": "int",
        "hash": "int",
        "toString": "String",
        "isNull": "boolean",
        "nonNull": "boolean",
    },
    "Arrays": {
        "toString": "String",
        "deepToString": "String",
        "hashCode": "int",
        "deepHashCode": "int",
        "equals": "boolean",
        "asList": "List",
        "sort": "void",
        "fill": "void",
        "binarySearch": "int",
    },
    "Collections": {
        "emptyList": "List",
        "sort": "void",
        "unmodifiableList": "List",
        "singletonList": "List",
    },
    "List": {
        "size": "int",
        "isEmpty": "boolean",
        "contains": "boolean",
        "add": "boolean",
        "remove": "boolean",
        "iterator": "Iterator",
        "toString": "String",
        "indexOf": "int",
    },
    "ArrayList": {
        "size": "int",
        "isEmpty": "boolean",
        "contains": "boolean",
        "add": "boolean",
        "remove": "boolean",
        "iterator": "Iterator",
        "toString": "String",
    },
    "Map": {
        "size": "int",
        "isEmpty": "boolean",
        "containsKey": "boolean",
        "toString": "String",
    },
    "HashMap": {
        "size": "int",
        "isEmpty": "boolean",
        "containsKey": "boolean",
        "toString": "String",
    },
    "Set": {"size": "int", "isEmpty": "boolean", "contains": "boolean", "iterator": "Iterator"},
    "HashSet": {"size": "int", "isEmpty": "boolean", "contains": "boolean", "iterator": "Iterator"},
    "Collection": {"size": "int", "isEmpty": "boolean", "iterator": "Iterator"},
    "Scanner": {
        "nextInt": "int",
        "nextLong": "long",
        "nextDouble": "double",
        "nextLine": "String",
        "next": "String",
        "hasNext": "boolean",
        "hasNextInt": "boolean",
        "close": "void",
    },
    "Random": {
        "nextInt": "int",
        "nextLong": "long",
        "nextDouble": "double",
        "nextFloat": "float",
        "nextBoolean": "boolean",
    },
    "Optional": {"isPresent": "boolean", "isEmpty": "boolean", "toString": "String"},
}

# Well-known static fields, keyed "Class.field".
STATIC_FIELDS: dict[str, str] = {
    "System.out": "PrintStream",
    "System.err": "PrintStream",
    "System.in": "InputStream",
    "Integer.MAX_VALUE": "int",
    "Integer.MIN_VALUE": "int",
    "Long.MAX_VALUE": "long",
    "Long.MIN_VALUE": "long",
    "Short.MAX_VALUE": "short",
    "Byte.MAX_VALUE": "byte",
    "Double.MAX_VALUE": "double",
    "Double.MIN_VALUE": "double",
    "Float.MAX_VALUE": "float",
    "Boolean.TRUE": "Boolean",
    "Boolean.FALSE": "Boolean",
    "BigDecimal.ZERO": "BigDecimal",
    "BigDecimal.ONE": "BigDecimal",
    "BigDecimal.TEN": "BigDecimal",
    "Thread.MIN_PRIORITY": "int",
    "Thread.NORM_PRIORITY": "int",
    "Thread.MAX_PRIORITY": "int",
}

_EXTRA_KNOWN_CLASSES = frozenset(
    [
        "InterruptedException",
        "NoSuchElementException",
        "IOException",
        "FileNotFoundException",
        "Exception",
        "RuntimeException",
        "IllegalArgumentException",
        "IllegalStateException",
        "UnsupportedOperationException",
        "CloneNotSupportedException",
        "Throwable",
        "Error",
        "Runnable",
        "AutoCloseable",
        "Closeable",
        "Number",
        "CharSequence",
        "Class",
        "File",
        "Paths",
        "Path",
        "Files",
        "OutputStream",
        "Reader",
        "Writer",
    ]
)

KNOWN_CLASS_NAMES = (
    frozenset(CLASS_METHODS) | CLOSEABLE_CLASSES | _EXTRA_KNOWN_CLASSES
)


def _hint_from_shorthand(spelling: str) -> TypeHint:
    dims = 0
    while spelling.endswith("[]"):
        spelling = spelling[:-2]
        dims += 1
    if spelling == "unknown":
        hint = UNKNOWN
    elif spelling in PRIMITIVE_NAMES or spelling == "void":
        hint = TypeHint.primitive(spelling)
    elif spelling == "String":
        hint = TypeHint.string()
    elif spelling in BOXED_NAMES:
        hint = TypeHint.boxed(spelling)
    else:
        hint = TypeHint.known(spelling)
    for _ in range(dims):
        hint = TypeHint.array(hint)
    return hint


@dataclass
class MethodInfo:
    name: str
    return_hint: TypeHint
    node: SyntaxNode


@dataclass
class ClassInfo:
    name: str
    node: SyntaxNode
    kind: str
    extends_name: str | None = None
    implements_names: list[str] = field(default_factory=list)
    fields: dict[str, TypeHint] = field(default_factory=dict)
    field_nodes: dict[str, SyntaxNode] = field(default_factory=dict)
    methods: dict[str, MethodInfo] = field(default_factory=dict)


_SCOPE_KINDS = frozenset(
    [
        "block",
        "method-declaration",
        "constructor-declaration",
        "for-statement",
        "foreach-statement",
        "try-statement",
        "catch-clause",
        "class-declaration",
        "interface-declaration",
    ]
)


class ScopeTable:
    """Name bindings per scope plus per-class member tables."""

    def __init__(self, extra_methods: dict[str, dict[str, str]] | None = None,
                 extra_classes: set[str] | None = None):
        self.classes: dict[str, ClassInfo] = {}
        self.bindings: dict[int, dict[str, tuple[int, TypeHint]]] = {}
        self.method_table: dict[str, dict[str, str]] = dict(CLASS_METHODS)
        self.known_names: set[str] = set(KNOWN_CLASS_NAMES)
        if extra_methods:
            for cls, methods in extra_methods.items():
                merged = dict(self.method_table.get(cls, {}))
                merged.update(methods)
                self.method_table[cls] = merged
                self.known_names.add(cls)
        if extra_classes:
            self.known_names.update(extra_classes)

    # ---- type-node conversion ----

    def hint_of_type_node(self, ty: SyntaxNode, extra_dims: int = 0) -> TypeHint:
        if ty is None:
            return UNKNOWN
        f = ty.fields
        if f.get("is_var"):
            return UNKNOWN
        base = f["base"]
        if f["primitive"]:
            hint = TypeHint.primitive(base)
        elif base == "String":
            hint = TypeHint.string()
        elif base in BOXED_NAMES:
            hint = TypeHint.boxed(base)
        elif base in self.classes:
            hint = TypeHint.user(base)
        elif base in self.known_names:
            hint = TypeHint.known(base)
        else:
            hint = UNKNOWN
        for _ in range(f["dims"] + extra_dims):
            hint = TypeHint.array(hint)
        return hint

    # ---- lookups ----

    def resolve(self, name: str, at: SyntaxNode) -> TypeHint:
        node = at
        while node is not None:
            table = self.bindings.get(id(node))
            if table is not None and name in table:
                decl_end, hint = table[name]
                if node.kind == "block":
                    if at.span.start >= decl_end:
                        return hint
                else:
                    return hint
            node = node.parent
        return UNKNOWN

    def class_info_of(self, name: str) -> ClassInfo | None:
        return self.classes.get(name)

    def enclosing_class(self, node: SyntaxNode) -> ClassInfo | None:
        cur = node
        while cur is not None:
            if cur.kind in ("class-declaration", "interface-declaration"):
                return self.classes.get(cur.fields["type_name"])
            cur = cur.parent
        return None

    def is_class_name(self, name: str) -> bool:
        return name in self.classes or name in self.known_names

    def method_return(self, class_name: str, method: str) -> TypeHint:
        """Resolve a method's return hint, walking in-file extends chains."""
        seen = set()
        cur = class_name
        while cur is not None and cur not in seen:
            seen.add(cur)
            info = self.classes.get(cur)
            if info is not None:
                if method in info.methods:
                    return info.methods[method].return_hint
                # Exhausted in-file superclasses: fall back to Object.
                cur = info.extends_name if info.extends_name is not None else "Object"
                continue
            spelling = self.method_table.get(cur, {}).get(method)
            if spelling is not None:
                return _hint_from_shorthand(spelling)
            if cur != "Object":
                cur = "Object"
                continue
            return UNKNOWN
        return UNKNOWN

    def extends_chain_reaches(self, class_name: str, target: str) -> bool:
        seen = set()
        cur = class_name
        while cur is not None and cur not in seen:
            if cur == target:
                return True
            seen.add(cur)
            info = self.classes.get(cur)
            cur = info.extends_name if info is not None else None
        return False


def build_scopes(
    tree: SyntaxNode,
    extra_methods: dict[str, dict[str, str]] | None = None,
    extra_classes: set[str] | None = None,
) -> ScopeTable:
    """Record every declared name in analyzable nodes with its TypeHint."""
    scopes = ScopeTable(extra_methods=extra_methods, extra_classes=extra_classes)
    # First pass: class and interface names, so user-class hints resolve
    # even for forward references.
    for node in tree.walk():
        if node.kind in ("class-declaration", "interface-declaration"):
            scopes.classes[node.fields["type_name"]] = ClassInfo(
                name=node.fields["type_name"], node=node, kind=node.kind
            )
    pending_vars: list[tuple[SyntaxNode, str, int, SyntaxNode | None]] = []
    for node in tree.walk():
        kind = node.kind
        if kind in ("class-declaration", "interface-declaration"):
            _fill_class_info(scopes, node)
        elif kind in ("method-declaration", "constructor-declaration"):
            table = scopes.bindings.setdefault(id(node), {})
            for param in node.fields["params"]:
                hint = scopes.hint_of_type_node(
                    param.fields["type"], extra_dims=param.fields["extra_dims"]
                )
                if param.fields["varargs"]:
                    hint = TypeHint.array(hint)
                table[param.fields["name_text"]] = (param.span.end, hint)
        elif kind == "local-variable-declaration":
            scope = _enclosing_scope(node)
            if scope is None:
                continue
            table = scopes.bindings.setdefault(id(scope), {})
            for decl in node.fields["declarators"]:
                ty = node.fields["type"]
                name = decl.fields["name_text"]
                if ty.fields["is_var"]:
                    pending_vars.append((scope, name, decl.span.end, decl.fields["init"]))
                    table[name] = (decl.span.end, UNKNOWN)
                else:
                    hint = scopes.hint_of_type_node(ty, extra_dims=decl.fields["dims"])
                    table[name] = (decl.span.end, hint)
        elif kind == "foreach-statement":
            table = scopes.bindings.setdefault(id(node), {})
            ty = node.fields["type"]
            name = node.fields["name_text"]
            if ty.fields["is_var"]:
                table[name] = (node.fields["name"].span.end, UNKNOWN)
            else:
                table[name] = (
                    node.fields["name"].span.end,
                    scopes.hint_of_type_node(ty),
                )
        elif kind == "try-statement":
            table = scopes.bindings.setdefault(id(node), {})
            for res in node.fields["resources"]:
                if res.fields["name_text"] is not None:
                    table[res.fields["name_text"]] = (
                        res.span.end,
                        scopes.hint_of_type_node(res.fields["type"]),
                    )
        elif kind == "catch-clause":
            table = scopes.bindings.setdefault(id(node), {})
            table[node.fields["name_text"]] = (
                node.fields["name"].span.end,
                scopes.hint_of_type_node(node.fields["types"][0]),
            )
    # var-declared locals take the hint of their initializer, resolved in
    # source order so chains of vars work.
    pending_vars.sort(key=lambda item: item[2])
    for scope, name, decl_end, init in pending_vars:
        hint = expr_type(init, scopes) if init is not None else UNKNOWN
        scopes.bindings[id(scope)][name] = (decl_end, hint)
    return scopes


def _enclosing_scope(node: SyntaxNode) -> SyntaxNode | None:
    cur = node.parent
    while cur is not None:
        if cur.kind in ("block", "for-statement"):
            return cur
        cur = cur.parent
    return None


def _fill_class_info(scopes: ScopeTable, node: SyntaxNode) -> None:
    info = scopes.classes[node.fields["type_name"]]
    if node.kind == "class-declaration":
        ext = node.fields["extends"]
        info.extends_name = ext.fields["base"] if ext is not None else None
        info.implements_names = [t.fields["base"] for t in node.fields["implements"]]
    else:
        info.implements_names = [t.fields["base"] for t in node.fields["extends_list"]]
    table = scopes.bindings.setdefault(id(node), {})
    for member in node.fields["body"].fields["members"]:
        if member.kind == "field-declaration":
            ty = member.fields["type"]
            for decl in member.fields["declarators"]:
                name = decl.fields["name_text"]
                hint = scopes.hint_of_type_node(ty, extra_dims=decl.fields["dims"])
                info.fields[name] = hint
                info.field_nodes[name] = member
                table[name] = (0, hint)
        elif member.kind in ("method-declaration",):
            ret = scopes.hint_of_type_node(member.fields["return_type"])
            info.methods[member.fields["name_text"]] = MethodInfo(
                name=member.fields["name_text"], return_hint=ret, node=member
            )


# ---- expression typing ----


def expr_type(node: SyntaxNode, scopes: ScopeTable) -> TypeHint:
    kind = node.kind
    if kind == "literal":
        return _literal_hint(node)
    if kind == "name":
        return scopes.resolve(node.fields["id"], node)
    if kind == "parenthesized-expression":
        return expr_type(node.fields["inner"], scopes)
    if kind == "cast-expression":
        return scopes.hint_of_type_node(node.fields["type"])
    if kind == "object-creation":
        return scopes.hint_of_type_node(node.fields["type"])
    if kind == "qualified-creation":
        return expr_type(node.fields["creation"], scopes)
    if kind == "array-creation":
        base = scopes.hint_of_type_node(node.fields["type"])
        for _ in range(node.fields.get("creation_dims", 0)):
            base = TypeHint.array(base)
        return base
    if kind == "array-initializer":
        return UNKNOWN
    if kind == "array-access":
        arr = expr_type(node.fields["array"], scopes)
        if arr.category is TypeCategory.ARRAY:
            return arr.element
        return UNKNOWN
    if kind == "binary-expression":
        return _binary_hint(node, scopes)
    if kind == "instanceof-expression":
        return BOOLEAN
    if kind == "unary-expression":
        return _unary_hint(node, scopes)
    if kind == "conditional-expression":
        then = expr_type(node.fields["then"], scopes)
        orelse = expr_type(node.fields["orelse"], scopes)
        if then == orelse:
            return then
        if then.is_numeric and orelse.is_numeric:
            return _promote(then, orelse)
        return UNKNOWN
    if kind == "assignment-expression":
        return expr_type(node.fields["target"], scopes)
    if kind == "method-invocation":
        return _invocation_hint(node, scopes)
    if kind == "field-access":
        return _field_access_hint(node, scopes)
    if kind == "this-expression":
        info = scopes.enclosing_class(node)
        return TypeHint.user(info.name) if info is not None else UNKNOWN
    if kind == "class-literal":
        return TypeHint.known("Class")
    return UNKNOWN


def _literal_hint(node: SyntaxNode) -> TypeHint:
    category = node.fields["category"]
    text = node.fields["text"]
    if category == "int":
        return TypeHint.primitive("long" if text[-1] in "lL" else "int")
    if category == "float":
        if text[-1] in "fF":
            return TypeHint.primitive("float")
        return TypeHint.primitive("double")
    if category == "char":
        return TypeHint.primitive("char")
    if category == "string":
        return TypeHint.string()
    if category == "boolean":
        return BOOLEAN
    return UNKNOWN


def _promote(left: TypeHint, right: TypeHint) -> TypeHint:
    rank = max(_NUMERIC_RANK[left.name], _NUMERIC_RANK[right.name], _NUMERIC_RANK["int"])
    for name, r in _NUMERIC_RANK.items():
        if r == rank and name != "char":
            return TypeHint.primitive(name)
    return UNKNOWN


def _binary_hint(node: SyntaxNode, scopes: ScopeTable) -> TypeHint:
    op = node.fields["op_text"]
    if op in ("==", "!=", "<", ">", "<=", ">=", "&&", "||"):
        return BOOLEAN
    left = expr_type(node.fields["left"], scopes)
    right = expr_type(node.fields["right"], scopes)
    if op == "+" and (
        left.category is TypeCategory.STRING or right.category is TypeCategory.STRING
    ):
        return TypeHint.string()
    if op in ("+", "-", "*", "/", "%"):
        if left.is_numeric and right.is_numeric:
            return _promote(left, right)
        return UNKNOWN
    if op in ("&", "|", "^"):
        if left == BOOLEAN and right == BOOLEAN:
            return BOOLEAN
        if left.is_integral and right.is_integral:
            return _promote(left, right)
        return UNKNOWN
    if op in ("<<", ">>", ">>>"):
        if left.is_integral:
            return _promote(left, TypeHint.primitive("int"))
        return UNKNOWN
    return UNKNOWN


def _unary_hint(node: SyntaxNode, scopes: ScopeTable) -> TypeHint:
    op = node.fields["op_text"]
    operand = expr_type(node.fields["operand"], scopes)
    if op == "!":
        return BOOLEAN
    if op in ("++", "--"):
        return operand
    if op in ("+", "-", "~"):
        if operand.is_numeric:
            return _promote(operand, TypeHint.primitive("int")) \
                if operand.name in ("byte", "short", "char") else operand
        return UNKNOWN
    return UNKNOWN


def static_receiver_class(node: SyntaxNode, scopes: ScopeTable) -> str | None:
    """Class name when an expression is a plain class reference.

    `Integer` in `Integer.parseInt(s)` or `java.util.Arrays` in a
    fully qualified call; shadowing locals win over class names.
    """
    if node.kind == "name":
        name = node.fields["id"]
        if not scopes.resolve(name, node).is_unknown:
            return None
        if scopes.is_class_name(name):
            return name
        return None
    if node.kind == "field-access":
        # Fully qualified names: take the final segment if the whole chain
        # is made of plain names and the final segment is a class.
        parts = _name_chain(node)
        if parts is None:
            return None
        last = parts[-1]
        if scopes.is_class_name(last):
            head = parts[0]
            root = node
            while root.kind == "field-access":
                root = root.fields["receiver"]
            if not scopes.resolve(head, root).is_unknown:
                return None
            return last
    return None


def _name_chain(node: SyntaxNode) -> list[str] | None:
    parts: list[str] = []
    cur = node
    while cur.kind == "field-access":
        parts.append(cur.fields["name_text"])
        cur = cur.fields["receiver"]
    if cur.kind != "name":
        return None
    parts.append(cur.fields["id"])
    parts.reverse()
    return parts


def _invocation_hint(node: SyntaxNode, scopes: ScopeTable) -> TypeHint:
    method = node.fields["name_text"]
    receiver = node.fields["receiver"]
    if receiver is None:
        info = scopes.enclosing_class(node)
        if info is not None:
            return scopes.method_return(info.name, method)
        return UNKNOWN
    static_class = static_receiver_class(receiver, scopes)
    if static_class is not None:
        return scopes.method_return(static_class, method)
    hint = expr_type(receiver, scopes)
    if hint.is_unknown:
        return UNKNOWN
    if hint.category is TypeCategory.ARRAY:
        if method == "clone":
            return hint
        return scopes.method_return("Object", method)
    if hint.category is TypeCategory.STRING:
        return scopes.method_return("String", method)
    if hint.category is TypeCategory.BOXED:
        return scopes.method_return(hint.name, method)
    if hint.category in (TypeCategory.KNOWN_CLASS, TypeCategory.USER_CLASS):
        return scopes.method_return(hint.name, method)
    return UNKNOWN


def _field_access_hint(node: SyntaxNode, scopes: ScopeTable) -> TypeHint:
    name = node.fields["name_text"]
    receiver = node.fields["receiver"]
    receiver_hint = expr_type(receiver, scopes)
    if receiver_hint.category is TypeCategory.ARRAY and name == "length":
        return TypeHint.primitive("int")
    static_class = static_receiver_class(receiver, scopes)
    if static_class is not None:
        spelling = STATIC_FIELDS.get(f"{static_class}.{name}")
        if spelling is not None:
            return _hint_from_shorthand(spelling)
        info = scopes.classes.get(static_class)
        if info is not None and name in info.fields:
            return info.fields[name]
        return UNKNOWN
    if receiver_hint.category is TypeCategory.USER_CLASS:
        info = scopes.classes.get(receiver_hint.name)
        if info is not None and name in info.fields:
            return info.fields[name]
    if node.fields["name_text"] == "length" and receiver_hint.is_unknown:
        return UNKNOWN
    return UNKNOWN
