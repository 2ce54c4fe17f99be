"""Local syntactic analyses shared by the rewrite rules.

Nothing here resolves symbols across files; type information comes only from
declarations visible in the unit being rewritten.
"""
from __future__ import annotations

from typing import Optional

from ..syntax import SyntaxNode, SyntaxTree

LITERAL_KINDS = {
    "decimal_integer_literal", "hex_integer_literal", "octal_integer_literal",
    "binary_integer_literal", "decimal_floating_point_literal",
    "hex_floating_point_literal", "character_literal", "string_literal",
    "text_block", "true", "false", "null_literal",
}
INTEGRAL = ("byte", "short", "char", "int", "long")
NUMERIC = INTEGRAL + ("float", "double")
COMMENT_KINDS = {"line_comment", "block_comment"}
LOOP_KINDS = {"for_statement", "enhanced_for_statement", "while_statement", "do_statement"}
# expression kinds that bind looser than any binary operator
LOOSE_KINDS = {"ternary_expression", "assignment_expression", "lambda_expression",
               "instanceof_expression", "switch_expression"}

BINARY_PRECEDENCE = {
    "||": 1, "&&": 2, "|": 3, "^": 4, "&": 5, "==": 6, "!=": 6,
    "<": 7, ">": 7, "<=": 7, ">=": 7, "<<": 8, ">>": 8, ">>>": 8,
    "+": 9, "-": 9, "*": 10, "/": 10, "%": 10,
}


def operator_of(node: SyntaxNode) -> Optional[str]:
    op = node.child("operator")
    return op.kind if op is not None else None


def strip_parens(node: SyntaxNode) -> SyntaxNode:
    while node.kind == "parenthesized_expression":
        inner = node.named_children
        if len(inner) != 1:
            break
        node = inner[0]
    return node


def same_tokens(a: SyntaxNode, b: SyntaxNode) -> bool:
    return "".join(a.text.split()) == "".join(b.text.split())


def is_statement(node: SyntaxNode) -> bool:
    return node.named and node.kind not in COMMENT_KINDS and (
        node.kind.endswith("_statement")
        or node.kind in {"local_variable_declaration", "block", "switch_expression",
                         "class_declaration", "record_declaration", "enum_declaration",
                         "interface_declaration", "explicit_constructor_invocation"}
    )


def statements_of(container: SyntaxNode) -> list[SyntaxNode]:
    return [c for c in container.children if is_statement(c)]


# --- purity -------------------------------------------------------------------

_PURE_COMPOSITE = {"parenthesized_expression", "field_access", "array_access",
                   "binary_expression", "ternary_expression", "cast_expression",
                   "instanceof_expression"}


def is_pure(node: SyntaxNode) -> bool:
    """True when evaluating ``node`` cannot change program state."""
    kind = node.kind
    if kind in LITERAL_KINDS or kind in {"identifier", "this", "super", "class_literal",
                                         "type_identifier", "integral_type",
                                         "floating_point_type", "boolean_type"}:
        return True
    if kind == "unary_expression":
        return is_pure(node.child("operand"))
    if kind in _PURE_COMPOSITE:
        return all(is_pure(c) for c in node.named_children
                   if c.kind not in COMMENT_KINDS and not c.kind.endswith("_type")
                   and c.kind not in {"type_identifier", "generic_type"})
    return False


def may_throw(node: SyntaxNode, env: "TypeEnv") -> bool:
    """Conservative: can evaluating this pure expression raise an exception?"""
    for n in node.walk():
        if n.kind == "array_access":
            return True
        if n.kind == "field_access":
            obj = n.child("object")
            if obj is not None and obj.kind not in {"this", "super"} and not (
                obj.kind == "identifier" and obj.text[:1].isupper()
            ):
                return True
        if n.kind == "binary_expression" and operator_of(n) in {"/", "%"}:
            t = expr_type(n, env)
            if t not in {"float", "double"}:
                return True
        if n.kind == "cast_expression":
            t = n.child("type")
            if t is None or t.kind not in {"integral_type", "floating_point_type", "boolean_type"}:
                return True
    return False


def swappable(a: SyntaxNode, b: SyntaxNode, env: "TypeEnv") -> bool:
    return is_pure(a) and is_pure(b) and not (may_throw(a, env) and may_throw(b, env))


# --- declared types -------------------------------------------------------------


class TypeEnv(dict):
    """name -> declared type text, or None when declarations disagree."""

    def declare(self, name: str, type_text: str) -> None:
        type_text = "".join(type_text.split())
        if name in self and self[name] != type_text:
            self[name] = None
        else:
            self[name] = type_text


def _dims(node: SyntaxNode) -> str:
    d = node.child("dimensions")
    return "[]" * d.text.count("[") if d is not None else ""


def collect_types(tree: SyntaxTree) -> TypeEnv:
    env = TypeEnv()
    for n in tree.root.walk():
        if n.kind in {"local_variable_declaration", "field_declaration", "constant_declaration"}:
            t = n.child("type")
            if t is None:
                continue
            for d in n.children_by_field("declarator"):
                name = d.child("name")
                if name is not None:
                    env.declare(name.text, t.text + _dims(d))
        elif n.kind in {"formal_parameter", "catch_formal_parameter", "enhanced_for_statement"}:
            t = n.child("type")
            name = n.child("name")
            if t is not None and name is not None:
                env.declare(name.text, t.text + _dims(n))
        elif n.kind == "spread_parameter":
            t = next((c for c in n.named_children if c.kind != "variable_declarator"), None)
            d = next((c for c in n.named_children if c.kind == "variable_declarator"), None)
            if t is not None and d is not None and d.child("name") is not None:
                env.declare(d.child("name").text, t.text + "[]")
    return env


def _promote(*types: Optional[str]) -> Optional[str]:
    if any(t not in NUMERIC for t in types):
        return None
    for wide in ("double", "float", "long"):
        if wide in types:
            return wide
    return "int"


def expr_type(node: SyntaxNode, env: TypeEnv) -> Optional[str]:
    kind = node.kind
    if kind in {"decimal_integer_literal", "hex_integer_literal", "octal_integer_literal",
                "binary_integer_literal"}:
        return "long" if node.text[-1] in "lL" else "int"
    if kind in {"decimal_floating_point_literal", "hex_floating_point_literal"}:
        return "float" if node.text[-1] in "fF" else "double"
    if kind == "character_literal":
        return "char"
    if kind in {"string_literal", "text_block"}:
        return "String"
    if kind in {"true", "false"}:
        return "boolean"
    if kind == "identifier":
        return env.get(node.text)
    if kind == "parenthesized_expression":
        inner = node.named_children
        return expr_type(inner[0], env) if len(inner) == 1 else None
    if kind == "field_access":
        obj = node.child("object")
        if obj is not None and obj.kind == "this":
            return env.get(node.child("field").text)
        return None
    if kind == "array_access":
        t = expr_type(node.child("array"), env)
        return t[:-2] if t and t.endswith("[]") else None
    if kind == "cast_expression":
        t = node.child("type")
        return "".join(t.text.split()) if t is not None else None
    if kind == "update_expression":
        inner = node.named_children
        return expr_type(inner[0], env) if inner else None
    if kind == "unary_expression":
        op = operator_of(node)
        t = expr_type(node.child("operand"), env)
        if op == "!":
            return "boolean"
        return _promote(t) if t is not None else None
    if kind == "ternary_expression":
        a = expr_type(node.child("consequence"), env)
        b = expr_type(node.child("alternative"), env)
        return a if a == b else None
    if kind == "binary_expression":
        op = operator_of(node)
        lt = expr_type(node.child("left"), env)
        rt = expr_type(node.child("right"), env)
        if op in {"==", "!=", "<", ">", "<=", ">=", "&&", "||"}:
            return "boolean"
        if op == "+" and ("String" in (lt, rt)):
            return "String"
        if op in {"&", "|", "^"} and lt == rt == "boolean":
            return "boolean"
        if op in {"<<", ">>", ">>>"}:
            return _promote(lt)
        return _promote(lt, rt)
    return None


def is_numeric(t: Optional[str]) -> bool:
    return t in NUMERIC


# --- reachability ---------------------------------------------------------------


def _is_true(cond: Optional[SyntaxNode]) -> bool:
    return cond is None or strip_parens(cond).kind == "true"


def _breaks_out(loop: SyntaxNode, label: Optional[str] = None) -> bool:
    """Does ``loop`` contain a break that targets it?"""
    def visit(n: SyntaxNode, depth_loop: int) -> bool:
        for c in n.children:
            if c.kind == "break_statement":
                target = c.named_children[0].text if c.named_children else None
                if target is None and depth_loop == 0:
                    return True
                if target is not None and target == label:
                    return True
            if c.kind in {"lambda_expression", "class_body"}:
                continue
            nested = depth_loop + (1 if c.kind in LOOP_KINDS or c.kind == "switch_expression" else 0)
            if visit(c, nested):
                return True
        return False
    return visit(loop, 0)


def can_complete_normally(stmt: SyntaxNode, label: Optional[str] = None) -> bool:
    """Approximation of the JLS reachability rules for a single statement."""
    kind = stmt.kind
    if kind in {"return_statement", "throw_statement", "break_statement",
                "continue_statement", "yield_statement"}:
        return False
    if kind == "block":
        return all(can_complete_normally(s) for s in statements_of(stmt))
    if kind == "if_statement":
        alt = stmt.child("alternative")
        if alt is None:
            return True
        return can_complete_normally(stmt.child("consequence")) or can_complete_normally(alt)
    if kind in {"while_statement", "do_statement"}:
        if _is_true(stmt.child("condition")):
            return _breaks_out(stmt, label)
        return True
    if kind == "for_statement":
        if _is_true(stmt.child("condition")):
            return _breaks_out(stmt, label)
        return True
    if kind == "labeled_statement":
        lbl = stmt.named_children[0].text
        body = stmt.named_children[-1]
        return can_complete_normally(body, lbl) or _breaks_out(body, lbl)
    if kind == "synchronized_statement":
        body = stmt.child("body") or stmt.named_children[-1]
        return can_complete_normally(body)
    if kind in {"try_statement", "try_with_resources_statement"}:
        body = stmt.child("body")
        fin = next((c for c in stmt.named_children if c.kind == "finally_clause"), None)
        if fin is not None and not all(can_complete_normally(s) for s in fin.named_children
                                       if s.kind == "block"):
            return False
        ok = body is None or can_complete_normally(body)
        for c in stmt.named_children:
            if c.kind == "catch_clause":
                cb = c.child("body")
                ok = ok or cb is None or can_complete_normally(cb)
        return ok
    return True


# --- layout helpers ---------------------------------------------------------------


def line_indent(source: bytes, offset: int) -> str:
    """Leading whitespace of the line containing ``offset`` if it precedes ``offset``."""
    line_start = source.rfind(b"\n", 0, offset) + 1
    prefix = source[line_start:offset]
    if prefix.strip():
        return ""
    return prefix.decode("utf-8")


def method_bodies(tree: SyntaxTree) -> list[SyntaxNode]:
    """Statement containers that count as method bodies, in document order.

    Method declarations contribute their body block; a bare statement
    fragment contributes the root itself.
    """
    out = []
    for n in tree.root.walk():
        if n.kind == "method_declaration":
            body = n.child("body")
            if body is not None:
                out.append(body)
    if any(s.kind == "local_variable_declaration" or not s.kind.endswith("_declaration")
           for s in statements_of(tree.root)):
        out.append(tree.root)
    out.sort(key=lambda n: n.start)
    return out
