"""Statement-level relations: compound assignment, comparison flips, binary rewrites."""
from __future__ import annotations

from typing import Optional

from ..syntax import SyntaxNode, SyntaxTree, parse_java
from .analysis import (
    BINARY_PRECEDENCE, LOOSE_KINDS, TypeEnv, collect_types, expr_type, is_numeric,
    is_pure, operator_of, same_tokens, swappable,
)
from .base import MrContext, MrOutcome
from .rewrite import Rewriter

_PRIMARY_KINDS = {"identifier", "parenthesized_expression", "field_access", "array_access",
                  "method_invocation", "this", "decimal_integer_literal", "hex_integer_literal",
                  "octal_integer_literal", "binary_integer_literal",
                  "decimal_floating_point_literal", "hex_floating_point_literal",
                  "character_literal", "object_creation_expression", "class_literal"}


class _ExprRewriter(Rewriter):
    def __init__(self, tree: SyntaxTree):
        super().__init__(tree)
        self.env: TypeEnv = collect_types(tree)

    def operator_gaps(self, node: SyntaxNode) -> tuple[str, str]:
        """Whitespace before and after the operator token of a binary-like node."""
        left, op, right = node.child("left"), node.child("operator"), node.child("right")
        return self.src(left.end, op.start), self.src(op.end, right.start)


class _AssignRewriter(_ExprRewriter):
    def rewrite(self, node):
        if node.kind != "assignment_expression" or operator_of(node) != "=":
            return None
        target, value = node.child("left"), node.child("right")
        if not is_pure(target):
            return None
        bin_ = value
        if bin_.kind != "binary_expression":
            return None
        op = operator_of(bin_)
        if op not in {"+", "-", "*", "/"}:
            return None
        if expr_type(target, self.env) == "String":
            return None
        a, b = bin_.child("left"), bin_.child("right")
        if same_tokens(a, target):
            rest = b
        elif op in {"+", "*"} and same_tokens(b, target) and is_pure(a) and (
            op == "*" or is_numeric(expr_type(target, self.env))
        ):
            rest = a
        else:
            return None
        ws1, ws2 = self.src(target.end, node.child("operator").start), \
            self.src(node.child("operator").end, value.start)
        self.edits_count += 1
        return f"{self.render(target)}{ws1}{op}={ws2}{self.render(rest)}"


def mr3_assign_expression(source: str, ctx: MrContext, tree: Optional[SyntaxTree] = None) -> MrOutcome:
    """``t = t op e`` -> ``t op= e`` (and ``t = e op t`` for commutative op)."""
    rw = _AssignRewriter(tree or parse_java(source))
    text = rw.run()
    return MrOutcome(text, text != source, edits_count=rw.edits_count)


class _ConditionRewriter(_ExprRewriter):
    def rewrite(self, node):
        if node.kind != "binary_expression":
            return None
        op = operator_of(node)
        if op in {"<", ">"}:
            left, right = node.child("left"), node.child("right")
            if not swappable(left, right, self.env):
                return None
            ws1, ws2 = self.operator_gaps(node)
            flipped = "<" if op == ">" else ">"
            self.edits_count += 1
            return f"{self.render(right)}{ws1}{flipped}{ws2}{self.render(left)}"
        if op in {"&&", "||"}:
            parent = self.tree.parent(node)
            # already enclosed, including the parens of an if/while condition
            if parent is not None and parent.kind == "parenthesized_expression":
                return None
            self.edits_count += 1
            return "(" + self.default(node) + ")"
        return None


def mr4_conditional_expression(source: str, ctx: MrContext, tree: Optional[SyntaxTree] = None) -> MrOutcome:
    """Flip ``a > b`` / ``a < b`` and parenthesize ``&&`` / ``||`` expressions."""
    rw = _ConditionRewriter(tree or parse_java(source))
    text = rw.run()
    return MrOutcome(text, text != source, edits_count=rw.edits_count)


def _needs_parens_as_right(operand: SyntaxNode, op: str) -> bool:
    """Would ``operand`` re-associate if placed as the right operand of ``op``?"""
    if operand.kind in LOOSE_KINDS:
        return True
    if operand.kind == "binary_expression":
        return BINARY_PRECEDENCE[operator_of(operand)] <= BINARY_PRECEDENCE[op]
    return False


class _BinaryRewriter(_ExprRewriter):
    def rewrite(self, node):
        if node.kind != "binary_expression":
            return None
        op = operator_of(node)
        left, right = node.child("left"), node.child("right")
        ws1, ws2 = self.operator_gaps(node)
        if op in {"+", "*"}:
            if not swappable(left, right, self.env):
                return None
            if op == "+" and not (is_numeric(expr_type(left, self.env))
                                  and is_numeric(expr_type(right, self.env))):
                return None
            new_right = self.render(left)
            if _needs_parens_as_right(left, op):
                new_right = f"({new_right})"
            self.edits_count += 1
            return f"{self.render(right)}{ws1}{op}{ws2}{new_right}"
        if op == "-":
            r = self.render(right)
            if right.kind in _PRIMARY_KINDS and not r.startswith(("-", "+")):
                neg = f"(-{r})"
            else:
                neg = f"(-({r}))"
            self.edits_count += 1
            return f"{self.render(left)}{ws1}+{ws2}{neg}"
        if op == "/":
            types = {expr_type(left, self.env), expr_type(right, self.env)}
            if "double" in types:
                one = "1.0"
            elif "float" in types:
                one = "1.0f"
            else:
                return None
            r = self.render(right)
            self.edits_count += 1
            return f"{self.render(left)}{ws1}*{ws2}({one} / {r})"
        return None


def mr5_binary_expression(source: str, ctx: MrContext, tree: Optional[SyntaxTree] = None) -> MrOutcome:
    """Commute ``+``/``*``, ``a - b`` -> ``a + (-b)``, floating ``a / b`` -> ``a * (1.0 / b)``."""
    rw = _BinaryRewriter(tree or parse_java(source))
    text = rw.run()
    return MrOutcome(text, text != source, edits_count=rw.edits_count)
