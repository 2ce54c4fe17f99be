"""Token-level relations: local variable renaming and method renaming."""
from __future__ import annotations

from typing import Optional

import re

from ..syntax import SyntaxNode, SyntaxTree, TextEdit, apply_edits, identifier_set, parse_java
from .analysis import collect_types
from .base import MrContext, MrOutcome, RenameMap, fresh_name

SCOPE_KINDS = {
    "program", "class_body", "interface_body", "enum_body", "block",
    "for_statement", "enhanced_for_statement", "catch_clause",
    "try_with_resources_statement", "lambda_expression", "method_declaration",
    "constructor_declaration", "compact_constructor_declaration", "switch_block",
    "static_initializer",
}
TYPE_DECL_KINDS = {"class_declaration", "interface_declaration", "enum_declaration",
                   "record_declaration", "annotation_type_declaration"}

# Methods whose name is part of a platform contract; renaming them silently
# breaks overriding even without an @Override annotation.
CONTRACT_METHODS = frozenset({
    "main", "toString", "equals", "hashCode", "clone", "finalize", "compareTo",
    "compare", "run", "call", "iterator", "hasNext", "next", "close", "get",
    "apply", "accept", "test", "length", "charAt", "subSequence",
})


def _is_usage(node: SyntaxNode, parent: Optional[SyntaxNode]) -> bool:
    """Whether an ``identifier`` node sits where a variable reference may appear."""
    if parent is None:
        return True
    pk, f = parent.kind, node.field
    if pk == "method_invocation" and f == "name":
        return False
    if pk == "field_access" and f == "field":
        return False
    if pk in {"labeled_statement", "break_statement", "continue_statement",
              "scoped_identifier", "scoped_type_identifier", "marker_annotation",
              "annotation", "enum_constant", "element_value_pair", "module_declaration",
              "package_declaration", "import_declaration"}:
        return False
    if pk in TYPE_DECL_KINDS or pk in {"method_declaration", "constructor_declaration"}:
        return False
    if pk == "method_reference":
        return parent.children[0] is node
    return True


class _Renamer:
    def __init__(self, tree: SyntaxTree, ctx: MrContext):
        self.tree = tree
        self.taken = identifier_set(tree.source)
        self.counter = ctx.var_counter
        self.mapping: dict[str, str] = {}
        self.scopes: list[dict[str, Optional[str]]] = []
        self.edits: list[TextEdit] = []

    def new_name(self, old: str) -> str:
        if old not in self.mapping:
            name, self.counter = fresh_name(old, "_var", self.counter, self.taken)
            self.taken.add(name)
            self.mapping[old] = name
        return self.mapping[old]

    def declare(self, name_node: SyntaxNode) -> None:
        new = self.new_name(name_node.text)
        self.scopes[-1][name_node.text] = new
        self.edits.append(TextEdit(name_node.span, new))

    def lookup(self, name: str) -> Optional[str]:
        for scope in reversed(self.scopes):
            if name in scope:
                return scope[name]
        return None

    def run(self) -> None:
        self.visit(self.tree.root, None)

    def _field_shadows(self, body: SyntaxNode) -> dict[str, Optional[str]]:
        shadows: dict[str, Optional[str]] = {}
        for member in body.children:
            if member.kind in {"field_declaration", "constant_declaration"}:
                for d in member.children_by_field("declarator"):
                    if d.child("name") is not None:
                        shadows[d.child("name").text] = None
            elif member.kind == "enum_constant" and member.child("name") is not None:
                shadows[member.child("name").text] = None
        return shadows

    def visit(self, node: SyntaxNode, parent: Optional[SyntaxNode]) -> None:
        kind = node.kind
        pushed = kind in SCOPE_KINDS
        if pushed:
            self.scopes.append(
                self._field_shadows(node) if kind in {"class_body", "interface_body", "enum_body"}
                else {}
            )
        if kind in {"record_declaration"}:
            # record components are accessor names; leave them alone
            for c in node.children:
                if c.field != "parameters":
                    self.visit(c, node)
        elif kind == "variable_declarator" and parent is not None and parent.kind in {
            "local_variable_declaration", "spread_parameter"
        }:
            name = node.child("name")
            if name is not None and name.kind == "identifier":
                self.declare(name)
            for c in node.children:
                if c is not name:
                    self.visit(c, node)
        elif kind in {"formal_parameter", "catch_formal_parameter", "resource"} or (
            kind == "enhanced_for_statement"
        ):
            name = node.child("name")
            if kind == "enhanced_for_statement":
                value = node.child("value")
                if value is not None:
                    # the iterable is evaluated outside the loop variable's scope
                    self.scopes.pop()
                    self.visit(value, node)
                    self.scopes.append({})
            if name is not None and name.kind == "identifier":
                self.declare(name)
            for c in node.children:
                if c is not name and not (kind == "enhanced_for_statement" and c.field == "value"):
                    self.visit(c, node)
        elif kind == "lambda_expression":
            params = node.child("parameters")
            if params is not None and params.kind == "identifier":
                self.declare(params)
            elif params is not None and params.kind == "inferred_parameters":
                for p in params.named_children:
                    if p.kind == "identifier":
                        self.declare(p)
            for c in node.children:
                if c is not params or params.kind == "formal_parameters":
                    self.visit(c, node)
        elif kind == "instanceof_expression" and node.child("name") is not None:
            for c in node.children:
                if c is node.child("name"):
                    self.declare(c)
                else:
                    self.visit(c, node)
        elif kind == "identifier":
            if _is_usage(node, parent):
                new = self.lookup(node.text)
                if new is not None:
                    self.edits.append(TextEdit(node.span, new))
        else:
            for c in node.children:
                self.visit(c, node)
        if pushed:
            self.scopes.pop()


def mr1_variable_renaming(source: str, ctx: MrContext, tree: Optional[SyntaxTree] = None) -> MrOutcome:
    """Rename every local variable and parameter to ``<name>_var<C>``.

    One fresh name per distinct original name, so the old->new table stays a
    function and can be inverted token by token.
    """
    tree = tree or parse_java(source)
    r = _Renamer(tree, ctx)
    r.run()
    text = apply_edits(source, r.edits)
    return MrOutcome(text, text != source, RenameMap(dict(r.mapping), {}), len(r.edits))


def _declared_classes(tree: SyntaxTree) -> dict[str, SyntaxNode]:
    out = {}
    for n in tree.root.walk():
        if n.kind in TYPE_DECL_KINDS and n.child("name") is not None:
            out.setdefault(n.child("name").text, n)
    return out


def _has_override(method: SyntaxNode) -> bool:
    mods = next((c for c in method.children if c.kind == "modifiers"), None)
    if mods is None:
        return False
    return any(c.kind in {"marker_annotation", "annotation"} and
               c.child("name") is not None and c.child("name").text == "Override"
               for c in mods.children)


def _enclosing_class(tree: SyntaxTree, node: SyntaxNode) -> Optional[SyntaxNode]:
    for a in tree.ancestors(node):
        if a.kind in TYPE_DECL_KINDS:
            return a
    return None


def _superclass_name(cls: SyntaxNode) -> Optional[str]:
    sc = cls.child("superclass")
    if sc is None:
        return None
    t = sc.named_children[0] if sc.named_children else None
    if t is None:
        return None
    if t.kind == "generic_type":
        t = t.named_children[0]
    return t.text


def mr2_method_renaming(source: str, ctx: MrContext, tree: Optional[SyntaxTree] = None) -> MrOutcome:
    """Rename declared methods to ``<name>Method<C>`` and update their call sites.

    ``main``, constructors, ``@Override`` methods and well-known contract
    names are left alone.
    """
    tree = tree or parse_java(source)
    classes = _declared_classes(tree)
    env = collect_types(tree)
    decls = [n for n in tree.root.walk() if n.kind == "method_declaration" and n.child("name")]
    blocked = {d.child("name").text for d in decls
               if d.child("name").text in CONTRACT_METHODS or _has_override(d)}
    taken = identifier_set(source)
    counter = ctx.meth_counter
    mapping: dict[str, str] = {}
    for d in decls:
        name = d.child("name").text
        if name in blocked or name in mapping:
            continue
        mapping[name], counter = fresh_name(name, "Method", counter, taken)
        taken.add(mapping[name])

    def class_of_type(type_text: Optional[str]) -> bool:
        if not type_text:
            return False
        return re.split(r"[<\[]", type_text)[0] in classes

    def local_receiver(obj: Optional[SyntaxNode], site: SyntaxNode) -> bool:
        if obj is None or obj.kind == "this":
            return True
        if obj.kind == "super":
            cls = _enclosing_class(tree, site)
            return cls is not None and _superclass_name(cls) in classes
        if obj.kind == "parenthesized_expression" and len(obj.named_children) == 1:
            return local_receiver(obj.named_children[0], site)
        if obj.kind == "identifier":
            if obj.text in env:
                return class_of_type(env[obj.text])
            return obj.text in classes
        if obj.kind in {"type_identifier", "generic_type"}:
            return class_of_type(obj.text)
        if obj.kind == "object_creation_expression":
            t = obj.child("type")
            return t is not None and class_of_type(t.text)
        return False

    edits: list[TextEdit] = []
    for n in tree.root.walk():
        if n.kind == "method_declaration" and n.child("name") is not None:
            name = n.child("name")
            if name.text in mapping:
                edits.append(TextEdit(name.span, mapping[name.text]))
        elif n.kind == "method_invocation":
            name = n.child("name")
            if name is not None and name.text in mapping and local_receiver(n.child("object"), n):
                edits.append(TextEdit(name.span, mapping[name.text]))
        elif n.kind == "method_reference" and len(n.named_children) >= 2:
            target = n.named_children[-1]
            if target.kind == "identifier" and target.text in mapping and local_receiver(
                n.named_children[0], n
            ):
                edits.append(TextEdit(target.span, mapping[target.text]))
    text = apply_edits(source, edits)
    return MrOutcome(text, text != source, RenameMap({}, mapping if edits else {}), len(edits))
