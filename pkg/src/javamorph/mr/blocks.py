"""Block-level relations: dummy variables, comments, hoisted declarations, for to while."""
from __future__ import annotations

import uuid
from typing import Optional

from ..syntax import (
    Span, SyntaxNode, SyntaxTree, TextEdit, apply_edits, identifier_set, parse_java, tokenize,
)
from .analysis import (
    LOOP_KINDS, can_complete_normally, line_indent, method_bodies, statements_of,
)
from .base import MrContext, MrOutcome, fresh_name
from .rewrite import Rewriter

COMMENT_PREFIX = "//This method was modified -"
_INDENT_STEP = "    "


# --- insertion at statement boundaries ------------------------------------------


def _starts_line(data: bytes, offset: int) -> bool:
    line_start = data.rfind(b"\n", 0, offset) + 1
    return not data[line_start:offset].strip()


def _leading_ws(data: bytes, offset: int) -> str:
    line_start = data.rfind(b"\n", 0, offset) + 1
    line = data[line_start:offset]
    return line[: len(line) - len(line.lstrip())].decode("utf-8")


def _brace_tokens(body: SyntaxNode) -> tuple[Optional[SyntaxNode], Optional[SyntaxNode]]:
    opening = next((c for c in body.children if c.kind == "{"), None)
    closing = next((c for c in reversed(body.children) if c.kind == "}"), None)
    return opening, closing


def _insertion(data: bytes, body: SyntaxNode, stmts: list[SyntaxNode], pos: int,
               snippet: str, line_comment: bool) -> Optional[TextEdit]:
    """Edit placing ``snippet`` at statement boundary ``pos`` of ``body``."""
    multiline = b"\n" in data[body.start:body.end]
    if pos < len(stmts):
        anchor = stmts[pos]
        # keep leading comments attached to their statement
        if _starts_line(data, anchor.start):
            text = snippet + "\n" + line_indent(data, anchor.start)
        else:
            text = snippet + ("\n" + _gap_before(data, body, anchor) if line_comment else " ")
        return TextEdit(_at(anchor.start), text)
    if stmts:
        last = stmts[-1]
        if multiline and _starts_line(data, last.start):
            indent = line_indent(data, last.start)
            rest = _rest_of_line(data, last.end)
            text = "\n" + indent + snippet
            if line_comment and rest.strip() and not rest.lstrip().startswith("//"):
                text += "\n" + indent
            return TextEdit(_at(last.end), text)
        text = " " + snippet + ("\n" if line_comment else "")
        return TextEdit(_at(last.end), text)
    opening, closing = _brace_tokens(body)
    if opening is None or closing is None:
        if body.kind != "program":
            return None
        return TextEdit(_at(body.start), snippet + "\n")
    inner = data[opening.end:closing.start].decode("utf-8")
    if "\n" in inner:
        indent = line_indent(data, closing.start) + _INDENT_STEP
        return TextEdit(_at(opening.end), "\n" + indent + snippet)
    if line_comment:
        return TextEdit(_at(opening.end), " " + snippet + "\n")
    return TextEdit(_at(opening.end), " " + snippet + (" " if not inner else ""))


def _gap_before(data: bytes, body: SyntaxNode, node: SyntaxNode) -> str:
    prev_end = body.start
    for c in body.children:
        if c.end <= node.start:
            prev_end = c.end
    gap = data[prev_end:node.start].decode("utf-8")
    return gap if not gap.strip() else " "


def _rest_of_line(data: bytes, offset: int) -> str:
    nl = data.find(b"\n", offset)
    return data[offset: nl if nl >= 0 else len(data)].decode("utf-8")


def _at(offset: int) -> Span:
    return Span(offset, offset)


def _insert_rule(source: str, tree: SyntaxTree, ctx: MrContext, salt: str, make_snippet,
                 line_comment: bool, reachable_only: bool) -> tuple[str, int]:
    data = tree.source_bytes
    rng = ctx.rng(salt)
    edits = []
    for body in method_bodies(tree):
        if body.is_error or any(c.is_error for c in body.children):
            continue
        stmts = statements_of(body)
        if body.kind == "program":
            stmts = [s for s in stmts if not s.kind.endswith("_declaration")
                     or s.kind == "local_variable_declaration"]
        positions = [0]
        for i, s in enumerate(stmts, 1):
            if reachable_only and not can_complete_normally(s):
                break
            positions.append(i)
        pos = rng.choice(positions)
        edit = _insertion(data, body, stmts, pos, make_snippet(rng), line_comment)
        if edit is not None:
            edits.append(edit)
    return apply_edits(source, edits), len(edits)


def mr6_dummy_variable(source: str, ctx: MrContext, tree: Optional[SyntaxTree] = None) -> MrOutcome:
    """Insert ``int dummyVar<C> = 0;`` once per method body at a seeded position."""
    tree = tree or parse_java(source)
    taken = identifier_set(source)
    counter = ctx.dummy_counter

    def snippet(_rng):
        nonlocal counter
        name, counter = fresh_name("dummyVar", "", counter, taken)
        taken.add(name)
        return f"int {name} = 0;"

    text, n = _insert_rule(source, tree, ctx, "mr6", snippet, line_comment=False, reachable_only=True)
    return MrOutcome(text, text != source, edits_count=n)


def comment_uuid(rng) -> str:
    return str(uuid.UUID(int=rng.getrandbits(128), version=4))


def mr7_adding_comments(source: str, ctx: MrContext, tree: Optional[SyntaxTree] = None) -> MrOutcome:
    """Insert ``//This method was modified -<uuid>`` once per method body."""
    tree = tree or parse_java(source)
    text, n = _insert_rule(source, tree, ctx, "mr7", lambda rng: COMMENT_PREFIX + comment_uuid(rng),
                           line_comment=True, reachable_only=False)
    return MrOutcome(text, text != source, edits_count=n)


# --- MR8 -----------------------------------------------------------------------

_HOIST_CONTAINERS = {"block", "constructor_body", "program"}


def _tokens_of(node: SyntaxNode) -> set[str]:
    return {t.text for t in tokenize(node.text, comments=False) if t.kind == "ident"}


def _switch_label_names(root: SyntaxNode) -> set[str]:
    out: set[str] = set()
    for n in root.walk():
        if n.kind == "switch_label":
            out |= _tokens_of(n)
    return out


class _HoistRewriter(Rewriter):
    def __init__(self, tree: SyntaxTree):
        super().__init__(tree)
        self.label_names = _switch_label_names(tree.root)

    def rewrite(self, node):
        if node.kind not in _HOIST_CONTAINERS:
            return None
        stmts = statements_of(node)
        if not stmts or any(c.is_error for c in node.children):
            return None
        if any(s.kind in {"class_declaration", "record_declaration", "enum_declaration",
                          "interface_declaration"} for s in stmts):
            return None
        seen: set[str] = set()
        hoisted: list[str] = []
        overrides: dict[int, str] = {}
        for s in stmts:
            plan = self._plan(s, seen) if s.kind == "local_variable_declaration" else None
            if plan is not None:
                hoisted.append(plan[0])
                overrides[id(s)] = plan[1]
                self.edits_count += 1
            seen |= _tokens_of(s)
        if not hoisted:
            return None
        # explicit this(...)/super(...) must stay first
        first = stmts[1] if stmts[0].kind == "explicit_constructor_invocation" and len(stmts) > 1 else stmts[0]
        if stmts[0].kind == "explicit_constructor_invocation" and len(stmts) == 1:
            return None
        if _starts_line(self.data, first.start):
            sep = "\n" + line_indent(self.data, first.start)
        else:
            sep = " "
        head = sep.join(hoisted) + sep
        overrides[id(first)] = head + overrides.get(id(first), self.render(first))
        return self.default(node, overrides)

    def _plan(self, decl: SyntaxNode, seen: set[str]) -> Optional[tuple[str, str]]:
        """(hoisted declaration, replacement statement) or None to leave it alone."""
        type_node = decl.child("type")
        declarators = decl.children_by_field("declarator")
        if type_node is None or not declarators or type_node.text == "var":
            return None
        if not any(d.child("value") is not None for d in declarators):
            return None
        names = [d.child("name") for d in declarators]
        if any(n is None or n.kind != "identifier" for n in names):
            return None
        if any(n.text in seen for n in names):
            return None
        modifiers = next((c for c in decl.children if c.kind == "modifiers"), None)
        if modifiers is not None and "final" in modifiers.text.split() and any(
            n.text in self.label_names for n in names
        ):
            return None
        assigns = []
        for d, name in zip(declarators, names):
            value = d.child("value")
            if value is None:
                continue
            rendered = self.render(value)
            if value.kind == "array_initializer":
                if "<" in type_node.text:
                    return None
                dims = d.child("dimensions")
                rendered = f"new {type_node.text}{dims.text if dims is not None else ''}{rendered}"
            eq = next(c for c in d.children if c.kind == "=")
            pre = " " if self.data[eq.start - 1:eq.start].isspace() else ""
            post = self.src(eq.end, value.start)
            assigns.append(f"{name.text}{pre}={post}{rendered};")
        prefix = self.src(decl.start, declarators[0].start)
        decl_names = ", ".join(
            name.text + (d.child("dimensions").text if d.child("dimensions") is not None else "")
            for d, name in zip(declarators, names)
        )
        return f"{prefix}{decl_names};", " ".join(assigns)


def mr8_variable_declaration(source: str, ctx: MrContext, tree: Optional[SyntaxTree] = None) -> MrOutcome:
    """Split ``T v = e;`` into ``T v;`` at the top of its block and ``v = e;`` in place."""
    rw = _HoistRewriter(tree or parse_java(source))
    text = rw.run()
    return MrOutcome(text, text != source, edits_count=rw.edits_count)


# --- MR9 -----------------------------------------------------------------------


def _has_bound_continue(body: SyntaxNode) -> bool:
    def visit(n: SyntaxNode) -> bool:
        for c in n.children:
            if c.kind == "continue_statement":
                return True
            if c.kind in LOOP_KINDS or c.kind in {"lambda_expression", "class_body"}:
                # a labeled continue inside a nested loop may still target us
                if c.kind in LOOP_KINDS and any(
                    x.kind == "continue_statement" and x.named_children for x in c.walk()
                ):
                    return True
                continue
            if visit(c):
                return True
        return False
    return body.kind == "continue_statement" or visit(body)


def _declared_in(block: SyntaxNode) -> set[str]:
    out = set()
    for s in statements_of(block):
        if s.kind == "local_variable_declaration":
            for d in s.children_by_field("declarator"):
                if d.child("name") is not None:
                    out.add(d.child("name").text)
    return out


class _LoopRewriter(Rewriter):
    def rewrite(self, node):
        if node.kind != "for_statement" or any(c.is_error for c in node.children):
            return None
        parent = self.tree.parent(node)
        if parent is not None and parent.kind == "labeled_statement":
            return None
        body = node.child("body")
        if body is None or _has_bound_continue(body):
            return None
        inits = node.children_by_field("init")
        cond = node.child("condition")
        updates = node.children_by_field("update")
        if updates:
            if not can_complete_normally(body):
                return None
            upd_names = set().union(*(_tokens_of(u) for u in updates))
            if body.kind == "block" and upd_names & _declared_in(body):
                return None

        init_parts = []
        declared: set[str] = set()
        for i in inits:
            if i.kind == "local_variable_declaration":
                init_parts.append(self.render(i))
                declared |= {d.child("name").text for d in i.children_by_field("declarator")
                             if d.child("name") is not None}
            else:
                init_parts.append(self.render(i) + ";")
        update_parts = [self.render(u) + ";" for u in updates]
        cond_text = self.render(cond) if cond is not None else "true"
        close_paren = next(c for c in reversed(node.children) if c.kind == ")")
        gap = self.src(close_paren.end, body.start)
        new_body = self._body_with_updates(body, update_parts)
        loop = f"while ({cond_text}){gap}{new_body}"

        container = parent if parent is not None else node
        multiline = _starts_line(self.data, node.start) and b"\n" in self.data[container.start:container.end]
        sep = ("\n" + line_indent(self.data, node.start)) if multiline else " "
        text = sep.join(init_parts + [loop]) if init_parts else loop
        if init_parts and self._needs_scope(node, parent, declared):
            text = "{ " + text + " }"
        self.edits_count += 1
        return text

    def _needs_scope(self, node: SyntaxNode, parent: Optional[SyntaxNode], declared: set[str]) -> bool:
        if parent is None:
            return False
        if parent.kind not in _HOIST_CONTAINERS:
            return True
        if not declared:
            return False
        later = [c for c in parent.children if c.start >= node.end]
        return any(declared & _tokens_of(c) for c in later)

    def _body_with_updates(self, body: SyntaxNode, updates: list[str]) -> str:
        if not updates:
            return self.render(body)
        joined = " ".join(updates)
        if body.kind != "block":
            return "{ " + self.render(body) + " " + joined + " }"
        opening, closing = _brace_tokens(body)
        inner = [c for c in body.children if c.named]
        multiline = b"\n" in self.data[body.start:body.end]
        if inner:
            last = inner[-1]
            if multiline:
                indent = _leading_ws(self.data, last.start)
                addition = "".join("\n" + indent + u for u in updates)
            else:
                addition = " " + joined
                if last.kind == "line_comment":
                    addition = "\n" + joined
            override = {id(last): self.render(last) + addition}
            return self.default(body, override)
        inner_text = self.src(opening.end, closing.start)
        if "\n" in inner_text:
            indent = line_indent(self.data, closing.start)
            return "{\n" + "".join(indent + _INDENT_STEP + u + "\n" for u in updates) + indent + "}"
        return "{ " + joined + " }"


def mr9_for_to_while(source: str, ctx: MrContext, tree: Optional[SyntaxTree] = None) -> MrOutcome:
    """``for (init; cond; upd) body`` -> ``init; while (cond) { body upd; }``."""
    rw = _LoopRewriter(tree or parse_java(source))
    text = rw.run()
    return MrOutcome(text, text != source, edits_count=rw.edits_count)
