"""Bottom-up rewriting over a syntax tree.

A pass overrides :meth:`Rewriter.rewrite`; returning a string replaces the
node's text, ``None`` keeps it (with any rewritten descendants spliced in).
Rendering is memoized, so hooks may freely call :meth:`render` on any
descendant.
"""
from __future__ import annotations

from typing import Optional

from ..syntax import SyntaxNode, SyntaxTree, TextEdit, apply_edits


class Rewriter:
    def __init__(self, tree: SyntaxTree):
        self.tree = tree
        self.data = tree.source_bytes
        self.edits_count = 0
        self._memo: dict[int, str] = {}
        self._hooked: set[int] = set()

    def rewrite(self, node: SyntaxNode) -> Optional[str]:
        return None

    def src(self, start: int, end: int) -> str:
        return self.data[start:end].decode("utf-8")

    def render(self, node: SyntaxNode) -> str:
        key = id(node)
        if key in self._memo:
            return self._memo[key]
        out = self.rewrite(node)
        if out is None:
            out = self.default(node)
        else:
            self._hooked.add(key)
        self._memo[key] = out
        return out

    def default(self, node: SyntaxNode, overrides: Optional[dict[int, str]] = None) -> str:
        parts = []
        pos = node.start
        for c in node.children:
            parts.append(self.src(pos, c.start))
            if overrides and id(c) in overrides:
                parts.append(overrides[id(c)])
            else:
                parts.append(self.render(c))
            pos = c.end
        parts.append(self.src(pos, node.end))
        return "".join(parts)

    def edits(self) -> list[TextEdit]:
        out: list[TextEdit] = []
        stack = [self.tree.root]
        while stack:
            n = stack.pop()
            r = self.render(n)
            if r == n.text:
                continue
            if id(n) in self._hooked or not n.children:
                out.append(TextEdit(n.span, r))
            else:
                stack.extend(n.children)
        return out

    def run(self) -> str:
        self.render(self.tree.root)
        return apply_edits(self.tree.source, self.edits())
