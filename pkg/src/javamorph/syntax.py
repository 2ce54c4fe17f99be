"""Java concrete syntax trees with byte spans, edit splicing and a lexer.

Parsing is backed by tree-sitter-java.  Trees are converted into immutable
:class:`SyntaxNode` objects so that rewrite passes never touch the native tree.
All spans are byte offsets into the UTF-8 encoding of the source.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional, Sequence

import tree_sitter_java
from tree_sitter import Language, Parser

__all__ = [
    "Span", "SyntaxNode", "SyntaxTree", "TextEdit", "Token",
    "ParseFatal", "OverlapError",
    "parse_java", "apply_edits", "text_differs", "find_nodes", "tokenize",
    "normalize_newlines", "identifier_set",
]

WRAP_CLASS = "__Wrap__"
WRAP_METHOD = "__wrap__"


class ParseFatal(ValueError):
    """No syntax tree could be produced for the input."""


class OverlapError(ValueError):
    """Two edits of one script touch the same bytes."""


@dataclass(frozen=True)
class Span:
    start: int
    end: int

    def __post_init__(self):
        if self.start < 0 or self.start > self.end:
            raise ValueError(f"bad span [{self.start}, {self.end})")

    def __len__(self) -> int:
        return self.end - self.start

    def contains(self, other: "Span") -> bool:
        return self.start <= other.start and other.end <= self.end


@dataclass(frozen=True, eq=False)
class SyntaxNode:
    kind: str
    span: Span
    text: str
    children: tuple["SyntaxNode", ...] = ()
    field: Optional[str] = None
    named: bool = True
    missing: bool = False

    @property
    def start(self) -> int:
        return self.span.start

    @property
    def end(self) -> int:
        return self.span.end

    @property
    def is_error(self) -> bool:
        return self.kind == "ERROR" or self.missing

    @property
    def named_children(self) -> list["SyntaxNode"]:
        return [c for c in self.children if c.named]

    def child(self, field_name: str) -> Optional["SyntaxNode"]:
        for c in self.children:
            if c.field == field_name:
                return c
        return None

    def children_by_field(self, field_name: str) -> list["SyntaxNode"]:
        return [c for c in self.children if c.field == field_name]

    def walk(self) -> Iterator["SyntaxNode"]:
        """Pre-order traversal (document order)."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def __repr__(self) -> str:
        return f"SyntaxNode({self.kind!r}, {self.span.start}-{self.span.end}, {self.text[:30]!r})"


@dataclass(frozen=True, eq=False)
class SyntaxTree:
    root: SyntaxNode
    source: str
    wrapped: Optional[str] = None
    _parents: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def source_bytes(self) -> bytes:
        return self.source.encode("utf-8")

    def render(self) -> str:
        return self.source

    def parent(self, node: SyntaxNode) -> Optional[SyntaxNode]:
        if not self._parents:
            for n in self.root.walk():
                for c in n.children:
                    self._parents[id(c)] = n
        return self._parents.get(id(node))

    def ancestors(self, node: SyntaxNode) -> Iterator[SyntaxNode]:
        p = self.parent(node)
        while p is not None:
            yield p
            p = self.parent(p)

    def error_count(self) -> int:
        return sum(1 for n in self.root.walk() if n.is_error)

    def slice(self, start: int, end: int) -> str:
        return self.source_bytes[start:end].decode("utf-8")


@dataclass(frozen=True)
class TextEdit:
    span: Span
    replacement: str


@lru_cache(maxsize=1)
def _parser() -> Parser:
    return Parser(Language(tree_sitter_java.language()))


def _convert(ts_node, data: bytes, shift: int, lo: int, hi: int, fname=None) -> SyntaxNode:
    children = []
    cursor = ts_node.walk()
    if cursor.goto_first_child():
        while True:
            c = cursor.node
            if c.end_byte > lo and c.start_byte < hi or (c.start_byte == c.end_byte and lo <= c.start_byte <= hi):
                children.append(_convert(c, data, shift, lo, hi, cursor.field_name))
            if not cursor.goto_next_sibling():
                break
    start = max(ts_node.start_byte, lo)
    end = min(ts_node.end_byte, hi)
    return SyntaxNode(
        kind=ts_node.type,
        span=Span(start - shift, end - shift),
        text=data[start:end].decode("utf-8", errors="replace"),
        children=tuple(children),
        field=fname,
        named=ts_node.is_named,
        missing=ts_node.is_missing,
    )


def _count_errors(ts_root) -> int:
    count = 0
    stack = [ts_root]
    while stack:
        n = stack.pop()
        if n.type == "ERROR" or n.is_missing:
            count += 1
        if n.has_error:
            stack.extend(n.children)
    return count


def _wrapped_candidates(data: bytes):
    yield None, b"", b""
    yield "class", f"class {WRAP_CLASS} {{\n".encode(), b"\n}"
    yield "method", f"class {WRAP_CLASS} {{ void {WRAP_METHOD}() {{\n".encode(), b"\n}}"


def parse_java(source: str) -> SyntaxTree:
    """Parse a Java compilation unit, class fragment, bare method or statement list.

    The input is parsed as-is first.  If that leaves error nodes the text is
    retried inside a synthetic class (and then a synthetic method); the
    candidate with the fewest errors wins.  Spans always refer to ``source``.
    """
    if not source.strip():
        raise ParseFatal("empty source")
    data = source.encode("utf-8")
    best = None
    for mode, prefix, suffix in _wrapped_candidates(data):
        ts_tree = _parser().parse(prefix + data + suffix)
        errors = _count_errors(ts_tree.root_node)
        if best is None or errors < best[0]:
            best = (errors, mode, prefix, ts_tree)
        if errors == 0:
            break
    errors, mode, prefix, ts_tree = best
    full = prefix + data
    if mode is None:
        root = _convert(ts_tree.root_node, data, 0, 0, len(data))
    else:
        lo, hi = len(prefix), len(prefix) + len(data)
        inner = _find_inner(ts_tree.root_node, lo, hi)
        kids = []
        for c in inner:
            kids.append(_convert(c, full, len(prefix), lo, hi, None))
        root = SyntaxNode("program", Span(0, len(data)), source, tuple(kids))
    if root.kind == "ERROR" and not root.children:
        raise ParseFatal("no syntax tree could be produced")
    return SyntaxTree(root=root, source=source, wrapped=mode)


def _find_inner(ts_root, lo: int, hi: int):
    """Top-most tree-sitter nodes lying inside the original text region."""
    out = []
    stack = [ts_root]
    while stack:
        n = stack.pop()
        if n.start_byte >= lo and n.end_byte <= hi and not (n.start_byte == n.end_byte == hi):
            out.append(n)
        elif n.end_byte > lo and n.start_byte < hi:
            stack.extend(reversed(n.children))
    out.sort(key=lambda n: n.start_byte)
    return out


def apply_edits(source: str, edits: Sequence[TextEdit]) -> str:
    """Splice ``edits`` into ``source``; spans refer to the original bytes."""
    data = source.encode("utf-8")
    ordered = sorted(edits, key=lambda e: (e.span.start, e.span.end))
    out = []
    pos = 0
    for e in ordered:
        if e.span.end > len(data):
            raise ValueError(f"edit span {e.span} beyond end of source ({len(data)})")
        if e.span.start < pos:
            raise OverlapError(f"edit at {e.span} overlaps a previous edit ending at {pos}")
        out.append(data[pos:e.span.start])
        out.append(e.replacement.encode("utf-8"))
        pos = e.span.end
    out.append(data[pos:])
    return b"".join(out).decode("utf-8")


def normalize_newlines(text: str) -> str:
    return text.replace("\r\n", "\n").replace("\r", "\n")


def text_differs(before: str, after: str) -> bool:
    return normalize_newlines(before) != normalize_newlines(after)


def find_nodes(tree: SyntaxTree, kind: str) -> list[SyntaxNode]:
    return [n for n in tree.root.walk() if n.kind == kind]


# --- lexer -----------------------------------------------------------------

JAVA_KEYWORDS = frozenset("""
abstract assert boolean break byte case catch char class const continue default do
double else enum extends final finally float for goto if implements import instanceof
int interface long native new package private protected public return short static
strictfp super switch synchronized this throw throws transient try void volatile while
true false null var record yield sealed permits non-sealed
""".split())


@dataclass(frozen=True)
class Token:
    kind: str  # ident | keyword | number | string | char | comment | op | other
    text: str
    start: int  # character offsets into the lexed text
    end: int


_OPERATORS = sorted("""
>>>= <<= >>= >>> ... -> :: ++ -- && || == != <= >= += -= *= /= %= &= |= ^= << >>
( ) [ ] { } ; , . @ = > < ! ~ ? : + - * / & | ^ %
""".split(), key=len, reverse=True)

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<comment>//[^\n]*|/\*.*?\*/)
  | (?P<string>\"\"\"(?:.|\n)*?\"\"\"|"(?:\\.|[^"\\\n])*")
  | (?P<char>'(?:\\.|[^'\\\n])+')
  | (?P<number>(?:0[xX][0-9a-fA-F_]+[lL]?|0[bB][01_]+[lL]?|
        (?:\d[\d_]*\.?[\d_]*|\.\d[\d_]*)(?:[eE][+-]?\d+)?[fFdDlL]?))
  | (?P<ident>[A-Za-z_$\u0080-￿][A-Za-z0-9_$\u0080-￿]*)
  | (?P<op>""" + "|".join(re.escape(o) for o in _OPERATORS) + r""")
  | (?P<other>.)
    """,
    re.VERBOSE | re.DOTALL,
)


def tokenize(text: str, *, comments: bool = True) -> list[Token]:
    """Lex Java text into tokens (whitespace dropped).

    Never fails: unknown characters become ``other`` tokens.
    """
    tokens = []
    for m in _TOKEN_RE.finditer(text):
        kind = m.lastgroup
        if kind == "ws":
            continue
        if kind == "comment" and not comments:
            continue
        value = m.group()
        if kind == "ident" and value in JAVA_KEYWORDS:
            kind = "keyword"
        tokens.append(Token(kind, value, m.start(), m.end()))
    return tokens


def identifier_set(text: str) -> set[str]:
    return {t.text for t in tokenize(text) if t.kind == "ident"}
