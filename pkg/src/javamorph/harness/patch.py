"""Prompt construction, patch extraction and rename reversal."""
from __future__ import annotations

import re
from typing import Optional

from ..mr.base import RenameMap
from ..syntax import ParseFatal, parse_java, tokenize

DEFAULT_TEMPLATE = (
    "The following Java function contains a bug. Fix the bug.\n"
    "Return only the complete fixed function inside a single fenced code block "
    "(```java ... ```), with no explanation.\n\n"
    "{code}\n"
)

_FENCE = re.compile(r"```[^\n`]*\n(.*?)```", re.DOTALL)
_DECL_START = re.compile(
    r"^\s*(?:@\w+\s*)*(?:(?:public|private|protected|static|final|abstract|synchronized|native|default)\s+)*"
    r"(?:class\s+\w+|interface\s+\w+|enum\s+\w+|[\w<>\[\],.? ]+\s+\w+\s*\()"
)


class TemplateError(ValueError):
    pass


def build_prompt(mutant, template: str = DEFAULT_TEMPLATE) -> str:
    """Substitute the mutant's text (or a plain string) for ``{code}``."""
    code = mutant if isinstance(mutant, str) else mutant.text
    if template.count("{code}") != 1:
        raise TemplateError("prompt template must contain exactly one {code} placeholder")
    return template.replace("{code}", code)


def _clean_parse(text: str) -> bool:
    try:
        tree = parse_java(text)
    except ParseFatal:
        return False
    if tree.error_count():
        return False
    kinds = {n.kind for n in tree.root.walk()}
    return bool(kinds & {"method_declaration", "class_declaration", "interface_declaration",
                         "enum_declaration", "constructor_declaration"})


def extract_patch(raw_response: str) -> Optional[str]:
    """First fenced block, else the longest run of lines parsing as a method or class."""
    if not raw_response:
        return None
    m = _FENCE.search(raw_response)
    if m:
        return m.group(1).rstrip("\n")
    lines = raw_response.splitlines()
    starts = [i for i, ln in enumerate(lines) if _DECL_START.match(ln)]
    ends = [j for j, ln in enumerate(lines) if ln.rstrip().endswith("}")]
    best: Optional[str] = None
    for i in starts:
        for j in reversed(ends):
            if j < i:
                break
            if best is not None and j - i + 1 <= best.count("\n") + 1:
                break
            candidate = "\n".join(lines[i:j + 1])
            if _clean_parse(candidate):
                best = candidate
                break
    return best


def reverse_rename(patch: str, renames: RenameMap) -> str:
    """Map MR1/MR2 names back to the originals, touching identifier tokens only."""
    inverse = renames.inverse()
    if not inverse or not patch:
        return patch
    out = []
    pos = 0
    for tok in tokenize(patch):
        if tok.kind == "ident" and tok.text in inverse:
            out.append(patch[pos:tok.start])
            out.append(inverse[tok.text])
            pos = tok.end
    out.append(patch[pos:])
    return "".join(out)
