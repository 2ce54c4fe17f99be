"""Levenshtein distance over lexer tokens (default) or characters.

The compiled kernel is used when it imports and ``JAVAMORPH_PURE`` is unset.
"""
from __future__ import annotations

import os
from typing import Hashable, Sequence

import numpy as np

from . import _pure

try:
    if os.environ.get("JAVAMORPH_PURE"):
        raise ImportError("pure kernel forced")
    from . import _kernels
except ImportError:
    _kernels = None

BACKEND = "cython" if _kernels is not None else "python"


def _encode(a: Sequence[Hashable], b: Sequence[Hashable]) -> tuple[np.ndarray, np.ndarray]:
    vocab: dict = {}
    ea = np.fromiter((vocab.setdefault(x, len(vocab)) for x in a), dtype=np.int64, count=len(a))
    eb = np.fromiter((vocab.setdefault(x, len(vocab)) for x in b), dtype=np.int64, count=len(b))
    return ea, eb


def levenshtein(a: Sequence[Hashable], b: Sequence[Hashable], backend: str = BACKEND) -> int:
    """Minimum number of insertions, deletions and substitutions turning ``a`` into ``b``."""
    if backend == "cython":
        if _kernels is None:
            raise RuntimeError("compiled kernel not available")
        ea, eb = _encode(a, b)
        return int(_kernels.levenshtein(ea, eb))
    return _pure.levenshtein(a, b)


def token_sequence(text: str) -> list[str]:
    from ..syntax import tokenize
    return [t.text for t in tokenize(text)]


def edit_distance(a: str, b: str, level: str = "token") -> int:
    if level == "token":
        return levenshtein(token_sequence(a), token_sequence(b))
    if level == "char":
        return levenshtein(a, b)
    raise ValueError(f"unknown level {level!r}")
