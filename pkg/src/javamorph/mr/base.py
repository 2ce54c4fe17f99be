from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Mapping


class MrId(IntEnum):
    """The nine metamorphic relations; the integer order is the composition order."""

    MR1_VariableRenaming = 1
    MR2_MethodRenaming = 2
    MR3_AssignExpression = 3
    MR4_ConditionalExpression = 4
    MR5_BinaryExpression = 5
    MR6_DummyVariable = 6
    MR7_AddingComments = 7
    MR8_VariableDeclaration = 8
    MR9_ForToWhileLoop = 9

    @property
    def code(self) -> str:
        return f"m{self.value}"

    @property
    def label(self) -> str:
        return self.name.split("_", 1)[1]

    @classmethod
    def parse(cls, value) -> "MrId":
        """Accept 3, "3", "m3", "MR3" or "MR3_AssignExpression"."""
        if isinstance(value, MrId):
            return value
        if isinstance(value, int):
            return cls(value)
        text = str(value).strip()
        if text in cls.__members__:
            return cls[text]
        m = re.fullmatch(r"(?i)(?:mr|m)?(\d)", text)
        if not m:
            raise ValueError(f"unknown MR id: {value!r}")
        return cls(int(m.group(1)))


def combo_code(ids) -> str:
    return "".join(MrId.parse(i).code for i in sorted(MrId.parse(i) for i in ids))


def parse_combo_code(code: str) -> tuple[MrId, ...]:
    return tuple(sorted(MrId(int(d)) for d in re.findall(r"m(\d)", code)))


@dataclass
class MrContext:
    seed: int = 0
    var_counter: int = 1
    meth_counter: int = 1
    dummy_counter: int = 1

    def rng(self, salt: str) -> random.Random:
        return random.Random(f"{self.seed}:{salt}")


@dataclass(frozen=True)
class RenameMap:
    variable_renames: Mapping[str, str] = field(default_factory=dict)
    method_renames: Mapping[str, str] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return bool(self.variable_renames or self.method_renames)

    def merge(self, other: "RenameMap") -> "RenameMap":
        return RenameMap(
            {**self.variable_renames, **other.variable_renames},
            {**self.method_renames, **other.method_renames},
        )

    def inverse(self) -> dict[str, str]:
        """new-name -> old-name over both tables."""
        inv = {new: old for old, new in self.variable_renames.items()}
        inv.update({new: old for old, new in self.method_renames.items()})
        return inv

    def to_json(self) -> dict:
        return {"variables": dict(self.variable_renames), "methods": dict(self.method_renames)}

    @classmethod
    def from_json(cls, data: Mapping) -> "RenameMap":
        return cls(dict(data.get("variables", {})), dict(data.get("methods", {})))


EMPTY_RENAMES = RenameMap()


@dataclass(frozen=True)
class MrOutcome:
    text: str
    applied: bool
    rename_map: RenameMap = EMPTY_RENAMES
    edits_count: int = 0


def fresh_name(base: str, infix: str, counter: int, taken: set[str]) -> tuple[str, int]:
    """First ``base+infix+C`` (C >= counter) not in ``taken``; returns (name, next counter)."""
    while f"{base}{infix}{counter}" in taken:
        counter += 1
    return f"{base}{infix}{counter}", counter + 1
