"""Semantic-preservation workload: every single-MR mutant of the corpus plus
a seeded batch of multi-MR mutants, each run through the interpreter."""
from __future__ import annotations

import functools
import random
from dataclasses import dataclass
from pathlib import Path

from javamorph.mutants import BaseSample, ComboSpec, detect_applicable, generate_mutant

from .javainterp import run_program

CORPUS = Path(__file__).resolve().parents[1] / "corpus"
SINGLE_SEED = 7
MULTI_SEED = 2024
MULTI_COUNT = 100


@dataclass(frozen=True)
class Case:
    program: str
    combo: str
    seed: int

    @property
    def label(self) -> str:
        return f"{self.program}:{self.combo}:s{self.seed}"


def programs() -> list[str]:
    return sorted(p.stem for p in CORPUS.glob("*.java"))


@functools.lru_cache(maxsize=None)
def sample(name: str) -> BaseSample:
    return BaseSample(name, (CORPUS / f"{name}.java").read_text("utf-8"))


@functools.lru_cache(maxsize=None)
def applicable(name: str) -> tuple:
    return detect_applicable(sample(name), SINGLE_SEED).applicable


@functools.lru_cache(maxsize=None)
def baseline(name: str) -> tuple[int, str]:
    return run_program(sample(name).source)


def single_cases(name: str) -> list[Case]:
    return [Case(name, m.code, SINGLE_SEED) for m in applicable(name)]


@functools.lru_cache(maxsize=1)
def multi_cases() -> tuple[Case, ...]:
    rng = random.Random(MULTI_SEED)
    names = programs()
    out = []
    for i in range(MULTI_COUNT):
        name = rng.choice(names)
        mrs = applicable(name)
        k = rng.randint(2, len(mrs))
        out.append(Case(name, ComboSpec(tuple(rng.sample(mrs, k))).code, i))
    return tuple(out)


def mutant_text(case: Case) -> str:
    m = generate_mutant(sample(case.program), ComboSpec.from_code(case.combo), case.seed)
    assert not m.degenerate, case.label
    return m.text


@functools.lru_cache(maxsize=None)
def check(case: Case) -> str | None:
    """None when the mutant behaves like its base program, else a short reason."""
    try:
        got = run_program(mutant_text(case))
    except Exception as exc:
        return f"{case.label}: {type(exc).__name__}: {exc}"
    want = baseline(case.program)
    if got != want:
        return f"{case.label}: got {got!r}, want {want!r}"
    return None


def all_cases() -> list[Case]:
    return [c for name in programs() for c in single_cases(name)] + list(multi_cases())


def failures() -> list[str]:
    return [r for r in map(check, all_cases()) if r]
