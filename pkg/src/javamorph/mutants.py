"""Applicable-MR detection, combination sampling and mutant generation."""
from __future__ import annotations

import hashlib
import json
import math
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .mr import REGISTRY, apply_mr
from .mr.base import EMPTY_RENAMES, MrContext, MrId, RenameMap, combo_code, parse_combo_code
from .syntax import normalize_newlines, parse_java, text_differs

DEFAULT_CAP = 20


class RangeError(ValueError):
    """Perturbation distance outside ``1..len(applicable)``."""


class DegenerateMutant(ValueError):
    """A combination whose composed application leaves the text unchanged."""

    def __init__(self, mutant: "Mutant"):
        super().__init__(f"mutant {mutant.id} equals its base sample")
        self.mutant = mutant


@dataclass(frozen=True)
class BaseSample:
    id: str
    source: str
    dataset: str = ""
    repair_pattern: str = "unknown"
    oracle_ref: str = ""

    def __post_init__(self):
        object.__setattr__(self, "source", normalize_newlines(self.source))


@dataclass(frozen=True)
class PerturbationList:
    sample_id: str
    applicable: tuple[MrId, ...]

    def __post_init__(self):
        object.__setattr__(self, "applicable", tuple(sorted(MrId.parse(m) for m in self.applicable)))

    def __len__(self) -> int:
        return len(self.applicable)


@dataclass(frozen=True)
class ComboSpec:
    mr_ids: tuple[MrId, ...]

    def __post_init__(self):
        ids = tuple(sorted({MrId.parse(m) for m in self.mr_ids}))
        if not ids:
            raise ValueError("a combination needs at least one MR")
        object.__setattr__(self, "mr_ids", ids)

    @property
    def code(self) -> str:
        return combo_code(self.mr_ids)

    @classmethod
    def from_code(cls, code: str) -> "ComboSpec":
        return cls(parse_combo_code(code))

    def __len__(self) -> int:
        return len(self.mr_ids)


@dataclass(frozen=True)
class Mutant:
    id: str
    base_id: str
    combo: ComboSpec
    text: str
    rename_map: RenameMap
    pd: int
    seed: int
    flags: tuple[bool, ...] = ()
    degenerate: bool = False

    @property
    def interacting(self) -> bool:
        """Some combo member changed nothing at its step."""
        return self.pd < len(self.combo)

    def meta(self) -> dict:
        return {
            "id": self.id,
            "base_id": self.base_id,
            "combo": self.combo.code,
            "pd": self.pd,
            "rename_map": self.rename_map.to_json(),
            "seed": self.seed,
            "flags": {m.code: f for m, f in zip(self.combo.mr_ids, self.flags)},
            "degenerate": self.degenerate,
            "interacting": self.interacting,
        }


def mutant_id(sample_id: str, combo: ComboSpec, seed: int) -> str:
    digest = hashlib.sha256(f"{sample_id}|{combo.code}|{seed}".encode()).hexdigest()[:8]
    return f"{sample_id}-{combo.code}-{digest}-s{seed}"


def detect_applicable(sample: BaseSample, seed: int = 0) -> PerturbationList:
    """Apply each MR to the original source independently and keep those that changed it."""
    parse_java(sample.source)
    found = [m for m in REGISTRY if apply_mr(m, sample.source, MrContext(seed=seed)).applied]
    return PerturbationList(sample.id, tuple(found))


def _unrank(index: int, n: int, k: int) -> tuple[int, ...]:
    """The ``index``-th k-subset of range(n) in lexicographic order."""
    out = []
    x = 0
    for remaining in range(k, 0, -1):
        while True:
            count = math.comb(n - x - 1, remaining - 1)
            if index < count:
                break
            index -= count
            x += 1
        out.append(x)
        x += 1
    return tuple(out)


def enumerate_combos(plist: PerturbationList, pd: int, cap: int = DEFAULT_CAP,
                     seed: int = 0) -> list[ComboSpec]:
    """All ``pd``-subsets of the applicable list, or a seeded sample of ``cap`` of them."""
    n = len(plist.applicable)
    if not 1 <= pd <= n:
        raise RangeError(f"pd={pd} outside 1..{n} for sample {plist.sample_id}")
    if cap < 1:
        raise ValueError("cap must be >= 1")
    total = math.comb(n, pd)
    if total <= cap:
        ranks = range(total)
    else:
        rng = random.Random(f"combos:{seed}:{plist.sample_id}:{pd}")
        ranks = sorted(rng.sample(range(total), cap))
    return [ComboSpec(tuple(plist.applicable[i] for i in _unrank(r, n, pd))) for r in ranks]


def perturbation_distance(steps: Iterable[bool]) -> int:
    return sum(1 for s in steps if s)


def generate_mutant(sample: BaseSample, combo: ComboSpec, seed: int = 0, *,
                    raise_degenerate: bool = False) -> Mutant:
    """Compose the combo's MRs in ascending order, tracking which steps changed the text.

    Degenerate results come back with ``degenerate=True``; pass
    ``raise_degenerate=True`` to get :class:`DegenerateMutant` instead.
    """
    text = sample.source
    ctx = MrContext(seed=seed)
    renames = EMPTY_RENAMES
    flags = []
    for m in combo.mr_ids:
        out = apply_mr(m, text, ctx)
        flags.append(out.applied)
        if out.applied:
            text = out.text
            renames = renames.merge(out.rename_map)
    mutant = Mutant(
        id=mutant_id(sample.id, combo, seed),
        base_id=sample.id,
        combo=combo,
        text=text,
        rename_map=renames,
        pd=perturbation_distance(flags),
        seed=seed,
        flags=tuple(flags),
        degenerate=not text_differs(sample.source, text),
    )
    if mutant.degenerate and raise_degenerate:
        raise DegenerateMutant(mutant)
    return mutant


# --- on-disk store ----------------------------------------------------------------


class MutantStore:
    """``<root>/<sample-id>/pd<k>/<combo>-<seed>.java`` plus ``.meta.json`` siblings."""

    def __init__(self, root):
        self.root = Path(root)

    def _stem(self, m: Mutant) -> Path:
        return self.root / m.base_id / f"pd{m.pd}" / f"{m.combo.code}-{m.seed}"

    def write_base(self, sample: BaseSample) -> None:
        d = self.root / sample.id
        d.mkdir(parents=True, exist_ok=True)
        _write_text(d / "base.java", sample.source)
        _write_text(d / "base.meta.json", _dumps({
            "id": sample.id, "dataset": sample.dataset,
            "repair_pattern": sample.repair_pattern, "oracle_ref": sample.oracle_ref,
        }))

    def write(self, m: Mutant) -> Path:
        stem = self._stem(m)
        stem.parent.mkdir(parents=True, exist_ok=True)
        java = stem.with_suffix(".java")
        _write_text(java, m.text)
        _write_text(stem.with_suffix(".meta.json"), _dumps(m.meta()))
        return java

    def base(self, sample_id: str) -> BaseSample:
        d = self.root / sample_id
        meta = json.loads((d / "base.meta.json").read_text("utf-8"))
        return BaseSample(meta["id"], (d / "base.java").read_text("utf-8"), meta.get("dataset", ""),
                          meta.get("repair_pattern", "unknown"), meta.get("oracle_ref", ""))

    def sample_ids(self) -> list[str]:
        if not self.root.is_dir():
            return []
        return sorted(p.name for p in self.root.iterdir() if (p / "base.java").is_file())

    def mutants(self, sample_id: Optional[str] = None) -> list[Mutant]:
        ids = [sample_id] if sample_id else self.sample_ids()
        out = []
        for sid in ids:
            for meta_path in sorted((self.root / sid).glob("pd*/*.meta.json")):
                meta = json.loads(meta_path.read_text("utf-8"))
                text = meta_path.with_name(meta_path.name[: -len(".meta.json")] + ".java").read_text("utf-8")
                combo = ComboSpec.from_code(meta["combo"])
                out.append(Mutant(
                    id=meta["id"], base_id=meta["base_id"], combo=combo, text=text,
                    rename_map=RenameMap.from_json(meta["rename_map"]), pd=meta["pd"],
                    seed=meta["seed"], flags=tuple(meta["flags"][m.code] for m in combo.mr_ids),
                    degenerate=meta.get("degenerate", False),
                ))
        out.sort(key=lambda m: m.id)
        return out


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _write_text(path: Path, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def generate_family(sample: BaseSample, plist: PerturbationList, pd_range: Sequence[int],
                    cap: int = DEFAULT_CAP, seed: int = 0,
                    include_degenerate: bool = False) -> list[Mutant]:
    """Every mutant of one sample for the requested distances, sorted by id."""
    out = []
    for pd in pd_range:
        if pd > len(plist):
            continue
        for combo in enumerate_combos(plist, pd, cap, seed):
            m = generate_mutant(sample, combo, seed)
            if m.degenerate and not include_degenerate:
                continue
            out.append(m)
    out.sort(key=lambda m: m.id)
    return out
