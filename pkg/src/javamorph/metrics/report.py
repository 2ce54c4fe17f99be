"""R-score aggregation, report tables and training-pair export."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, Optional, Sequence

from ..mr.base import MrId, parse_combo_code
from ..syntax import text_differs

GROUP_KEYS = ("model", "mr_id", "pd", "repair_pattern", "overall")
CSV_COLUMNS = ("scope_key", "valid", "invalid", "r_score", "avg_edit_distance")


class EmptyGroup(ValueError):
    pass


def r_score(valid: int, invalid: int) -> float:
    if valid < 0 or invalid < 0:
        raise ValueError("counts must be non-negative")
    if valid + invalid == 0:
        raise EmptyGroup("no valid or invalid outcomes")
    return valid / (valid + invalid)


@dataclass(frozen=True)
class MetricsSummary:
    scope: str
    scope_key: str
    valid: int
    invalid: int
    r_score: Optional[float]
    avg_edit_distance: Optional[float] = None
    errors: int = 0

    @property
    def total(self) -> int:
        return self.valid + self.invalid


def _key_values(record: Mapping, key: str) -> list[str]:
    if key == "overall":
        return ["overall"]
    if key == "mr_id":
        ids = parse_combo_code(record.get("combo", ""))
        return [MrId(ids[0]).name] if len(ids) == 1 else []
    if key == "pd":
        return [str(record["pd"])]
    value = record.get(key)
    return [str(value) if value not in (None, "") else "unknown"]


def _sort_key(key: str, value: str):
    if key == "pd":
        return (0, int(value), "")
    if key == "mr_id":
        return (0, MrId[value].value, "")
    return (1, 0, value)


def group_metrics(records: Iterable[Mapping], key: str,
                  distances: Optional[Mapping[str, float]] = None,
                  errors_as_invalid: bool = False) -> list[MetricsSummary]:
    """One summary per distinct value of ``key``.

    ``mr_id`` groups consider single-MR mutants only.  Error outcomes are
    left out unless ``errors_as_invalid``.  ``distances`` maps mutant ids to
    edit distances; each group's mean is over its counted records.
    """
    if key not in GROUP_KEYS:
        raise ValueError(f"unknown grouping {key!r}")
    acc: dict[str, list] = {}
    for rec in records:
        outcome = rec["outcome"]
        for value in _key_values(rec, key):
            slot = acc.setdefault(value, [0, 0, 0, []])
            if outcome == "valid":
                slot[0] += 1
            elif outcome == "invalid" or (outcome == "error" and errors_as_invalid):
                slot[1] += 1
            else:
                slot[2] += 1
                continue
            if distances is not None and rec["mutant_id"] in distances:
                slot[3].append(distances[rec["mutant_id"]])
    out = []
    for value in sorted(acc, key=lambda v: _sort_key(key, v)):
        valid, invalid, errors, dists = acc[value]
        score = valid / (valid + invalid) if valid + invalid else None
        avg = sum(dists) / len(dists) if dists else None
        out.append(MetricsSummary(key, value, valid, invalid, score, avg, errors))
    return out


def macro_average(summaries: Sequence[MetricsSummary]) -> Optional[float]:
    """Unweighted mean of the groups' R-scores (groups without one are skipped)."""
    scores = [s.r_score for s in summaries if s.r_score is not None]
    return sum(scores) / len(scores) if scores else None


def _fmt(x: Optional[float], digits: int = 3) -> str:
    return "-" if x is None else f"{x:.{digits}f}"


def markdown_table(summaries: Sequence[MetricsSummary], title: str = "") -> str:
    label = summaries[0].scope if summaries else "scope"
    lines = []
    if title:
        lines += [f"### {title}", ""]
    lines.append(f"| {label} | Invalid | Valid | R-score | Avg. edit distance |")
    lines.append("|---|---:|---:|---:|---:|")
    for s in summaries:
        lines.append(f"| {s.scope_key} | {s.invalid} | {s.valid} | {_fmt(s.r_score)} | "
                     f"{_fmt(s.avg_edit_distance, 2)} |")
    if len(summaries) > 1:
        valid = sum(s.valid for s in summaries)
        invalid = sum(s.invalid for s in summaries)
        pooled = valid / (valid + invalid) if valid + invalid else None
        lines.append(f"| **Overall (pooled)** | {invalid} | {valid} | {_fmt(pooled)} | |")
        lines.append(f"| **Avg. R-score (macro)** | | | {_fmt(macro_average(summaries))} | |")
    return "\n".join(lines) + "\n"


def csv_text(summaries: Sequence[MetricsSummary]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for s in summaries:
        w.writerow([s.scope_key, s.valid, s.invalid,
                    "" if s.r_score is None else repr(s.r_score),
                    "" if s.avg_edit_distance is None else repr(s.avg_edit_distance)])
    return buf.getvalue()


def read_csv(path, scope: str) -> list[MetricsSummary]:
    with open(path, encoding="utf-8", newline="") as fh:
        rows = list(csv.DictReader(fh))
    return [MetricsSummary(scope, r["scope_key"], int(r["valid"]), int(r["invalid"]),
                           float(r["r_score"]) if r["r_score"] else None,
                           float(r["avg_edit_distance"]) if r["avg_edit_distance"] else None)
            for r in rows]


def _write(path: Path, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def render_report(groups: Mapping[str, Sequence[MetricsSummary]], out_dir,
                  title: str = "Robustness report") -> list[Path]:
    """Write ``<key>.md`` and ``<key>.csv`` per grouping, ``report.md`` and ``pd_series.csv``."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    sections = [f"# {title}", ""]
    for key, summaries in groups.items():
        md = markdown_table(summaries, title=key)
        _write(out / f"{key}.md", md)
        _write(out / f"{key}.csv", csv_text(summaries))
        written += [out / f"{key}.md", out / f"{key}.csv"]
        sections.append(md)
    series = io.StringIO()
    w = csv.writer(series, lineterminator="\n")
    w.writerow(("pd", "r_score"))
    for s in groups.get("pd", []):
        w.writerow((s.scope_key, "" if s.r_score is None else repr(s.r_score)))
    _write(out / "pd_series.csv", series.getvalue())
    _write(out / "report.md", "\n".join(sections))
    written += [out / "pd_series.csv", out / "report.md"]
    return written


@dataclass(frozen=True)
class TrainingPair:
    x: str
    x_prime: str
    base_id: str
    combo: str

    def __post_init__(self):
        if not text_differs(self.x, self.x_prime):
            raise ValueError("a training pair needs two different texts")


def export_pairs(store, out_path) -> int:
    """Write one ``{x, x_prime, base_id, combo}`` JSON line per non-degenerate mutant."""
    out_path = Path(out_path)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    bases = {}
    lines = []
    for m in store.mutants():
        if m.degenerate:
            continue
        if m.base_id not in bases:
            bases[m.base_id] = store.base(m.base_id).source
        if not text_differs(m.text, bases[m.base_id]):
            continue
        pair = TrainingPair(m.text, bases[m.base_id], m.base_id, m.combo.code)
        lines.append(json.dumps({"x": pair.x, "x_prime": pair.x_prime, "base_id": pair.base_id,
                                 "combo": pair.combo}, sort_keys=True, ensure_ascii=False))
    _write(out_path, "".join(line + "\n" for line in lines))
    return len(lines)
