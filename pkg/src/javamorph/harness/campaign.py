"""Repair loop: prompt, model, patch, reverse rename, oracle, record."""
from __future__ import annotations

import json
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable, Iterable, Optional, Sequence

import httpx

from ..mutants import BaseSample, Mutant
from .client import AuthError, TransportError, invoke_model, sha256
from .config import ModelEndpointConfig, OracleConfig
from .oracle import Verdict, run_oracle
from .patch import DEFAULT_TEMPLATE, build_prompt, extract_patch, reverse_rename

VOLATILE_FIELDS = ("timestamp", "latency_ms")


@dataclass
class RepairAttempt:
    mutant_id: str
    prompt: str
    raw_response: str = ""
    extracted_patch: Optional[str] = None
    reversed_patch: Optional[str] = None
    latency: float = 0.0  # milliseconds


def repair_mutant(mutant: Mutant, sample: BaseSample, model: ModelEndpointConfig,
                  oracle: OracleConfig, template: str = DEFAULT_TEMPLATE,
                  client: Optional[httpx.Client] = None) -> tuple[RepairAttempt, Verdict]:
    prompt = build_prompt(mutant, template)
    attempt = RepairAttempt(mutant.id, prompt)
    t0 = time.perf_counter()
    try:
        attempt.raw_response = invoke_model(model, prompt, client)
    except (TransportError, AuthError) as exc:
        attempt.latency = (time.perf_counter() - t0) * 1000
        return attempt, Verdict(mutant.id, "error", f"{type(exc).__name__}: {exc}")
    attempt.latency = (time.perf_counter() - t0) * 1000
    attempt.extracted_patch = extract_patch(attempt.raw_response)
    if attempt.extracted_patch is None:
        return attempt, Verdict(mutant.id, "invalid", "no patch")
    attempt.reversed_patch = reverse_rename(attempt.extracted_patch, mutant.rename_map)
    return attempt, run_oracle(oracle, attempt.reversed_patch, sample, mutant.id)


def attempt_record(mutant: Mutant, sample: BaseSample, model: ModelEndpointConfig,
                   attempt: RepairAttempt, verdict: Verdict) -> dict:
    return {
        "mutant_id": mutant.id,
        "base_id": mutant.base_id,
        "combo": mutant.combo.code,
        "pd": mutant.pd,
        "outcome": verdict.outcome,
        "detail": verdict.detail,
        "prompt_hash": sha256(attempt.prompt),
        "response_hash": sha256(attempt.raw_response),
        "latency_ms": round(attempt.latency, 3),
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "model": model.model_name,
        "repair_pattern": sample.repair_pattern,
        "dataset": sample.dataset,
    }


def read_records(path) -> list[dict]:
    path = Path(path)
    if not path.exists():
        return []
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                try:
                    out.append(json.loads(line))
                except json.JSONDecodeError:
                    break  # torn tail from an interrupted run
    return out


def stable_view(records: Iterable[dict]) -> list[dict]:
    """Records without wall-clock fields, for reproducibility comparisons."""
    return [{k: v for k, v in r.items() if k not in VOLATILE_FIELDS} for r in records]


class RecordSink:
    """Append-only JSONL writer; all writes go through one lock."""

    def __init__(self, path):
        self.path = Path(path)
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self._lock = threading.Lock()
        self._repair_tail()

    def _repair_tail(self) -> None:
        if not self.path.exists():
            return
        data = self.path.read_bytes()
        if data and not data.endswith(b"\n"):
            self.path.write_bytes(data[: data.rfind(b"\n") + 1])

    def append(self, record: dict) -> None:
        line = json.dumps(record, sort_keys=True, ensure_ascii=False) + "\n"
        with self._lock:
            with open(self.path, "a", encoding="utf-8", newline="\n") as fh:
                fh.write(line)
                fh.flush()


def run_campaign(mutants: Sequence[Mutant], samples: dict[str, BaseSample],
                 model: ModelEndpointConfig, oracle: OracleConfig, records_path,
                 template: str = DEFAULT_TEMPLATE, client: Optional[httpx.Client] = None,
                 on_record: Optional[Callable[[dict], None]] = None,
                 stop: Optional[threading.Event] = None,
                 artifacts_dir=None) -> dict[str, int]:
    """Attempt every not-yet-recorded mutant for ``model``; returns outcome counts.

    Work runs on a pool of ``model.max_concurrency`` threads, but records
    are appended in mutant-id order so the file is reproducible.  Setting
    ``stop`` lets in-flight attempts finish and skips the rest.  With
    ``artifacts_dir`` the prompt, response and both patches of every attempt
    are kept as ``<artifacts_dir>/<model>/<mutant_id>.json``.
    """
    sink = RecordSink(records_path)
    done = {(r.get("model"), r["mutant_id"]) for r in read_records(sink.path)}
    todo = sorted((m for m in mutants if (model.model_name, m.id) not in done), key=lambda m: m.id)
    counts = {"valid": 0, "invalid": 0, "error": 0, "skipped": len(mutants) - len(todo)}
    stop = stop if stop is not None else threading.Event()

    def work(m: Mutant):
        if stop.is_set():
            return None
        return repair_mutant(m, samples[m.base_id], model, oracle, template, client)

    interrupted = False
    with ThreadPoolExecutor(max_workers=model.max_concurrency) as pool:
        futures = [pool.submit(work, m) for m in todo]
        for m, fut in zip(todo, futures):
            while True:
                try:
                    result = fut.result()
                    break
                except KeyboardInterrupt:
                    # drain: let in-flight attempts land, skip the queued ones
                    interrupted = True
                    stop.set()
            if result is None:
                continue
            attempt, verdict = result
            rec = attempt_record(m, samples[m.base_id], model, attempt, verdict)
            sink.append(rec)
            if artifacts_dir is not None:
                _write_artifact(Path(artifacts_dir) / _safe(model.model_name), attempt, verdict)
            counts[verdict.outcome] += 1
            if on_record:
                on_record(rec)
    if interrupted:
        raise KeyboardInterrupt
    return counts


def _safe(name: str) -> str:
    return "".join(c if c.isalnum() or c in "-_." else "_" for c in name)


def _write_artifact(directory: Path, attempt: RepairAttempt, verdict: Verdict) -> None:
    directory.mkdir(parents=True, exist_ok=True)
    payload = {**asdict(attempt), "outcome": verdict.outcome, "detail": verdict.detail}
    payload.pop("latency")
    (directory / f"{_safe(attempt.mutant_id)}.json").write_text(
        json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")
