"""Run a sample's test command against a candidate patch."""
from __future__ import annotations

import subprocess
import sys
import tempfile
from dataclasses import dataclass
from pathlib import Path

from .config import ConfigError, OracleConfig

OUTCOMES = ("valid", "invalid", "error")


@dataclass(frozen=True)
class Verdict:
    mutant_id: str
    outcome: str
    detail: str = ""

    def __post_init__(self):
        if self.outcome not in OUTCOMES:
            raise ValueError(f"unknown outcome {self.outcome!r}")


def _substitute(argv: list[str], values: dict[str, str]) -> list[str]:
    out = []
    for arg in argv:
        for key, val in values.items():
            arg = arg.replace("{" + key + "}", val)
        out.append(arg)
    return out


def run_oracle(config: OracleConfig, patch: str, sample, mutant_id: str = "") -> Verdict:
    """Write ``patch`` into a fresh scratch dir and run the test command there.

    Exit 0 is valid, any other exit is invalid; timeouts and spawn failures
    are errors.
    """
    try:
        template = config.resolve(sample.oracle_ref)
    except ConfigError as exc:
        return Verdict(mutant_id, "error", str(exc))
    with tempfile.TemporaryDirectory(prefix="javamorph-oracle-") as workdir:
        patch_file = Path(workdir) / config.patch_filename
        patch_file.write_text(patch, encoding="utf-8")
        argv = _substitute(template, {
            "patch_file": str(patch_file), "workdir": workdir, "sample_id": sample.id,
            "oracle_ref": sample.oracle_ref, "python": sys.executable,
        })
        try:
            proc = subprocess.run(argv, cwd=workdir, capture_output=True, timeout=config.timeout)
        except subprocess.TimeoutExpired:
            return Verdict(mutant_id, "error", "timeout")
        except OSError as exc:
            return Verdict(mutant_id, "error", f"spawn failed: {exc}")
    if proc.returncode == 0:
        return Verdict(mutant_id, "valid", "tests passed")
    tail = (proc.stderr or proc.stdout or b"").decode("utf-8", "replace").strip().splitlines()[-1:]
    return Verdict(mutant_id, "invalid", f"exit {proc.returncode}" + (f": {tail[0][:200]}" if tail else ""))
