"""Command-line pipeline: detect -> mutate -> repair -> report.

Exit codes: 0 ok, 2 configuration error, 3 data error, 4 campaign health.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Optional, Sequence

import yaml

from .harness import (
    ConfigError, MockEndpoint, ModelEndpointConfig, OracleConfig, read_records, run_campaign,
)
from .harness.patch import DEFAULT_TEMPLATE
from .metrics import edit_distance, export_pairs, group_metrics, render_report
from .mr.base import MrId
from .mutants import (
    DEFAULT_CAP, BaseSample, MutantStore, PerturbationList, detect_applicable, generate_family,
)
from .syntax import ParseFatal

log = logging.getLogger("javamorph")

EXIT_OK, EXIT_CONFIG, EXIT_DATA, EXIT_HEALTH = 0, 2, 3, 4
SAMPLE_META_NAMES = ("meta.json", "meta.yaml", "meta.yml")


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_CONFIG):
        super().__init__(message)
        self.code = code


@dataclass
class DatasetRoot:
    path: Path
    name: str = ""


@dataclass
class CampaignConfig:
    campaign_name: str
    seed: int
    datasets: list[DatasetRoot] = field(default_factory=list)
    mr_subset: tuple[MrId, ...] = tuple(MrId)
    pd_range: tuple[int, int] = (1, 9)
    cap: int = DEFAULT_CAP
    models: list[ModelEndpointConfig] = field(default_factory=list)
    oracle: OracleConfig = field(default_factory=OracleConfig)
    output_root: Path = Path("out")
    error_threshold: float = 0.5
    template: str = DEFAULT_TEMPLATE

    def __post_init__(self):
        a, b = self.pd_range
        if not 1 <= a <= b <= 9:
            raise ConfigError(f"pd range {a}..{b} is not within 1..9")
        if self.cap < 1:
            raise ConfigError("cap must be >= 1")

    @property
    def run_dir(self) -> Path:
        return self.output_root / "runs" / self.campaign_name

    @property
    def store(self) -> MutantStore:
        return MutantStore(self.output_root / "mutants")


def parse_pd_range(text) -> tuple[int, int]:
    if isinstance(text, (list, tuple)) and len(text) == 2:
        return int(text[0]), int(text[1])
    text = str(text).strip()
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            return int(a), int(b)
        return int(text), int(text)
    except ValueError:
        raise ConfigError(f"bad pd range {text!r}; expected a..b") from None


def parse_mrs(value) -> tuple[MrId, ...]:
    items = value.split(",") if isinstance(value, str) else list(value)
    try:
        return tuple(sorted({MrId.parse(v) for v in items if str(v).strip()}))
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def load_structured(path: Path) -> dict:
    try:
        text = path.read_text("utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from None
    try:
        data = json.loads(text) if path.suffix == ".json" else yaml.safe_load(text)
    except (json.JSONDecodeError, yaml.YAMLError) as exc:
        raise ConfigError(f"cannot parse {path}: {exc}") from None
    if not isinstance(data, dict):
        raise ConfigError(f"{path} does not hold a mapping")
    return data


def load_config(args: argparse.Namespace) -> CampaignConfig:
    data: dict = {}
    base = Path.cwd()
    if args.config:
        cfg_path = Path(args.config)
        data = load_structured(cfg_path)
        base = cfg_path.resolve().parent
    seed = args.seed if args.seed is not None else data.get("seed")
    if seed is None:
        raise ConfigError("a seed is required (config 'seed' or --seed)")
    datasets = []
    for entry in data.get("datasets", []):
        if isinstance(entry, str):
            entry = {"root": entry}
        root = Path(entry["root"])
        datasets.append(DatasetRoot(root if root.is_absolute() else base / root,
                                    entry.get("name", root.name)))
    models = []
    for m in data.get("models", []) or ([data["model"]] if "model" in data else []):
        models.append(ModelEndpointConfig.from_dict(m))
    oracle_data = data.get("oracle", {}) or {}
    oracle = OracleConfig(command_template=tuple(oracle_data.get("command", ())),
                          timeout=float(oracle_data.get("timeout", 60)))
    out = args.out or data.get("output_root") or "out"
    out_path = Path(out)
    cfg = CampaignConfig(
        campaign_name=data.get("campaign_name", "campaign"),
        seed=int(seed),
        datasets=datasets,
        mr_subset=parse_mrs(args.mrs if args.mrs else data.get("mr_subset", [m.value for m in MrId])),
        pd_range=parse_pd_range(args.pd if args.pd else data.get("pd_range", "1..9")),
        cap=int(args.cap if args.cap is not None else data.get("cap", DEFAULT_CAP)),
        models=models,
        oracle=oracle,
        output_root=out_path if out_path.is_absolute() or args.out else base / out_path,
        error_threshold=float(data.get("error_threshold", 0.5)),
        template=data.get("template", DEFAULT_TEMPLATE),
    )
    return cfg


# --- samples ------------------------------------------------------------------------


def _sample_meta(d: Path) -> dict:
    for name in SAMPLE_META_NAMES:
        if (d / name).is_file():
            return load_structured(d / name)
    return {}


def load_samples(cfg: CampaignConfig) -> tuple[list[BaseSample], dict[str, list[str]]]:
    """Samples of every dataset root plus per-ref oracle argv templates.

    A sample is a directory holding one ``.java`` file (or ``source`` named
    in its meta file) and an optional ``meta.json``/``meta.yaml``.
    """
    if not cfg.datasets:
        raise ConfigError("no dataset roots configured")
    samples: list[BaseSample] = []
    templates: dict[str, list[str]] = {}
    for ds in cfg.datasets:
        if not ds.path.is_dir():
            raise ConfigError(f"dataset root {ds.path} is not a readable directory")
        for d in sorted(p for p in ds.path.iterdir() if p.is_dir()):
            meta = _sample_meta(d)
            src_name = meta.get("source")
            java = [d / src_name] if src_name else sorted(d.glob("*.java"))
            if len(java) != 1:
                log.warning("skipping %s: expected exactly one source file", d)
                continue
            sid = str(meta.get("id", d.name))
            ref = str(meta.get("oracle_ref", sid))
            if "oracle" in meta:
                argv = [a.replace("{sample_dir}", str(d)) for a in meta["oracle"]]
                templates[ref] = argv
            samples.append(BaseSample(sid, java[0].read_text("utf-8"), meta.get("dataset", ds.name),
                                      meta.get("repair_pattern", "unknown"), ref))
    ids = [s.id for s in samples]
    if len(ids) != len(set(ids)):
        raise ConfigError("sample ids are not unique")
    return samples, templates


# --- subcommands ------------------------------------------------------------------


def cmd_detect(cfg: CampaignConfig) -> int:
    samples, _ = load_samples(cfg)
    lists, failures = {}, {}
    for s in samples:
        try:
            lists[s.id] = [m.code for m in detect_applicable(s, cfg.seed).applicable]
        except ParseFatal as exc:
            failures[s.id] = str(exc)
            log.error("parse failure in %s: %s", s.id, exc)
    cfg.output_root.mkdir(parents=True, exist_ok=True)
    _write_json(cfg.output_root / "lists.json", lists)
    print(f"detected applicable MRs for {len(lists)} sample(s)")
    for sid, reason in sorted(failures.items()):
        print(f"  parse failure: {sid}: {reason}")
    return EXIT_DATA if failures else EXIT_OK


def _load_lists(cfg: CampaignConfig, samples: list[BaseSample]) -> dict[str, PerturbationList]:
    path = cfg.output_root / "lists.json"
    if path.exists():
        raw = json.loads(path.read_text("utf-8"))
        return {sid: PerturbationList(sid, tuple(MrId.parse(m) for m in ids)) for sid, ids in raw.items()}
    return {s.id: detect_applicable(s, cfg.seed) for s in samples}


def cmd_mutate(cfg: CampaignConfig, keep_going: bool = False) -> int:
    samples, _ = load_samples(cfg)
    lists = _load_lists(cfg, samples)
    store = cfg.store
    per_pd: dict[int, int] = {}
    failed = []
    lo, hi = cfg.pd_range
    for s in samples:
        try:
            plist = lists.get(s.id) or detect_applicable(s, cfg.seed)
            plist = PerturbationList(s.id, tuple(m for m in plist.applicable if m in cfg.mr_subset))
            family = generate_family(s, plist, range(lo, hi + 1), cfg.cap, cfg.seed)
        except (ParseFatal, ValueError) as exc:
            failed.append(s.id)
            log.error("mutant generation failed for %s: %s", s.id, exc)
            if not keep_going:
                return EXIT_DATA
            continue
        store.write_base(s)
        for m in family:
            store.write(m)
            per_pd[m.pd] = per_pd.get(m.pd, 0) + 1
    for pd in sorted(per_pd):
        print(f"pd={pd}: {per_pd[pd]} mutant(s)")
    print(f"total: {sum(per_pd.values())} mutant(s)")
    return EXIT_DATA if failed else EXIT_OK


def cmd_repair(cfg: CampaignConfig, mock: Optional[str] = None) -> int:
    samples, templates = load_samples(cfg)
    oracle = replace(cfg.oracle, templates={**templates, **dict(cfg.oracle.templates)})
    by_id = {s.id: s for s in samples}
    mutants = [m for m in cfg.store.mutants() if m.base_id in by_id and not m.degenerate]
    if not mutants:
        raise CliError("mutant store is empty; run 'mutate' first", EXIT_DATA)
    models = cfg.models
    if not models:
        if not mock:
            raise ConfigError("no model endpoint configured")
        models = [ModelEndpointConfig(base_url="http://mock.invalid/v1", model_name="mock")]
    client = MockEndpoint(mock).client() if mock else None
    records = cfg.run_dir / "attempts.jsonl"
    totals = {"valid": 0, "invalid": 0, "error": 0, "skipped": 0}
    try:
        for model in models:
            counts = run_campaign(mutants, by_id, model, oracle, records, cfg.template, client,
                                  artifacts_dir=cfg.run_dir / "artifacts")
            print(f"{model.model_name}: " + ", ".join(f"{k}={v}" for k, v in counts.items()))
            for k, v in counts.items():
                totals[k] += v
    except KeyboardInterrupt:
        print("interrupted; completed attempts were recorded and the run can be resumed")
        return 130
    finally:
        if client is not None:
            client.close()
    attempted = totals["valid"] + totals["invalid"] + totals["error"]
    if attempted and totals["error"] / attempted > cfg.error_threshold:
        print(f"error fraction {totals['error'] / attempted:.2f} exceeds {cfg.error_threshold}")
        return EXIT_HEALTH
    return EXIT_OK


def _distances(cfg: CampaignConfig) -> dict[str, float]:
    store = cfg.store
    out = {}
    for sid in store.sample_ids():
        base = store.base(sid).source
        for m in store.mutants(sid):
            out[m.id] = float(edit_distance(base, m.text))
    return out


def cmd_report(cfg: CampaignConfig, export: bool = False) -> int:
    records = read_records(cfg.run_dir / "attempts.jsonl")
    if not records:
        raise CliError(f"no attempt records under {cfg.run_dir}")
    distances = _distances(cfg)
    groups = {key: group_metrics(records, key, distances)
              for key in ("overall", "model", "mr_id", "pd", "repair_pattern")}
    report_dir = cfg.output_root / "report"
    render_report(groups, report_dir, title=f"Robustness report: {cfg.campaign_name}")
    for s in groups["model"]:
        score = "-" if s.r_score is None else f"{s.r_score:.3f}"
        print(f"{s.scope_key}: valid={s.valid} invalid={s.invalid} r_score={score}")
    if export:
        n = export_pairs(cfg.store, cfg.output_root / "pairs.jsonl")
        print(f"exported {n} training pair(s)")
    return EXIT_OK


def cmd_export_pairs(cfg: CampaignConfig) -> int:
    n = export_pairs(cfg.store, cfg.output_root / "pairs.jsonl")
    print(f"exported {n} training pair(s)")
    return EXIT_OK


def _write_json(path: Path, obj) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


# --- entry point ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="campaign file (YAML or JSON)")
    common.add_argument("--seed", type=int, help="overrides the config seed")
    common.add_argument("--pd", help="perturbation distance range, e.g. 1..3")
    common.add_argument("--cap", type=int, help="max combinations per distance (default 20)")
    common.add_argument("--mrs", help="comma-separated MR subset, e.g. m1,m3,m9")
    common.add_argument("--out", help="output root (default from config, else ./out)")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="javamorph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("detect", parents=[common], help="list the MRs that apply to each sample")
    p = sub.add_parser("mutate", parents=[common], help="generate the mutant store")
    p.add_argument("--keep-going", action="store_true", help="continue past failing samples")
    p = sub.add_parser("repair", parents=[common], help="query the model(s) and run the oracles")
    p.add_argument("--mock", help="scripted endpoint fixture (JSON) instead of live calls")
    p = sub.add_parser("report", parents=[common], help="aggregate attempt records into tables")
    p.add_argument("--export-pairs", action="store_true", help="also write pairs.jsonl")
    sub.add_parser("export-pairs", parents=[common], help="write <x, x'> training pairs")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        cfg = load_config(args)
        if args.command == "detect":
            return cmd_detect(cfg)
        if args.command == "mutate":
            return cmd_mutate(cfg, args.keep_going)
        if args.command == "repair":
            return cmd_repair(cfg, args.mock)
        if args.command == "report":
            return cmd_report(cfg, args.export_pairs)
        return cmd_export_pairs(cfg)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
