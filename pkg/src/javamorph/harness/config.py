from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class ModelEndpointConfig:
    base_url: str
    model_name: str
    temperature: float = 0.0
    max_tokens: int = 1024
    auth: Optional[str] = None  # name of the env var holding the bearer token
    request_timeout: float = 60.0
    max_concurrency: int = 1
    max_attempts: int = 3
    backoff: float = 0.5

    def __post_init__(self):
        if self.temperature != 0:
            raise ConfigError("temperature is pinned to 0 for deterministic decoding")
        if self.max_concurrency < 1:
            raise ConfigError("max_concurrency must be >= 1")
        if self.max_attempts < 1:
            raise ConfigError("max_attempts must be >= 1")

    @classmethod
    def from_dict(cls, data: Mapping) -> "ModelEndpointConfig":
        known = {k: v for k, v in data.items() if k in cls.__dataclass_fields__}
        missing = {"base_url", "model_name"} - known.keys()
        if missing:
            raise ConfigError(f"model config lacks {sorted(missing)}")
        return cls(**known)


@dataclass(frozen=True)
class OracleConfig:
    """How to test a patch.

    ``command_template`` is an argv list; ``templates`` maps a sample's
    ``oracle_ref`` to its own argv list and wins when present.
    Placeholders: ``{patch_file}``, ``{workdir}``, ``{sample_id}``,
    ``{oracle_ref}``, ``{python}``.
    """

    command_template: Sequence[str] = ()
    timeout: float = 60.0
    templates: Mapping[str, Sequence[str]] = field(default_factory=dict)
    patch_filename: str = "Patch.java"
    success_rule: str = "exit code 0"

    def __post_init__(self):
        if self.timeout <= 0:
            raise ConfigError("oracle timeout must be positive")
        if isinstance(self.command_template, str):
            raise ConfigError("command_template must be an argv list, not a shell string")

    def resolve(self, oracle_ref: str) -> list[str]:
        argv = self.templates.get(oracle_ref) or self.command_template
        if not argv:
            raise ConfigError(f"no oracle command for {oracle_ref!r}")
        return list(argv)
