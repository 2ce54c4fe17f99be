from .campaign import (
    RecordSink, RepairAttempt, attempt_record, read_records, repair_mutant, run_campaign, stable_view,
)
from .client import AuthError, MockEndpoint, TransportError, invoke_model, sha256
from .config import ConfigError, ModelEndpointConfig, OracleConfig
from .oracle import Verdict, run_oracle
from .patch import DEFAULT_TEMPLATE, TemplateError, build_prompt, extract_patch, reverse_rename

__all__ = [
    "AuthError", "ConfigError", "DEFAULT_TEMPLATE", "MockEndpoint", "ModelEndpointConfig",
    "OracleConfig", "RecordSink", "RepairAttempt", "TemplateError", "TransportError", "Verdict",
    "attempt_record", "build_prompt", "extract_patch", "invoke_model", "read_records",
    "repair_mutant", "reverse_rename", "run_campaign", "run_oracle", "sha256", "stable_view",
]
