from .editdist import BACKEND, edit_distance, levenshtein, token_sequence
from .report import (
    EmptyGroup, MetricsSummary, TrainingPair, export_pairs, group_metrics, macro_average,
    r_score, read_csv, render_report,
)
from .stats import DegenerateInput, average_ranks, spearman

__all__ = [
    "BACKEND", "DegenerateInput", "EmptyGroup", "MetricsSummary", "TrainingPair",
    "average_ranks", "edit_distance", "export_pairs", "group_metrics", "levenshtein",
    "macro_average", "r_score", "read_csv", "render_report", "spearman", "token_sequence",
]
