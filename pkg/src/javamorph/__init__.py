"""Metamorphic mutation of Java functions for probing LLM program-repair robustness."""
from .mr import MrContext, MrId, MrOutcome, RenameMap, apply_mr
from .mutants import (
    BaseSample, ComboSpec, DegenerateMutant, Mutant, MutantStore, PerturbationList, RangeError,
    detect_applicable, enumerate_combos, generate_mutant, perturbation_distance,
)
from .syntax import ParseFatal, apply_edits, find_nodes, parse_java, text_differs

__version__ = "0.1.0"

__all__ = [
    "BaseSample", "ComboSpec", "DegenerateMutant", "MrContext", "MrId", "MrOutcome", "Mutant",
    "MutantStore", "ParseFatal", "PerturbationList", "RangeError", "RenameMap", "apply_edits",
    "apply_mr", "detect_applicable", "enumerate_combos", "find_nodes", "generate_mutant",
    "parse_java", "perturbation_distance", "text_differs",
]
