"""Datasets, deterministic PFSA and their serialization."""
from pfsa.automaton.dataset import Alphabet, Dataset, format_dataset, parse_dataset, read_dataset
from pfsa.automaton.machine import (
    Arc,
    Pfsa,
    accepts,
    build_null_machine,
    canonicalize,
    fit_counts,
    is_isomorphic,
    trace,
)

__all__ = [
    "Alphabet", "Dataset", "parse_dataset", "format_dataset", "read_dataset",
    "Arc", "Pfsa", "trace", "accepts", "fit_counts", "canonicalize", "is_isomorphic",
    "build_null_machine",
]
