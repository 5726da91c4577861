"""Baseline inducers and the exhaustive oracle."""
from pfsa.baselines.exhaustive import enumerate_machines, exhaustive_search, iter_complete_nodes
from pfsa.baselines.ktails import TailSet, k_tails, k_tails_reduce, tail_sets
from pfsa.baselines.prefix_tree import build_prefix_tree

__all__ = [
    "build_prefix_tree", "TailSet", "tail_sets", "k_tails_reduce", "k_tails",
    "exhaustive_search", "enumerate_machines", "iter_complete_nodes",
]
