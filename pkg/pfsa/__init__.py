"""
pfsa - induction of probabilistic finite state automata by minimum message length.

Subpackages:
- automaton: datasets, deterministic PFSA and their YAML/DOT forms
- mml: message-length criteria
- search: the construction tree and the information-guided search
- baselines: prefix tree, k-tails and the exhaustive oracle
- bench: random machines, sampling and the benchmark harness
- utils: configuration, logging, metrics and reports
"""
from pfsa.search.igs import induce
from pfsa.search.options import InductionResult, SearchOptions

__all__ = ["induce", "SearchOptions", "InductionResult"]
