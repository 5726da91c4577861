"""
factories.py

Shared datasets and hand-built machines for the pfsa tests.
"""
import os
from typing import List

import numpy as np
import pytest

from pfsa.automaton.dataset import Alphabet, Dataset, parse_dataset
from pfsa.automaton.machine import Arc, Pfsa

# long-running checks run only with PFSA_SLOW_TESTS=1
slow = pytest.mark.skipif(os.environ.get("PFSA_SLOW_TESTS") != "1", reason="set PFSA_SLOW_TESTS=1 to run")

WORKED_EXAMPLE = "CAAAB/BBAAB/CAAB/BBAB/CAB/BBB/CB"


def worked_example() -> Dataset:
    return parse_dataset(WORKED_EXAMPLE)


def ab_aab() -> Dataset:
    return parse_dataset("AB/AAB")


def two_state_machine() -> Pfsa:
    """0 -A-> 1, 1 -B-> 0 plus 1 -$-> 0: sentences (AB)*A."""
    alphabet = Alphabet(("A", "B"), "$")
    arcs = {
        (0, "A"): Arc(1, 3),
        (1, "B"): Arc(0, 1),
        (1, "$"): Arc(0, 2),
    }
    return Pfsa(alphabet, 2, arcs)


def random_small_datasets(count: int, seed: int = 0, max_sentences: int = 3,
                          max_length: int = 3, tokens: str = "AB") -> List[Dataset]:
    rng = np.random.default_rng(seed)
    datasets = []
    for _ in range(count):
        sentences = []
        for _ in range(int(rng.integers(1, max_sentences + 1))):
            length = int(rng.integers(1, max_length + 1))
            sentences.append("".join(tokens[int(i)] for i in rng.integers(len(tokens), size=length)))
        datasets.append(parse_dataset("/".join(sentences)))
    return datasets
