"""
prefix_tree.py

The canonical (prefix-tree) automaton of a dataset: a trie of the sentences in which
shared prefixes share states and every sentence end returns to the start state through
a delimiter arc. It is the starting machine of state-merging inducers.
"""
from typing import Dict, Tuple

from pfsa.automaton.dataset import Dataset
from pfsa.automaton.machine import Arc, Pfsa


def build_prefix_tree(dataset: Dataset) -> Pfsa:
    """
    Build the prefix tree; states are numbered in order of first use and arc counts are
    the traversal tallies of the dataset.
    """
    delim = dataset.alphabet.delimiter
    dests: Dict[Tuple[int, str], int] = {}
    counts: Dict[Tuple[int, str], int] = {}
    num_states = 1
    for sentence in dataset.sentences:
        state = 0
        for token in sentence:
            key = (state, token)
            if key not in dests:
                dests[key] = num_states
                num_states += 1
            counts[key] = counts.get(key, 0) + 1
            state = dests[key]
        key = (state, delim)
        dests[key] = 0
        counts[key] = counts.get(key, 0) + 1
    return Pfsa(dataset.alphabet, num_states, {key: Arc(dest, counts[key]) for key, dest in dests.items()})
