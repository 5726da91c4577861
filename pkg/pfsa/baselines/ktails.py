"""
ktails.py

The k-tails state-merging inducer.

Two states are equivalent when the sets of strings of length at most k they can produce
agree. A string may stop anywhere before k symbols (every prefix counts), and the
delimiter ends a string. Equivalent states are merged; a merge that leaves a state with
two arcs on one symbol is resolved by merging the two destinations as well, so the
machine stays deterministic throughout. Tail sets are recomputed after every round of
merges until no two states agree.

Key Classes:
- TailSet: Strings of length <= k producible from one state.

Key Functions:
- tail_sets: TailSet of every state of a machine.
- k_tails_reduce: Merge equivalent states of a machine to a fixpoint.
- k_tails: Prefix tree of a dataset reduced with k-tails.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Tuple

from pfsa.automaton.dataset import Dataset
from pfsa.automaton.machine import Arc, Pfsa
from pfsa.baselines.prefix_tree import build_prefix_tree
from pfsa.utils.constants import DEFAULT_K
from pfsa.utils.errors import DomainError

logger = logging.getLogger(__name__)

Transitions = Dict[int, Dict[str, Tuple[int, int]]]


@dataclass(frozen=True)
class TailSet:
    state: int
    k: int
    strings: FrozenSet[Tuple[str, ...]]

    def __len__(self) -> int:
        return len(self.strings)

    def __contains__(self, string) -> bool:
        return tuple(string) in self.strings


class _Merger:
    """Union-find over states with arc tables kept on the representatives."""

    def __init__(self, machine: Pfsa):
        self.alphabet = machine.alphabet
        self.parent = list(range(machine.num_states))
        self.trans: Transitions = {s: {} for s in range(machine.num_states)}
        for (state, symbol), arc in machine.arcs.items():
            self.trans[state][symbol] = (arc.dest, arc.count)

    def find(self, state: int) -> int:
        root = state
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[state] != root:
            self.parent[state], state = root, self.parent[state]
        return root

    def states(self) -> List[int]:
        return sorted(self.trans)

    def merge(self, a: int, b: int):
        """Merge two states, then any destinations the merge makes nondeterministic."""
        pending = [(a, b)]
        while pending:
            x, y = pending.pop()
            x, y = self.find(x), self.find(y)
            if x == y:
                continue
            keep, gone = min(x, y), max(x, y)
            self.parent[gone] = keep
            kept_arcs = self.trans[keep]
            for symbol, (dest, count) in self.trans.pop(gone).items():
                if symbol in kept_arcs:
                    other, other_count = kept_arcs[symbol]
                    kept_arcs[symbol] = (other, other_count + count)
                    pending.append((other, dest))
                else:
                    kept_arcs[symbol] = (dest, count)

    def tails(self, k: int) -> Dict[int, FrozenSet[Tuple[str, ...]]]:
        delim = self.alphabet.delimiter
        layer = {s: frozenset([()]) for s in self.trans}
        for _ in range(k):
            nxt = {}
            for state, arcs in self.trans.items():
                strings = {()}
                for symbol, (dest, _) in arcs.items():
                    if symbol == delim:
                        strings.add((delim,))
                    else:
                        strings.update((symbol,) + tail for tail in layer[self.find(dest)])
                nxt[state] = frozenset(strings)
            layer = nxt
        return layer

    def to_pfsa(self) -> Pfsa:
        order = {state: i for i, state in enumerate(self.states())}
        arcs = {}
        for state, table in self.trans.items():
            for symbol, (dest, count) in table.items():
                arcs[(order[state], symbol)] = Arc(order[self.find(dest)], count)
        return Pfsa(self.alphabet, len(order), arcs)


def tail_sets(machine: Pfsa, k: int) -> Dict[int, TailSet]:
    if k < 0:
        raise DomainError(f"k must be non-negative, got {k}")
    tails = _Merger(machine).tails(k)
    return {state: TailSet(state, k, strings) for state, strings in tails.items()}


def k_tails_reduce(machine: Pfsa, k: int = DEFAULT_K) -> Pfsa:
    """
    Merge states with equal k-tails until none remain; counts of merged arcs add up.

    Args:
        machine: A deterministic machine, usually a prefix tree.
        k: Tail length; 0 merges everything into one state.

    Returns:
        A deterministic machine accepting every sentence the input accepts.
    """
    if k < 0:
        raise DomainError(f"k must be non-negative, got {k}")
    merger = _Merger(machine)
    rounds = 0
    while True:
        groups: Dict[FrozenSet[Tuple[str, ...]], List[int]] = {}
        for state, strings in merger.tails(k).items():
            groups.setdefault(strings, []).append(state)
        merged = False
        for members in sorted(groups.values(), key=min):
            if len(members) < 2:
                continue
            for other in members[1:]:
                if merger.find(members[0]) != merger.find(other):
                    merger.merge(members[0], other)
                    merged = True
        if not merged:
            break
        rounds += 1
    result = merger.to_pfsa()
    logger.debug(f"k-tails (k={k}): {machine.num_states} -> {result.num_states} states in {rounds} rounds")
    return result


def k_tails(dataset: Dataset, k: int = DEFAULT_K) -> Pfsa:
    return k_tails_reduce(build_prefix_tree(dataset), k)
