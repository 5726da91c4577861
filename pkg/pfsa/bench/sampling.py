"""
sampling.py

Random walks over a PFSA to produce training data.

A walk starts at the start state and picks each arc with probability proportional to its
count until it takes a delimiter arc. The first step never takes the delimiter, so every
sentence holds at least one token.

Key Functions:
- sample_sentence: One walk.
- sample_sentences: A fixed number of walks.
- sample_until_coverage: Walks until every arc was traversed min_per_arc times, then
  optionally more walks up to oversample times as many sentences.
"""
from __future__ import annotations

import logging
from collections import deque
from typing import Dict, List, Optional, Tuple

import numpy as np

from pfsa.automaton.dataset import Dataset
from pfsa.automaton.machine import Pfsa
from pfsa.utils.constants import DEFAULT_MIN_PER_ARC, MAX_WALK_TRANSITIONS
from pfsa.utils.errors import DomainError, SamplingError

logger = logging.getLogger(__name__)

# state -> (symbols, destinations, probabilities)
_Choices = Dict[int, Tuple[List[str], List[int], np.ndarray]]


class _Walker:
    def __init__(self, machine: Pfsa, rng: np.random.Generator):
        self.machine = machine
        self.rng = rng
        self.delimiter = machine.alphabet.delimiter
        self.choices: _Choices = {}
        self.first: _Choices = {}
        for state in range(machine.num_states):
            arcs = machine.arcs_from(state)
            self.choices[state] = self._table(arcs)
            if state == 0:
                self.first[0] = self._table([(s, a) for s, a in arcs if s != self.delimiter])
        if not self.first[0][0]:
            raise SamplingError("the start state has no token arc; sentences would be empty")
        self._check_termination()

    @staticmethod
    def _table(arcs):
        symbols = [symbol for symbol, _ in arcs]
        dests = [arc.dest for _, arc in arcs]
        weights = np.array([arc.count for _, arc in arcs], dtype=float)
        probs = weights / weights.sum() if len(weights) else weights
        return symbols, dests, probs

    def _check_termination(self):
        incoming: Dict[int, List[int]] = {}
        ends = set()
        for (state, symbol), arc in self.machine.arcs.items():
            if symbol == self.delimiter:
                ends.add(state)
            else:
                incoming.setdefault(arc.dest, []).append(state)
        seen = set(ends)
        queue = deque(ends)
        while queue:
            for source in incoming.get(queue.popleft(), []):
                if source not in seen:
                    seen.add(source)
                    queue.append(source)
        stuck = set(range(self.machine.num_states)) - seen
        if stuck:
            raise SamplingError(f"states {sorted(stuck)} cannot reach a delimiter arc; walks would not end")

    def walk(self, tallies: Optional[Dict[Tuple[int, str], int]] = None) -> Tuple[str, ...]:
        tokens: List[str] = []
        state = 0
        table = self.first[0]
        for _ in range(MAX_WALK_TRANSITIONS):
            symbols, dests, probs = table
            i = int(self.rng.choice(len(symbols), p=probs))
            symbol = symbols[i]
            if tallies is not None:
                tallies[(state, symbol)] = tallies.get((state, symbol), 0) + 1
            if symbol == self.delimiter:
                return tuple(tokens)
            tokens.append(symbol)
            state = dests[i]
            table = self.choices[state]
        raise SamplingError(f"walk exceeded {MAX_WALK_TRANSITIONS} transitions without a delimiter")


def sample_sentence(machine: Pfsa, rng: np.random.Generator) -> Tuple[str, ...]:
    return _Walker(machine, rng).walk()


def sample_sentences(machine: Pfsa, count: int, seed: int = 0) -> Dataset:
    if count < 1:
        raise DomainError(f"need at least one sentence, got {count}")
    walker = _Walker(machine, np.random.default_rng(seed))
    return Dataset(machine.alphabet, tuple(walker.walk() for _ in range(count)))


def sample_until_coverage(machine: Pfsa, seed: int = 0, min_per_arc: int = DEFAULT_MIN_PER_ARC,
                          oversample: float = 1.0) -> Dataset:
    """
    Sample sentences until every arc of the machine was traversed at least min_per_arc times.

    Args:
        machine: Generating machine; every state must reach a delimiter arc.
        seed: Seed of the walks.
        min_per_arc: Coverage stopping rule.
        oversample: Final sentence count as a multiple of the count needed for coverage.
            The walks extend the same random stream, so larger factors only append sentences.

    Raises:
        SamplingError: some state cannot reach a delimiter, or a walk ran too long.
    """
    if min_per_arc < 1:
        raise DomainError(f"min_per_arc must be >= 1, got {min_per_arc}")
    if oversample < 1:
        raise DomainError(f"oversample must be >= 1, got {oversample}")
    delim = machine.alphabet.delimiter
    if (0, delim) in machine.arcs and not any(
            arc.dest == 0 for (_, symbol), arc in machine.arcs.items() if symbol != delim):
        raise SamplingError("the start state's delimiter arc can never be traversed; coverage is unreachable")
    walker = _Walker(machine, np.random.default_rng(seed))
    tallies: Dict[Tuple[int, str], int] = {}
    sentences: List[Tuple[str, ...]] = []
    while len(tallies) < machine.num_arcs or min(tallies.values()) < min_per_arc:
        sentences.append(walker.walk(tallies))
    covered = len(sentences)
    target = int(round(covered * oversample))
    while len(sentences) < target:
        sentences.append(walker.walk(tallies))
    logger.debug(f"sampled {len(sentences)} sentences ({covered} for coverage {min_per_arc})")
    return Dataset(machine.alphabet, tuple(sentences))
