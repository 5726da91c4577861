"""
generator.py

Random PFSA for benchmark trials.

Construction (deterministic in the seed):
1. A random spanning arborescence rooted at the start state makes every state reachable.
2. Extra token arcs with random destinations are added until the mean number of token
   arcs per state reaches the target density.
3. Delimiter arcs (always back to the start state) are attached to states without token
   arcs, to each other state with probability delimiter_rate, and then to any state that
   still cannot reach a delimiter, so that random walks always terminate.
The start state carries a delimiter arc only in 1-state machines. Every arc count is 1;
counts serve as sampling weights, so a state chooses uniformly among its arcs.

Key Classes:
- GeneratorParams: States, tokens, density, delimiter rate and seed.

Key Functions:
- gen_random_pfsa: Build the machine.
- token_names: Token labels used by generated machines (A, B, ..., Z, A1, ...).
"""
from __future__ import annotations

import logging
from collections import deque
from typing import Dict, List, Set, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from pfsa.automaton.dataset import Alphabet
from pfsa.automaton.machine import Arc, Pfsa
from pfsa.utils.errors import DomainError

logger = logging.getLogger(__name__)


class GeneratorParams(BaseModel):
    """
    Attributes:
        num_states: States of the generated machine.
        num_tokens: Alphabet size, not counting the delimiter.
        density: Target mean number of token arcs per state.
        delimiter_rate: Chance that a state with token arcs also gets a delimiter arc.
        seed: Seed of the construction.
    """
    model_config = ConfigDict(extra="forbid", frozen=True)

    num_states: int = Field(default=5, ge=1)
    num_tokens: int = Field(default=3, ge=1)
    density: float = Field(default=2.0, gt=0)
    delimiter_rate: float = Field(default=0.3, ge=0.0, le=1.0)
    seed: int = 0


def token_names(count: int) -> List[str]:
    letters = [chr(ord("A") + i) for i in range(26)]
    return [letters[i % 26] + (str(i // 26) if i >= 26 else "") for i in range(count)]


def _can_reach_delimiter(token_arcs: Dict[Tuple[int, int], int], ends: Set[int]) -> Set[int]:
    incoming: Dict[int, List[int]] = {}
    for (state, _), dest in token_arcs.items():
        incoming.setdefault(dest, []).append(state)
    seen = set(ends)
    queue = deque(ends)
    while queue:
        state = queue.popleft()
        for source in incoming.get(state, []):
            if source not in seen:
                seen.add(source)
                queue.append(source)
    return seen


def gen_random_pfsa(params: GeneratorParams) -> Pfsa:
    """
    Raises:
        DomainError: the density cannot be met with this many tokens.
    """
    S, T = params.num_states, params.num_tokens
    if params.density > T:
        raise DomainError(f"density {params.density} exceeds the {T} token arcs a state can hold")
    rng = np.random.default_rng(params.seed)
    alphabet = Alphabet(tuple(token_names(T)))
    tokens = alphabet.tokens

    token_arcs: Dict[Tuple[int, int], int] = {}
    for state in range(1, S):
        parents = [p for p in range(state) if any((p, t) not in token_arcs for t in range(T))]
        parent = parents[int(rng.integers(len(parents)))]
        free = [t for t in range(T) if (parent, t) not in token_arcs]
        token_arcs[(parent, free[int(rng.integers(len(free)))])] = state

    target = min(S * T, max(int(round(params.density * S)), S - 1, 1))
    while len(token_arcs) < target:
        free_slots = [(s, t) for s in range(S) for t in range(T) if (s, t) not in token_arcs]
        slot = free_slots[int(rng.integers(len(free_slots)))]
        token_arcs[slot] = int(rng.integers(S))

    has_tokens = {s for s, _ in token_arcs}
    if S == 1:
        ends = {0}
    else:
        ends = {s for s in range(1, S) if s not in has_tokens}
        for state in range(1, S):
            if state not in ends and rng.random() < params.delimiter_rate:
                ends.add(state)
        reaching = _can_reach_delimiter(token_arcs, ends)
        for state in range(S - 1, 0, -1):
            if state not in reaching:
                ends.add(state)
                reaching = _can_reach_delimiter(token_arcs, ends)

    arcs = {(s, tokens[t]): Arc(dest, 1) for (s, t), dest in token_arcs.items()}
    for state in ends:
        arcs[(state, alphabet.delimiter)] = Arc(0, 1)
    machine = Pfsa(alphabet, S, arcs)
    logger.debug(f"generated PFSA: {S} states, {machine.num_arcs} arcs (seed {params.seed})")
    return machine
