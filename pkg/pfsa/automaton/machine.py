"""
machine.py

Deterministic probabilistic finite state automata (PFSA) with per-arc transition counts.

Key Classes:
- Arc: Destination state and transition count of one (state, symbol) arc.
- Pfsa: Immutable deterministic machine; state 0 is the start state.

Key Functions:
- trace: State path of a sentence, ending with the delimiter transition.
- fit_counts: Refit arc counts to a dataset, dropping untraversed arcs and dead states.
- canonicalize: Breadth-first relabeling so isomorphic machines compare equal.
- is_isomorphic: Structural (or, strict, count-aware) equivalence up to state labels.
- build_null_machine: The 1-state machine explaining a dataset.
"""
from __future__ import annotations

from collections import deque
from dataclasses import InitVar, dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from pfsa.automaton.dataset import Alphabet, Dataset
from pfsa.utils.errors import InvalidMachineError, NotAcceptedError

ArcKey = Tuple[int, str]


@dataclass(frozen=True)
class Arc:
    dest: int
    count: int


@dataclass(frozen=True)
class Pfsa:
    alphabet: Alphabet
    num_states: int
    arcs: Mapping[ArcKey, Arc]
    check: InitVar[bool] = True

    def __post_init__(self, check: bool):
        ordered = dict(sorted(self.arcs.items(), key=lambda kv: (kv[0][0], self.alphabet.index(kv[0][1]))))
        object.__setattr__(self, "arcs", ordered)
        if check:
            self.validate()

    def __hash__(self):
        return hash((self.alphabet, self.num_states, tuple(self.arcs.items())))

    def validate(self):
        if self.num_states < 1:
            raise InvalidMachineError("a PFSA needs at least one state")
        delim = self.alphabet.delimiter
        for (state, symbol), arc in self.arcs.items():
            if not 0 <= state < self.num_states or not 0 <= arc.dest < self.num_states:
                raise InvalidMachineError(f"arc ({state}, {symbol!r}) refers to a state outside 0..{self.num_states - 1}")
            if arc.count < 1:
                raise InvalidMachineError(f"arc ({state}, {symbol!r}) has count {arc.count}; counts must be >= 1")
            if symbol == delim and arc.dest != 0:
                raise InvalidMachineError(f"delimiter arc at state {state} must return to the start state")
        unreachable = set(range(self.num_states)) - self.reachable_states()
        if unreachable:
            raise InvalidMachineError(f"states {sorted(unreachable)} are unreachable from the start state")

    @classmethod
    def from_transitions(cls, alphabet: Alphabet, transitions: Mapping[ArcKey, int],
                         counts: Optional[Mapping[ArcKey, int]] = None) -> "Pfsa":
        """Build a machine from (state, symbol) -> dest, with counts defaulting to 1."""
        counts = counts or {}
        num_states = 1 + max([0] + [s for s, _ in transitions] + list(transitions.values()))
        arcs = {key: Arc(dest, counts.get(key, 1)) for key, dest in transitions.items()}
        return cls(alphabet, num_states, arcs)

    def transition(self, state: int, symbol: str) -> Optional[Arc]:
        return self.arcs.get((state, symbol))

    def arcs_from(self, state: int) -> List[Tuple[str, Arc]]:
        return [(sym, self.arcs[(state, sym)]) for sym in self.alphabet.symbols if (state, sym) in self.arcs]

    def reachable_states(self) -> set:
        adjacency: Dict[int, List[int]] = {}
        for (state, _), arc in self.arcs.items():
            adjacency.setdefault(state, []).append(arc.dest)
        seen = {0}
        queue = deque([0])
        while queue:
            state = queue.popleft()
            for dest in adjacency.get(state, []):
                if dest not in seen:
                    seen.add(dest)
                    queue.append(dest)
        return seen

    @property
    def num_arcs(self) -> int:
        return len(self.arcs)

    @property
    def max_out_degree(self) -> int:
        degree: Dict[int, int] = {}
        for state, _ in self.arcs:
            degree[state] = degree.get(state, 0) + 1
        return max(degree.values(), default=0)

    def structure(self) -> Dict[ArcKey, int]:
        return {key: arc.dest for key, arc in self.arcs.items()}

    def relabel(self, mapping: Mapping[int, int]) -> "Pfsa":
        """Rename states; mapping must send 0 to 0 and be a bijection."""
        arcs = {(mapping[s], sym): Arc(mapping[arc.dest], arc.count) for (s, sym), arc in self.arcs.items()}
        return Pfsa(self.alphabet, self.num_states, arcs)


def trace(machine: Pfsa, sentence: Sequence[str], sentence_index: Optional[int] = None) -> List[int]:
    """
    State path of a sentence: one arc per token, then the delimiter arc.

    Returns:
        List of len(sentence) + 2 states starting and ending at the start state.

    Raises:
        NotAcceptedError: some (state, symbol) has no arc.
    """
    path = [0]
    state = 0
    symbols = list(sentence) + [machine.alphabet.delimiter]
    for position, symbol in enumerate(symbols):
        arc = machine.arcs.get((state, symbol))
        if arc is None:
            raise NotAcceptedError(sentence_index, position, tuple(sentence))
        state = arc.dest
        path.append(state)
    return path


def accepts(machine: Pfsa, sentence: Sequence[str]) -> bool:
    try:
        trace(machine, sentence)
    except NotAcceptedError:
        return False
    return True


def traversal_counts(machine: Pfsa, dataset: Dataset) -> Dict[ArcKey, int]:
    tallies: Dict[ArcKey, int] = {}
    delim = machine.alphabet.delimiter
    for i, sentence in enumerate(dataset.sentences):
        path = trace(machine, sentence, sentence_index=i)
        for state, symbol in zip(path, list(sentence) + [delim]):
            tallies[(state, symbol)] = tallies.get((state, symbol), 0) + 1
    return tallies


def _prune(alphabet: Alphabet, num_states: int, arcs: Dict[ArcKey, Arc]) -> Pfsa:
    reachable = Pfsa(alphabet, num_states, arcs, check=False).reachable_states()
    mapping = {old: new for new, old in enumerate(sorted(reachable))}
    kept = {(mapping[s], sym): Arc(mapping[arc.dest], arc.count)
            for (s, sym), arc in arcs.items() if s in mapping}
    return Pfsa(alphabet, len(mapping), kept)


def fit_counts(machine: Pfsa, dataset: Dataset) -> Pfsa:
    """
    Same structure with every count equal to the traversals over the dataset.
    Arcs never traversed are removed and then unreachable states pruned.

    Raises:
        NotAcceptedError: a sentence of the dataset is not accepted.
    """
    tallies = traversal_counts(machine, dataset)
    arcs = {key: Arc(arc.dest, tallies[key]) for key, arc in machine.arcs.items() if tallies.get(key, 0) > 0}
    return _prune(machine.alphabet, machine.num_states, arcs)


def canonicalize(machine: Pfsa) -> Pfsa:
    """Relabel states in breadth-first discovery order, arcs explored in alphabet order."""
    order = {0: 0}
    queue = deque([0])
    while queue:
        state = queue.popleft()
        for _, arc in machine.arcs_from(state):
            if arc.dest not in order:
                order[arc.dest] = len(order)
                queue.append(arc.dest)
    return machine.relabel(order)


def is_isomorphic(a: Pfsa, b: Pfsa, strict: bool = False) -> bool:
    """True iff the machines match up to state labels; strict also compares counts."""
    if a.num_states != b.num_states or a.num_arcs != b.num_arcs:
        return False
    ca, cb = canonicalize(a), canonicalize(b)
    if strict:
        return ca.arcs == cb.arcs
    return ca.structure() == cb.structure()


def build_null_machine(dataset: Dataset) -> Pfsa:
    """The 1-state machine: every observed symbol loops on the start state."""
    counts: Dict[ArcKey, int] = {}
    for sentence in dataset.sentences:
        for token in sentence:
            counts[(0, token)] = counts.get((0, token), 0) + 1
    counts[(0, dataset.alphabet.delimiter)] = len(dataset.sentences)
    return Pfsa(dataset.alphabet, 1, {key: Arc(0, n) for key, n in counts.items()})

