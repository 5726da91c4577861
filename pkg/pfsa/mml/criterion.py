"""
criterion.py

MML criteria for complete and partial PFSA.

Key Classes:
- MmlBreakdown: Structure and data cost of a machine, in nits (bits derived).
- Criterion: Interface every criterion implements; provides score and partial_score
  from three cost hooks so the search engine can update costs incrementally.
- WallaceGeorgeffCriterion: Default 'wg' criterion.

The default criterion charges, for S states over A classes:
    structure = ln S + ln(S+1)
              + sum over states [ ln A + ln C(A, a_s) + (non-delimiter arcs at s) * ln S ]
    data      = sum over states [ ln((t_s + a_s - 1)! / (a_s - 1)!) - sum ln(n_i!) ]
Delimiter arcs always return to the start state and carry no destination cost.
Both parts only grow when states, arcs or counts are added, so the same formula
evaluated on a partial machine bounds every completion of it from below.

Key Functions:
- get_criterion: Look up a criterion by name.
"""
from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import TYPE_CHECKING, Dict, List, Sequence, Type

from pfsa.automaton.dataset import Dataset
from pfsa.automaton.machine import Pfsa, fit_counts
from pfsa.mml.distribution import counts_data_cost, counts_ml, structure_cost
from pfsa.utils.constants import BITS_PER_NIT, DEFAULT_CRITERION
from pfsa.utils.errors import DomainError

if TYPE_CHECKING:
    from pfsa.search.node import SearchNode


@dataclass(frozen=True)
class MmlBreakdown:
    structure_nits: float
    data_nits: float

    @property
    def total_nits(self) -> float:
        return self.structure_nits + self.data_nits

    @property
    def total_bits(self) -> float:
        return self.total_nits * BITS_PER_NIT

    def format_bits(self) -> str:
        return f"{self.total_bits:.5f}bits"

    def to_dict(self) -> Dict[str, float]:
        return {
            "structure_nits": self.structure_nits,
            "data_nits": self.data_nits,
            "total_nits": self.total_nits,
            "total_bits": self.total_bits,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, float]) -> "MmlBreakdown":
        return cls(float(data["structure_nits"]), float(data["data_nits"]))


def machine_state_counts(machine: Pfsa) -> List[List[int]]:
    """Per-state outgoing counts over the alphabet symbols."""
    symbols = machine.alphabet.symbols
    rows = [[0] * len(symbols) for _ in range(machine.num_states)]
    for (state, symbol), arc in machine.arcs.items():
        rows[state][machine.alphabet.index(symbol)] = arc.count
    return rows


class Criterion(ABC):
    name: str = ""

    @abstractmethod
    def state_count_cost(self, num_states: int) -> float:
        """Cost of stating the number of states."""

    @abstractmethod
    def destination_cost(self, num_states: int) -> float:
        """Cost of stating one non-delimiter arc's destination."""

    @abstractmethod
    def state_cost(self, counts: Sequence[int], num_classes: int) -> float:
        """Cost of one state's present arc classes plus its transition counts."""

    def state_breakdown(self, counts: Sequence[int], num_classes: int) -> tuple:
        # (structure, data) split of state_cost, for reports
        total = self.state_cost(counts, num_classes)
        return total, 0.0

    def score(self, machine: Pfsa, dataset: Dataset, check_counts: bool = True) -> MmlBreakdown:
        """
        Message length of a complete machine whose counts match the dataset.

        Raises:
            DomainError: counts differ from the dataset's traversals.
        """
        if check_counts and fit_counts(machine, dataset) != machine:
            raise DomainError("machine counts are inconsistent with the dataset; refit with fit_counts first")
        num_classes = dataset.alphabet.size
        delim = machine.alphabet.delimiter
        arcs = sum(1 for (_, symbol) in machine.arcs if symbol != delim)
        structure = self.state_count_cost(machine.num_states) + arcs * self.destination_cost(machine.num_states)
        data = 0.0
        for counts in machine_state_counts(machine):
            s_part, d_part = self.state_breakdown(counts, num_classes)
            structure += s_part
            data += d_part
        return MmlBreakdown(structure, data)

    def partial_score(self, node: "SearchNode") -> float:
        """The same measure over the structure and counts present in a partial machine."""
        num_states = node.num_states
        return (self.state_count_cost(num_states)
                + sum(self.state_cost(counts, node.num_classes) for counts in node.state_counts)
                + node.nondelim_arcs * self.destination_cost(num_states))


class WallaceGeorgeffCriterion(Criterion):
    name = "wg"

    def state_count_cost(self, num_states: int) -> float:
        return math.log(num_states) + math.log(num_states + 1)

    def destination_cost(self, num_states: int) -> float:
        return math.log(num_states)

    def state_cost(self, counts: Sequence[int], num_classes: int) -> float:
        return counts_ml(counts, num_classes)

    def state_breakdown(self, counts: Sequence[int], num_classes: int) -> tuple:
        present = sum(1 for n in counts if n > 0)
        if present == 0:
            return 0.0, 0.0
        return structure_cost(num_classes, present), counts_data_cost(counts)


CRITERIA: Dict[str, Type[Criterion]] = {
    WallaceGeorgeffCriterion.name: WallaceGeorgeffCriterion,
}


def get_criterion(name: str = DEFAULT_CRITERION) -> Criterion:
    try:
        return CRITERIA[name]()
    except KeyError:
        raise DomainError(f"unknown criterion {name!r}; choose from {sorted(CRITERIA)}") from None
