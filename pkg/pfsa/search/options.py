"""
options.py

Search configuration and search results.

Classes:
- SearchOptions: Pydantic model of every knob of an induction run (mode, compatibility
  culling, node cap, expansion order, tiered-probability table, heuristic switch, budget).
- InductionResult: Best machine found plus the run counters; YAML round-trippable.

Key Functions:
- parse_mu_table: "1.0:0.50,0.8:0.35" text form used by flags and presets.
- parse_switch_ratio: "3:1" text form used by flags and presets.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Dict, List, Literal, Optional, Tuple

import yaml
from pydantic import BaseModel, ConfigDict, Field, field_validator

from pfsa.automaton.machine import Pfsa
from pfsa.automaton.serialization import machine_from_dict, machine_to_dict
from pfsa.mml.criterion import MmlBreakdown
from pfsa.utils.constants import (
    DEFAULT_CRITERION,
    DEFAULT_MU_TABLE,
    DEFAULT_NODE_CAP,
    DEFAULT_SWITCH_RATIO,
    MIN_NODE_CAP,
)
from pfsa.utils.errors import DomainError, ValidationError
from pfsa.utils.schema_validation import validate_result_document

MODES = ("prove", "greedy", "stochastic")
EXPANSION_ORDERS = ("most-transitions", "fifo")


def parse_mu_table(text: str) -> List[Tuple[float, float]]:
    table = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        try:
            mu, prob = item.split(":")
            table.append((float(mu), float(prob)))
        except ValueError:
            raise DomainError(f"bad mu-table entry {item!r}; expected 'mu:probability'") from None
    if not table:
        raise DomainError("mu table is empty")
    return table


def parse_switch_ratio(text: str) -> Tuple[int, int]:
    try:
        by_estimate, by_partial = (int(part) for part in text.split(":"))
    except ValueError:
        raise DomainError(f"bad switch ratio {text!r}; expected 'estimate:partial', e.g. 3:1") from None
    return by_estimate, by_partial


class SearchOptions(BaseModel):
    """
    Options of one induction run.

    Attributes:
        mode: 'prove' (best-first by partial MML until exhausted), 'greedy' (lowest estimate
            with the heuristic switch) or 'stochastic' (tiered traversal).
        compat_test: Reject children whose arc data and destination state fail the
            distribution compatibility test.
        node_cap: Live construction-tree nodes kept in memory before culling.
        expansion_order: Which dangling arc a node expands.
        mu_table: (mu, probability) pairs for tiered selection.
        heuristic_switch_ratio: (estimate-driven, partial-driven) selections per cycle.
        seed: Seed of every random choice.
        max_nodes: Budget of examined nodes, None for unlimited.
        timeout_secs: Wall-clock budget, None for unlimited.
        criterion: Name of the MML criterion.
    """
    model_config = ConfigDict(extra="forbid")

    mode: Literal["prove", "greedy", "stochastic"] = "stochastic"
    compat_test: bool = True
    node_cap: int = Field(default=DEFAULT_NODE_CAP, ge=MIN_NODE_CAP)
    expansion_order: Literal["most-transitions", "fifo"] = "most-transitions"
    mu_table: List[Tuple[float, float]] = Field(default_factory=lambda: list(DEFAULT_MU_TABLE))
    heuristic_switch_ratio: Tuple[int, int] = DEFAULT_SWITCH_RATIO
    seed: int = 0
    max_nodes: Optional[int] = Field(default=None, ge=0)
    timeout_secs: Optional[float] = Field(default=None, gt=0)
    criterion: str = DEFAULT_CRITERION

    @field_validator("mu_table", mode="before")
    @classmethod
    def _mu_table_text(cls, value):
        if isinstance(value, str):
            return parse_mu_table(value)
        return value

    @field_validator("mu_table")
    @classmethod
    def _mu_table_sums_to_one(cls, value):
        if not value:
            raise ValueError("mu table is empty")
        for mu, prob in value:
            if not 0.0 <= mu <= 1.0:
                raise ValueError(f"mu must lie in [0, 1], got {mu}")
            if prob < 0.0:
                raise ValueError(f"mu probability must be non-negative, got {prob}")
        total = math.fsum(prob for _, prob in value)
        if abs(total - 1.0) > 1e-9:
            raise ValueError(f"mu table probabilities sum to {total}, not 1")
        return value

    @field_validator("heuristic_switch_ratio", mode="before")
    @classmethod
    def _switch_ratio_text(cls, value):
        if isinstance(value, str):
            return parse_switch_ratio(value)
        return value

    @field_validator("heuristic_switch_ratio")
    @classmethod
    def _switch_ratio_positive(cls, value):
        if min(value) < 0 or sum(value) == 0:
            raise ValueError(f"switch ratio needs non-negative parts and a positive total, got {value}")
        return value


@dataclass
class InductionResult:
    machine: Pfsa
    mml: MmlBreakdown
    nodes_examined: int
    nodes_created: int
    completed_pfsa_count: int
    proven_optimal: bool
    elapsed_seconds: float = 0.0
    algorithm: str = "igs"
    mode: Optional[str] = None
    compat_rejected: int = 0
    nodes_pruned: int = 0
    nodes_culled: int = 0
    best_found_at: int = 0
    stop_reason: Optional[str] = None

    def to_dict(self, include_timing: bool = False) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "algorithm": self.algorithm,
            "machine": machine_to_dict(self.machine),
            "mml": self.mml.to_dict(),
            "search": {
                "nodes_examined": self.nodes_examined,
                "nodes_created": self.nodes_created,
                "completed_pfsa": self.completed_pfsa_count,
                "proven_optimal": self.proven_optimal,
                "compat_rejected": self.compat_rejected,
                "nodes_pruned": self.nodes_pruned,
                "nodes_culled": self.nodes_culled,
                "best_found_at": self.best_found_at,
                "stop_reason": self.stop_reason,
            },
        }
        if self.mode is not None:
            data["mode"] = self.mode
        if include_timing:
            data["elapsed_seconds"] = self.elapsed_seconds
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "InductionResult":
        result = validate_result_document(data)
        if not result:
            raise ValidationError(result.errors)
        search = data["search"]
        return cls(
            machine=machine_from_dict(data["machine"]),
            mml=MmlBreakdown.from_dict(data["mml"]),
            nodes_examined=search["nodes_examined"],
            nodes_created=search["nodes_created"],
            completed_pfsa_count=search["completed_pfsa"],
            proven_optimal=search["proven_optimal"],
            elapsed_seconds=float(data.get("elapsed_seconds", 0.0)),
            algorithm=data.get("algorithm", "igs"),
            mode=data.get("mode"),
            compat_rejected=search.get("compat_rejected", 0),
            nodes_pruned=search.get("nodes_pruned", 0),
            nodes_culled=search.get("nodes_culled", 0),
            best_found_at=search.get("best_found_at", 0),
            stop_reason=search.get("stop_reason"),
        )

    def to_yaml(self, include_timing: bool = False) -> str:
        return yaml.safe_dump(self.to_dict(include_timing), default_flow_style=None, sort_keys=False,
                              allow_unicode=True)

    @classmethod
    def from_yaml(cls, text: str) -> "InductionResult":
        return cls.from_dict(yaml.safe_load(text))
