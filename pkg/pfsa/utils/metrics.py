"""
metrics.py

Search metrics for pfsa induction runs.
Tracks node counts, pruning, culling and best-machine history for reports and export.

Key Classes:
- SearchMetrics: Counter set filled by the search engine through monitor hooks.

Key Methods:
- node_examined / node_created / complete_found: Count construction-tree events.
- record_best: Track each improvement of the best machine.
- summary: Dict view used by reports and YAML export.
"""

import logging
import time
from typing import Any, Dict, List, Optional

logger = logging.getLogger(__name__)


class SearchMetrics:
    """
    Tracks construction-tree statistics for one induction run.

    Attributes:
        nodes_examined: Nodes whose partial MML was computed
        nodes_created: Nodes that entered the construction tree
        completed_pfsa: Complete PFSA reached (leaves scored)
        compat_rejected: Candidate children dropped by the compatibility test
        nodes_pruned: Nodes discarded because their partial MML reached the best MML
        nodes_culled: Frontier nodes evicted by the memory cap
        best_history: (nodes_examined, total_nits) for each new best machine
    """

    def __init__(self):
        self.nodes_examined = 0
        self.nodes_created = 0
        self.completed_pfsa = 0
        self.compat_rejected = 0
        self.nodes_pruned = 0
        self.nodes_culled = 0
        self.best_history: List[tuple] = []
        self.start_time: Optional[float] = None
        self.end_time: Optional[float] = None

    def start(self):
        """Mark the start of a run."""
        self.start_time = time.perf_counter()
        self.end_time = None

    def stop(self):
        """Mark the end of a run."""
        self.end_time = time.perf_counter()

    @property
    def elapsed(self) -> float:
        if self.start_time is None:
            return 0.0
        end = self.end_time if self.end_time is not None else time.perf_counter()
        return end - self.start_time

    def node_examined(self, n: int = 1):
        self.nodes_examined += n

    def node_created(self, n: int = 1):
        self.nodes_created += n

    def complete_found(self, n: int = 1):
        self.completed_pfsa += n

    def record_best(self, total_nits: float):
        self.best_history.append((self.nodes_examined, total_nits))
        logger.debug(f"best improved to {total_nits:.5f} nits after {self.nodes_examined} nodes")

    @property
    def best_found_at(self) -> int:
        return self.best_history[-1][0] if self.best_history else 0

    def summary(self) -> Dict[str, Any]:
        """Summary of the run counters."""
        return {
            "nodes_examined": self.nodes_examined,
            "nodes_created": self.nodes_created,
            "completed_pfsa": self.completed_pfsa,
            "compat_rejected": self.compat_rejected,
            "nodes_pruned": self.nodes_pruned,
            "nodes_culled": self.nodes_culled,
            "best_found_at": self.best_found_at,
        }

    def serialize(self) -> dict:
        """Serialize metrics for persistence."""
        data = self.summary()
        data["best_history"] = [[n, v] for n, v in self.best_history]
        return data

    def load(self, data: dict):
        """Load metrics from a dict (basic restoration)."""
        self.nodes_examined = int(data.get("nodes_examined", 0))
        self.nodes_created = int(data.get("nodes_created", 0))
        self.completed_pfsa = int(data.get("completed_pfsa", 0))
        self.compat_rejected = int(data.get("compat_rejected", 0))
        self.nodes_pruned = int(data.get("nodes_pruned", 0))
        self.nodes_culled = int(data.get("nodes_culled", 0))
        self.best_history = [tuple(item) for item in data.get("best_history", [])]
