"""
time_manager.py

Provides a SearchClock class for budget handling in pfsa searches.
Combines the node budget and the wall-clock timeout into one stop test.

Key Features:
- Start and read elapsed wall-clock time
- Stop test against an optional node budget and an optional timeout
- Human readable elapsed time in the report style (H:MM:SS)
"""
import time
from typing import Optional


class SearchClock:
    def __init__(self, max_nodes: Optional[int] = None, timeout_secs: Optional[float] = None):
        self.max_nodes = max_nodes
        self.timeout_secs = timeout_secs
        self.started_at: Optional[float] = None
        self.stop_reason: Optional[str] = None

    def start(self):
        self.started_at = time.perf_counter()
        self.stop_reason = None

    @property
    def elapsed(self) -> float:
        if self.started_at is None:
            return 0.0
        return time.perf_counter() - self.started_at

    def expired(self, nodes_examined: int) -> bool:
        if self.max_nodes is not None and nodes_examined >= self.max_nodes:
            self.stop_reason = "node budget"
            return True
        if self.timeout_secs is not None and self.elapsed >= self.timeout_secs:
            self.stop_reason = "timeout"
            return True
        return False


def format_elapsed(seconds: float) -> str:
    whole = int(seconds)
    hours, rest = divmod(whole, 3600)
    minutes, secs = divmod(rest, 60)
    return f"{hours}:{minutes:02d}:{secs:02d}"
