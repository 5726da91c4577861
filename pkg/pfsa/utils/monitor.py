"""
monitor.py

Provides hooks for monitoring construction-tree searches and benchmark trials.

Key Functions:
- log_search_start / log_search_end: Bracket one induction run.
- log_new_best: A better complete machine was found.
- log_cull: Frontier nodes were evicted by the node cap.
- log_progress: Periodic counters at debug level.
- log_trial: One benchmark trial finished.

Each hook logs through the module logger and, when given a SearchMetrics instance,
records the event there as well.
"""
import logging
from typing import TYPE_CHECKING, Any, Dict, Optional

if TYPE_CHECKING:
    from pfsa.utils.metrics import SearchMetrics

logger = logging.getLogger(__name__)

PROGRESS_EVERY = 10_000


def log_search_start(mode: str, sentences: int, transitions: int,
                     metrics: Optional['SearchMetrics'] = None):
    logger.info(f"Search started: mode={mode}, {sentences} sentences, {transitions} transitions")
    if metrics is not None:
        metrics.start()


def log_new_best(num_states: int, total_nits: float, metrics: Optional['SearchMetrics'] = None,
                 source: str = "tree"):
    """
    Log a new best machine.

    Args:
        num_states: States of the new best machine
        total_nits: Its message length
        metrics: Optional SearchMetrics instance to record to
        source: 'seed' for the 1-state machine, 'tree' for a construction-tree leaf
    """
    if metrics is not None:
        metrics.record_best(total_nits)
        at = metrics.nodes_examined
    else:
        at = "?"
    logger.info(f"New best ({source}): {num_states} states, {total_nits:.5f} nits after {at} nodes")


def log_cull(evicted: int, live: int, metrics: Optional['SearchMetrics'] = None):
    if evicted:
        logger.debug(f"Culled {evicted} frontier nodes, {live} live")
    if metrics is not None:
        metrics.nodes_culled += evicted


def log_progress(live: int, best_nits: float, metrics: 'SearchMetrics'):
    logger.debug(f"examined={metrics.nodes_examined} created={metrics.nodes_created} "
                 f"live={live} best={best_nits:.5f}")


def log_search_end(stop_reason: Optional[str], metrics: Optional['SearchMetrics'] = None):
    if metrics is not None:
        metrics.stop()
        logger.info(f"Search ended ({stop_reason or 'tree exhausted'}): {metrics.summary()}")
    else:
        logger.info(f"Search ended ({stop_reason or 'tree exhausted'})")


def log_trial(trial: int, algorithm: str, details: Optional[Dict[str, Any]] = None):
    detail_str = f" ({details})" if details else ""
    logger.info(f"[Trial {trial}] {algorithm} finished{detail_str}")
