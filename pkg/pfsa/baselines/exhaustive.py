"""
exhaustive.py

Brute-force enumeration of the construction tree, used as the correctness oracle of the
pruned search: every leaf (complete PFSA) is scored, nothing is pruned or culled.

Key Functions:
- iter_complete_nodes: Depth-first walk yielding every leaf of the construction tree.
- enumerate_machines: Every complete PFSA of a dataset, with its message length.
- exhaustive_search: The global minimum over all leaves.
"""
from __future__ import annotations

import logging
from typing import Iterator, List, Optional, Tuple

from pfsa.automaton.dataset import Dataset
from pfsa.automaton.machine import Pfsa
from pfsa.mml.criterion import Criterion, get_criterion
from pfsa.search.node import SearchNode, build_root, expand_node, extract_pfsa, select_dangling_arc
from pfsa.search.options import InductionResult
from pfsa.utils.constants import DEFAULT_ENUMERATION_BUDGET
from pfsa.utils.errors import EnumerationTooLargeError
from pfsa.utils.metrics import SearchMetrics

logger = logging.getLogger(__name__)


def iter_complete_nodes(dataset: Dataset, node_budget: Optional[int] = DEFAULT_ENUMERATION_BUDGET,
                        criterion: Optional[Criterion] = None,
                        metrics: Optional[SearchMetrics] = None) -> Iterator[SearchNode]:
    """
    Yield the leaves of the full construction tree in depth-first, destination order.

    Raises:
        EnumerationTooLargeError: more than node_budget tree nodes would be created.
    """
    metrics = metrics if metrics is not None else SearchMetrics()
    root = build_root(dataset, criterion)
    metrics.node_examined()
    metrics.node_created()
    stack = [root]
    while stack:
        node = stack.pop()
        if node.complete:
            metrics.complete_found()
            yield node
            continue
        children = expand_node(node, select_dangling_arc(node))
        metrics.node_examined(len(children))
        metrics.node_created(len(children))
        if node_budget is not None and metrics.nodes_created > node_budget:
            raise EnumerationTooLargeError(metrics.nodes_created, metrics.completed_pfsa, node_budget)
        stack.extend(reversed(children))


def enumerate_machines(dataset: Dataset, node_budget: Optional[int] = DEFAULT_ENUMERATION_BUDGET,
                       criterion: Optional[Criterion] = None) -> List[Tuple[Pfsa, float]]:
    return [(extract_pfsa(node), node.partial_mml)
            for node in iter_complete_nodes(dataset, node_budget, criterion)]


def exhaustive_search(dataset: Dataset, node_budget: Optional[int] = DEFAULT_ENUMERATION_BUDGET,
                      criterion_name: str = "wg", metrics: Optional[SearchMetrics] = None) -> InductionResult:
    """
    Score every complete PFSA of the construction tree and return the smallest.
    Ties keep the first leaf in depth-first order.

    Raises:
        EnumerationTooLargeError: the tree has more than node_budget nodes.
    """
    criterion = get_criterion(criterion_name)
    metrics = metrics if metrics is not None else SearchMetrics()
    metrics.start()
    best: Optional[SearchNode] = None
    for node in iter_complete_nodes(dataset, node_budget, criterion, metrics):
        if best is None or node.partial_mml < best.partial_mml:
            best = node
            metrics.record_best(node.partial_mml)
    metrics.stop()
    machine = extract_pfsa(best)
    logger.info(f"exhaustive: {metrics.completed_pfsa} complete PFSA in {metrics.nodes_created} nodes")
    return InductionResult(
        machine=machine,
        mml=criterion.score(machine, dataset),
        nodes_examined=metrics.nodes_examined,
        nodes_created=metrics.nodes_created,
        completed_pfsa_count=metrics.completed_pfsa,
        proven_optimal=True,
        elapsed_seconds=metrics.elapsed,
        algorithm="exhaustive",
        best_found_at=metrics.best_found_at,
    )
