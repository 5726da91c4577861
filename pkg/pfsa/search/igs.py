"""
igs.py

Information-guided search over the construction tree.

The search starts from the 1-state machine as its best hypothesis, so every partial
machine whose partial MML already reaches the best MML is discarded with its whole
subtree. Modes differ only in which frontier node is expanded next:
- prove: lowest partial MML first, no culling. When the lowest partial MML on the
  frontier reaches the best MML, no unexplored machine can beat it; with compatibility
  culling off the result is then proven optimal.
- greedy: lowest estimated final MML, switching to lowest partial MML on a fixed ratio
  (3 estimate-driven selections then 1 partial-driven by default).
- stochastic: tiered root-to-frontier walks; the best child is taken with probability mu,
  mu drawn from the tiered table before every walk.

Key Classes:
- InformationGuidedSearch: One search run over one dataset.

Key Functions:
- induce: Run a search and return an InductionResult.
"""
from __future__ import annotations

import heapq
import logging
from typing import List, Optional, Tuple

import numpy as np

from pfsa.automaton.dataset import Dataset
from pfsa.automaton.machine import Pfsa, build_null_machine
from pfsa.mml.criterion import get_criterion
from pfsa.search.heuristics import ReferenceCurve, estimate_final_mml
from pfsa.search.node import SearchNode, build_root, expand_node, extract_pfsa, select_dangling_arc
from pfsa.search.options import InductionResult, SearchOptions
from pfsa.search.tree import ConstructionTree, cull_frontier, select_node_tiered
from pfsa.utils import monitor
from pfsa.utils.constants import MML_TOLERANCE
from pfsa.utils.errors import NoModelFoundError
from pfsa.utils.metrics import SearchMetrics
from pfsa.utils.time_manager import SearchClock

logger = logging.getLogger(__name__)


class InformationGuidedSearch:
    def __init__(self, dataset: Dataset, opts: Optional[SearchOptions] = None,
                 metrics: Optional[SearchMetrics] = None):
        self.dataset = dataset
        self.opts = opts or SearchOptions()
        self.criterion = get_criterion(self.opts.criterion)
        self.metrics = metrics or SearchMetrics()
        self.clock = SearchClock(self.opts.max_nodes, self.opts.timeout_secs)
        self.rng = np.random.default_rng(self.opts.seed)
        self.tree: Optional[ConstructionTree] = None
        self.ref: Optional[ReferenceCurve] = None
        self.best_mml: float = float("inf")
        self.best_node: Optional[SearchNode] = None
        self.best_machine: Optional[Pfsa] = None
        self._serial = 0
        self._selections = 0
        self._by_partial: List[Tuple[float, int, SearchNode]] = []
        self._by_estimate: List[Tuple[float, int, SearchNode]] = []
        self._next_progress = monitor.PROGRESS_EVERY

    # -- bookkeeping ---------------------------------------------------------

    def _estimate(self, node: SearchNode) -> float:
        return estimate_final_mml(node, self.ref)

    def _push(self, node: SearchNode):
        self._serial += 1
        if self.opts.mode in ("prove", "greedy"):
            heapq.heappush(self._by_partial, (node.partial_mml, self._serial, node))
        if self.opts.mode == "greedy":
            heapq.heappush(self._by_estimate, (node.estimate, self._serial, node))

    def _rebuild_estimate_heap(self):
        self._by_estimate = []
        for node in self.tree.frontier:
            self._serial += 1
            self._by_estimate.append((node.estimate, self._serial, node))
        heapq.heapify(self._by_estimate)

    def _pop(self, heap: List[Tuple[float, int, SearchNode]]) -> Optional[SearchNode]:
        while heap:
            _, _, node = heapq.heappop(heap)
            if node in self.tree.frontier:
                return node
        return None

    def _seed(self):
        machine = build_null_machine(self.dataset)
        self.metrics.node_examined()
        self.metrics.complete_found()
        self.best_machine = machine
        self.best_mml = self.criterion.score(machine, self.dataset).total_nits
        monitor.log_new_best(1, self.best_mml, self.metrics, source="seed")

    def _new_best(self, node: SearchNode):
        self.best_node = node
        self.best_mml = node.partial_mml
        self.best_machine = extract_pfsa(node)
        monitor.log_new_best(node.num_states, node.partial_mml, self.metrics)
        self.metrics.nodes_pruned += self.tree.prune(self.best_mml)
        if self.opts.mode != "prove":
            self.ref = ReferenceCurve.from_node(node)
            self.tree.reestimate(self._estimate)
            if self.opts.mode == "greedy":
                self._rebuild_estimate_heap()

    # -- selection -----------------------------------------------------------

    def _switch_to_partial(self) -> bool:
        by_estimate, by_partial = self.opts.heuristic_switch_ratio
        turn = self._selections % (by_estimate + by_partial)
        self._selections += 1
        return turn >= by_estimate

    def _select(self) -> Optional[SearchNode]:
        mode = self.opts.mode
        if mode == "prove":
            return self._pop(self._by_partial)
        if mode == "greedy":
            if self._switch_to_partial():
                return self._pop(self._by_partial)
            return self._pop(self._by_estimate)
        return select_node_tiered(self.tree, self.rng, self.opts.mu_table, by_partial=self._switch_to_partial())

    # -- main loop -----------------------------------------------------------

    def _expand(self, node: SearchNode):
        arc = select_dangling_arc(node, self.opts.expansion_order)
        children = expand_node(node, arc, self.opts, self.best_mml, self.metrics)
        self.metrics.node_created(len(children))
        open_children = []
        for child in children:
            if child.complete:
                # survived the bound check, so it beats the current best
                if child.partial_mml < self.best_mml - MML_TOLERANCE:
                    self._new_best(child)
                continue
            open_children.append(child)
        if node not in self.tree.frontier:
            # a leaf reached through a delimiter arc ties its parent, so the new bound removed it
            return
        # the bound may have tightened since these children were made
        open_children = [c for c in open_children if c.partial_mml < self.best_mml - MML_TOLERANCE]
        for child in open_children:
            child.estimate = self._estimate(child) if self.opts.mode != "prove" else child.partial_mml
        self.tree.add_children(node, open_children)
        for child in open_children:
            self._push(child)
        if self.opts.mode != "prove" and self.tree.live > self.opts.node_cap:
            monitor.log_cull(cull_frontier(self.tree, self.opts.node_cap), self.tree.live, self.metrics)
            self.tree.compact()
        if self.metrics.nodes_examined >= self._next_progress:
            self._next_progress += monitor.PROGRESS_EVERY
            monitor.log_progress(self.tree.live, self.best_mml, self.metrics)

    def run(self) -> InductionResult:
        opts = self.opts
        monitor.log_search_start(opts.mode, len(self.dataset), self.dataset.total_transitions, self.metrics)
        self.clock.start()
        if self.clock.expired(self.metrics.nodes_examined):
            monitor.log_search_end(self.clock.stop_reason, self.metrics)
            raise NoModelFoundError()
        self._seed()

        stop_reason = None
        root = build_root(self.dataset, self.criterion)
        self.metrics.node_examined()
        self.metrics.node_created()
        root.estimate = self._estimate(root)
        self.tree = ConstructionTree(root)
        if root.partial_mml >= self.best_mml - MML_TOLERANCE:
            self.tree.discard(root)
            self.metrics.nodes_pruned += 1
        else:
            self._push(root)

        while not self.tree.exhausted:
            if self.clock.expired(self.metrics.nodes_examined):
                stop_reason = self.clock.stop_reason
                break
            node = self._select()
            if node is None:
                break
            if node.partial_mml >= self.best_mml - MML_TOLERANCE:
                if opts.mode == "prove":
                    # every other frontier node has a partial MML at least this large
                    break
                self.tree.discard(node)
                self.metrics.nodes_pruned += 1
                continue
            self._expand(node)

        monitor.log_search_end(stop_reason, self.metrics)
        machine = self.best_machine
        proven = opts.mode == "prove" and not opts.compat_test and stop_reason is None
        return InductionResult(
            machine=machine,
            mml=self.criterion.score(machine, self.dataset),
            nodes_examined=self.metrics.nodes_examined,
            nodes_created=self.metrics.nodes_created,
            completed_pfsa_count=self.metrics.completed_pfsa,
            proven_optimal=proven,
            elapsed_seconds=self.metrics.elapsed,
            algorithm="igs",
            mode=opts.mode,
            compat_rejected=self.metrics.compat_rejected,
            nodes_pruned=self.metrics.nodes_pruned,
            nodes_culled=self.metrics.nodes_culled,
            best_found_at=self.metrics.best_found_at,
            stop_reason=stop_reason,
        )


def induce(dataset: Dataset, opts: Optional[SearchOptions] = None,
           metrics: Optional[SearchMetrics] = None) -> InductionResult:
    """
    Induce the PFSA of least message length found for a dataset.

    Args:
        dataset: Training sentences.
        opts: Search options (defaults: stochastic mode, compatibility culling on).
        metrics: Optional SearchMetrics filled during the run.

    Returns:
        InductionResult whose machine accepts every training sentence.

    Raises:
        NoModelFoundError: the budget ran out before the 1-state machine was scored.
    """
    return InformationGuidedSearch(dataset, opts, metrics).run()
