"""
tree.py

The in-memory construction tree of one search.

Key Classes:
- ConstructionTree: Root, frontier of unexpanded nodes and live-node accounting. Expanded
  nodes keep links to their children; a node left without children is discarded together
  with every ancestor that thereby loses its last child.

Key Functions:
- draw_mu: Pick mu from the tiered-probability table.
- select_node_tiered: Root-to-frontier walk taking the best child with probability mu.
- cull_frontier: Evict the highest-estimate frontier nodes above the node cap.
"""
from __future__ import annotations

import heapq
import logging
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from pfsa.search.node import SearchNode
from pfsa.utils.constants import MML_TOLERANCE
from pfsa.utils.errors import DomainError

logger = logging.getLogger(__name__)


class ConstructionTree:
    def __init__(self, root: SearchNode):
        self.root = root
        self.frontier: Dict[SearchNode, int] = {root: 0}
        self.live = 1
        self._serial = 1
        self._evict_heap: List[Tuple[float, int, SearchNode]] = [(-root.estimate, 0, root)]

    def __len__(self) -> int:
        return self.live

    @property
    def exhausted(self) -> bool:
        return not self.frontier

    def add_children(self, parent: SearchNode, children: Sequence[SearchNode]):
        """Record an expansion; complete children must not be passed in."""
        parent.expanded = True
        self.frontier.pop(parent, None)
        parent.children = list(children)
        for child in parent.children:
            self.frontier[child] = self._serial
            heapq.heappush(self._evict_heap, (-child.estimate, self._serial, child))
            self._serial += 1
        self.live += len(parent.children)
        if not parent.children:
            self.discard(parent)

    def discard(self, node: SearchNode):
        """Remove a node; its parent goes too once it has no children left."""
        while node is not None:
            self.frontier.pop(node, None)
            self.live -= 1
            parent = node.parent
            if parent is None:
                self.root = None
                return
            parent.children.remove(node)
            if parent.children:
                return
            node = parent

    def prune(self, best_mml: float) -> int:
        """Discard frontier nodes whose partial MML reached best_mml."""
        doomed = [n for n in self.frontier if n.partial_mml >= best_mml - MML_TOLERANCE]
        for node in doomed:
            if node in self.frontier:
                self.discard(node)
        return len(doomed)

    def reestimate(self, estimate: Callable[[SearchNode], float]):
        """Recompute every stored estimate, interior nodes included."""
        if self.root is None:
            return
        stack = [self.root]
        while stack:
            node = stack.pop()
            node.estimate = estimate(node)
            stack.extend(node.children)
        self._rebuild_heap()

    def _rebuild_heap(self):
        self._evict_heap = [(-n.estimate, serial, n) for n, serial in self.frontier.items()]
        heapq.heapify(self._evict_heap)

    def pop_highest_estimate(self) -> Optional[SearchNode]:
        while self._evict_heap:
            neg_estimate, serial, node = heapq.heappop(self._evict_heap)
            if self.frontier.get(node) == serial:
                return node
        return None

    def nodes(self) -> Iterable[SearchNode]:
        if self.root is None:
            return
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def compact(self):
        # stale heap entries accumulate as nodes are expanded
        if len(self._evict_heap) > 2 * len(self.frontier) + 1024:
            self._rebuild_heap()


def draw_mu(rng: np.random.Generator, mu_table: Sequence[Tuple[float, float]]) -> float:
    probs = np.array([p for _, p in mu_table], dtype=float)
    index = rng.choice(len(mu_table), p=probs / probs.sum())
    return mu_table[int(index)][0]


def _best_child(children: Sequence[SearchNode], by_partial: bool) -> SearchNode:
    if by_partial:
        return min(children, key=lambda n: n.partial_mml)
    return min(children, key=lambda n: n.estimate)


def select_node_tiered(tree: ConstructionTree, rng: np.random.Generator,
                       mu_table: Sequence[Tuple[float, float]], by_partial: bool = False,
                       mu: Optional[float] = None) -> SearchNode:
    """
    Walk from the root to the first unexpanded node.

    mu is drawn from mu_table once per walk (unless given). At each expanded node the
    child with the lowest estimate (lowest partial MML when by_partial) is taken with
    probability mu, otherwise a child uniformly at random.
    """
    if tree.root is None or tree.exhausted:
        raise DomainError("the construction tree has no unexpanded node")
    if mu is None:
        mu = draw_mu(rng, mu_table)
    node = tree.root
    while node.expanded:
        children = node.children
        if rng.random() < mu:
            node = _best_child(children, by_partial)
        else:
            node = children[int(rng.integers(len(children)))]
    return node


def cull_frontier(tree: ConstructionTree, node_cap: int) -> int:
    """
    Evict unexpanded nodes, highest estimate first, until at most node_cap nodes are live.

    Live nodes include expanded ancestors. An eviction that leaves a parent without
    children removes that parent as well, so live can fall by more than the count returned
    and can end below node_cap.

    Returns:
        Number of frontier nodes evicted; ancestors removed with them are not counted.
    """
    evicted = 0
    while tree.live > node_cap:
        node = tree.pop_highest_estimate()
        if node is None:
            break
        tree.discard(node)
        evicted += 1
    if evicted:
        logger.debug(f"culled {evicted} frontier nodes; {tree.live} live")
    return evicted
