"""
node.py

Construction-tree nodes: partial PFSA with fixed arcs and dangling arcs.

A dangling arc is a (state, symbol) pair that the data is known to traverse but whose
destination has not been chosen yet; the sentences traversing it are held as cursors.
Expanding a node fixes one dangling arc to each possible destination, one child per
destination, and pushes the cursors forward through every already-fixed arc until they
reach another undecided arc or the end of their sentence.

Key Classes:
- Cursor: A sentence and the index of the symbol it is about to traverse.
- SearchContext: Encoded dataset and criterion shared by every node of one tree.
- SearchNode: One partial PFSA with its partial MML and fraction of data encoded.

Key Functions:
- build_root: The 1-state node holding every sentence on its first-symbol arc.
- select_dangling_arc: Arc a node expands next ('most-transitions' or 'fifo').
- expand_node: Children of a node for one dangling arc, after compatibility and bound checks.
- extract_pfsa: The machine of a complete node.
"""
from __future__ import annotations

import logging
from typing import TYPE_CHECKING, Dict, List, NamedTuple, Optional, Sequence, Tuple

from pfsa.automaton.dataset import Dataset
from pfsa.automaton.machine import Arc, Pfsa
from pfsa.mml.criterion import Criterion, get_criterion
from pfsa.mml.distribution import counts_ml
from pfsa.utils.constants import MML_TOLERANCE
from pfsa.utils.errors import DomainError

if TYPE_CHECKING:
    from pfsa.search.options import SearchOptions
    from pfsa.utils.metrics import SearchMetrics

logger = logging.getLogger(__name__)

# (state, symbol index)
ArcId = Tuple[int, int]


class Cursor(NamedTuple):
    sentence: int
    position: int


class SearchContext:
    """Per-tree constants: the encoded sentences, alphabet size and criterion."""

    def __init__(self, dataset: Dataset, criterion: Optional[Criterion] = None):
        self.dataset = dataset
        self.alphabet = dataset.alphabet
        self.encoded = dataset.encoded()
        self.num_classes = dataset.alphabet.size
        self.delimiter = dataset.alphabet.delimiter_index
        self.total_transitions = dataset.total_transitions
        self.criterion = criterion or get_criterion()


class SearchNode:
    __slots__ = (
        "context", "parent", "arc", "dest", "depth", "num_states", "fixed", "dangling",
        "state_counts", "state_costs", "nondelim_arcs", "partial_mml", "consumed",
        "estimate", "children", "expanded",
    )

    def __init__(self, context: SearchContext, parent: Optional["SearchNode"], num_states: int,
                 fixed: Dict[ArcId, Tuple[int, int]], dangling: Dict[ArcId, Tuple[Cursor, ...]],
                 state_counts: List[Tuple[int, ...]], state_costs: List[float], nondelim_arcs: int,
                 consumed: int, arc: Optional[ArcId] = None, dest: Optional[int] = None):
        self.context = context
        self.parent = parent
        self.arc = arc
        self.dest = dest
        self.depth = 0 if parent is None else parent.depth + 1
        self.num_states = num_states
        self.fixed = fixed
        self.dangling = dangling
        self.state_counts = state_counts
        self.state_costs = state_costs
        self.nondelim_arcs = nondelim_arcs
        self.consumed = consumed
        crit = context.criterion
        # summed in state order so the value matches Criterion.partial_score exactly
        self.partial_mml = (crit.state_count_cost(num_states) + sum(state_costs)
                            + nondelim_arcs * crit.destination_cost(num_states))
        self.estimate = self.partial_mml
        self.children: List["SearchNode"] = []
        self.expanded = False

    @property
    def num_classes(self) -> int:
        return self.context.num_classes

    @property
    def complete(self) -> bool:
        return not self.dangling

    @property
    def fraction_encoded(self) -> float:
        return self.consumed / self.context.total_transitions

    @property
    def num_arcs(self) -> int:
        return len(self.fixed) + len(self.dangling)

    def ancestry(self) -> List["SearchNode"]:
        """Nodes from the root down to this node."""
        path = []
        node = self
        while node is not None:
            path.append(node)
            node = node.parent
        path.reverse()
        return path

    def fixed_arcs(self) -> Dict[Tuple[int, str], Arc]:
        symbols = self.context.alphabet.symbols
        return {(s, symbols[c]): Arc(dest, count) for (s, c), (dest, count) in self.fixed.items()}

    def dangling_arcs(self) -> Dict[Tuple[int, str], Tuple[Cursor, ...]]:
        symbols = self.context.alphabet.symbols
        return {(s, symbols[c]): cursors for (s, c), cursors in self.dangling.items()}

    def __repr__(self) -> str:
        return (f"SearchNode(states={self.num_states}, fixed={len(self.fixed)}, dangling={len(self.dangling)}, "
                f"partial={self.partial_mml:.4f}, fraction={self.fraction_encoded:.3f})")


def build_root(dataset: Dataset, criterion: Optional[Criterion] = None) -> SearchNode:
    """
    Root of the construction tree: one state, one dangling arc per distinct first symbol.
    """
    context = SearchContext(dataset, criterion)
    dangling: Dict[ArcId, List[Cursor]] = {}
    for sid, sentence in enumerate(context.encoded):
        dangling.setdefault((0, sentence[0]), []).append(Cursor(sid, 0))
    row = [0] * context.num_classes
    for (_, sym), cursors in dangling.items():
        row[sym] = len(cursors)
    nondelim = sum(1 for (_, sym) in dangling if sym != context.delimiter)
    cost = context.criterion.state_cost(row, context.num_classes)
    return SearchNode(context, None, 1, {}, {key: tuple(c) for key, c in dangling.items()},
                      [tuple(row)], [cost], nondelim, 0)


def select_dangling_arc(node: SearchNode, order: str = "most-transitions") -> ArcId:
    """
    Dangling arc to expand: the one with most cursors, ties broken by state id then alphabet
    order; or with order='fifo' the oldest dangling arc.

    Raises:
        DomainError: node is complete.
    """
    if node.complete:
        raise DomainError("a complete node has no dangling arc to expand")
    if order == "fifo":
        return next(iter(node.dangling))
    if order != "most-transitions":
        raise DomainError(f"unknown expansion order {order!r}")
    return min(node.dangling, key=lambda key: (-len(node.dangling[key]), key[0], key[1]))


def _next_symbol_counts(context: SearchContext, cursors: Sequence[Cursor]) -> List[int]:
    row = [0] * context.num_classes
    for sid, pos in cursors:
        row[context.encoded[sid][pos + 1]] += 1
    return row


def _compatible_counts(a: Sequence[int], b: Sequence[int], num_classes: int) -> bool:
    merged = [x + y for x, y in zip(a, b)]
    return counts_ml(merged, num_classes) <= counts_ml(a, num_classes) + counts_ml(b, num_classes)


def _make_child(node: SearchNode, arc: ArcId, dest: int) -> SearchNode:
    context = node.context
    encoded = context.encoded
    delim = context.delimiter
    num_classes = context.num_classes
    cursors = node.dangling[arc]

    num_states = node.num_states + 1 if dest == node.num_states else node.num_states
    fixed = dict(node.fixed)
    fixed[arc] = (dest, len(cursors))
    dangling = dict(node.dangling)
    del dangling[arc]
    nondelim = node.nondelim_arcs
    consumed = node.consumed + len(cursors)

    base_rows = node.state_counts
    rows: Dict[int, List[int]] = {}
    if num_states > node.num_states:
        rows[dest] = [0] * num_classes
    grown: Dict[ArcId, List[Cursor]] = {}

    if arc[1] != delim:
        for sid, pos in cursors:
            sentence = encoded[sid]
            state = dest
            pos += 1
            while True:
                sym = sentence[pos]
                key = (state, sym)
                row = rows.get(state)
                if row is None:
                    row = rows[state] = list(base_rows[state])
                row[sym] += 1
                hit = fixed.get(key)
                if hit is None:
                    pending = grown.get(key)
                    if pending is None:
                        if key not in dangling and sym != delim:
                            nondelim += 1
                        pending = grown[key] = []
                    pending.append(Cursor(sid, pos))
                    break
                fixed[key] = (hit[0], hit[1] + 1)
                consumed += 1
                if sym == delim:
                    break
                state = hit[0]
                pos += 1

    for key, pending in grown.items():
        dangling[key] = dangling.get(key, ()) + tuple(pending)

    state_counts = list(base_rows)
    state_costs = list(node.state_costs)
    if num_states > node.num_states:
        state_counts.append(())
        state_costs.append(0.0)
    crit = context.criterion
    for state, row in rows.items():
        state_counts[state] = tuple(row)
        state_costs[state] = crit.state_cost(row, num_classes)
    return SearchNode(context, node, num_states, fixed, dangling, state_counts, state_costs,
                      nondelim, consumed, arc=arc, dest=dest)


def expand_node(node: SearchNode, arc: ArcId, opts: Optional["SearchOptions"] = None,
                best_mml: Optional[float] = None, metrics: Optional["SearchMetrics"] = None) -> List[SearchNode]:
    """
    Children of a node for one dangling arc, in destination order.

    A delimiter arc has the single destination 0. Any other arc may go to every existing
    state or to a new state. With compatibility testing on, an existing destination is
    dropped when the cursors' next-symbol counts and that state's counts fail the
    distribution compatibility test. Children whose partial MML reaches best_mml are
    dropped as well.

    Args:
        node: Node to expand.
        arc: A dangling arc of node, as (state, symbol index).
        opts: Search options; only compat_test is read.
        best_mml: MML of the best complete machine so far, None for no bound.
        metrics: Optional SearchMetrics receiving examined, compat-rejected and pruned counts.

    Returns:
        The surviving children; may be empty.
    """
    if arc not in node.dangling:
        raise DomainError(f"arc {arc} is not dangling in this node")
    context = node.context
    compat = opts.compat_test if opts is not None else False
    if arc[1] == context.delimiter:
        destinations = [0]
    else:
        destinations = list(range(node.num_states + 1))

    next_counts = None
    if compat and arc[1] != context.delimiter:
        next_counts = _next_symbol_counts(context, node.dangling[arc])

    children = []
    for dest in destinations:
        if next_counts is not None and dest < node.num_states:
            if not _compatible_counts(next_counts, node.state_counts[dest], context.num_classes):
                if metrics is not None:
                    metrics.compat_rejected += 1
                continue
        child = _make_child(node, arc, dest)
        if metrics is not None:
            metrics.node_examined()
            if child.complete:
                metrics.complete_found()
        if best_mml is not None and child.partial_mml >= best_mml - MML_TOLERANCE:
            if metrics is not None:
                metrics.nodes_pruned += 1
            continue
        children.append(child)
    return children


def extract_pfsa(node: SearchNode) -> Pfsa:
    """
    Raises:
        DomainError: node still has dangling arcs.
    """
    if not node.complete:
        raise DomainError("only a complete node describes a PFSA")
    return Pfsa(node.context.alphabet, node.num_states, node.fixed_arcs())
