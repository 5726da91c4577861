"""Construction-tree search for PFSA of minimum message length."""
from pfsa.search.heuristics import ReferenceCurve, estimate_final_mml
from pfsa.search.igs import InformationGuidedSearch, induce
from pfsa.search.node import Cursor, SearchNode, build_root, expand_node, extract_pfsa, select_dangling_arc
from pfsa.search.options import InductionResult, SearchOptions
from pfsa.search.tree import ConstructionTree, cull_frontier, draw_mu, select_node_tiered

__all__ = [
    "Cursor", "SearchNode", "build_root", "select_dangling_arc", "expand_node", "extract_pfsa",
    "ReferenceCurve", "estimate_final_mml", "ConstructionTree", "draw_mu", "select_node_tiered",
    "cull_frontier", "SearchOptions", "InductionResult", "InformationGuidedSearch", "induce",
]
