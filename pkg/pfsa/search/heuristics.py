"""
heuristics.py

Final-MML estimation for partial PFSA.

The partial MML of a node grows roughly linearly with the fraction of data it has
encoded. Once a complete machine is known, the (fraction, partial MML) pairs along its
construction path form a reference curve; a node's final MML is estimated as its partial
MML plus what the reference path still added from the node's fraction onwards.

Key Classes:
- ReferenceCurve: Monotone (fraction, partial MML) points ending at (1.0, best MML).

Key Functions:
- estimate_final_mml: Estimate from a reference curve, or by linear extrapolation.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, List, Optional, Sequence, Tuple

import numpy as np

from pfsa.utils.constants import ESTIMATE_EPSILON
from pfsa.utils.errors import DomainError

if TYPE_CHECKING:
    from pfsa.search.node import SearchNode


@dataclass(frozen=True)
class ReferenceCurve:
    fractions: Tuple[float, ...]
    partials: Tuple[float, ...]

    def __post_init__(self):
        if len(self.fractions) != len(self.partials) or not self.fractions:
            raise DomainError("reference curve needs matching, non-empty point lists")
        if any(b <= a for a, b in zip(self.fractions, self.fractions[1:])):
            raise DomainError("reference curve fractions must be strictly increasing")
        if abs(self.fractions[-1] - 1.0) > 1e-12:
            raise DomainError("reference curve must end at fraction 1.0")

    @classmethod
    def from_points(cls, points: Sequence[Tuple[float, float]]) -> "ReferenceCurve":
        """
        Build a curve from (fraction, partial) points in path order.
        Points repeating a fraction keep the last partial; partials are made non-decreasing.
        """
        fractions: List[float] = []
        partials: List[float] = []
        for fraction, partial in points:
            if partials:
                partial = max(partial, partials[-1])
            if fractions and fraction <= fractions[-1]:
                partials[-1] = partial
                continue
            fractions.append(float(fraction))
            partials.append(float(partial))
        return cls(tuple(fractions), tuple(partials))

    @classmethod
    def from_node(cls, node: "SearchNode") -> "ReferenceCurve":
        """Curve along the ancestry of a complete node."""
        return cls.from_points([(n.fraction_encoded, n.partial_mml) for n in node.ancestry()])

    @property
    def final(self) -> float:
        return self.partials[-1]

    def at(self, fraction: float) -> float:
        return float(np.interp(fraction, self.fractions, self.partials))


def estimate_final_mml(node: "SearchNode", ref: Optional[ReferenceCurve] = None) -> float:
    """
    Estimated final MML of a node, never below its partial MML.

    With a reference curve: partial + (ref.final - ref(fraction)).
    Without one: partial / max(fraction, 1e-6).
    """
    return estimate_from(node.partial_mml, node.fraction_encoded, ref)


def estimate_from(partial: float, fraction: float, ref: Optional[ReferenceCurve] = None) -> float:
    if not 0.0 <= fraction <= 1.0 + 1e-12:
        raise DomainError(f"fraction encoded must lie in [0, 1], got {fraction}")
    if ref is not None:
        estimate = partial + (ref.final - ref.at(fraction))
    else:
        estimate = partial / max(fraction, ESTIMATE_EPSILON)
    return max(estimate, partial)
