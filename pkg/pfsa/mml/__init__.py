"""Multistate-distribution message lengths and PFSA criteria."""
from pfsa.mml.criterion import CRITERIA, Criterion, MmlBreakdown, WallaceGeorgeffCriterion, get_criterion
from pfsa.mml.distribution import (
    ClassDistribution,
    compatible,
    data_cost,
    distribution_ml,
    log_factorial,
    structure_cost,
)

__all__ = [
    "ClassDistribution", "structure_cost", "data_cost", "distribution_ml", "compatible", "log_factorial",
    "MmlBreakdown", "Criterion", "WallaceGeorgeffCriterion", "CRITERIA", "get_criterion",
]
