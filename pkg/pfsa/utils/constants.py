"""
constants.py

Centralized constants for the pfsa toolkit.
Includes the tiered-probability table, search defaults and report thresholds.
"""
import math

# Probability of selecting each value of mu before a tiered traversal
DEFAULT_MU_TABLE = [
    (1.00, 0.50),
    (0.80, 0.35),
    (0.50, 0.10),
    (0.00, 0.05),
]

DEFAULT_NODE_CAP = 150_000
MIN_NODE_CAP = 1000

# (estimate-driven selections, partial-driven selections)
DEFAULT_SWITCH_RATIO = (3, 1)

DEFAULT_K = 3
DEFAULT_MIN_PER_ARC = 4
DEFAULT_CRITERION = "wg"

DELIMITER_CANDIDATES = ("$", "<d>", "<eos>")

BITS_PER_NIT = math.log2(math.e)

# MML ratio thresholds
EXACT_RATIO = 1.0
POOR_MATCH_RATIO = 1.2

# Float slack used when comparing message lengths
MML_TOLERANCE = 1e-9

# Fraction floor used by the linear final-MML extrapolation
ESTIMATE_EPSILON = 1e-6

# A single sampled walk longer than this cannot reach a delimiter
MAX_WALK_TRANSITIONS = 1_000_000

ENV_PREFIX = "PFSA_"

# Nodes the exhaustive enumerator may create before giving up
DEFAULT_ENUMERATION_BUDGET = 2_000_000
