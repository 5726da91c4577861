"""
distribution.py

Message lengths of multistate distributions, in nits.

Key Classes:
- ClassDistribution: Counts over A classes known a priori.

Key Functions:
- log_factorial: ln(n!) from a cached log-gamma table.
- structure_cost: Cost of stating a and which a of the A classes are present.
- data_cost: Cost of stating the class counts given the present classes.
- distribution_ml: structure_cost + data_cost.
- compatible: MML test that two distributions may share one source.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np
from scipy.special import gammaln

from pfsa.utils.errors import DomainError

_log_factorials = gammaln(np.arange(1, 4097, dtype=np.float64)).tolist()


def log_factorial(n: int) -> float:
    """ln(n!) for n >= 0; the table grows on demand."""
    global _log_factorials
    if n >= len(_log_factorials):
        size = max(2 * len(_log_factorials), n + 1)
        _log_factorials = gammaln(np.arange(1, size + 1, dtype=np.float64)).tolist()
    return _log_factorials[n]


def log_choose(n: int, k: int) -> float:
    return log_factorial(n) - log_factorial(n - k) - log_factorial(k)


@dataclass(frozen=True)
class ClassDistribution:
    num_classes: int
    counts: Tuple[int, ...]

    def __post_init__(self):
        counts = tuple(int(c) for c in self.counts)
        object.__setattr__(self, "counts", counts)
        if len(counts) != self.num_classes:
            raise DomainError(f"expected {self.num_classes} class counts, got {len(counts)}")
        if any(c < 0 for c in counts):
            raise DomainError(f"class counts must be non-negative: {counts}")

    @classmethod
    def of(cls, counts: Sequence[int], num_classes: Optional[int] = None) -> "ClassDistribution":
        counts = tuple(counts)
        if num_classes is None:
            num_classes = len(counts)
        elif len(counts) < num_classes:
            counts = counts + (0,) * (num_classes - len(counts))
        return cls(num_classes, counts)

    @property
    def present(self) -> int:
        return sum(1 for c in self.counts if c > 0)

    @property
    def total(self) -> int:
        return sum(self.counts)

    def __add__(self, other: "ClassDistribution") -> "ClassDistribution":
        if not isinstance(other, ClassDistribution):
            return NotImplemented
        if other.num_classes != self.num_classes:
            raise DomainError(f"class counts differ: A={self.num_classes} vs A={other.num_classes}")
        return ClassDistribution(self.num_classes, tuple(a + b for a, b in zip(self.counts, other.counts)))


def structure_cost(num_classes: int, present: int) -> float:
    """ln(A) + ln(A! / ((A-a)! a!)) nits."""
    if not 1 <= present <= num_classes:
        raise DomainError(f"need 1 <= a <= A, got a={present}, A={num_classes}")
    return math.log(num_classes) + log_choose(num_classes, present)


def counts_data_cost(counts: Sequence[int]) -> float:
    total = 0
    present = 0
    tail = 0.0
    for n in counts:
        if n > 0:
            total += n
            present += 1
            tail += log_factorial(n)
    if total == 0:
        return 0.0
    return log_factorial(total + present - 1) - log_factorial(present - 1) - tail


def data_cost(dist: ClassDistribution) -> float:
    """ln((t+a-1)! / (a-1)!) - sum ln(n_i!) nits; an empty distribution costs nothing."""
    return counts_data_cost(dist.counts)


def counts_ml(counts: Sequence[int], num_classes: int) -> float:
    present = sum(1 for n in counts if n > 0)
    if present == 0:
        return 0.0
    return structure_cost(num_classes, present) + counts_data_cost(counts)


def distribution_ml(dist: ClassDistribution) -> float:
    return counts_ml(dist.counts, dist.num_classes)


def compatible(d1: ClassDistribution, d2: ClassDistribution) -> bool:
    """True iff the merged distribution is no longer to state than the two apart."""
    if d1.num_classes != d2.num_classes:
        raise DomainError(f"cannot compare distributions over A={d1.num_classes} and A={d2.num_classes}")
    return distribution_ml(d1 + d2) <= distribution_ml(d1) + distribution_ml(d2)
