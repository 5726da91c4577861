"""
errors.py

Exception hierarchy for the pfsa toolkit.

Key Classes:
- PfsaError: Root of every error raised deliberately by the library.
- DatasetParseError: Malformed dataset text (carries the character position).
- NotAcceptedError: A sentence has no path through a machine.
- DomainError: Arguments outside the domain of a cost function or option.
- InvalidMachineError: A Pfsa violates one of its structural invariants.
- NoModelFoundError: The search budget ran out before any complete machine existed.
- EnumerationTooLargeError: The exhaustive enumerator exceeded its node budget.
- SamplingError: A random walk could not terminate.
- ValidationError: A YAML document does not match its schema.
"""
from typing import List, Optional


class PfsaError(Exception):
    """Base class for pfsa errors."""


class DatasetParseError(PfsaError):
    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class NotAcceptedError(PfsaError):
    def __init__(self, sentence_index: Optional[int], position: int, sentence=None):
        self.sentence_index = sentence_index
        self.position = position
        self.sentence = sentence
        where = f"sentence {sentence_index}" if sentence_index is not None else "sentence"
        shown = f" {' '.join(sentence)!r}" if sentence is not None else ""
        super().__init__(f"{where}{shown} not accepted: no arc at position {position}")


class DomainError(PfsaError, ValueError):
    pass


class InvalidMachineError(PfsaError, ValueError):
    pass


class NoModelFoundError(PfsaError):
    def __init__(self, message: str = "no model found within the search budget"):
        super().__init__(message)


class EnumerationTooLargeError(PfsaError):
    def __init__(self, nodes: int, leaves: int, budget: int):
        self.nodes = nodes
        self.leaves = leaves
        self.budget = budget
        super().__init__(
            f"construction tree too large to enumerate: budget {budget} nodes exceeded "
            f"({nodes} nodes, {leaves} complete PFSA seen)"
        )


class SamplingError(PfsaError):
    pass


class ValidationError(PfsaError):
    """Exception raised for document validation errors."""

    def __init__(self, errors: List[str]):
        self.errors = list(errors)
        super().__init__("; ".join(self.errors) if self.errors else "invalid document")
