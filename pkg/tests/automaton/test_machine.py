"""
test_machine.py

Tests for Pfsa structure checks, tracing, count refitting and isomorphism.
"""
import numpy as np
import pytest

from pfsa.automaton.dataset import Alphabet, parse_dataset
from pfsa.automaton.machine import (
    Arc,
    Pfsa,
    accepts,
    build_null_machine,
    canonicalize,
    fit_counts,
    is_isomorphic,
    trace,
    traversal_counts,
)
from pfsa.utils.errors import InvalidMachineError, NotAcceptedError
from pfsa.bench.generator import GeneratorParams, gen_random_pfsa
from pfsa.bench.sampling import sample_until_coverage
from tests.utils.factories import ab_aab, random_small_datasets, two_state_machine


def test_trace_ends_at_start_state():
    machine = two_state_machine()
    assert trace(machine, ["A", "B", "A"]) == [0, 1, 0, 1, 0]
    assert accepts(machine, ["A"])
    assert not accepts(machine, ["B"])


def test_trace_reports_position():
    with pytest.raises(NotAcceptedError) as info:
        trace(two_state_machine(), ["A", "A"], sentence_index=4)
    assert info.value.position == 1
    assert info.value.sentence_index == 4


def test_delimiter_must_return_to_start():
    alphabet = Alphabet(("A",), "$")
    with pytest.raises(InvalidMachineError):
        Pfsa(alphabet, 2, {(0, "A"): Arc(1, 1), (1, "$"): Arc(1, 1)})


def test_unreachable_state_rejected():
    alphabet = Alphabet(("A",), "$")
    with pytest.raises(InvalidMachineError):
        Pfsa(alphabet, 2, {(0, "A"): Arc(0, 1), (0, "$"): Arc(0, 1)})


def test_zero_count_rejected():
    alphabet = Alphabet(("A",), "$")
    with pytest.raises(InvalidMachineError):
        Pfsa(alphabet, 1, {(0, "A"): Arc(0, 0), (0, "$"): Arc(0, 1)})


def test_null_machine_counts():
    machine = build_null_machine(ab_aab())
    assert machine.num_states == 1
    assert machine.transition(0, "A").count == 3
    assert machine.transition(0, "B").count == 2
    assert machine.transition(0, "$").count == 2
    assert machine.max_out_degree == 3


def test_fit_counts_drops_untraversed_arcs():
    machine = two_state_machine()
    fitted = fit_counts(machine, parse_dataset("A/A"))
    assert fitted.num_states == 2
    assert fitted.transition(1, "B") is None
    assert fitted.transition(0, "A").count == 2
    assert traversal_counts(fitted, parse_dataset("A/A"))[(1, "$")] == 2


def test_fit_counts_rejects_unaccepted_data():
    with pytest.raises(NotAcceptedError):
        fit_counts(two_state_machine(), parse_dataset("B"))


def test_isomorphism_ignores_state_labels():
    alphabet = Alphabet(("A", "B"), "$")
    a = Pfsa(alphabet, 3, {(0, "A"): Arc(1, 1), (0, "B"): Arc(2, 1), (1, "$"): Arc(0, 1), (2, "$"): Arc(0, 1)})
    b = a.relabel({0: 0, 1: 2, 2: 1})
    assert b != a
    assert is_isomorphic(a, b)
    assert is_isomorphic(a, b, strict=True)
    assert canonicalize(b) == canonicalize(a)


def test_strict_isomorphism_compares_counts():
    machine = two_state_machine()
    other = Pfsa(machine.alphabet, 2, {key: Arc(arc.dest, arc.count + 1) for key, arc in machine.arcs.items()})
    assert is_isomorphic(machine, other)
    assert not is_isomorphic(machine, other, strict=True)


@pytest.mark.parametrize("seed", range(50))
def test_canonical_form_ignores_state_order(seed):
    machine = gen_random_pfsa(GeneratorParams(num_states=7, num_tokens=3, seed=seed))
    rng = np.random.default_rng(seed)
    shuffled = [0] + (rng.permutation(machine.num_states - 1) + 1).tolist()
    relabeled = machine.relabel(dict(enumerate(shuffled)))
    canonical = canonicalize(machine)
    assert canonicalize(canonical) == canonical
    assert canonicalize(relabeled) == canonical


@pytest.mark.parametrize("seed", range(10))
def test_fitted_counts_cover_every_transition(seed):
    machine = gen_random_pfsa(GeneratorParams(num_states=5, num_tokens=3, seed=seed))
    dataset = sample_until_coverage(machine, seed=seed)
    fitted = fit_counts(machine, dataset)
    assert sum(arc.count for arc in fitted.arcs.values()) == dataset.total_transitions
    assert {key: arc.count for key, arc in fitted.arcs.items()} == traversal_counts(machine, dataset)


def test_null_machine_conserves_counts():
    for dataset in random_small_datasets(20, seed=4):
        fitted = fit_counts(build_null_machine(dataset), dataset)
        assert sum(arc.count for arc in fitted.arcs.values()) == dataset.total_transitions
