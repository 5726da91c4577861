"""
test_exhaustive.py

Tests for the exhaustive construction-tree enumerator.
"""
import pytest

from pfsa.automaton.dataset import parse_dataset
from pfsa.baselines.exhaustive import enumerate_machines, exhaustive_search, iter_complete_nodes
from pfsa.mml.criterion import get_criterion
from pfsa.utils.errors import EnumerationTooLargeError
from pfsa.utils.metrics import SearchMetrics
from tests.utils.factories import worked_example


def test_single_token_has_two_machines():
    machines = enumerate_machines(parse_dataset("A"))
    assert sorted(m.num_states for m, _ in machines) == [1, 2]
    result = exhaustive_search(parse_dataset("A"))
    assert result.machine.num_states == 1
    assert result.proven_optimal
    assert result.completed_pfsa_count == 2
    assert result.algorithm == "exhaustive"


def test_scores_match_criterion():
    dataset = parse_dataset("AB/B")
    crit = get_criterion()
    for machine, nits in enumerate_machines(dataset):
        assert nits == pytest.approx(crit.score(machine, dataset).total_nits)


def test_minimum_is_first_smallest_leaf():
    dataset = parse_dataset("AB/AAB")
    scored = enumerate_machines(dataset)
    best = min(nits for _, nits in scored)
    first = next(m for m, nits in scored if nits == best)
    result = exhaustive_search(dataset)
    assert result.mml.total_nits == pytest.approx(best)
    assert result.machine == first


def test_counts_nodes():
    metrics = SearchMetrics()
    leaves = list(iter_complete_nodes(parse_dataset("AB"), metrics=metrics))
    assert len(leaves) == 5
    assert metrics.completed_pfsa == 5
    assert metrics.nodes_created == metrics.nodes_examined
    # root, A -> {0, 1}, then B -> {0, 1} and {0, 1, 2}, then one delimiter child per B-node
    assert metrics.nodes_created == 1 + 2 + 5 + 5


def test_budget_exceeded():
    with pytest.raises(EnumerationTooLargeError) as info:
        exhaustive_search(worked_example(), node_budget=1000)
    assert info.value.budget == 1000
    assert info.value.nodes > 1000
