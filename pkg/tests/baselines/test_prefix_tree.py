"""
test_prefix_tree.py

Tests for the prefix-tree automaton.
"""
from pfsa.automaton.machine import fit_counts
from pfsa.baselines.prefix_tree import build_prefix_tree
from tests.utils.factories import ab_aab, random_small_datasets, worked_example


def test_ab_aab_has_five_states():
    tree = build_prefix_tree(ab_aab())
    assert tree.num_states == 5
    assert tree.transition(0, "A").count == 2
    assert tree.transition(0, "A").dest == 1
    assert tree.transition(2, "$").dest == 0
    assert tree.transition(4, "$").count == 1


def test_prefix_tree_accepts_training_data():
    for dataset in [worked_example()] + random_small_datasets(20, seed=3):
        tree = build_prefix_tree(dataset)
        assert fit_counts(tree, dataset) == tree


def test_shared_prefixes_share_states():
    # CAAAB, CAAB, CAB and CB share the C state
    tree = build_prefix_tree(worked_example())
    assert tree.transition(0, "C").count == 4
    assert tree.transition(0, "B").count == 3
