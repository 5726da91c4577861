"""
test_heuristics.py

Tests for reference curves and final-MML estimates.
"""
import pytest

from pfsa.search.heuristics import ReferenceCurve, estimate_final_mml, estimate_from
from pfsa.search.node import build_root, expand_node, select_dangling_arc
from pfsa.utils.errors import DomainError
from tests.utils.factories import ab_aab


def test_curve_merges_repeated_fractions():
    curve = ReferenceCurve.from_points([(0.0, 0.0), (0.5, 4.0), (0.5, 5.0), (1.0, 10.0)])
    assert curve.fractions == (0.0, 0.5, 1.0)
    assert curve.partials == (0.0, 5.0, 10.0)
    assert curve.final == 10.0
    assert curve.at(0.25) == pytest.approx(2.5)


def test_curve_partials_made_monotone():
    curve = ReferenceCurve.from_points([(0.0, 3.0), (0.5, 2.0), (1.0, 6.0)])
    assert curve.partials == (3.0, 3.0, 6.0)


def test_curve_must_end_at_one():
    with pytest.raises(DomainError):
        ReferenceCurve((0.0, 0.5), (1.0, 2.0))
    with pytest.raises(DomainError):
        ReferenceCurve((0.5, 0.5, 1.0), (1.0, 2.0, 3.0))


def test_estimate_with_reference():
    curve = ReferenceCurve((0.0, 0.5, 1.0), (0.0, 5.0, 10.0))
    assert estimate_from(3.0, 0.5, curve) == pytest.approx(8.0)
    assert estimate_from(7.0, 1.0, curve) == pytest.approx(7.0)


def test_linear_estimate_without_reference():
    assert estimate_from(3.0, 0.5) == pytest.approx(6.0)
    assert estimate_from(2.0, 0.0) == pytest.approx(2.0e6)
    assert estimate_from(4.0, 1.0) == pytest.approx(4.0)


def test_estimate_rejects_bad_fraction():
    with pytest.raises(DomainError):
        estimate_from(1.0, 1.5)


def test_curve_from_complete_node():
    node = build_root(ab_aab())
    while not node.complete:
        node = expand_node(node, select_dangling_arc(node))[0]
    curve = ReferenceCurve.from_node(node)
    assert curve.fractions[0] == 0.0
    assert curve.fractions[-1] == 1.0
    assert curve.final == pytest.approx(node.partial_mml)
    for ancestor in node.ancestry():
        assert estimate_final_mml(ancestor, curve) >= ancestor.partial_mml
        assert estimate_final_mml(ancestor, curve) == pytest.approx(curve.final)
