"""
test_harness.py

Tests for MML ratios and the benchmark protocol.
"""
import pytest
from pydantic import ValidationError

from pfsa.automaton.machine import build_null_machine
from pfsa.bench.generator import GeneratorParams, gen_random_pfsa
from pfsa.bench.harness import (
    BenchReport,
    BenchRow,
    classify_ratio,
    mml_ratio,
    run_benchmark,
    run_sample_size_sweep,
)
from pfsa.bench.sampling import sample_until_coverage
from pfsa.search.options import SearchOptions
from pfsa.utils.errors import DomainError
from tests.utils.factories import slow

SMALL = GeneratorParams(num_states=3, num_tokens=2, density=1.5)
QUICK = SearchOptions(mode="greedy", max_nodes=2000)


def test_generating_machine_ratio_is_one():
    machine = gen_random_pfsa(GeneratorParams(num_states=4, seed=1))
    dataset = sample_until_coverage(machine, seed=1)
    assert mml_ratio(machine, machine, dataset) == pytest.approx(1.0)
    assert mml_ratio(build_null_machine(dataset), machine, dataset) > 0


@pytest.mark.parametrize("ratio,isomorphic,verdict", [
    (1.0, False, "exact"),
    (0.97, False, "exact"),
    (1.1, False, "near"),
    (1.2, False, "near"),
    (1.5, False, "fail"),
    (1.5, True, "exact"),
])
def test_classify_ratio(ratio, isomorphic, verdict):
    assert classify_ratio(ratio, isomorphic) == verdict


def test_dnf_rows_carry_no_ratio():
    common = dict(trial=0, algorithm="igs", gen_states=3, gen_arcs=5, sentences=10)
    with pytest.raises(ValidationError):
        BenchRow(dnf=True, ratio=1.0, **common)
    with pytest.raises(ValidationError):
        BenchRow(**common)
    assert BenchRow(dnf=True, error="budget", **common).verdict == "dnf"


def test_benchmark_rows_and_summary():
    report = run_benchmark(2, SMALL, ("igs", "ktails", "null"), QUICK, seed=3)
    assert len(report.rows) == 6
    assert report.algorithms() == ["igs", "ktails", "null"]
    assert [row.trial for row in report.rows] == [0, 0, 0, 1, 1, 1]
    for row in report.rows:
        assert not row.dnf
        assert row.ratio > 0
    assert not any(row.worse_than_null for row in report.rows if row.algorithm == "null")
    summary = report.summary()
    assert sum(summary["igs"].values()) == 2


def test_benchmark_reproducible_across_threads():
    single = run_benchmark(3, SMALL, ("igs",), QUICK, seed=5).to_dict()
    threaded = run_benchmark(3, SMALL, ("igs",), QUICK, seed=5, threads=3).to_dict()
    assert single == threaded
    assert "elapsed" not in single["rows"][0]


def test_timeout_node_counts_are_timing_data():
    common = dict(trial=0, algorithm="igs", gen_states=3, gen_arcs=5, sentences=10, ratio=1.0, elapsed=3.0)
    report = BenchReport(rows=[BenchRow(nodes=24321, stop_reason="timeout", **common),
                               BenchRow(nodes=900, stop_reason="node budget", **common)])
    rows = report.to_dict()["rows"]
    assert "nodes" not in rows[0]
    assert rows[1]["nodes"] == 900
    assert all("elapsed" not in row for row in rows)
    assert report.to_dict(include_timing=True)["rows"][0]["nodes"] == 24321


def test_report_document():
    report = run_benchmark(1, SMALL, ("null",), QUICK, seed=1)
    loaded = BenchReport.from_dict(report.to_dict(include_timing=True))
    assert loaded == report


def test_budget_failure_is_dnf():
    report = run_benchmark(1, SMALL, ("igs", "exhaustive"), SearchOptions(max_nodes=0), seed=2)
    assert all(row.dnf for row in report.rows)
    assert report.summary()["igs"]["dnf"] == 1


def test_benchmark_arguments_checked():
    with pytest.raises(DomainError):
        run_benchmark(0, SMALL)
    with pytest.raises(DomainError):
        run_benchmark(1, SMALL, ("magic",))


def test_sweep_grows_samples():
    report = run_sample_size_sweep(SMALL, (1, 2), QUICK, seed=4)
    assert [row.multiplier for row in report.rows] == [1.0, 2.0]
    assert report.rows[1].sentences >= report.rows[0].sentences
    assert report.gen_states == 3


@slow
def test_recovery_on_small_generators():
    params = GeneratorParams(num_states=5, num_tokens=3)
    report = run_benchmark(25, params, ("igs",), SearchOptions(timeout_secs=60), seed=0,
                           min_per_arc=4, oversample=10)
    good = [row for row in report.rows if not row.dnf and (row.isomorphic or row.ratio <= 1.05)]
    assert len(good) >= 20


@slow
def test_ratio_improves_with_sample_size():
    params = GeneratorParams(num_states=10, num_tokens=3, seed=1)
    opts = SearchOptions(timeout_secs=60)
    exact = 0
    for seed in range(10):
        report = run_sample_size_sweep(params, (1, 2, 4, 8), opts, seed=seed)
        assert report.rows[-1].ratio <= report.rows[0].ratio + 1e-9
        if abs(report.rows[-1].ratio - 1.0) <= 0.01:
            exact += 1
    assert exact >= 7
