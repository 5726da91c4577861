"""
test_report.py

Tests for the plain-text reports.
"""
from pfsa.automaton.machine import build_null_machine
from pfsa.bench.harness import BenchReport, BenchRow
from pfsa.mml.criterion import get_criterion
from pfsa.search.options import InductionResult
from pfsa.utils.report import format_bench_table, format_induction_report, format_machine_table
from tests.utils.factories import ab_aab, two_state_machine


def test_machine_table():
    lines = format_machine_table(two_state_machine()).splitlines()
    assert lines[0] == "There are 2 states with a max of 2 arcs"
    assert lines[1].split() == ["State", "A", "B", "d"]
    assert lines[2].split() == ["0", "[1]", "3", "-", "-"]
    assert lines[3].split() == ["1", "-", "[0]", "1", "[0]", "2"]


def test_induction_report():
    ds = ab_aab()
    machine = build_null_machine(ds)
    result = InductionResult(machine=machine, mml=get_criterion().score(machine, ds), nodes_examined=12,
                             nodes_created=8, completed_pfsa_count=3, proven_optimal=True,
                             elapsed_seconds=1.5, mode="prove")
    text = format_induction_report(result)
    assert "There are 1 states with a max of 3 arcs" in text
    assert f"Automata cost is: {result.mml.total_bits:.5f}bits" in text
    assert "Nodes examined 12, Nodes created 8, Completed PFSA 3" in text
    assert "Search mode prove (proven optimal)" in text
    assert "Elapsed time 0:00:01 (1.500s)" in text
    assert "Elapsed" not in format_induction_report(result, show_elapsed=False)


def test_bench_table_marks_dnf_and_null():
    common = dict(gen_states=3, gen_arcs=5, sentences=12)
    report = BenchReport(rows=[
        BenchRow(trial=0, algorithm="igs", states=3, mml_bits=40.0, ratio=1.0, isomorphic=True, nodes=90,
                 **common),
        BenchRow(trial=0, algorithm="ktails", states=5, mml_bits=60.0, ratio=1.5, isomorphic=False, nodes=0,
                 worse_than_null=True, **common),
        BenchRow(trial=1, algorithm="igs", dnf=True, error="budget", **common),
    ])
    text = format_bench_table(report)
    assert "DNF" in text
    assert "fail *" in text
    assert "igs: exact 1, near 0, fail 0, DNF 1" in text
    assert "* ratio worse than the 1-state machine" in text
