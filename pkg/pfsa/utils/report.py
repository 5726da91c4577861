"""
report.py

Plain-text reports for induction results and benchmarks.

An induction report reads:

    There are 3 states with a max of 2 arcs
    State  A      B      C      d
    0      [1] 4  [2] 3  -      -
    ...
    Automata cost is: 57.12345bits
    Nodes examined 120, Nodes created 80, Completed PFSA 5
    Elapsed time 0:00:01 (1.234s)

Each cell holds the destination in brackets followed by the transition count; '-' marks
a missing arc and 'd' is the delimiter column.

Key Functions:
- format_machine_table: Header line and state/arc table of a machine.
- format_induction_report: Full report of an InductionResult.
- format_bench_table / format_sweep_table: Aligned benchmark tables.
"""
from typing import List, Sequence

from pfsa.automaton.machine import Pfsa
from pfsa.bench.harness import BenchReport, SweepReport
from pfsa.search.options import InductionResult
from pfsa.utils.time_manager import format_elapsed


def _align(rows: Sequence[Sequence[str]]) -> List[str]:
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    return ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]


def format_machine_table(machine: Pfsa) -> str:
    alphabet = machine.alphabet
    lines = [f"There are {machine.num_states} states with a max of {machine.max_out_degree} arcs"]
    rows = [["State"] + list(alphabet.tokens) + ["d"]]
    for state in range(machine.num_states):
        row = [str(state)]
        for symbol in alphabet.symbols:
            arc = machine.transition(state, symbol)
            row.append("-" if arc is None else f"[{arc.dest}] {arc.count}")
        rows.append(row)
    lines.extend(_align(rows))
    return "\n".join(lines)


def format_induction_report(result: InductionResult, show_elapsed: bool = True) -> str:
    lines = [format_machine_table(result.machine)]
    lines.append(f"Automata cost is: {result.mml.format_bits()}")
    lines.append(f"Nodes examined {result.nodes_examined}, Nodes created {result.nodes_created}, "
                 f"Completed PFSA {result.completed_pfsa_count}")
    if result.mode is not None:
        note = "proven optimal" if result.proven_optimal else (result.stop_reason or "tree exhausted")
        lines.append(f"Search mode {result.mode} ({note})")
    if show_elapsed:
        lines.append(f"Elapsed time {format_elapsed(result.elapsed_seconds)} ({result.elapsed_seconds:.3f}s)")
    return "\n".join(lines) + "\n"


def format_bench_table(report: BenchReport, include_timing: bool = False) -> str:
    header = ["Trial", "States", "Arcs", "Sentences", "Algorithm", "Induced", "Bits", "Ratio", "Iso", "Nodes"]
    if include_timing:
        header.append("Time")
    header.append("Note")
    rows = [header]
    for row in report.rows:
        if row.dnf:
            cells = [str(row.trial), str(row.gen_states), str(row.gen_arcs), str(row.sentences), row.algorithm,
                     "-", "-", "DNF", "-", "-"]
        else:
            cells = [str(row.trial), str(row.gen_states), str(row.gen_arcs), str(row.sentences), row.algorithm,
                     str(row.states), f"{row.mml_bits:.1f}", f"{row.ratio:.3f}", "yes" if row.isomorphic else "no",
                     str(row.nodes)]
        if include_timing:
            cells.append(f"{row.elapsed:.2f}s" if row.elapsed is not None else "-")
        note = row.verdict
        if row.worse_than_null:
            note += " *"
        cells.append(note)
        rows.append(cells)
    lines = _align(rows)
    for algorithm, tally in report.summary().items():
        lines.append(f"{algorithm}: exact {tally['exact']}, near {tally['near']}, "
                     f"fail {tally['fail']}, DNF {tally['dnf']}")
    if any(row.worse_than_null for row in report.rows):
        lines.append("* ratio worse than the 1-state machine")
    return "\n".join(lines) + "\n"


def format_sweep_table(report: SweepReport, include_timing: bool = False) -> str:
    header = ["Sentences", "Tokens", "States", "MML", "Ratio"]
    if include_timing:
        header.append("Time")
    rows = [header]
    for row in report.rows:
        cells = [str(row.sentences), str(row.tokens), str(row.states), f"{row.mml_bits:.1f}", f"{row.ratio:.3f}"]
        if include_timing:
            cells.append(f"{row.elapsed:.2f}s" if row.elapsed is not None else "-")
        rows.append(cells)
    lines = [f"Generating machine: {report.gen_states} states, {report.gen_arcs} arcs"]
    lines.extend(_align(rows))
    return "\n".join(lines) + "\n"
