"""
test_igs_cli.py

Tests for the igs_cli command-line entry point.
"""
import pytest
import yaml

import igs_cli
from pfsa.automaton.dataset import read_dataset
from tests.utils.factories import WORKED_EXAMPLE

NO_ENV = {}


@pytest.fixture
def dataset_file(tmp_path):
    path = tmp_path / "d.txt"
    path.write_text("AB/AAB\n", encoding="utf-8")
    return str(path)


def test_induce_prove_yaml(dataset_file, capsys):
    code = igs_cli.run(["induce", "--input", dataset_file, "--mode", "prove", "--no-compat", "--report", "yaml"],
                       environ=NO_ENV)
    assert code == 0
    doc = yaml.safe_load(capsys.readouterr().out)
    assert doc["search"]["proven_optimal"] is True
    assert doc["mode"] == "prove"
    assert "elapsed_seconds" not in doc


def test_induce_text_report(tmp_path, capsys):
    path = tmp_path / "d.txt"
    path.write_text(WORKED_EXAMPLE, encoding="utf-8")
    assert igs_cli.run(["induce", "--input", str(path), "--mode", "prove", "--no-compat"], environ=NO_ENV) == 0
    out = capsys.readouterr().out
    assert out.startswith("There are ")
    assert "Automata cost is: " in out
    assert "Nodes examined " in out
    assert "Completed PFSA " in out


def test_zero_budget_exits_2(dataset_file, capsys):
    assert igs_cli.run(["induce", "--input", dataset_file, "--budget-nodes", "0"], environ=NO_ENV) == 2
    assert "no model found" in capsys.readouterr().err


def test_usage_errors_exit_1(dataset_file, tmp_path, capsys):
    assert igs_cli.run([], environ=NO_ENV) == 1
    assert igs_cli.run(["induce", "--bogus"], environ=NO_ENV) == 1
    assert igs_cli.run(["induce"], environ=NO_ENV) == 1
    assert igs_cli.run(["induce", "--input", str(tmp_path / "missing.txt")], environ=NO_ENV) == 1
    assert igs_cli.run(["induce", "--input", dataset_file, "--mu-table", "1.0:0.3"], environ=NO_ENV) == 1
    assert igs_cli.run(["induce", "--input", dataset_file, "--node-cap", "5"], environ=NO_ENV) == 1
    bad = tmp_path / "bad.txt"
    bad.write_text("AB//A", encoding="utf-8")
    assert igs_cli.run(["induce", "--input", str(bad)], environ=NO_ENV) == 1
    assert "usage error" in capsys.readouterr().err


def test_undecodable_dataset_exits_1(tmp_path, capsys):
    bad = tmp_path / "binary.txt"
    bad.write_bytes(b"AB/\xff\xfeA")
    assert igs_cli.run(["induce", "--input", str(bad)], environ=NO_ENV) == 1
    err = capsys.readouterr().err
    assert "malformed dataset" in err
    assert "position 3" in err
    assert "Traceback" not in err


@pytest.mark.parametrize("text", ["arcs: [1, 2", "just a string\n", "num_states: 2\n"])
def test_malformed_machine_document_exits_1(tmp_path, capsys, text):
    bad = tmp_path / "m.yaml"
    bad.write_text(text, encoding="utf-8")
    assert igs_cli.run(["export-dot", "--input", str(bad)], environ=NO_ENV) == 1
    assert igs_cli.run(["sample", "--input", str(bad)], environ=NO_ENV) == 1
    err = capsys.readouterr().err
    assert err.count("malformed document") == 2
    assert "Traceback" not in err


def test_environment_overrides_defaults(dataset_file, capsys):
    env = {"PFSA_MODE": "prove", "PFSA_COMPAT": "false", "PFSA_REPORT": "yaml"}
    assert igs_cli.run(["induce", "--input", dataset_file], environ=env) == 0
    doc = yaml.safe_load(capsys.readouterr().out)
    assert doc["mode"] == "prove"
    assert doc["search"]["proven_optimal"] is True


def test_flags_beat_environment(dataset_file, capsys):
    env = {"PFSA_MODE": "prove", "PFSA_REPORT": "yaml"}
    assert igs_cli.run(["induce", "--input", dataset_file, "--mode", "greedy"], environ=env) == 0
    assert yaml.safe_load(capsys.readouterr().out)["mode"] == "greedy"


def test_gen_is_deterministic(capsys):
    args = ["gen", "--states", "5", "--tokens", "3", "--seed", "7", "--report", "yaml"]
    assert igs_cli.run(args, environ=NO_ENV) == 0
    first = capsys.readouterr().out
    assert igs_cli.run(args, environ=NO_ENV) == 0
    assert capsys.readouterr().out == first
    assert yaml.safe_load(first)["num_states"] == 5


def test_gen_sample_export_chain(tmp_path, capsys):
    machine = str(tmp_path / "m.yaml")
    data = str(tmp_path / "d.txt")
    assert igs_cli.run(["gen", "--states", "3", "--tokens", "2", "--density", "1.5", "--report", "yaml",
                        "--output", machine], environ=NO_ENV) == 0
    assert igs_cli.run(["sample", "--input", machine, "--oversample", "2", "--output", data], environ=NO_ENV) == 0
    assert len(read_dataset(data)) > 0
    assert igs_cli.run(["export-dot", "--input", machine], environ=NO_ENV) == 0
    assert capsys.readouterr().out.startswith("digraph")
    result = str(tmp_path / "r.yaml")
    assert igs_cli.run(["induce", "--input", data, "--mode", "greedy", "--budget-nodes", "500",
                        "--report", "yaml", "--output", result], environ=NO_ENV) == 0
    assert igs_cli.run(["export-dot", "--input", result], environ=NO_ENV) == 0


def test_ktails_and_exhaustive(dataset_file, capsys):
    assert igs_cli.run(["ktails", "--input", dataset_file, "--k", "1", "--report", "yaml"], environ=NO_ENV) == 0
    assert yaml.safe_load(capsys.readouterr().out)["machine"]["num_states"] == 4
    assert igs_cli.run(["exhaustive", "--input", dataset_file, "--report", "yaml"], environ=NO_ENV) == 0
    assert yaml.safe_load(capsys.readouterr().out)["algorithm"] == "exhaustive"


def test_bench_yaml_reproducible(capsys):
    args = ["bench", "--trials", "2", "--states", "3", "--tokens", "2", "--density", "1.5",
            "--algorithms", "igs,null", "--mode", "greedy", "--budget-nodes", "1000", "--report", "yaml"]
    assert igs_cli.run(args, environ=NO_ENV) == 0
    first = capsys.readouterr().out
    assert igs_cli.run(args, environ=NO_ENV) == 0
    assert capsys.readouterr().out == first
    assert len(yaml.safe_load(first)["rows"]) == 4


def test_default_bench_report_is_byte_identical(capsys):
    args = ["bench", "--trials", "1", "--states", "3", "--tokens", "2", "--density", "1.5", "--report", "yaml"]
    assert igs_cli.run(args, environ=NO_ENV) == 0
    first = capsys.readouterr().out
    assert igs_cli.run(args, environ=NO_ENV) == 0
    assert capsys.readouterr().out == first
    row = yaml.safe_load(first)["rows"][0]
    assert row["stop_reason"] != "timeout"


def test_bench_text_table(capsys):
    args = ["bench", "--trials", "1", "--states", "3", "--tokens", "2", "--density", "1.5",
            "--algorithms", "null", "--budget-nodes", "500"]
    assert igs_cli.run(args, environ=NO_ENV) == 0
    out = capsys.readouterr().out
    assert out.startswith("Trial")
    assert "null: exact" in out


def test_run_log_records_the_search(dataset_file, tmp_path):
    root = tmp_path / "outputs"
    args = ["induce", "--input", dataset_file, "--mode", "prove", "--no-compat", "--run-log", str(root)]
    assert igs_cli.run(args, environ=NO_ENV) == 0
    logs = list(root.glob("induce/*/igs.log"))
    assert len(logs) == 1
    text = logs[0].read_text(encoding="utf-8")
    assert "induce started" in text
    assert "Search started: mode=prove" in text
    assert "induce finished" in text


def test_run_log_records_failures(dataset_file, tmp_path):
    root = tmp_path / "outputs"
    args = ["induce", "--input", dataset_file, "--budget-nodes", "0", "--run-log", str(root)]
    assert igs_cli.run(args, environ=NO_ENV) == 2
    text = next(root.glob("induce/*/igs.log")).read_text(encoding="utf-8")
    assert "induce failed: no model found" in text


def test_threads_belong_to_bench(dataset_file):
    assert igs_cli.run(["induce", "--input", dataset_file, "--threads", "2"], environ=NO_ENV) == 1
