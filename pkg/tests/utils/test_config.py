"""
test_config.py

Tests for layered run configuration in pfsa.utils.config.
"""
import pytest
from pydantic import ValidationError

from pfsa.utils.config import env_overrides, load_defaults, resolve_config


def test_packaged_defaults():
    defaults = load_defaults()
    assert defaults["mode"] == "stochastic"
    assert defaults["mu_table"] == "1.0:0.50,0.8:0.35,0.5:0.10,0.0:0.05"
    cfg = resolve_config("induce", {}, environ={})
    assert cfg.node_cap == 150_000
    assert cfg.timeout_secs is None
    assert cfg.budget_nodes == 200_000
    assert cfg.algorithms == ["igs"]


def test_environment_then_flags():
    env = {"PFSA_MODE": "greedy", "PFSA_NODE_CAP": "2000", "PFSA_SEED": "5"}
    cfg = resolve_config("induce", {"seed": 9, "mode": None}, environ=env)
    assert cfg.mode == "greedy"
    assert cfg.node_cap == 2000
    assert cfg.seed == 9


def test_null_words_clear_values():
    assert env_overrides(["timeout_secs"], {"PFSA_TIMEOUT_SECS": "none"}) == {"timeout_secs": None}
    cfg = resolve_config("induce", {}, environ={"PFSA_TIMEOUT_SECS": "null"})
    assert cfg.timeout_secs is None


def test_options_built_from_config():
    cfg = resolve_config("bench", {"algorithms": "igs, ktails", "switch_ratio": "2:2", "sweep": "1,4"}, environ={})
    opts = cfg.search_options()
    assert opts.heuristic_switch_ratio == (2, 2)
    assert opts.max_nodes == 200_000
    assert opts.timeout_secs is None
    assert cfg.algorithms == ["igs", "ktails"]
    assert cfg.sweep_multipliers() == [1.0, 4.0]
    assert cfg.generator_params().num_states == 5


def test_config_file_replaces_defaults(tmp_path):
    path = tmp_path / "custom.yaml"
    path.write_text("mode: prove\ncompat: false\n", encoding="utf-8")
    cfg = resolve_config("induce", {}, environ={}, defaults_path=str(path))
    assert cfg.mode == "prove"
    assert not cfg.compat
    assert cfg.timeout_secs is None


def test_invalid_values_rejected(tmp_path):
    with pytest.raises(ValidationError):
        resolve_config("induce", {"mode": "fast"}, environ={})
    with pytest.raises(ValidationError):
        resolve_config("induce", {}, environ={"PFSA_DELIMITER_RATE": "2"})
    with pytest.raises(FileNotFoundError):
        load_defaults(str(tmp_path / "none.yaml"))
