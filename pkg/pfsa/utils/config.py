"""
config.py

Run configuration for the igs command line.

Values resolve in three layers, later layers winning:
1. YAML defaults (configs/yaml/presets/search_defaults.yaml, or a file given with --config)
2. Environment variables PFSA_<KEY>, e.g. PFSA_MODE=prove, PFSA_NODE_CAP=200000
3. Command-line flags

Key Classes:
- RunConfig: Validated configuration of one command.

Key Functions:
- load_defaults: Read the defaults file.
- env_overrides: Collect PFSA_* environment overrides for known keys.
- resolve_config: Merge the three layers into a RunConfig.
"""
import os
from typing import Any, Dict, List, Literal, Mapping, Optional

import yaml
from pydantic import BaseModel, ConfigDict, Field, field_validator

from pfsa.bench.generator import GeneratorParams
from pfsa.search.options import SearchOptions
from pfsa.utils.constants import ENV_PREFIX

CONFIG_ROOT = os.path.join(os.path.dirname(os.path.dirname(os.path.dirname(__file__))), 'configs', 'yaml')
DEFAULTS_FILE = os.path.join(CONFIG_ROOT, 'presets', 'search_defaults.yaml')

COMMANDS = ("induce", "exhaustive", "ktails", "gen", "sample", "bench", "export-dot")
_NULLS = ("", "none", "null")


def load_defaults(path: Optional[str] = None) -> Dict[str, Any]:
    """
    Load the defaults YAML file.
    Args:
        path: Optional override file; the packaged presets file otherwise.
    Returns:
        Dict of default values (empty if the file holds nothing).
    """
    path = path or DEFAULTS_FILE
    if not os.path.exists(path):
        raise FileNotFoundError(f"Config file not found: {path}")
    with open(path, 'r', encoding='utf-8') as f:
        return yaml.safe_load(f) or {}


def env_overrides(keys, environ: Optional[Mapping[str, str]] = None) -> Dict[str, Any]:
    """Values of PFSA_<KEY> for each known key; 'none'/'null' map to None."""
    environ = os.environ if environ is None else environ
    found = {}
    for key in keys:
        name = ENV_PREFIX + key.upper().replace('-', '_')
        if name in environ:
            value = environ[name]
            found[key] = None if value.strip().lower() in _NULLS else value
    return found


class RunConfig(BaseModel):
    """
    Configuration of one command.

    Attributes mirror the command-line flags; see scripts/cli/igs_cli.py for their help.
    """
    model_config = ConfigDict(extra="forbid")

    command: Literal["induce", "exhaustive", "ktails", "gen", "sample", "bench", "export-dot"]
    input: Optional[str] = None
    output: Optional[str] = None
    format: Literal["slash", "lines"] = "slash"
    token_mode: Literal["words", "chars"] = "words"
    mode: Literal["prove", "greedy", "stochastic"] = "stochastic"
    compat: bool = True
    node_cap: int = 150_000
    expansion_order: Literal["most-transitions", "fifo"] = "most-transitions"
    mu_table: str = "1.0:0.50,0.8:0.35,0.5:0.10,0.0:0.05"
    switch_ratio: str = "3:1"
    budget_nodes: Optional[int] = Field(default=None, ge=0)
    timeout_secs: Optional[float] = Field(default=None, gt=0)
    seed: int = 0
    criterion: str = "wg"
    k: int = Field(default=3, ge=0)
    states: int = Field(default=5, ge=1)
    tokens: int = Field(default=3, ge=1)
    density: float = Field(default=2.0, gt=0)
    delimiter_rate: float = Field(default=0.3, ge=0, le=1)
    min_per_arc: int = Field(default=4, ge=1)
    oversample: float = Field(default=1.0, ge=1)
    sentences: Optional[int] = Field(default=None, ge=1)
    trials: int = Field(default=25, ge=1)
    algorithms: List[str] = Field(default_factory=lambda: ["igs"])
    sweep: Optional[str] = None
    report: Literal["text", "yaml", "dot"] = "text"
    threads: int = Field(default=1, ge=1)
    timings: bool = False
    log_level: str = "WARNING"
    log_file: Optional[str] = None
    run_log: Optional[str] = None

    @field_validator("algorithms", mode="before")
    @classmethod
    def _split_algorithms(cls, value):
        if isinstance(value, str):
            return [part.strip() for part in value.split(",") if part.strip()]
        return value

    def search_options(self) -> SearchOptions:
        return SearchOptions(
            mode=self.mode,
            compat_test=self.compat,
            node_cap=self.node_cap,
            expansion_order=self.expansion_order,
            mu_table=self.mu_table,
            heuristic_switch_ratio=self.switch_ratio,
            seed=self.seed,
            max_nodes=self.budget_nodes,
            timeout_secs=self.timeout_secs,
            criterion=self.criterion,
        )

    def generator_params(self) -> GeneratorParams:
        return GeneratorParams(num_states=self.states, num_tokens=self.tokens, density=self.density,
                               delimiter_rate=self.delimiter_rate, seed=self.seed)

    def sweep_multipliers(self) -> List[float]:
        if not self.sweep:
            return []
        return [float(part) for part in self.sweep.split(",") if part.strip()]


def resolve_config(command: str, flags: Mapping[str, Any], environ: Optional[Mapping[str, str]] = None,
                   defaults_path: Optional[str] = None) -> RunConfig:
    """
    Merge defaults, environment and flags (flags set to None count as absent).

    Raises:
        pydantic.ValidationError: a merged value is invalid.
    """
    merged: Dict[str, Any] = dict(load_defaults(defaults_path))
    keys = set(merged) | set(RunConfig.model_fields) - {"command"}
    merged.update(env_overrides(sorted(keys), environ))
    merged.update({key: value for key, value in flags.items() if value is not None})
    merged["command"] = command
    return RunConfig(**merged)
