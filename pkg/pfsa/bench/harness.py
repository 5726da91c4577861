"""
harness.py

Benchmark protocol: generate a random machine, sample data from it to arc coverage,
induce a machine with each algorithm and compare message lengths on the same data.

Key Classes:
- BenchRow / BenchReport: Per-trial, per-algorithm results and their summary.
- SweepRow / SweepReport: Results of one machine at increasing sample sizes.

Key Functions:
- mml_ratio: Induced MML divided by generating MML, both refit to the data.
- run_benchmark: Independent seeded trials, optionally on worker threads.
- run_sample_size_sweep: One machine, growing coverage multiples.
"""
from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
import yaml
from pydantic import BaseModel, ConfigDict, Field, model_validator

from pfsa.automaton.dataset import Dataset
from pfsa.automaton.machine import Pfsa, build_null_machine, fit_counts, is_isomorphic
from pfsa.baselines.exhaustive import exhaustive_search
from pfsa.baselines.ktails import k_tails
from pfsa.bench.generator import GeneratorParams, gen_random_pfsa
from pfsa.bench.sampling import sample_until_coverage
from pfsa.mml.criterion import get_criterion
from pfsa.search.igs import induce
from pfsa.search.options import SearchOptions
from pfsa.utils import monitor
from pfsa.utils.constants import (
    BITS_PER_NIT,
    DEFAULT_CRITERION,
    DEFAULT_ENUMERATION_BUDGET,
    DEFAULT_K,
    DEFAULT_MIN_PER_ARC,
    EXACT_RATIO,
    MML_TOLERANCE,
    POOR_MATCH_RATIO,
)
from pfsa.utils.errors import DomainError, PfsaError

logger = logging.getLogger(__name__)

ALGORITHMS = ("igs", "ktails", "null", "exhaustive")


def mml_ratio(induced: Pfsa, generating: Pfsa, dataset: Dataset, criterion: str = DEFAULT_CRITERION) -> float:
    """
    Raises:
        NotAcceptedError: either machine rejects a sentence of the dataset.
    """
    crit = get_criterion(criterion)
    numerator = crit.score(fit_counts(induced, dataset), dataset).total_nits
    denominator = crit.score(fit_counts(generating, dataset), dataset).total_nits
    return numerator / denominator


def classify_ratio(ratio: float, isomorphic: bool = False) -> str:
    if isomorphic or ratio <= EXACT_RATIO + MML_TOLERANCE:
        return "exact"
    if ratio <= POOR_MATCH_RATIO:
        return "near"
    return "fail"


class BenchRow(BaseModel):
    model_config = ConfigDict(extra="forbid")

    trial: int
    algorithm: str
    gen_states: int
    gen_arcs: int
    sentences: int
    states: Optional[int] = None
    mml_bits: Optional[float] = None
    ratio: Optional[float] = Field(default=None, gt=0)
    isomorphic: Optional[bool] = None
    nodes: Optional[int] = None
    stop_reason: Optional[str] = None
    elapsed: Optional[float] = None
    dnf: bool = False
    worse_than_null: bool = False
    error: Optional[str] = None

    @model_validator(mode="after")
    def _dnf_rows_carry_no_ratio(self):
        if self.dnf and self.ratio is not None:
            raise ValueError("a DNF row carries no ratio")
        if not self.dnf and self.ratio is None:
            raise ValueError("a finished row needs a ratio")
        return self

    @property
    def verdict(self) -> str:
        if self.dnf:
            return "dnf"
        return classify_ratio(self.ratio, bool(self.isomorphic))


class BenchReport(BaseModel):
    model_config = ConfigDict(extra="forbid")

    params: Dict[str, Any] = Field(default_factory=dict)
    rows: List[BenchRow] = Field(default_factory=list)

    def algorithms(self) -> List[str]:
        seen: List[str] = []
        for row in self.rows:
            if row.algorithm not in seen:
                seen.append(row.algorithm)
        return seen

    def summary(self) -> Dict[str, Dict[str, int]]:
        counts: Dict[str, Dict[str, int]] = {}
        for row in self.rows:
            tally = counts.setdefault(row.algorithm, {"exact": 0, "near": 0, "fail": 0, "dnf": 0})
            tally[row.verdict] += 1
        return counts

    def to_dict(self, include_timing: bool = False) -> Dict[str, Any]:
        data = self.model_dump()
        if not include_timing:
            for row in data["rows"]:
                del row["elapsed"]
                # a search cut off by the wall clock examined a timing-dependent node count
                if row["stop_reason"] == "timeout":
                    del row["nodes"]
        data["summary"] = self.summary()
        return data

    def to_yaml(self, include_timing: bool = False) -> str:
        return yaml.safe_dump(self.to_dict(include_timing), default_flow_style=None, sort_keys=False)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "BenchReport":
        data = {key: value for key, value in data.items() if key != "summary"}
        return cls.model_validate(data)


class SweepRow(BaseModel):
    multiplier: float
    sentences: int
    tokens: int
    states: int
    mml_bits: float
    ratio: float = Field(gt=0)
    isomorphic: bool
    nodes: int
    elapsed: Optional[float] = None


class SweepReport(BaseModel):
    params: Dict[str, Any] = Field(default_factory=dict)
    gen_states: int
    gen_arcs: int
    rows: List[SweepRow] = Field(default_factory=list)

    def to_dict(self, include_timing: bool = False) -> Dict[str, Any]:
        exclude = None if include_timing else {"rows": {"__all__": {"elapsed"}}}
        return self.model_dump(exclude=exclude)

    def to_yaml(self, include_timing: bool = False) -> str:
        return yaml.safe_dump(self.to_dict(include_timing), default_flow_style=None, sort_keys=False)


def _run_algorithm(name: str, dataset: Dataset, opts: SearchOptions, k: int) -> Tuple[Pfsa, int, Optional[str]]:
    """Induced machine, nodes examined (0 without a search tree) and the search stop reason."""
    if name == "igs":
        result = induce(dataset, opts)
        return result.machine, result.nodes_examined, result.stop_reason
    if name == "ktails":
        return k_tails(dataset, k), 0, None
    if name == "null":
        return build_null_machine(dataset), 0, None
    if name == "exhaustive":
        budget = opts.max_nodes if opts.max_nodes is not None else DEFAULT_ENUMERATION_BUDGET
        result = exhaustive_search(dataset, node_budget=budget, criterion_name=opts.criterion)
        return result.machine, result.nodes_examined, None
    raise DomainError(f"unknown algorithm {name!r}; choose from {ALGORITHMS}")


def run_trial(trial: int, seed_seq: np.random.SeedSequence, params: GeneratorParams,
              algorithms: Sequence[str], opts: SearchOptions, min_per_arc: int = DEFAULT_MIN_PER_ARC,
              oversample: float = 1.0, k: int = DEFAULT_K) -> List[BenchRow]:
    gen_seed, sample_seed, search_seed = (int(v) for v in seed_seq.generate_state(3))
    machine = gen_random_pfsa(params.model_copy(update={"seed": gen_seed}))
    dataset = sample_until_coverage(machine, sample_seed, min_per_arc, oversample)
    criterion = get_criterion(opts.criterion)
    null_ratio = mml_ratio(build_null_machine(dataset), machine, dataset, opts.criterion)
    trial_opts = opts.model_copy(update={"seed": search_seed})
    common = dict(trial=trial, gen_states=machine.num_states, gen_arcs=machine.num_arcs, sentences=len(dataset))
    rows = []
    for name in algorithms:
        started = time.perf_counter()
        try:
            induced, nodes, stop_reason = _run_algorithm(name, dataset, trial_opts, k)
        except PfsaError as exc:
            if isinstance(exc, DomainError):
                raise
            rows.append(BenchRow(algorithm=name, dnf=True, error=str(exc),
                                 elapsed=time.perf_counter() - started, **common))
            monitor.log_trial(trial, name, {"dnf": str(exc)})
            continue
        fitted = fit_counts(induced, dataset)
        ratio = mml_ratio(fitted, machine, dataset, opts.criterion)
        row = BenchRow(
            algorithm=name,
            states=fitted.num_states,
            mml_bits=criterion.score(fitted, dataset).total_nits * BITS_PER_NIT,
            ratio=ratio,
            isomorphic=is_isomorphic(fitted, machine),
            nodes=nodes,
            stop_reason=stop_reason,
            elapsed=time.perf_counter() - started,
            worse_than_null=ratio > null_ratio + MML_TOLERANCE,
            **common,
        )
        rows.append(row)
        monitor.log_trial(trial, name, {"ratio": round(ratio, 4), "states": row.states})
    return rows


def run_benchmark(trials: int, params: GeneratorParams, algorithms: Sequence[str] = ("igs",),
                  opts: Optional[SearchOptions] = None, seed: int = 0,
                  min_per_arc: int = DEFAULT_MIN_PER_ARC, oversample: float = 1.0,
                  k: int = DEFAULT_K, threads: int = 1) -> BenchReport:
    """
    Run seeded trials; per-trial seeds are spawned from the master seed, so results do not
    depend on the number of threads.

    Returns:
        BenchReport with one row per trial and algorithm, in trial order.
    """
    if trials < 1:
        raise DomainError(f"need at least one trial, got {trials}")
    if not algorithms:
        raise DomainError("no benchmark algorithm selected")
    for name in algorithms:
        if name not in ALGORITHMS:
            raise DomainError(f"unknown algorithm {name!r}; choose from {ALGORITHMS}")
    opts = opts or SearchOptions()
    children = np.random.SeedSequence(seed).spawn(trials)

    def one(i: int) -> List[BenchRow]:
        return run_trial(i, children[i], params, algorithms, opts, min_per_arc, oversample, k)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            per_trial = list(pool.map(one, range(trials)))
    else:
        per_trial = [one(i) for i in range(trials)]
    report = BenchReport(
        params={
            "trials": trials,
            "seed": seed,
            "generator": params.model_dump(exclude={"seed"}),
            "algorithms": list(algorithms),
            "min_per_arc": min_per_arc,
            "oversample": oversample,
            "k": k,
            "mode": opts.mode,
        },
        rows=[row for rows in per_trial for row in rows],
    )
    logger.info(f"benchmark finished: {report.summary()}")
    return report


def run_sample_size_sweep(params: GeneratorParams, multipliers: Sequence[float] = (1, 2, 4, 8),
                          opts: Optional[SearchOptions] = None, seed: int = 0,
                          min_per_arc: int = DEFAULT_MIN_PER_ARC) -> SweepReport:
    """
    Induce one generated machine from samples of increasing size. Each sample is the
    coverage sample of the same seed extended to multiplier times as many sentences, so
    larger samples contain the smaller ones.
    """
    opts = opts or SearchOptions()
    machine = gen_random_pfsa(params)
    criterion = get_criterion(opts.criterion)
    rows = []
    for multiplier in sorted(multipliers):
        dataset = sample_until_coverage(machine, seed, min_per_arc, multiplier)
        started = time.perf_counter()
        result = induce(dataset, opts)
        fitted = fit_counts(result.machine, dataset)
        rows.append(SweepRow(
            multiplier=multiplier,
            sentences=len(dataset),
            tokens=dataset.total_tokens,
            states=fitted.num_states,
            mml_bits=criterion.score(fitted, dataset).total_nits * BITS_PER_NIT,
            ratio=mml_ratio(fitted, machine, dataset, opts.criterion),
            isomorphic=is_isomorphic(fitted, machine),
            nodes=result.nodes_examined,
            elapsed=time.perf_counter() - started,
        ))
        monitor.log_trial(len(rows) - 1, f"sweep x{multiplier}", {"ratio": round(rows[-1].ratio, 4)})
    return SweepReport(
        params={"seed": seed, "generator": params.model_dump(), "min_per_arc": min_per_arc,
                "multipliers": [float(m) for m in sorted(multipliers)], "mode": opts.mode},
        gen_states=machine.num_states,
        gen_arcs=machine.num_arcs,
        rows=rows,
    )
