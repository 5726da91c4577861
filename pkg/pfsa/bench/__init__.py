"""Random machines, sampled data and the MML-ratio benchmark."""
from pfsa.bench.generator import GeneratorParams, gen_random_pfsa
from pfsa.bench.harness import (
    ALGORITHMS,
    BenchReport,
    BenchRow,
    SweepReport,
    SweepRow,
    classify_ratio,
    mml_ratio,
    run_benchmark,
    run_sample_size_sweep,
)
from pfsa.bench.sampling import sample_sentences, sample_until_coverage

__all__ = [
    "GeneratorParams", "gen_random_pfsa", "sample_sentences", "sample_until_coverage",
    "mml_ratio", "classify_ratio", "BenchRow", "BenchReport", "SweepRow", "SweepReport",
    "run_benchmark", "run_sample_size_sweep", "ALGORITHMS",
]
