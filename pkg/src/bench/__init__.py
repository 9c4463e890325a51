"""
Bench package - Algorithm dispatch and the benchmark harness.
"""
from .dispatch import (
    Algorithm, RunResult, check_applicable, run_algorithm, output_digest, det_digest,
    adjugate_digest,
)
from .harness import (
    BenchConfig, run_bench, check_agreement, records_to_frame, emit_records, summarize,
)

__all__ = [
    "Algorithm",
    "RunResult",
    "check_applicable",
    "run_algorithm",
    "output_digest",
    "det_digest",
    "adjugate_digest",
    "BenchConfig",
    "run_bench",
    "check_agreement",
    "records_to_frame",
    "emit_records",
    "summarize",
]
