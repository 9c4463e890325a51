"""
Bench Harness - Timed runs of the algorithms on seeded random matrices.
"""
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Dict, List, Optional, Sequence, TextIO, Tuple, Union

import pandas as pd
from pydantic import BaseModel, Field, field_validator
from tqdm import tqdm

from ..exceptions import BenchMismatchError, LinalgError, UsageError
from ..matrix.counter import OpCounter
from ..matrix.generators import derive_seed, random_matrix
from ..rings.factory import make_ring
from ..schemas.bench import BenchRecord, CSV_COLUMNS, OutputKind
from ..schemas.ring import RingSpec
from .dispatch import (
    Algorithm, adjugate_digest, check_applicable, det_digest, output_digest, run_algorithm,
)

logger = logging.getLogger(__name__)


class BenchConfig(BaseModel):
    """Everything that determines a benchmark run, apart from the machine."""

    ring: RingSpec
    sizes: List[int] = Field(..., min_length=1)
    algorithms: List[Algorithm] = Field(..., min_length=1)
    seed: int = 0
    lo: int = -10
    hi: int = 10
    reps: int = Field(default=1, ge=1)
    degree: int = Field(default=1, ge=0)
    m: Optional[int] = Field(default=None, ge=1)
    workers: int = Field(default=1, ge=1)
    adjugate: bool = False

    @field_validator("sizes")
    @classmethod
    def _check_sizes(cls, sizes: List[int]) -> List[int]:
        if any(n < 0 for n in sizes):
            raise ValueError("sizes must be >= 0")
        return sizes


def _run_cell(config: BenchConfig, n: int, rep: int) -> List[BenchRecord]:
    """One (n, rep) cell: a single matrix shared by every algorithm."""
    ring = make_ring(config.ring)
    seed = derive_seed(config.seed, n, rep)
    a = random_matrix(ring, n, lo=config.lo, hi=config.hi, seed=seed, degree=config.degree)

    records = []
    for algorithm in config.algorithms:
        try:
            check_applicable(algorithm, ring, n)
        except LinalgError as e:
            logger.warning(f"Skipping {algorithm.value} at n={n}: {e}")
            continue

        counter = OpCounter()
        m = config.m if algorithm == Algorithm.PS and config.m is not None else None
        if m is not None and m > max(n, 1):
            m = max(n, 1)

        start = time.perf_counter()
        result = run_algorithm(algorithm, a, counter, m=m, with_adjugate=config.adjugate)
        elapsed = time.perf_counter() - start

        records.append(BenchRecord(
            n=n,
            ring=config.ring.label,
            algorithm=algorithm.value,
            seed=seed,
            rep=rep,
            wall_seconds=elapsed,
            full_matmul=counter.full_matmul,
            ring_mul=counter.ring_mul,
            ring_add=counter.ring_add,
            ring_divexact=counter.ring_divexact,
            digest=output_digest(ring, result),
            det_digest=det_digest(ring, result.det),
            adjugate_digest=adjugate_digest(ring, result.adjugate) if result.adjugate is not None else "",
            computes=result.computes,
        ))

    logger.info(f"Cell n={n} rep={rep}: {len(records)} runs")
    return records


def run_bench(config: BenchConfig, progress: bool = True) -> List[BenchRecord]:
    """
    Run every (size, algorithm, rep) combination and check agreement.

    Cells run on a thread pool of `config.workers` threads; each cell owns
    its matrix and counters. The returned records are ordered by
    (n, algorithm position in the config, rep) whatever the completion order.

    Args:
        config: Benchmark configuration
        progress: Show a progress bar over cells

    Returns:
        List of BenchRecord

    Raises:
        UsageError: An algorithm can never run over the ring
            or cannot produce an adjugate when one is requested
        BenchMismatchError: Two algorithms disagree on a cell
    """
    ring = make_ring(config.ring)
    for algorithm in config.algorithms:
        check_applicable(algorithm, ring)
        if config.adjugate and algorithm == Algorithm.LU:
            raise UsageError(f"{algorithm.value} computes the determinant only")

    cells = [(n, rep) for n in config.sizes for rep in range(config.reps)]
    logger.info(f"Bench: ring={config.ring.label} sizes={config.sizes} "
                f"algorithms={[a.value for a in config.algorithms]} adjugate={config.adjugate} cells={len(cells)}")

    records: List[BenchRecord] = []
    with ThreadPoolExecutor(max_workers=config.workers) as executor:
        futures = [executor.submit(_run_cell, config, n, rep) for n, rep in cells]
        with tqdm(total=len(futures), desc="bench", unit="cell", disable=not progress) as bar:
            for future in futures:
                records.extend(future.result())
                bar.update(1)

    position = {algorithm.value: i for i, algorithm in enumerate(config.algorithms)}
    records.sort(key=lambda r: (r.n, position[r.algorithm], r.rep))

    check_agreement(records)
    return records


def check_agreement(records: Sequence[BenchRecord]) -> None:
    """
    Cross-check the outputs of every cell.

    Charpoly digests must agree among the charpoly algorithms of a cell,
    adjugate digests among the runs that returned an adjugate, and
    determinant digests among all of them.

    Raises:
        BenchMismatchError: Naming the cell and the disagreeing algorithms
    """
    cells: Dict[Tuple[int, str, int], List[BenchRecord]] = {}
    for record in records:
        cells.setdefault((record.n, record.ring, record.seed), []).append(record)

    for (n, ring, seed), group in cells.items():
        charpoly = {r.algorithm: r.output_digest for r in group if r.computes == OutputKind.CHARPOLY}
        adjugates = {r.algorithm: r.adjugate_digest for r in group if r.adjugate_digest}
        dets = {r.algorithm: r.det_digest for r in group}
        for kind, digests in (("charpoly", charpoly), ("adjugate", adjugates), ("determinant", dets)):
            if len(set(digests.values())) > 1:
                message = (f"{kind} mismatch at n={n} ring={ring} seed={seed}: "
                           + ", ".join(f"{name}={digest}" for name, digest in sorted(digests.items())))
                logger.error(message)
                raise BenchMismatchError(message)


def records_to_frame(records: Sequence[BenchRecord]) -> pd.DataFrame:
    """Records as a DataFrame with the fixed CSV columns."""
    return pd.DataFrame([record.to_row() for record in records], columns=CSV_COLUMNS)


def emit_records(records: Sequence[BenchRecord],
                 fmt: str = "csv",
                 out: Optional[Union[str, Path, TextIO]] = None) -> Optional[str]:
    """
    Write records as CSV (header then rows) or as a JSON array.

    Args:
        records: Records in emission order
        fmt: "csv" or "json"
        out: Path or open text stream; None returns the text

    Returns:
        The text when `out` is None
    """
    frame = records_to_frame(records)
    if fmt == "csv":
        return frame.to_csv(out, index=False, float_format="%.9f")
    if fmt == "json":
        text = frame.to_json(orient="records", indent=2)
        if out is None:
            return text
        if isinstance(out, (str, Path)):
            Path(out).write_text(text + "\n", encoding="utf-8")
        else:
            out.write(text + "\n")
        return None
    raise UsageError(f"unknown output format {fmt!r}")


def summarize(records: Sequence[BenchRecord]) -> pd.DataFrame:
    """
    Median wall seconds in a grid of sizes by algorithms.

    Args:
        records: Bench records

    Returns:
        DataFrame indexed by n with one column per algorithm
    """
    frame = pd.DataFrame([r.model_dump() for r in records])
    if frame.empty:
        return frame
    order = list(dict.fromkeys(frame["algorithm"]))
    table = frame.pivot_table(index="n", columns="algorithm", values="wall_seconds", aggfunc="median")
    return table.reindex(columns=order)
