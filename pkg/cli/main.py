"""
Command Line - Compute characteristic polynomials and run the benchmark grid.
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import ValidationError

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from config.settings import settings
from src.bench import Algorithm, BenchConfig, emit_records, run_algorithm, run_bench, summarize
from src.exceptions import BenchMismatchError, LinalgError, MatrixFileError
from src.matrix import OpCounter
from src.parsers import parse_matrix_file
from src.parsers.matrix_parser import serialize_matrix
from src.schemas import RingSpec

logger = logging.getLogger("cli")

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_PRECONDITION = 2
EXIT_MISMATCH = 3


def _ring_flag(text: str) -> RingSpec:
    try:
        return RingSpec.parse_flag(text)
    except ValidationError as e:
        raise argparse.ArgumentTypeError(f"invalid ring {text!r}: {e.errors()[0]['msg']}")


def _int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}")


def _algorithm_list(text: str) -> List[Algorithm]:
    try:
        return [Algorithm(part.strip()) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="charpoly",
        description="Exact characteristic polynomial, determinant and adjugate over commutative rings.",
    )
    parser.add_argument("--log-level", default=settings.LOG_LEVEL,
                        help="Logging level for stderr (default: %(default)s)")
    commands = parser.add_subparsers(dest="command", required=True)

    compute = commands.add_parser("compute", help="Run one algorithm on a matrix file")
    compute.add_argument("--input", required=True, type=Path, help="Matrix JSON file")
    compute.add_argument("--algorithm", type=Algorithm, default=Algorithm.PS,
                         choices=list(Algorithm), metavar="{" + "|".join(a.value for a in Algorithm) + "}")
    compute.add_argument("--m", type=int, default=None, help="Block size for ps (default: isqrt(n))")
    compute.add_argument("--adjugate", action="store_true", help="Also print the adjugate")
    compute.add_argument("--output", choices=["json", "text"], default="json")
    compute.add_argument("--count-ops", action="store_true", help="Print operation counts")

    bench = commands.add_parser("bench", help="Time algorithms on seeded random matrices")
    bench.add_argument("--ring", type=_ring_flag, default=RingSpec(kind="int"),
                       help="int, rational, polyint or intmod:<m>")
    bench.add_argument("--sizes", type=_int_list, required=True)
    bench.add_argument("--algorithms", type=_algorithm_list,
                       default=[Algorithm.PS, Algorithm.FL, Algorithm.BERKOWITZ])
    bench.add_argument("--seed", type=int, default=settings.BENCH_SEED)
    bench.add_argument("--lo", type=int, default=settings.BENCH_LO)
    bench.add_argument("--hi", type=int, default=settings.BENCH_HI)
    bench.add_argument("--reps", type=int, default=settings.BENCH_REPS)
    bench.add_argument("--degree", type=int, default=settings.POLY_DEGREE,
                       help="Entry degree over polyint")
    bench.add_argument("--m", type=int, default=None, help="Block size for ps")
    bench.add_argument("--workers", type=int, default=settings.BENCH_WORKERS)
    bench.add_argument("--adjugate", action="store_true",
                       help="Also time the adjugate; bareiss then solves A·X = det·I")
    bench.add_argument("--emit", choices=["csv", "json"], default=settings.BENCH_EMIT)
    bench.add_argument("--out", type=Path, default=None, help="Output file (default: stdout)")
    bench.add_argument("--summary", action="store_true",
                       help="Print median seconds by size and algorithm to stderr")
    bench.add_argument("--quiet", action="store_true", help="No progress bar")

    return parser


def cmd_compute(args: argparse.Namespace) -> int:
    a = parse_matrix_file(args.input)
    ring = a.ring
    logger.info(f"Loaded {a.n}x{a.n} matrix over {ring!r} from {args.input}")

    counter = OpCounter()
    result = run_algorithm(args.algorithm, a, counter, m=args.m,
                           with_adjugate=args.adjugate)

    report: Dict[str, Any] = {
        "algorithm": args.algorithm.value,
        "ring": ring.spec.label,
        "n": a.n,
    }
    if result.coeffs is not None:
        report["coeffs"] = [ring.format(c) for c in result.coeffs]
    report["det"] = ring.format(result.det)
    if result.adjugate is not None:
        report["adjugate"] = serialize_matrix(result.adjugate)["rows"]
    if args.count_ops:
        report["ops"] = counter.snapshot()

    if args.output == "json":
        print(json.dumps(report, indent=2))
    else:
        for key, value in report.items():
            if key == "adjugate":
                print("adjugate:")
                for row in value:
                    print("  " + " ".join(_text(x) for x in row))
            elif key == "coeffs":
                print("coeffs: " + " ".join(_text(x) for x in value))
            elif key == "ops":
                print("ops: " + " ".join(f"{name}={count}" for name, count in value.items()))
            else:
                print(f"{key}: {_text(value)}")
    return EXIT_OK


def _text(value: Any) -> str:
    return value if isinstance(value, str) else json.dumps(value)


def cmd_bench(args: argparse.Namespace) -> int:
    config = BenchConfig(
        ring=args.ring,
        sizes=args.sizes,
        algorithms=args.algorithms,
        seed=args.seed,
        lo=args.lo,
        hi=args.hi,
        reps=args.reps,
        degree=args.degree,
        m=args.m,
        workers=args.workers,
        adjugate=args.adjugate,
    )
    records = run_bench(config, progress=not args.quiet)

    if args.out is not None:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        emit_records(records, args.emit, args.out)
        logger.info(f"Wrote {len(records)} records to {args.out}")
    else:
        emit_records(records, args.emit, sys.stdout)

    if args.summary:
        print(summarize(records).to_string(), file=sys.stderr)
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    """
    Entry point.

    Exit codes: 0 success, 1 unreadable or malformed input, 2 precondition
    failure (ring/algorithm mismatch, characteristic, size limits), 3 two
    algorithms disagreed during a benchmark.
    """
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=getattr(logging, str(args.log_level).upper(), logging.INFO),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    handlers = {"compute": cmd_compute, "bench": cmd_bench}
    try:
        return handlers[args.command](args)
    except (MatrixFileError, OSError, ValidationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except BenchMismatchError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_MISMATCH
    except LinalgError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
