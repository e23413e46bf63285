"""
Command-line entry point: generate, solve, eval and bench.

Exit codes: 0 success, 1 numerical failure, 2 invalid input or incompatible
request, 3 scenario blowup, 4 rounding did not connect, 5 time limit hit.
"""

import argparse
import sys
from typing import List, Optional

from pydantic import ValidationError

from ..errors import (
    NumericalFailure,
    RestartsExhausted,
    RobustMSTError,
    ScenarioBlowup,
    TimeLimitExceeded,
)
from ..utils.config import settings
from ..utils.logging import logger, setup_logging
from .bench import cmd_bench
from .commands import cmd_eval, cmd_generate, cmd_solve
from .config import Algorithm

EXIT_OK = 0
EXIT_NUMERICAL = 1
EXIT_INVALID = 2
EXIT_BLOWUP = 3
EXIT_NOT_CONNECTED = 4
EXIT_TIME_LIMIT = 5


def _add_run_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=settings.default_seed, help="RNG seed (uint64)")
    parser.add_argument("--random-seed", action="store_true", help="draw the seed from OS entropy")
    parser.add_argument("--tol", type=float, default=None, help="relative binary-search tolerance")
    parser.add_argument("--max-restarts", type=int, default=settings.max_restarts)
    parser.add_argument("--time-limit", type=float, default=settings.bnb_time_limit_s,
                        help="branch-and-bound time limit in seconds")
    parser.add_argument("--no-timing", action="store_true", help="write 0 for wall times")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="robust-mst", description="Robust minimum spanning tree solver")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging and JSON trace records")
    parser.add_argument("-q", "--quiet", action="store_true", help="warnings and errors only")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="generate an instance")
    gen.add_argument("--kind", required=True, choices=["random", "setcover", "labelcover", "3sat"])
    gen.add_argument("--out", required=True)
    gen.add_argument("--meta", default=None, help="metadata path (default: <out>.meta.json)")
    gen.add_argument("--spec", default=None, help="JSON source problem for setcover/labelcover")
    gen.add_argument("--cnf", default=None, help="DIMACS CNF file for 3sat")
    gen.add_argument("--g", type=int, default=1, help="Label Cover tuple size")
    gen.add_argument("--n", type=int, default=None)
    gen.add_argument("--m", type=int, default=None)
    gen.add_argument("--k", type=int, default=1)
    gen.add_argument("--cost-min", type=int, default=0)
    gen.add_argument("--cost-max", type=int, default=9)
    gen.add_argument("--two-stage", action="store_true")
    gen.add_argument("--seed", type=int, default=settings.default_seed)
    gen.set_defaults(handler=cmd_generate)

    solve = sub.add_parser("solve", help="solve an instance")
    solve.add_argument("--instance", required=True)
    solve.add_argument("--algo", required=True, choices=[a.value for a in Algorithm])
    solve.add_argument("--out", default=None)
    _add_run_flags(solve)
    solve.set_defaults(handler=cmd_solve)

    ev = sub.add_parser("eval", help="re-evaluate a solution report")
    ev.add_argument("--instance", required=True)
    ev.add_argument("--solution", required=True)
    ev.add_argument("--objective", required=True, choices=["minmax", "regret", "2stage"])
    ev.add_argument("--out", default=None)
    ev.set_defaults(handler=cmd_eval)

    bench = sub.add_parser("bench", help="run a benchmark manifest")
    bench.add_argument("--manifest", required=True)
    bench.add_argument("--out", default=None)
    bench.add_argument("--workers", type=int, default=settings.bench_workers)
    bench.add_argument("--time-limit", type=float, default=settings.bnb_time_limit_s)
    bench.add_argument("--no-timing", action="store_true")
    bench.set_defaults(handler=cmd_bench)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Run the CLI and return the exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verbose:
        setup_logging(level="DEBUG", trace=True)
    elif args.quiet:
        setup_logging(level="WARNING")

    try:
        return args.handler(args)
    except ScenarioBlowup as e:
        logger.error(str(e))
        return EXIT_BLOWUP
    except RestartsExhausted as e:
        logger.error(str(e))
        return EXIT_NOT_CONNECTED
    except TimeLimitExceeded as e:
        logger.error(str(e))
        return EXIT_TIME_LIMIT
    except NumericalFailure as e:
        logger.error(f"Numerical failure: {e}")
        return EXIT_NUMERICAL
    except RobustMSTError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_INVALID
    except ValidationError as e:
        logger.error(f"Invalid input: {e.errors()[0]['msg']}")
        return EXIT_INVALID
    except OSError as e:
        logger.error(f"I/O error: {e}")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
