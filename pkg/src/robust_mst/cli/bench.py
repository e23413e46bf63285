"""
Benchmark driver: runs a manifest of (instance, algorithm, seeds) and emits a CSV table.
"""

import asyncio
import csv
import io
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from pydantic import Field, ValidationError

from ..errors import RobustMSTError, SchemaError, TooManyTrees
from ..exact import branch_and_bound_minmax, brute_force_2stage, brute_force_minmax, brute_force_regret
from ..instances.io import format_float, load_instance
from ..models.base import BaseRobustModel
from ..models.instance import Instance
from ..utils.logging import logger
from .commands import run_algorithm
from .config import Algorithm, RunConfig

CSV_COLUMNS = ["instance", "algo", "seed", "value", "lp_bound", "opt", "ratio", "time_ms"]


class BenchRun(BaseRobustModel):
    """One manifest entry."""
    instance: str
    algo: Algorithm
    seeds: List[int] = Field(default_factory=lambda: [0])
    oracle: bool = False


class BenchManifest(BaseRobustModel):
    """{"runs": [...]}"""
    runs: List[BenchRun] = Field(default_factory=list)


@dataclass
class BenchRow:
    instance: str
    algo: str
    seed: int
    value: Optional[float]
    lp_bound: Optional[float]
    opt: Optional[float]
    time_ms: float

    @property
    def sort_key(self) -> Tuple[str, str, int]:
        return (self.instance, self.algo, self.seed)

    @property
    def ratio(self) -> Optional[float]:
        if self.opt is None or self.value is None:
            return None
        if self.opt > 0:
            return self.value / self.opt
        if self.value == self.opt:
            return 1.0
        return None

    def to_csv(self) -> List[str]:
        def fmt(v: Optional[float]) -> str:
            return "" if v is None else format_float(float(v))
        return [
            self.instance, self.algo, str(self.seed), fmt(self.value), fmt(self.lp_bound),
            fmt(self.opt), fmt(self.ratio), fmt(self.time_ms),
        ]


def load_manifest(path: Path) -> BenchManifest:
    try:
        return BenchManifest.model_validate_json(path.read_bytes())
    except ValidationError as e:
        err = e.errors()[0]
        raise SchemaError(".".join(str(p) for p in ("$",) + tuple(err["loc"])), err["msg"]) from e


def oracle_value(inst: Instance, algo: Algorithm, time_limit: float) -> Optional[float]:
    """Exact optimum of the objective `algo` approximates, or None if out of reach."""
    try:
        if inst.is_two_stage:
            return brute_force_2stage(inst).value
        if algo == Algorithm.EXACT_REGRET:
            return brute_force_regret(inst).value
        try:
            return brute_force_minmax(inst).value
        except TooManyTrees:
            return branch_and_bound_minmax(inst, time_limit).value
    except RobustMSTError as e:
        logger.warning(f"Oracle failed on '{inst.name}': {e}")
        return None


def _run_row(label: str, inst: Instance, config: RunConfig, opt: Optional[float]) -> BenchRow:
    start = time.perf_counter()
    value = lp_bound = None
    try:
        report = run_algorithm(inst, config)
        value, lp_bound = report.value, report.lp_bound
    except RobustMSTError as e:
        report = getattr(e, "report", None)
        if report is not None:
            value, lp_bound = report.value, report.lp_bound
        logger.warning(f"{config.algorithm.value} on {label} seed {config.seed}: {e}")
    elapsed = (time.perf_counter() - start) * 1000.0 if config.timing else 0.0
    return BenchRow(label, config.algorithm.value, config.seed, value, lp_bound, opt, elapsed)


async def run_bench(manifest: BenchManifest, base_dir: Path, workers: int = 1,
                    timing: bool = True, time_limit: float = 600.0) -> List[BenchRow]:
    """Run every (entry, seed) pair, at most `workers` at a time; rows sorted by (instance, algo, seed)."""
    semaphore = asyncio.Semaphore(max(1, workers))
    instances: Dict[str, Instance] = {}
    optima: Dict[Tuple[str, bool], Optional[float]] = {}

    for run in manifest.runs:
        if run.instance not in instances:
            instances[run.instance] = load_instance((base_dir / run.instance).read_bytes())
        if run.oracle:
            key = (run.instance, run.algo == Algorithm.EXACT_REGRET)
            if key not in optima:
                optima[key] = oracle_value(instances[run.instance], run.algo, time_limit)

    async def guarded(run: BenchRun, seed: int) -> BenchRow:
        config = RunConfig(algorithm=run.algo, seed=seed, timing=timing, time_limit_s=time_limit)
        opt = optima.get((run.instance, run.algo == Algorithm.EXACT_REGRET)) if run.oracle else None
        async with semaphore:
            return await asyncio.to_thread(_run_row, run.instance, instances[run.instance], config, opt)

    tasks = [guarded(run, seed) for run in manifest.runs for seed in run.seeds]
    rows = await asyncio.gather(*tasks)
    return sorted(rows, key=lambda row: row.sort_key)


def rows_to_csv(rows: List[BenchRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(row.to_csv())
    return buffer.getvalue()


def cmd_bench(args) -> int:
    """Run a manifest and write the CSV table."""
    path = Path(args.manifest)
    manifest = load_manifest(path)
    logger.info(f"Bench manifest {path}: {len(manifest.runs)} entries, {args.workers} workers")
    rows = asyncio.run(
        run_bench(manifest, path.parent, workers=args.workers, timing=not args.no_timing,
                  time_limit=args.time_limit)
    )
    text = rows_to_csv(rows)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        print(text, end="")
    return 0
