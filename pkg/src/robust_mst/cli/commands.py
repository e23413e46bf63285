"""
Command implementations: generate, solve and eval.
"""

import json
import sys
import time
from pathlib import Path
from typing import Optional, Tuple

import numpy as np

from ..errors import IncompatibleAlgorithm, ParamsInfeasible, RestartsExhausted, SchemaError, TimeLimitExceeded
from ..exact import (
    baseline_mean_scenario,
    branch_and_bound_minmax,
    brute_force_2stage,
    brute_force_minmax,
    brute_force_regret,
)
from ..instances.evaluate import evaluate_2stage, evaluate_minmax, evaluate_regret
from ..instances.io import load_instance, load_report, save_instance, save_metadata, save_report
from ..models.base import edge_set
from ..models.instance import Instance, MinMaxInstance, TwoStageInstance
from ..models.problems import LabelCoverInstance, SetCoverInstance
from ..models.report import InstanceMetadata, SolutionReport
from ..models.solution import ExactResult, RoundingParams, TwoStageSolution
from ..reductions import (
    gen_3sat_with_metadata,
    gen_label_cover_with_metadata,
    gen_random,
    gen_random_set_cover,
    gen_set_cover_with_metadata,
    read_dimacs,
)
from ..rounding import solve_2stage_approx, solve_minmax_approx
from ..utils.logging import logger
from .config import Algorithm, RunConfig


def write_output(data: bytes, out: Optional[str]) -> None:
    """Write bytes to a file, or to stdout with a trailing newline."""
    if out:
        Path(out).write_bytes(data)
    else:
        sys.stdout.buffer.write(data + b"\n")
        sys.stdout.flush()


def random_seed() -> int:
    """Fresh 64-bit seed from OS entropy."""
    return int(np.random.SeedSequence().entropy) % 2**64


# Generators

def _read_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise SchemaError(path, f"not valid JSON: {e}") from e


def generate_instance(args) -> Tuple[Instance, InstanceMetadata]:
    """Dispatch on --kind."""
    if args.kind == "random":
        if args.n is None or args.m is None:
            raise ParamsInfeasible("--kind random needs --n and --m")
        inst = gen_random(
            args.n, args.m, args.k, (args.cost_min, args.cost_max),
            two_stage=args.two_stage, seed=args.seed,
        )
        meta = InstanceMetadata(
            kind="random",
            parameters={
                "n": args.n, "m": args.m, "k": args.k, "seed": args.seed,
                "cost_range": [args.cost_min, args.cost_max], "two_stage": args.two_stage,
            },
        )
        return inst, meta

    if args.kind == "setcover":
        if args.spec:
            sc = SetCoverInstance.model_validate(_read_json(args.spec))
        else:
            if args.n is None or args.m is None:
                raise ParamsInfeasible("--kind setcover needs --spec, or --n elements and --m subsets")
            sc = gen_random_set_cover(args.n, args.m, seed=args.seed)
        return gen_set_cover_with_metadata(sc)

    if args.kind == "labelcover":
        if not args.spec:
            raise ParamsInfeasible("--kind labelcover needs --spec")
        lc = LabelCoverInstance.model_validate(_read_json(args.spec))
        return gen_label_cover_with_metadata(lc, args.g)

    if args.kind == "3sat":
        if not args.cnf:
            raise ParamsInfeasible("--kind 3sat needs --cnf")
        phi = read_dimacs(Path(args.cnf).read_text(encoding="utf-8"))
        return gen_3sat_with_metadata(phi)

    raise ParamsInfeasible(f"unknown generator kind '{args.kind}'")


def cmd_generate(args) -> int:
    """Write the instance and its metadata sidecar, then print a summary line."""
    inst, meta = generate_instance(args)
    out = Path(args.out)
    meta_path = Path(args.meta) if args.meta else out.with_name(out.stem + ".meta.json")
    out.write_bytes(save_instance(inst))
    meta_path.write_bytes(save_metadata(meta))
    print(
        f"{args.kind}: {inst.graph.num_vertices} vertices, {inst.graph.num_edges} edges, "
        f"{inst.num_scenarios} scenarios -> {out}"
    )
    return 0


# Solving

def _tree_report(algorithm: Algorithm, seed: int, value, tree, lp_bound=None, iterations=0) -> SolutionReport:
    return SolutionReport(
        algorithm=algorithm.value,
        seed=seed,
        value=value,
        tree_edges=sorted(tree) if tree is not None else None,
        lp_bound=lp_bound,
        iterations=iterations,
    )


def _two_stage_report(algorithm: Algorithm, seed: int, value, sol: Optional[TwoStageSolution],
                      lp_bound=None, iterations=0) -> SolutionReport:
    return SolutionReport(
        algorithm=algorithm.value,
        seed=seed,
        value=value,
        first_stage_edges=sorted(sol.e1) if sol is not None else None,
        completions={str(s): sorted(c) for s, c in sorted(sol.completions.items())} if sol is not None else None,
        lp_bound=lp_bound,
        iterations=iterations,
    )


def _exact_report(algorithm: Algorithm, seed: int, result: ExactResult) -> SolutionReport:
    if isinstance(result.witness, TwoStageSolution):
        return _two_stage_report(algorithm, seed, result.value, result.witness, iterations=result.nodes_explored)
    return _tree_report(algorithm, seed, result.value, result.witness, iterations=result.nodes_explored)


def run_algorithm(inst: Instance, config: RunConfig) -> SolutionReport:
    """
    Route a run to its solver and build the report.

    Raises:
        RobustMSTError: whatever the solver raises; TimeLimitExceeded and
            RestartsExhausted carry a partial report as `report`
    """
    config.check_compatible(inst)
    algo = config.algorithm
    params = RoundingParams(seed=config.seed, max_restarts=config.max_restarts, tol_rel=config.tol)

    if algo == Algorithm.EXACT:
        return _exact_report(algo, config.seed, brute_force_minmax(inst))
    elif algo == Algorithm.EXACT_REGRET:
        return _exact_report(algo, config.seed, brute_force_regret(inst))
    elif algo == Algorithm.BNB:
        try:
            return _exact_report(algo, config.seed, branch_and_bound_minmax(inst, config.time_limit_s))
        except TimeLimitExceeded as e:
            e.report = _exact_report(algo, config.seed, e.incumbent)
            raise
    elif algo == Algorithm.BASELINE:
        tree, value = baseline_mean_scenario(inst)
        return _tree_report(algo, config.seed, value, tree)
    elif algo == Algorithm.LP_ROUND:
        try:
            outcome = solve_minmax_approx(inst, params)
        except RestartsExhausted as e:
            last = e.last_outcome
            e.report = _tree_report(algo, last.seed, None, None, last.lp_bound, last.iterations_used)
            raise
        return _tree_report(algo, outcome.seed, outcome.value, outcome.tree, outcome.lp_bound, outcome.iterations_used)
    elif algo == Algorithm.EXACT_2STAGE:
        return _exact_report(algo, config.seed, brute_force_2stage(inst))
    elif algo == Algorithm.LP_ROUND_2STAGE:
        try:
            outcome = solve_2stage_approx(inst, params)
        except RestartsExhausted as e:
            last = e.last_outcome
            e.report = _two_stage_report(algo, last.seed, None, None, last.lp_bound, last.iterations_used)
            raise
        return _two_stage_report(
            algo, outcome.seed, outcome.value, outcome.solution, outcome.lp_bound, outcome.iterations_used
        )
    else:
        raise IncompatibleAlgorithm(f"Unknown algorithm: {algo}")


def timed_run(inst: Instance, config: RunConfig) -> SolutionReport:
    """run_algorithm plus wall time (zeroed when timing is off)."""
    start = time.perf_counter()
    try:
        report = run_algorithm(inst, config)
    except (TimeLimitExceeded, RestartsExhausted) as e:
        elapsed = (time.perf_counter() - start) * 1000.0 if config.timing else 0.0
        e.report = e.report.model_copy(update={"wall_time_ms": elapsed})
        raise
    elapsed = (time.perf_counter() - start) * 1000.0 if config.timing else 0.0
    return report.model_copy(update={"wall_time_ms": elapsed})


def config_from_args(args) -> RunConfig:
    seed = random_seed() if getattr(args, "random_seed", False) else args.seed
    return RunConfig(
        algorithm=Algorithm(args.algo),
        seed=seed,
        tol=args.tol,
        max_restarts=args.max_restarts,
        time_limit_s=args.time_limit,
        timing=not args.no_timing,
    )


def cmd_solve(args) -> int:
    """Solve one instance and write its report."""
    inst = load_instance(Path(args.instance).read_bytes())
    config = config_from_args(args)
    logger.info(f"Solving '{inst.name}' with {config.algorithm.value}, seed {config.seed}")
    try:
        report = timed_run(inst, config)
    except (TimeLimitExceeded, RestartsExhausted) as e:
        write_output(save_report(e.report), args.out)
        raise
    write_output(save_report(report), args.out)
    return 0


# Evaluation

def evaluate_report(inst: Instance, report: SolutionReport, objective: str) -> float:
    """
    Recompute a report's value under an objective.

    Raises:
        IncompatibleAlgorithm: if the objective does not fit the instance or report
        NotASpanningTree / InvalidTwoStageSolution: if the solution does not fit the instance
    """
    if objective == "2stage":
        if not isinstance(inst, TwoStageInstance) or report.first_stage_edges is None:
            raise IncompatibleAlgorithm("objective 2stage needs a 2-stage instance and solution")
        sol = TwoStageSolution(
            e1=edge_set(report.first_stage_edges),
            completions={int(s): edge_set(c) for s, c in (report.completions or {}).items()},
        )
        return evaluate_2stage(inst, sol)

    if not isinstance(inst, MinMaxInstance) or report.tree_edges is None:
        raise IncompatibleAlgorithm(f"objective {objective} needs a min-max instance and a tree")
    tree = edge_set(report.tree_edges)
    if objective == "minmax":
        return evaluate_minmax(inst, tree)
    elif objective == "regret":
        return evaluate_regret(inst, tree)
    raise IncompatibleAlgorithm(f"Unknown objective: {objective}")


def cmd_eval(args) -> int:
    """Recompute a solution's value and write the updated report."""
    inst = load_instance(Path(args.instance).read_bytes())
    report = load_report(Path(args.solution).read_bytes())
    value = evaluate_report(inst, report, args.objective)
    out = report.model_copy(update={"algorithm": f"eval-{args.objective}", "value": value, "wall_time_ms": 0.0})
    write_output(save_report(out), args.out)
    return 0
