"""
Seeded edge sampling.

Every draw comes from a PCG64 generator keyed by (seed, iteration, stream).
Stream 0 is the min-max or first-stage draw, stream 1 + S is scenario S's
second-stage draw. Keys never depend on thread count or call order, so
replays are identical however the work is scheduled.
"""

from typing import Sequence

import numpy as np

FIRST_STAGE_STREAM = 0


def scenario_stream(s: int) -> int:
    """Stream id of scenario s's second-stage draw."""
    return 1 + s


def make_rng(seed: int, iteration: int, stream: int = FIRST_STAGE_STREAM) -> np.random.Generator:
    """Independent generator for one (seed, iteration, stream) triple."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, iteration, stream])))


def sample_edges(probabilities: Sequence[float], rng: np.random.Generator) -> np.ndarray:
    """Boolean mask including edge e independently with probability p_e."""
    p = np.asarray(probabilities, dtype=np.float64)
    return rng.random(p.shape[0]) < p
