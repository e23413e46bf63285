"""
Iteration counts, concentration constants and per-iteration cost bounds.
"""

import math
from typing import Optional

from ..errors import ParamsInadmissible
from ..utils.config import settings

# Admissible analysis range: rho2 + rho3 <= ADMISSIBILITY_FACTOR * rho1
ADMISSIBILITY_FACTOR = 3.92

SQRT21 = math.sqrt(21.0)


def _require_n(n: int) -> None:
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")


def compute_r_minmax(n: int) -> int:
    """r = ceil(2 (11 + sqrt 21) ln n)."""
    _require_n(n)
    return math.ceil(2.0 * (11.0 + SQRT21) * math.log(n))


def compute_r_2stage(n: int, k: int) -> int:
    """r = ceil((sqrt(ln n + ln K) + sqrt(21 ln n + ln K))^2)."""
    _require_n(n)
    if k < 1:
        raise ValueError(f"K must be at least 1, got {k}")
    ln_n, ln_k = math.log(n), math.log(k)
    return math.ceil((math.sqrt(ln_n + ln_k) + math.sqrt(21.0 * ln_n + ln_k)) ** 2)


def compute_delta_minmax() -> float:
    """delta solving (1 - delta) r / 2 = 10 ln n for the min-max r."""
    return math.sqrt(2.0 / (11.0 + SQRT21))


def compute_delta_2stage(n: int, k: int) -> float:
    """delta for the 2-stage r, which additionally absorbs a union bound over K."""
    _require_n(n)
    ln_n, ln_k = math.log(n), math.log(k)
    a = math.sqrt(ln_n + ln_k)
    return 2.0 * a / (a + math.sqrt(21.0 * ln_n + ln_k))


def check_admissible(n: int, k: int, f: float, rho1: float) -> None:
    """
    Check that some rho2, rho3 with K <= n^rho2 and f <= n^rho3 satisfy
    rho2 + rho3 <= 3.92 rho1. The smallest such pair is (log_n K, log_n f).

    Raises:
        ParamsInadmissible: if no admissible pair exists
    """
    _require_n(n)
    if k < 1 or f < 1:
        raise ParamsInadmissible(f"K and f must be at least 1 (K={k}, f={f})")
    if rho1 < 2:
        raise ParamsInadmissible(f"rho1 must be at least 2, got {rho1}")
    needed = (math.log(k) + math.log(f)) / math.log(n)
    if needed > ADMISSIBILITY_FACTOR * rho1:
        raise ParamsInadmissible(
            f"log_n K + log_n f = {needed:.4f} exceeds {ADMISSIBILITY_FACTOR} * rho1 = "
            f"{ADMISSIBILITY_FACTOR * rho1:.4f}"
        )


def lemma1_bound_multiplier(n: int, k: int, f: float, rho1: Optional[float] = None) -> float:
    """
    Per-iteration cost multiplier for min-max rounding.

    With probability at least 1 - 1/(f n^(rho1-1)) the edges sampled in one
    iteration cost at most this multiple of OPT_1 in every scenario.

    Raises:
        ParamsInadmissible: outside the admissible parameter range
    """
    rho1 = settings.rho1 if rho1 is None else rho1
    check_admissible(n, k, f, rho1)
    base = rho1 * math.log(n)
    return (base + 1.5) * (1.0 + 2.0 * math.sqrt(1.0 + (math.log(k) + math.log(f)) / base))


def lemma3_bound_multiplier(n: int, k: int, f: float, rho1: Optional[float] = None) -> float:
    """Same multiplier applied to first-stage plus scenario cost of one 2-stage iteration."""
    return lemma1_bound_multiplier(n, k, f, rho1)


def failure_probability(n: int, f: float, rho1: Optional[float] = None) -> float:
    """1 / (f n^(rho1 - 1)), the per-iteration bound's failure probability."""
    rho1 = settings.rho1 if rho1 is None else rho1
    return 1.0 / (f * n ** (rho1 - 1.0))


def guarantee_bound(n: int, k: int, opt: float, rho1: Optional[float] = None) -> float:
    """r * multiplier(n, K, f=r) * opt: the aggregate bound over r iterations."""
    r = compute_r_minmax(n)
    return r * lemma1_bound_multiplier(n, k, r, rho1) * opt
